#include "rtrade/deployment.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rtrade {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

// Axial step directions for a pointy-top grid, in ring-walk order.
constexpr std::array<std::array<int, 2>, 6> kAxialDirections = {{
    {{1, 0}}, {{1, -1}}, {{0, -1}}, {{-1, 0}}, {{-1, 1}}, {{0, 1}},
}};

Cell make_cell(int q, int r, double radius) {
  Cell c;
  c.q = q;
  c.r = r;
  c.x = kSqrt3 * radius * (q + 0.5 * r);
  c.y = 1.5 * radius * r;
  return c;
}

}  // namespace

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) *
         (1.0 / 9007199254740992.0);  // 2^-53
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::domain_error("uniform_below: n must be > 0");
  const std::uint64_t max = std::mt19937_64::max();
  const std::uint64_t limit = max - max % n;  // last multiple of n, minus 1
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % n;
}

void DeploymentConfig::validate() const {
  if (cell_count == 0)
    throw std::domain_error("DeploymentConfig: cell_count must be > 0");
  if (!(cell_radius > 0) || !std::isfinite(cell_radius))
    throw std::domain_error("DeploymentConfig: cell_radius must be positive");
  if (!(min_user_distance >= 0) || !std::isfinite(min_user_distance))
    throw std::domain_error(
        "DeploymentConfig: min_user_distance must be non-negative");
  if (min_user_distance >= cell_radius)
    throw std::domain_error(
        "DeploymentConfig: min_user_distance must be < cell_radius");
}

std::vector<Cell> generate_hex_grid(std::size_t cell_count,
                                    double cell_radius) {
  if (cell_count == 0)
    throw std::domain_error("generate_hex_grid: cell_count must be > 0");
  if (!(cell_radius > 0))
    throw std::domain_error("generate_hex_grid: cell_radius must be > 0");

  std::vector<Cell> cells;
  cells.reserve(cell_count);
  cells.push_back(make_cell(0, 0, cell_radius));
  for (int ring = 1; cells.size() < cell_count; ++ring) {
    // Enter the ring along direction 4, then walk its six sides.
    int q = kAxialDirections[4][0] * ring;
    int r = kAxialDirections[4][1] * ring;
    for (const auto& dir : kAxialDirections) {
      for (int step = 0; step < ring; ++step) {
        if (cells.size() == cell_count) return cells;
        cells.push_back(make_cell(q, r, cell_radius));
        q += dir[0];
        r += dir[1];
      }
    }
  }
  return cells;
}

bool inside_hexagon(double x, double y, double cell_radius) {
  const double half_width = 0.5 * kSqrt3 * cell_radius;  // vertical edges
  return std::abs(x) <= half_width &&
         std::abs(y) <= cell_radius - std::abs(x) / kSqrt3;
}

Deployment place_users(const DeploymentConfig& config) {
  config.validate();
  Deployment dep;
  dep.config = config;
  dep.cells = generate_hex_grid(config.cell_count, config.cell_radius);
  dep.users.reserve(config.user_count);

  std::mt19937_64 rng(config.rng_seed);
  const double half_width = 0.5 * kSqrt3 * config.cell_radius;
  constexpr std::size_t kMaxDraws = 1000000;

  for (std::size_t u = 0; u < config.user_count; ++u) {
    const std::size_t cell =
        static_cast<std::size_t>(uniform_below(rng, config.cell_count));
    double ox = 0.0, oy = 0.0, d = 0.0;
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kMaxDraws; ++attempt) {
      ox = (2.0 * uniform_unit(rng) - 1.0) * half_width;
      oy = (2.0 * uniform_unit(rng) - 1.0) * config.cell_radius;
      if (!inside_hexagon(ox, oy, config.cell_radius)) continue;
      d = std::hypot(ox, oy);
      if (d < config.min_user_distance) continue;
      placed = true;
      break;
    }
    if (!placed)
      throw std::runtime_error(
          "place_users: no admissible position after " +
          std::to_string(kMaxDraws) + " draws for user " + std::to_string(u));
    User usr;
    usr.cell_index = cell;
    usr.x = dep.cells[cell].x + ox;
    usr.y = dep.cells[cell].y + oy;
    usr.distance = d;
    dep.users.push_back(usr);
  }
  return dep;
}

std::vector<double> distances(const Deployment& deployment) {
  if (deployment.users.empty())
    throw std::domain_error("distances: deployment has no users");
  std::vector<double> out;
  out.reserve(deployment.users.size());
  for (const User& u : deployment.users) out.push_back(u.distance);
  return out;
}

}  // namespace rtrade
