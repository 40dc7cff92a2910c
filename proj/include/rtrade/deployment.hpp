#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace rtrade {

// Name of the generator whose bit stream the outputs depend on; recorded in
// CSV metadata so regenerated files can be checked against the same stream.
inline constexpr const char* kRngAlgorithm = "mt19937_64";

// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
// std::uniform_real_distribution is implementation-defined, which would break
// bit-for-bit reproducibility across toolchains; this mapping is pinned.
double uniform_unit(std::mt19937_64& rng);

// Uniform integer in [0, n) by rejection, n > 0.  Pinned for the same reason.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// Layout of the simulated cellular deployment.
struct DeploymentConfig {
  std::size_t cell_count = 57;       // hexagonal cells, spiral ring order
  double cell_radius = 1000.0;       // R, hexagon circumradius [m]
  std::size_t user_count = 500;      // users dropped over the whole deployment
  double min_user_distance = 10.0;   // closest allowed user-to-site distance [m]
  std::uint64_t rng_seed = 1;

  void validate() const;
};

// One hexagonal cell: axial grid coordinates and the site position [m].
struct Cell {
  int q = 0;
  int r = 0;
  double x = 0.0;
  double y = 0.0;
};

// One user: owning cell, absolute position [m], and distance to its own
// site [m].
struct User {
  std::size_t cell_index = 0;
  double x = 0.0;
  double y = 0.0;
  double distance = 0.0;
};

struct Deployment {
  DeploymentConfig config;
  std::vector<Cell> cells;
  std::vector<User> users;
};

// First `cell_count` cells of the hexagonal spiral: center first, then rings
// outward, each ring walked in a fixed direction order.  Pointy-top axial
// layout, so neighboring sites are sqrt(3)*R apart.
std::vector<Cell> generate_hex_grid(std::size_t cell_count,
                                    double cell_radius);

// True when (x, y) relative to the site lies inside (or on) the pointy-top
// hexagon of circumradius R.
bool inside_hexagon(double x, double y, double cell_radius);

// Build the grid and drop users: each user picks a cell uniformly, then a
// position uniformly over that cell's hexagon by rejection from the bounding
// box, re-drawing until at least min_user_distance from the site.  Identical
// config (including seed) gives an identical deployment, bit for bit.
Deployment place_users(const DeploymentConfig& config);

// Site distances of all users, in user order.  Throws std::domain_error on an
// empty deployment.
std::vector<double> distances(const Deployment& deployment);

}  // namespace rtrade
