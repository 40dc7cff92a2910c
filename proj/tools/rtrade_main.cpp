// rtrade: minimum-energy-per-bit operating points for a wireless link, and
// the simulation experiments built on them.  See README.md.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rtrade/config.hpp"
#include "rtrade/deployment.hpp"
#include "rtrade/experiments.hpp"
#include "rtrade/model.hpp"
#include "rtrade/optimizer.hpp"
#include "rtrade/result_table.hpp"

namespace {

using namespace rtrade;

std::string help_footer() {
  std::string out =
      "Config file format: flat `key = value` lines, '#' starts a comment.\n"
      "Flags override config keys; config keys override built-in defaults.\n"
      "All quantities are base SI units.  Accepted keys:\n";
  for (const ConfigKeyDoc& doc : config_key_docs()) {
    out += "  ";
    out += doc.key;
    out += "\n        ";
    out += doc.doc;
    out += "\n";
  }
  return out;
}

std::filesystem::path output_path(const RunConfig& cfg,
                                  const std::string& name) {
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  return dir / name;
}

void emit(const ResultTable& table, const RunConfig& cfg,
          const std::string& name) {
  const std::filesystem::path path = output_path(cfg, name);
  write_csv_file(table, path);
  std::cout << "wrote " << path.string() << "\n";
}

void print_value(const char* label, double value) {
  std::printf("%s = %.16e\n", label, value);
}

// Gain from --gain when given, else from --distance (default 1000 m).
double resolve_gain(const SystemParams& params, const CLI::App* sub,
                    double distance, double gain) {
  if (sub->count("--gain")) return gain;
  return channel_gain(distance, params);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rtrade: energy-per-bit resource trading for a cellular downlink.\n"
      "Computes minimum-energy bandwidth/delay operating points, energy\n"
      "tables and surfaces, and cap-limited allocation sweeps over a\n"
      "57-cell hexagonal deployment; results are written as CSV."};
  app.footer(help_footer());
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path,
                 "path to a key = value config file");
  app.add_option("--out", out_dir, "directory for CSV outputs");
  app.add_option("--seed", seed, "override the deployment RNG seed");

  // optimal
  CLI::App* sc_optimal = app.add_subcommand(
      "optimal", "solve the minimum-energy bandwidth and delay per bit");
  double opt_distance = 1000.0;
  double opt_gain = 0.0;
  CLI::Option* opt_d = sc_optimal->add_option(
      "--distance", opt_distance, "site distance in meters (default 1000)");
  CLI::Option* opt_g = sc_optimal->add_option(
      "--gain", opt_gain, "channel gain, overrides --distance");
  opt_d->excludes(opt_g);
  opt_g->excludes(opt_d);

  // energy
  CLI::App* sc_energy = app.add_subcommand(
      "energy", "energy breakdown at one (bandwidth, delay) operating point");
  double en_bandwidth = 1.0;
  double en_delay = 1.0;
  double en_distance = 1000.0;
  double en_gain = 0.0;
  sc_energy->add_option("--bandwidth", en_bandwidth,
                        "bandwidth per bit in Hz/bit (default 1)");
  sc_energy->add_option("--delay", en_delay,
                        "delay per bit in s/bit (default 1)");
  CLI::Option* en_d = sc_energy->add_option(
      "--distance", en_distance, "site distance in meters (default 1000)");
  CLI::Option* en_g = sc_energy->add_option(
      "--gain", en_gain, "channel gain, overrides --distance");
  en_d->excludes(en_g);
  en_g->excludes(en_d);

  // table1
  CLI::App* sc_table1 = app.add_subcommand(
      "table1",
      "per-axis energy table: E(W, t=1) and E(W=1, t) for x = 0.1 .. 1.0");
  double t1_gain = 4.0e-14;
  sc_table1->add_option("--gain", t1_gain,
                        "channel gain (default 4e-14, the reference-table "
                        "operating gain)");

  // surface
  CLI::App* sc_surface = app.add_subcommand(
      "surface", "total energy over a (bandwidth, delay) grid");
  double su_gain = 4.0e-14;
  double su_distance = 0.0;
  std::string su_window = "default";
  CLI::Option* su_g =
      sc_surface->add_option("--gain", su_gain, "channel gain (default 4e-14)");
  CLI::Option* su_d = sc_surface->add_option(
      "--distance", su_distance, "site distance in meters, overrides --gain");
  su_g->excludes(su_d);
  su_d->excludes(su_g);
  sc_surface
      ->add_option("--window", su_window,
                   "grid preset: default (0.1..1 step 0.1), low (0.3..0.5 "
                   "step 0.005), high (0.5..1 step 0.005)")
      ->check(CLI::IsMember({"default", "low", "high"}));
  double su_w_lo = 0.0, su_w_hi = 0.0, su_w_step = 0.0;
  double su_t_lo = 0.0, su_t_hi = 0.0, su_t_step = 0.0;
  sc_surface->add_option("--w-lo", su_w_lo, "bandwidth grid start [Hz/bit]");
  sc_surface->add_option("--w-hi", su_w_hi, "bandwidth grid end [Hz/bit]");
  sc_surface->add_option("--w-step", su_w_step, "bandwidth grid step");
  sc_surface->add_option("--t-lo", su_t_lo, "delay grid start [s/bit]");
  sc_surface->add_option("--t-hi", su_t_hi, "delay grid end [s/bit]");
  sc_surface->add_option("--t-step", su_t_step, "delay grid step");

  // curves
  CLI::App* sc_curves = app.add_subcommand(
      "curves",
      "transmit-only and total energy along one resource axis, per distance");
  std::string cu_axis = "bandwidth";
  std::vector<double> cu_distances = curve_distances_default();
  double cu_lo = curve_range_default().lo;
  double cu_hi = curve_range_default().hi;
  double cu_step = curve_range_default().step;
  sc_curves
      ->add_option("--axis", cu_axis, "swept resource (default bandwidth)")
      ->check(CLI::IsMember({"bandwidth", "delay"}));
  sc_curves
      ->add_option("--distances", cu_distances,
                   "site distances in meters (default 600,800,1000)")
      ->delimiter(',');
  sc_curves->add_option("--lo", cu_lo, "axis start (default 0.05)");
  sc_curves->add_option("--hi", cu_hi, "axis end (default 1.0)");
  sc_curves->add_option("--step", cu_step, "axis step (default 0.005)");

  // sweep-bandwidth / sweep-delay
  std::vector<std::size_t> sw_steps = default_sweep_spec().step_counts;
  double sw_cap_lo = 1e-2;
  double sw_cap_hi = 1e1;
  std::size_t sw_cap_count = 200;
  CLI::App* sc_sweep_w = app.add_subcommand(
      "sweep-bandwidth",
      "mean energy over the deployment versus the available bandwidth");
  CLI::App* sc_sweep_t = app.add_subcommand(
      "sweep-delay",
      "mean energy over the deployment versus the acceptable delay");
  for (CLI::App* sc : {sc_sweep_w, sc_sweep_t}) {
    sc->add_option("--steps", sw_steps,
                   "quantization ring counts, e.g. 2,3,4,5,10,1000; a "
                   "continuous column is always appended")
        ->delimiter(',');
    sc->add_option("--caps-lo", sw_cap_lo, "smallest cap (default 1e-2)");
    sc->add_option("--caps-hi", sw_cap_hi, "largest cap (default 1e1)");
    sc->add_option("--caps-count", sw_cap_count,
                   "log-spaced cap count (default 200)");
  }

  // deploy
  CLI::App* sc_deploy = app.add_subcommand(
      "deploy", "generate the hexagonal deployment and the user drop as CSV");

  for (CLI::App* sub : {sc_optimal, sc_energy, sc_table1, sc_surface,
                        sc_curves, sc_sweep_w, sc_sweep_t, sc_deploy})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the error message
    return code == 0 ? 0 : 1;
  }

  if (app.get_subcommands().empty()) {
    std::cerr << "error: a subcommand is required; see --help\n";
    return 1;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = parse_config_file(config_path);
    if (app.count("--out")) cfg.output_dir = out_dir;
    if (app.count("--seed")) cfg.deployment.rng_seed = seed;

    if (*sc_optimal) {
      const double gain =
          resolve_gain(cfg.system, sc_optimal, opt_distance, opt_gain);
      const OptimalPoint w =
          optimal_bandwidth(gain, cfg.system, cfg.solver);
      const OptimalPoint t = optimal_delay(gain, cfg.system, cfg.solver);
      print_value("gain", gain);
      print_value("bandwidth_optimum_hz_per_bit", w.value);
      print_value("bandwidth_energy_j_per_bit", w.energy);
      print_value("delay_optimum_s_per_bit", t.value);
      print_value("delay_energy_j_per_bit", t.energy);
      ResultTable table;
      table.columns = {"resource_kind", "optimum", "energy_j_per_bit",
                       "residual", "iterations"};
      table.formats = {ColumnFormat::kInteger, ColumnFormat::kScientific,
                       ColumnFormat::kScientific, ColumnFormat::kScientific,
                       ColumnFormat::kInteger};
      table.add_metadata("experiment", "optimal");
      table.add_metadata("gain", gain);
      table.add_metadata("resource_kind_0", "bandwidth [Hz/bit]");
      table.add_metadata("resource_kind_1", "delay [s/bit]");
      table.rows.push_back({0.0, w.value, w.energy, w.residual,
                            static_cast<double>(w.iterations)});
      table.rows.push_back({1.0, t.value, t.energy, t.residual,
                            static_cast<double>(t.iterations)});
      emit(table, cfg, "optimal.csv");
    } else if (*sc_energy) {
      const double gain =
          resolve_gain(cfg.system, sc_energy, en_distance, en_gain);
      const ResourcePoint rp{en_bandwidth, en_delay};
      const EnergyBreakdown e = total_energy_per_bit(rp, gain, cfg.system);
      print_value("gain", gain);
      print_value("e_transmit_j_per_bit", e.transmit);
      print_value("e_circuit_j_per_bit", e.circuit);
      print_value("e_total_j_per_bit", e.total);
      ResultTable table;
      table.columns = {"bandwidth", "delay", "gain", "e_transmit",
                       "e_circuit", "e_total"};
      table.add_metadata("experiment", "energy");
      table.rows.push_back(
          {en_bandwidth, en_delay, gain, e.transmit, e.circuit, e.total});
      emit(table, cfg, "energy.csv");
    } else if (*sc_table1) {
      emit(axis_energy_table(cfg.system, t1_gain), cfg, "table1.csv");
    } else if (*sc_surface) {
      const double gain = sc_surface->count("--distance")
                              ? channel_gain(su_distance, cfg.system)
                              : su_gain;
      RangeSpec w_range = surface_window_default();
      RangeSpec t_range = surface_window_default();
      if (su_window == "low") w_range = t_range = surface_window_low();
      if (su_window == "high") w_range = t_range = surface_window_high();
      if (sc_surface->count("--w-lo")) w_range.lo = su_w_lo;
      if (sc_surface->count("--w-hi")) w_range.hi = su_w_hi;
      if (sc_surface->count("--w-step")) w_range.step = su_w_step;
      if (sc_surface->count("--t-lo")) t_range.lo = su_t_lo;
      if (sc_surface->count("--t-hi")) t_range.hi = su_t_hi;
      if (sc_surface->count("--t-step")) t_range.step = su_t_step;
      emit(energy_surface(cfg.system, gain, w_range, t_range), cfg,
           "surface.csv");
    } else if (*sc_curves) {
      const ResourceKind axis = cu_axis == "bandwidth"
                                    ? ResourceKind::kBandwidth
                                    : ResourceKind::kDelay;
      const RangeSpec range{cu_lo, cu_hi, cu_step};
      emit(distance_curves(cfg.system, axis, cu_distances, range), cfg,
           "curves_" + cu_axis + ".csv");
    } else if (*sc_sweep_w || *sc_sweep_t) {
      const ResourceKind kind =
          *sc_sweep_w ? ResourceKind::kBandwidth : ResourceKind::kDelay;
      SweepSpec spec;
      spec.caps = log_grid(sw_cap_lo, sw_cap_hi, sw_cap_count);
      spec.step_counts = sw_steps;
      const Deployment dep = place_users(cfg.deployment);
      emit(availability_sweep(kind, dep, spec, cfg.system, cfg.solver), cfg,
           *sc_sweep_w ? "sweep_bandwidth.csv" : "sweep_delay.csv");
    } else {  // deploy
      emit(deployment_table(place_users(cfg.deployment)), cfg, "deploy.csv");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
