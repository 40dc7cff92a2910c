// Drives the installed binary end to end: exit codes, help text, stdout
// values, CSV emission, and byte-level reproducibility.  Usage:
//   test_cli <path-to-binary>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

#define EXPECT(cond)                                                     \
  do {                                                                   \
    if (!(cond)) {                                                       \
      ++failures;                                                        \
      std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << ": " #cond  \
                << "\n";                                                 \
    }                                                                    \
  } while (0)

#define EXPECT_MSG(cond, msg)                                            \
  do {                                                                   \
    if (!(cond)) {                                                       \
      ++failures;                                                        \
      std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << ": " #cond  \
                << " — " << (msg) << "\n";                               \
    }                                                                    \
  } while (0)

struct RunResult {
  int code = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0)
    r.output.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Numeric value following "<label> = " in program output; NaN if absent.
double value_after(const std::string& text, const std::string& label) {
  const std::string needle = label + " = ";
  const std::size_t pos = text.find(needle);
  if (pos == std::string::npos) return std::nan("");
  return std::strtod(text.c_str() + pos + needle.size(), nullptr);
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::abs(b);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-binary>\n";
    return 2;
  }
  const std::string bin = std::string("\"") + argv[1] + "\"";
  const std::filesystem::path work =
      std::filesystem::temp_directory_path() /
      ("rtrade_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(work);
  const auto in_work = [&](const std::string& name) {
    return (work / name).string();
  };

  // --- usage errors -> exit 1
  EXPECT(run(bin).code == 1);
  EXPECT(run(bin + " frobnicate").code == 1);
  EXPECT(run(bin + " optimal --no-such-flag").code == 1);
  EXPECT(run(bin + " optimal --distance 1000 --gain 4e-14").code == 1);

  // --- help -> exit 0, lists subcommands and config keys with units
  {
    const RunResult help = run(bin + " --help");
    EXPECT(help.code == 0);
    for (const char* needle :
         {"optimal", "energy", "table1", "surface", "curves",
          "sweep-bandwidth", "sweep-delay", "deploy", "noise_psd_w_per_hz",
          "cell_radius_m", "rng_seed", "output_dir", "[W/Hz]", "[m]"})
      EXPECT_MSG(help.output.find(needle) != std::string::npos, needle);
  }

  // --- optimal: solved points on stdout, CSV written
  {
    const RunResult r =
        run(bin + " --out " + in_work("opt") + " optimal --distance 1000");
    EXPECT(r.code == 0);
    EXPECT(close_rel(value_after(r.output, "bandwidth_optimum_hz_per_bit"),
                     0.4048053597664054, 1e-9));
    EXPECT(close_rel(value_after(r.output, "delay_optimum_s_per_bit"),
                     0.29657688487098444, 1e-9));
    EXPECT(std::filesystem::exists(work / "opt" / "optimal.csv"));

    const RunResult rg =
        run(bin + " --out " + in_work("opt") + " optimal --gain 4e-14");
    EXPECT(rg.code == 0);
    EXPECT(close_rel(value_after(rg.output, "bandwidth_optimum_hz_per_bit"),
                     0.40350290470204609, 1e-9));
    EXPECT(close_rel(value_after(rg.output, "delay_optimum_s_per_bit"),
                     0.29575414707402246, 1e-9));
  }

  // --- energy: breakdown of one operating point
  {
    const RunResult r = run(bin + " --out " + in_work("en") +
                            " energy --bandwidth 0.4 --gain 4e-14");
    EXPECT(r.code == 0);
    EXPECT(close_rel(value_after(r.output, "e_total_j_per_bit"),
                     2.7725483399593904e-06, 1e-12));
    EXPECT(close_rel(value_after(r.output, "e_transmit_j_per_bit"),
                     3.725483399593904e-07, 1e-12));
  }

  // --- table1: reproducible bytes, parseable values
  {
    EXPECT(run(bin + " --out " + in_work("t1") + " table1").code == 0);
    EXPECT(run(bin + " --out " + in_work("t1b") + " table1").code == 0);
    const std::string a = read_file(work / "t1" / "table1.csv");
    const std::string b = read_file(work / "t1b" / "table1.csv");
    EXPECT(!a.empty());
    EXPECT(a == b);
    EXPECT(a.find("x,energy_fixed_delay,energy_fixed_bandwidth") !=
           std::string::npos);
    // Last row: x = 1, both energies 3.2e-6.
    const std::size_t last = a.rfind("\n1.0");
    EXPECT(last != std::string::npos);
    const std::size_t c1 = a.find(',', last);
    EXPECT(close_rel(std::strtod(a.c_str() + c1 + 1, nullptr), 3.2e-6,
                     1e-12));
  }

  // --- deploy: seed determinism across processes
  {
    EXPECT(run(bin + " --seed 5 --out " + in_work("d1") + " deploy").code ==
           0);
    EXPECT(run(bin + " --seed 5 --out " + in_work("d2") + " deploy").code ==
           0);
    EXPECT(run(bin + " --seed 6 --out " + in_work("d3") + " deploy").code ==
           0);
    const std::string d1 = read_file(work / "d1" / "deploy.csv");
    const std::string d2 = read_file(work / "d2" / "deploy.csv");
    const std::string d3 = read_file(work / "d3" / "deploy.csv");
    EXPECT(!d1.empty());
    EXPECT(d1 == d2);
    EXPECT(d1 != d3);
    EXPECT(d1.find("user_id,cell_id,x_m,y_m,distance_m") !=
           std::string::npos);
    EXPECT(d1.find("# rng = mt19937_64") != std::string::npos);
    EXPECT(d1.find("# seed = 5") != std::string::npos);
  }

  // --- config file: errors exit 2 and name the key; flags beat config
  {
    const std::string bad = in_work("bad.cfg");
    std::ofstream(bad) << "path_loss_exponent = 1.5\n";
    const RunResult r = run(bin + " --config " + bad + " optimal");
    EXPECT(r.code == 2);
    EXPECT(r.output.find("path_loss_exponent") != std::string::npos);

    EXPECT(run(bin + " --config /no/such/file.cfg optimal").code == 2);

    const std::string seeded = in_work("seeded.cfg");
    std::ofstream(seeded) << "rng_seed = 3\n";
    EXPECT(run(bin + " --config " + seeded + " --seed 9 --out " +
               in_work("p1") + " deploy")
               .code == 0);
    EXPECT(run(bin + " --seed 9 --out " + in_work("p2") + " deploy").code ==
           0);
    EXPECT(run(bin + " --config " + seeded + " --out " + in_work("p3") +
               " deploy")
               .code == 0);
    EXPECT(run(bin + " --seed 3 --out " + in_work("p4") + " deploy").code ==
           0);
    EXPECT(read_file(work / "p1" / "deploy.csv") ==
           read_file(work / "p2" / "deploy.csv"));
    EXPECT(read_file(work / "p3" / "deploy.csv") ==
           read_file(work / "p4" / "deploy.csv"));
    EXPECT(read_file(work / "p1" / "deploy.csv") !=
           read_file(work / "p3" / "deploy.csv"));
  }

  // --- domain error from flags -> exit 2
  EXPECT(run(bin + " energy --bandwidth -1").code == 2);
  EXPECT(run(bin + " optimal --gain 0").code == 2);

  // --- surface / curves / sweep smoke runs
  {
    EXPECT(run(bin + " --out " + in_work("s") + " surface --window low")
               .code == 0);
    const std::string s = read_file(work / "s" / "surface.csv");
    EXPECT(s.find("bandwidth,delay,e_total") != std::string::npos);

    EXPECT(run(bin + " --out " + in_work("c") + " curves --axis delay")
               .code == 0);
    EXPECT(std::filesystem::exists(work / "c" / "curves_delay.csv"));

    EXPECT(run(bin + " --out " + in_work("sw") +
               " sweep-bandwidth --caps-count 12 --steps 2,3")
               .code == 0);
    const std::string sw = read_file(work / "sw" / "sweep_bandwidth.csv");
    EXPECT(sw.find("cap,steps_2,steps_3,continuous") != std::string::npos);
  }

  std::filesystem::remove_all(work);
  if (failures) {
    std::cerr << failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
