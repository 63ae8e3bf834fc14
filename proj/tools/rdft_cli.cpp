#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rdft/kernel_closed.hpp"
#include "rdft/kernel_series.hpp"
#include "rdft/verify.hpp"
#include <json.hpp>

// Command-line front end: grid evaluation of the deformed kernel to CSV,
// supremum scans of the closed dimension-2 / even-dimension forms, and the
// library's invariant suites.  Exit codes: 0 success, 1 numerical check
// failed, 2 usage or domain error.

namespace {

struct GridSpec {
  double lo = 0.0, hi = 0.0;
  int count = 1;
};

// "min:max:count"
GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  char colon1 = 0, colon2 = 0;
  std::istringstream in(s);
  if (!(in >> g.lo >> colon1 >> g.hi >> colon2 >> g.count) || colon1 != ':' ||
      colon2 != ':' || g.count < 1 || g.hi < g.lo)
    throw CLI::ValidationError("grid", "expected min:max:count with max >= min, count >= 1");
  return g;
}

double grid_point(const GridSpec& g, int i) {
  if (g.count == 1) return g.lo;
  return g.lo + (g.hi - g.lo) * i / (g.count - 1);
}

int thread_count() {
  if (const char* env = std::getenv("RDFT_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

// Deterministic parallel map over [0, n): results land in index order
// regardless of the thread count.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  int nt = std::min(thread_count(), std::max(1, n));
  if (nt == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// key=value lines, '#' comments.  Recognized keys: tol.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t\r");
      size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

int cmd_eval(double a, int m, const GridSpec& zg, const GridSpec& wg,
             const std::string& method, double tol, const std::string& out_path) {
  rdft::DeformParams params(a, m);
  rdft::TruncationPolicy policy(tol, 600, 3);

  struct Row {
    double z, w;
    std::complex<double> v;
    const char* method;
    int terms;
    bool converged;
  };
  const int total = zg.count * wg.count;
  std::vector<Row> rows(total);

  std::atomic<bool> had_error{false};
  std::atomic<bool> had_unconverged{false};
  parallel_for(total, [&](int idx) {
    int iz = idx / wg.count, iw = idx % wg.count;
    Row& r = rows[idx];
    r.z = grid_point(zg, iz);
    r.w = grid_point(wg, iw);
    try {
      rdft::KernelArgs args(r.z, r.w);
      if (method == "series") {
        rdft::SeriesValue s = rdft::kernel_series(params, args, policy);
        r.v = s.value;
        r.method = "series";
        r.terms = s.terms_used;
        r.converged = s.converged;
      } else {
        rdft::DispatchValue d = rdft::kernel_dispatch(params, args, policy);
        if (method == "closed" && d.method == rdft::KernelMethod::Series)
          throw std::domain_error("no closed form for these parameters");
        r.v = d.value;
        r.method = rdft::method_name(d.method);
        r.terms = d.terms_used;
        r.converged = d.converged;
      }
    } catch (const std::exception& e) {
      if (!had_error.exchange(true))
        std::cerr << "eval: (z=" << r.z << ", w=" << r.w << "): " << e.what()
                  << "\n";
      r.converged = false;
      r.method = "error";
    }
    if (!r.converged) had_unconverged = true;
  });

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "eval: cannot open " << out_path << "\n";
    return 2;
  }
  out << "z,w,re,im,abs,method,terms\n";
  for (const Row& r : rows)
    out << fmt17(r.z) << ',' << fmt17(r.w) << ',' << fmt17(r.v.real()) << ','
        << fmt17(r.v.imag()) << ',' << fmt17(std::abs(r.v)) << ',' << r.method
        << ',' << r.terms << '\n';
  if (had_error.load()) return 2;
  if (had_unconverged.load()) {
    std::cerr << "eval: series truncation did not converge on the grid\n";
    return 1;
  }
  return 0;
}

int cmd_bound_scan(int n, int m, double zmax, int density,
                   const std::string& out_path) {
  if (m < 2 || m % 2 != 0) {
    std::cerr << "bound-scan: m must be even and >= 2 (got " << m << ")\n";
    return 2;
  }
  const int zc = density;
  const int wc = density | 1;  // odd, so w = 0 is on the grid
  const int kdim = m / 2;

  // The jet evaluator for m >= 4 needs |w| and z away from the edges.
  const double wcap = (kdim >= 2) ? 1.0 - rdft::kJetGuard : 1.0;
  const double zmin = (kdim >= 2) ? rdft::kJetZGuard : 0.0;

  struct Pt {
    double z, w, mag;
  };
  std::vector<Pt> pts(zc * wc);
  parallel_for(zc * wc, [&](int idx) {
    int iz = idx / wc, iw = idx % wc;
    double z = zmin + (zmax - zmin) * (zc == 1 ? 0.0 : (double)iz / (zc - 1));
    double w = -wcap + 2.0 * wcap * (wc == 1 ? 0.0 : (double)iw / (wc - 1));
    rdft::KernelArgs args(z, w);
    std::complex<double> v = (kdim == 1)
                                 ? rdft::kernel_dim2_closed(n, args)
                                 : rdft::kernel_even_dim(n, kdim, args);
    pts[idx] = {z, w, std::abs(v)};
  });

  Pt best{0.0, 0.0, -1.0};
  for (const Pt& p : pts)
    if (p.mag > best.mag) best = p;

  nlohmann::json j;
  j["n"] = n;
  j["m"] = m;
  j["zmax"] = zmax;
  j["sup_abs"] = best.mag;
  j["z_at_max"] = best.z;
  j["w_at_max"] = best.w;
  j["grid"] = {{"z_count", zc}, {"w_count", wc},
               {"z_min", zmin}, {"w_cap", wcap}};
  bool bounded = best.mag <= 1.0 + 1e-10;
  if (m == 2) j["bounded"] = bounded;

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "bound-scan: cannot open " << out_path << "\n";
    return 2;
  }
  out << j.dump(2) << "\n";
  std::cout << "sup |K| = " << fmt17(best.mag) << " at z = " << best.z
            << ", w = " << best.w << "\n";
  return (m == 2 && !bounded) ? 1 : 0;
}

int cmd_verify(const std::string& suite, std::optional<double> tol,
               const std::string& json_path) {
  std::vector<rdft::CheckResult> results = rdft::run_suite(suite);
  if (tol)
    for (auto& r : results) {
      r.threshold = *tol;
      r.pass = r.residual <= r.threshold;
    }

  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    std::printf("%-32s %-4s residual %.3e (tol %.1e)\n", r.name.c_str(),
                r.pass ? "ok" : "FAIL", r.residual, r.threshold);
  }
  std::printf("%s: %zu checks, %s\n", suite.c_str(), results.size(),
              all_pass ? "all passed" : "FAILURES");

  if (!json_path.empty()) {
    nlohmann::json j;
    j["suite"] = suite;
    j["pass"] = all_pass;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : results)
      j["checks"].push_back({{"name", r.name},
                             {"residual", r.residual},
                             {"threshold", r.threshold},
                             {"pass", r.pass}});
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "verify: cannot open " << json_path << "\n";
      return 2;
    }
    out << j.dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radially deformed Fourier kernel evaluator"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value file (flags win)");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate the kernel on a grid");
  double a = 2.0;
  int m = 2;
  std::string zspec = "0:10:11", wspec = "-1:1:5";
  std::string method = "auto";
  double tol = 1e-12;
  bool tol_given = false;
  std::string out_csv;
  eval->add_option("--a", a, "deformation parameter (> 0)")->required();
  eval->add_option("--m", m, "dimension (>= 2)")->required();
  eval->add_option("--z", zspec, "radial grid min:max:count")->required();
  eval->add_option("--w", wspec, "angular grid min:max:count")->required();
  eval->add_option("--method", method, "auto | series | closed")
      ->check(CLI::IsMember({"auto", "series", "closed"}));
  eval->add_option("--tol", tol, "series truncation tolerance")
      ->each([&](const std::string&) { tol_given = true; });
  eval->add_option("--out", out_csv, "output CSV path")->required();

  // bound-scan
  auto* scan = app.add_subcommand("bound-scan", "scan sup |K_{2/n}^m|");
  int sn = 1, sm = 2, density = 200;
  double zmax = 50.0;
  scan->add_option("--n", sn, "a = 2/n")->required()->check(CLI::PositiveNumber);
  scan->add_option("--m", sm, "even dimension");
  scan->add_option("--zmax", zmax, "largest z")->check(CLI::PositiveNumber);
  scan->add_option("--density", density, "grid density")
      ->check(CLI::Range(2, 100000));
  std::string out_json;
  scan->add_option("--out", out_json, "output JSON path")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  std::string suite = "all";
  double vtol = 0.0;
  bool vtol_given = false;
  std::string vjson;
  verify->add_option("--suite", suite, "specfun | kernel | downsample | transform | all")
      ->check(CLI::IsMember({"specfun", "kernel", "downsample", "transform", "all"}));
  verify->add_option("--tol", vtol, "override every threshold")
      ->each([&](const std::string&) { vtol_given = true; });
  verify->add_option("--json", vjson, "also write results as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (!config_path.empty()) {
      auto kv = read_config(config_path);
      if (auto it = kv.find("tol"); it != kv.end()) {
        double ctol = std::stod(it->second);
        if (!tol_given) tol = ctol;
        if (!vtol_given) {
          vtol = ctol;
          vtol_given = true;
        }
      }
    }
    if (eval->parsed()) return cmd_eval(a, m, parse_grid(zspec), parse_grid(wspec), method, tol, out_csv);
    if (scan->parsed()) return cmd_bound_scan(sn, sm, zmax, density, out_json);
    if (verify->parsed())
      return cmd_verify(suite, vtol_given ? std::optional<double>(vtol) : std::nullopt, vjson);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
