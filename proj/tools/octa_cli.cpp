#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "octa/arctic/pipeline.hpp"
#include "octa/arctic/raster.hpp"
#include "octa/density/profile.hpp"
#include "octa/verify/suites.hpp"

#ifndef OCTA_VERSION
#define OCTA_VERSION "dev"
#endif

namespace fs = std::filesystem;
using namespace octa;

namespace {

/// Bad flag values; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<Rational> parse_list(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--") + flag + ": " + e.what() + " (use p/q, not decimals)");
    }
  }
  if (out.empty()) throw UsageError(std::string("--") + flag + ": empty list");
  return out;
}

Rational parse_one(const std::string& text, const char* flag) {
  auto v = parse_list(text, flag);
  if (v.size() != 1) throw UsageError(std::string("--") + flag + ": expected one rational");
  return v[0];
}

/// Files written by one command, with their hashes for the manifest.
class Output {
 public:
  Output(fs::path dir, std::string command) : dir_(std::move(dir)), command_(std::move(command)) {
    fs::create_directories(dir_);
  }

  const fs::path& dir() const { return dir_; }

  void write(const fs::path& path, const std::string& bytes) {
    const fs::path full = path.is_absolute() ? path : dir_ / path;
    if (full.has_parent_path()) fs::create_directories(full.parent_path());
    std::ofstream os(full, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + full.string());
    os << bytes;
    const std::string shown = path.is_absolute() ? full.string() : path.generic_string();
    files_.push_back({{"path", shown}, {"bytes", bytes.size()}, {"fnv1a64", fnv1a64(bytes)}});
  }

  void write_json(const fs::path& path, const nlohmann::json& j) { write(path, j.dump(2) + "\n"); }

  void manifest(const nlohmann::json& inputs) {
    nlohmann::json m{{"command", command_}, {"version", OCTA_VERSION}, {"inputs", inputs}, {"outputs", files_}};
    const std::string text = m.dump(2) + "\n";
    std::ofstream os(dir_ / (command_ + ".manifest.json"), std::ios::binary);
    os << text;
  }

 private:
  fs::path dir_;
  std::string command_;
  nlohmann::json files_ = nlohmann::json::array();
};

/// Weight-family flags shared by `density` and `arctic`.
struct FamilyFlags {
  std::string family;
  int m = 0;
  std::string a, b, c, d, c0, sigma, tau, lambda, mu;

  void add_to(CLI::App* app) {
    app->add_option("--family", family, "uniform, two_by_two or m_toroidal");
    app->add_option("--m", m, "period of m_toroidal data");
    app->add_option("--a", a, "face weights a (p/q, or a comma list for m_toroidal)");
    app->add_option("--b", b, "face weights b");
    app->add_option("--c", c, "face weights c");
    app->add_option("--d", d, "face weights d");
    app->add_option("--c0", c0, "override for c_0 (m_toroidal)");
    app->add_option("--sigma", sigma, "2x2 weight sigma = a^2/(a^2+b^2)");
    app->add_option("--tau", tau, "2x2 weight tau = c^2/(c^2+d^2)");
    app->add_option("--lambda", lambda, "comma list lambda_0..lambda_{m-1}");
    app->add_option("--mu", mu, "comma list mu_0..mu_{m-1}");
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"family", family}};
    auto put = [&](const char* k, const std::string& v) {
      if (!v.empty()) j[k] = v;
    };
    if (m) j["m"] = m;
    put("a", a), put("b", b), put("c", c), put("d", d), put("c0", c0);
    put("sigma", sigma), put("tau", tau), put("lambda", lambda), put("mu", mu);
    return j;
  }

  /// lambda and mu of the family; raw face weights go through the toroidal dictionary.
  std::pair<std::vector<Rational>, std::vector<Rational>> weights() const {
    if (family == "uniform") return {{Rational(1, 2)}, {Rational(1, 2)}};
    const bool raw = !a.empty() || !b.empty() || !c.empty() || !d.empty() || !c0.empty();
    if (family == "two_by_two") {
      if (!sigma.empty() || !tau.empty()) {
        if (sigma.empty() || tau.empty() || raw) throw UsageError("two_by_two: give --sigma and --tau, or --a --b --c --d");
        const Rational s = parse_one(sigma, "sigma"), t = parse_one(tau, "tau");
        return {{1 - t, t}, {1 - s, s}};
      }
      if (a.empty() || b.empty() || c.empty() || d.empty()) throw UsageError("two_by_two: --a --b --c --d are required");
      auto init = InitialData::two_by_two(parse_one(a, "a"), parse_one(b, "b"), parse_one(c, "c"), parse_one(d, "d"));
      ToroidalDerived der(*init.as_toroidal());
      return {der.lambda, der.mu};
    }
    if (family == "m_toroidal") {
      if (m < 1) throw UsageError("m_toroidal: --m must be positive");
      if (!lambda.empty() || !mu.empty()) {
        if (raw) throw UsageError("m_toroidal: give --lambda/--mu or face weights, not both");
        std::vector<Rational> l = lambda.empty() ? std::vector<Rational>(static_cast<std::size_t>(m), Rational(1, 2)) : parse_list(lambda, "lambda");
        std::vector<Rational> u = mu.empty() ? std::vector<Rational>(static_cast<std::size_t>(m), Rational(1, 2)) : parse_list(mu, "mu");
        if (l.size() != static_cast<std::size_t>(m) || u.size() != static_cast<std::size_t>(m)) {
          throw UsageError("m_toroidal: --lambda and --mu need m entries");
        }
        return {l, u};
      }
      auto seq = [&](const std::string& text, const char* flag) {
        std::vector<Rational> v = text.empty() ? std::vector<Rational>{Rational(1)} : parse_list(text, flag);
        if (v.size() == 1) v.assign(static_cast<std::size_t>(m), v[0]);
        if (v.size() != static_cast<std::size_t>(m)) throw UsageError(std::string("--") + flag + " needs 1 or m entries");
        return v;
      };
      ToroidalData data{m, seq(a, "a"), seq(b, "b"), seq(c, "c"), seq(d, "d")};
      if (!c0.empty()) data.c[0] = parse_one(c0, "c0");
      for (const auto* s : {&data.a, &data.b, &data.c, &data.d}) {
        for (const auto& v : *s) {
          if (v <= 0) throw UsageError("face weights must be positive");
        }
      }
      ToroidalDerived der(data);
      return {der.lambda, der.mu};
    }
    throw UsageError("--family must be uniform, two_by_two or m_toroidal");
  }

  SystemSpec spec() const {
    auto [l, u] = weights();
    try {
      return SystemSpec::weights(l, u);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

// ---- verify ----------------------------------------------------------------

struct VerifyFlags {
  std::string suite = "all";
  int m = 0;
  int kmax = 4;
  int trials = 5;
  std::string lambda, mu;
};

int run_verify(const VerifyFlags& f, std::uint64_t seed, Output& out) {
  std::vector<SuiteReport> reports;
  const bool all = f.suite == "all";
  auto want = [&](const char* s) { return all || f.suite == s; };
  try {
    if (want("tz")) reports.push_back(verify_tz(f.m, f.kmax, f.trials, seed));
    if (want("lr")) reports.push_back(verify_lr(f.m, std::max(f.kmax, 1), f.trials, seed));
    if (want("periodicity")) reports.push_back(verify_periodicity(f.m, f.kmax + 2, f.trials, seed));
    if (want("density")) reports.push_back(verify_density(f.kmax, f.trials, seed));
    if (f.suite == "relamu" || (all && (!f.lambda.empty() || !f.mu.empty()))) {
      if (f.lambda.empty() && f.mu.empty()) throw UsageError("relamu: give --lambda and/or --mu");
      reports.push_back(verify_relamu(f.lambda.empty() ? std::vector<Rational>{} : parse_list(f.lambda, "lambda"),
                                      f.mu.empty() ? std::vector<Rational>{} : parse_list(f.mu, "mu")));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (reports.empty()) throw UsageError("unknown suite '" + f.suite + "'");
  bool ok = true;
  nlohmann::json summary = nlohmann::json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    out.write_json("verify_" + r.suite + ".json", r.to_json());
    summary.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", r.checks}, {"failures", r.failures}});
    std::cout << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks << " checks, " << r.failures
              << " failures)\n";
  }
  out.write_json("verify_summary.json", {{"passed", ok}, {"suites", summary}});
  return ok ? 0 : 1;
}

// ---- density ---------------------------------------------------------------

struct DensityFlags {
  FamilyFlags family;
  std::string k = "10";
  std::string scale = "times_k";
  std::string mode = "automatic";
  std::string pgm = "p5";
  std::vector<int> source{0, 0};
};

int run_density(const DensityFlags& f, Output& out) {
  auto [lambda, mu] = f.family.weights();
  LRProvider provider = [&] {
    try {
      return LRProvider::weights(lambda, mu);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  std::vector<int> ks;
  {
    std::stringstream ss(f.k);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const int k = std::stoi(item, &used);
        if (used != item.size() || k < 0) throw std::invalid_argument(item);
        ks.push_back(k);
      } catch (const std::exception&) {
        throw UsageError("--k: expected non-negative integers, got '" + item + "'");
      }
    }
  }
  if (ks.empty()) throw UsageError("--k: empty list");
  ProfileScale scale;
  try {
    scale = parse_profile_scale(f.scale);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  DensityMode mode;
  if (f.mode == "exact") {
    mode = DensityMode::exact;
  } else if (f.mode == "floating") {
    mode = DensityMode::floating;
  } else if (f.mode == "automatic") {
    mode = DensityMode::automatic;
  } else {
    throw UsageError("--mode must be exact, floating or automatic");
  }
  if (f.pgm != "p5" && f.pgm != "p2") throw UsageError("--pgm must be p2 or p5");
  if (f.source.size() != 2) throw UsageError("--source needs two integers");
  const int kmax = *std::max_element(ks.begin(), ks.end());
  auto layers = run_recursion(provider, {f.source[0], f.source[1]}, kmax, {mode, 64, ks});
  for (const auto& g : layers) {
    const Raster r = profile_raster(g, scale);
    const std::string stem = "density_" + f.family.family + "_k" + std::to_string(g.k());
    std::ostringstream csv, pgm;
    r.write_csv(csv);
    if (f.pgm == "p5") {
      r.write_pgm_p5(pgm);
    } else {
      r.write_pgm_p2(pgm);
    }
    out.write(stem + ".csv", csv.str());
    out.write(stem + ".pgm", pgm.str());
    auto [row, col] = r.pixel_of(f.source[0], f.source[1]);
    const double center = r.at(row, col);
    const unsigned gray = r.gray(row, col, 255);
    nlohmann::json meta = r.metadata();
    meta["source"] = f.source;
    meta["family"] = f.family.to_json();
    meta["lambda"] = detail::strings(lambda);
    meta["mu"] = detail::strings(mu);
    meta["exact"] = g.is_exact();
    meta["center"] = {{"value", center}, {"gray", gray}, {"value_from_gray", r.value_of_gray(gray, 255)}};
    meta["layer_sum"] = g.layer_sum_approx();
    out.write_json(stem + ".json", meta);
    std::cout << "k=" << g.k() << " center ";
    if (std::isnan(center)) {
      std::cout << "n/a (source outside the support)";
    } else {
      std::cout << center;
    }
    std::cout << " layer_sum " << g.layer_sum_approx() << "\n";
  }
  return 0;
}

// ---- arctic ----------------------------------------------------------------

struct ArcticFlags {
  FamilyFlags family;
  std::string golden, alpha, compare, svg;
  int resolution = 512;
};

SystemSpec appendix_spec(const std::string& name) {
  if (name == "appendix_m3") {
    return SystemSpec::weights({make_rational(1, 2), make_rational(1, 4), make_rational(3, 4)},
                               {make_rational(1, 2), make_rational(1, 5), make_rational(4, 5)});
  }
  return SystemSpec::weights({make_rational(1, 2), make_rational(1, 2), make_rational(9, 10), make_rational(1, 10)},
                             {make_rational(1, 2), make_rational(1, 2), make_rational(1, 2), make_rational(1, 2)});
}

/// The pipeline run that corresponds to a named curve.
ArcticCurve computed_counterpart(const std::string& name, const std::optional<Rational>& alpha) {
  if (name == "arctic_circle") return arctic_curve(SystemSpec::uniform());
  if (name == "fortress") return alpha ? fortress_curve(*alpha) : fortress_curve();
  return arctic_curve(appendix_spec(name));
}

int run_arctic(const ArcticFlags& f, Output& out) {
  static const std::vector<std::string> names{"arctic_circle", "fortress", "appendix_m3", "appendix_m4"};
  auto known = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  if (f.golden.empty() == f.family.family.empty() && f.compare.empty()) {
    throw UsageError("give exactly one of --golden and --family, or both with --compare");
  }
  if (!f.golden.empty() && !known(f.golden)) throw UsageError("unknown golden curve '" + f.golden + "'");
  if (!f.alpha.empty() && f.golden != "fortress" && f.compare != "fortress") throw UsageError("--alpha applies to the fortress curve");
  if (f.resolution < 2 || f.resolution > 4096) throw UsageError("--resolution must lie in [2, 4096]");
  std::optional<Rational> alpha;
  if (!f.alpha.empty()) alpha = parse_one(f.alpha, "alpha");

  std::optional<ArcticCurve> computed, golden;
  if (!f.family.family.empty()) computed = arctic_curve(f.family.spec());
  if (!f.golden.empty()) golden = golden_curve(f.golden, alpha);
  if (!f.compare.empty()) {
    if (f.compare == "computed") {
      if (!golden) throw UsageError("--compare computed needs --golden");
      if (!computed) computed = computed_counterpart(f.golden, alpha);
    } else if (known(f.compare)) {
      if (golden) throw UsageError("--compare names a golden curve; drop --golden");
      if (!computed) throw UsageError("--compare " + f.compare + " needs --family");
      golden = golden_curve(f.compare, alpha);
    } else {
      throw UsageError("--compare must be 'computed' or a golden curve name");
    }
  }

  int status = 0;
  if (computed) out.write_json("curve_computed.json", computed->to_json());
  if (golden) out.write_json("curve_golden.json", golden->to_json());
  if (computed && golden) {
    const auto cmp = compare_curves(computed->P, golden->P);
    nlohmann::json report = nlohmann::json::parse(cmp.to_json().dump());
    report["status"] = cmp.unit_equivalent ? "unit-equivalent" : "not unit-equivalent";
    report["computed"] = computed->provenance;
    report["golden"] = golden->provenance;
    out.write_json("comparison.json", report);
    std::cout << report["status"].get<std::string>() << " (unit " << (cmp.unit ? to_string(*cmp.unit) : "none") << ")\n";
    if (!cmp.unit_equivalent) status = 1;
  }

  const ArcticCurve& shown = golden ? *golden : *computed;
  if (detail::parameters_of_curve(shown.P).empty()) {
    const CurveRaster r = curve_raster(shown, {}, f.resolution);
    out.write(f.svg.empty() ? fs::path("curve.svg") : fs::path(f.svg), r.to_svg());
    out.write("curve_sign.csv", r.to_csv());
    std::cout << shown.provenance << ": degree " << shown.P.total_degree() << ", " << r.polylines.size() << " polylines, "
              << r.curve_components() << " components\n";
  } else {
    std::cout << shown.provenance << ": symbolic curve, no raster\n";
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octahedron recurrence, dimer densities and arctic curves"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::string output_dir;
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--output-dir", output_dir, "output directory (default: $OUTPUT_DIR, then ./octa_out)");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "run exact verification suites");
  verify->add_option("--suite", vf.suite, "tz, lr, periodicity, density, relamu or all");
  verify->add_option("--m", vf.m, "period; 0 cycles through 1, 2, 3");
  verify->add_option("--kmax", vf.kmax, "largest order");
  verify->add_option("--trials", vf.trials, "random datasets per suite");
  verify->add_option("--lambda", vf.lambda, "comma list for relamu");
  verify->add_option("--mu", vf.mu, "comma list for relamu");
  verify->add_option("--seed", seed, "seed for randomized suites");

  DensityFlags df;
  auto* density = app.add_subcommand("density", "write density profiles");
  df.family.add_to(density);
  density->add_option("--k", df.k, "comma list of layers");
  density->add_option("--scale", df.scale, "raw, times_k or abs");
  density->add_option("--mode", df.mode, "exact, floating or automatic");
  density->add_option("--pgm", df.pgm, "p2 or p5");
  density->add_option("--source", df.source, "source face i j")->expected(2);

  ArcticFlags af;
  auto* arctic = app.add_subcommand("arctic", "compute, compare and draw arctic curves");
  af.family.add_to(arctic);
  arctic->add_option("--golden", af.golden, "arctic_circle, fortress, appendix_m3 or appendix_m4");
  arctic->add_option("--alpha", af.alpha, "fortress parameter p/q (omit for symbolic)");
  arctic->add_option("--compare", af.compare, "'computed' or a golden curve name");
  arctic->add_option("--svg", af.svg, "SVG path (default curve.svg in the output directory)");
  arctic->add_option("--resolution", af.resolution, "raster resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (output_dir.empty()) {
    const char* env = std::getenv("OUTPUT_DIR");
    output_dir = env && *env ? env : "octa_out";
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Output out(output_dir, command);
    int code = 0;
    nlohmann::json inputs{{"seed", seed}};
    if (command == "verify") {
      inputs["suite"] = vf.suite, inputs["m"] = vf.m, inputs["kmax"] = vf.kmax, inputs["trials"] = vf.trials;
      inputs["lambda"] = vf.lambda, inputs["mu"] = vf.mu;
      code = run_verify(vf, seed, out);
    } else if (command == "density") {
      inputs["family"] = df.family.to_json(), inputs["k"] = df.k, inputs["scale"] = df.scale;
      inputs["mode"] = df.mode, inputs["pgm"] = df.pgm, inputs["source"] = df.source;
      code = run_density(df, out);
    } else {
      inputs["family"] = af.family.to_json(), inputs["golden"] = af.golden, inputs["alpha"] = af.alpha;
      inputs["compare"] = af.compare, inputs["svg"] = af.svg, inputs["resolution"] = af.resolution;
      code = run_arctic(af, out);
    }
    out.manifest(inputs);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
