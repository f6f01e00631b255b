#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "hypcert/certificate.hpp"
#include "hypcert/config_io.hpp"
#include "hypcert/errors.hpp"
#include "hypcert/ffheights.hpp"
#include "hypcert/orbifold.hpp"
#include "hypcert/weight_search.hpp"
#include <nlohmann/json.hpp>

namespace hypcert::cli {

namespace {

using Json = nlohmann::ordered_json;

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

Rational rational_flag(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw ConfigError(std::string("--") + name + ": " + e.what());
  }
}

struct Loaded {
  ConfigFile file;
  SurfaceConfig cfg;
  WeightedBoundary wb;
};

Loaded load(const std::string& path) {
  ConfigFile file = load_config(path);
  SurfaceConfig cfg = SurfaceConfig::build(file.spec);
  if (file.weights) {
    WeightedBoundary wb(cfg, *file.weights);
    return {std::move(file), std::move(cfg), std::move(wb)};
  }
  try {
    WeightedBoundary wb = ansatz_weights(cfg);
    return {std::move(file), std::move(cfg), std::move(wb)};
  } catch (const DomainError& e) {
    throw ConfigError(path + ": no weights given and the default weights do not apply: " + e.what());
  }
}

CZOptions cz_options(const ConfigFile& f) {
  CZOptions o;
  o.require_two_components = !f.allow_single_component;
  return o;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::pass: return kPass;
    case Verdict::fail: return kFail;
    case Verdict::inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

void print_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << "  " << std::left << std::setw(18) << key << value << "\n";
}

// certify

struct CertifyArgs {
  std::string config;
  std::string output;
  std::string eps;
  std::string alpha = "1";
  long max_n = 500;
  unsigned threads = 1;
  bool no_constants = false;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
  const ConfigFile file = load_config(a.config);
  CertifyOptions opts;
  if (!a.eps.empty()) opts.eps_target = rational_flag(a.eps, "eps");
  opts.alpha = rational_flag(a.alpha, "alpha");
  opts.max_N = a.max_n;
  opts.threads = a.threads;
  opts.constants = !a.no_constants;
  const Certificate cert = certify(file, opts);
  const std::string doc = serialize_certificate(cert);
  if (a.output.empty() || a.output == "-") {
    out << doc;
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + a.output);
    f << doc;
    out << "verdict: " << to_string(cert.report.overall);
    if (!cert.report.first_failure.empty()) out << " (first failure: " << cert.report.first_failure << ")";
    out << "\ncertificate: " << a.output << "\n";
  }
  return exit_for(cert.report.overall);
}

// search

struct SearchArgs {
  std::string config;
  long bound = 8;
  std::string objective = "min-sum";
  long top = 0;
  unsigned threads = 1;
  bool no_prune = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  ConfigFile file = load_config(a.config);
  const SurfaceConfig cfg = SurfaceConfig::build(file.spec);
  SearchOptions o;
  o.bound = a.bound;
  if (a.bound < 1) throw ConfigError("--bound must be positive");
  if (a.objective == "min-sum") {
    o.objective = Objective::min_sum;
  } else if (a.objective == "max-epsilon") {
    o.objective = Objective::max_epsilon;
  } else {
    throw ConfigError("--objective must be min-sum or max-epsilon");
  }
  if (a.top > 0) o.top = static_cast<std::size_t>(a.top);
  o.threads = a.threads;
  o.prune = !a.no_prune;
  o.cz = cz_options(file);
  const auto hits = search(cfg, o);
  out << hits.size() << " passing weight vectors\n";
  for (const auto& h : hits) {
    for (std::size_t i = 0; i < h.weights.size(); ++i) out << (i ? " " : "") << h.weights[i];
    out << "  eps = " << to_string(h.epsilon) << " ~ " << to_decimal(h.epsilon, 8) << "\n";
  }
  return hits.empty() ? kFail : kPass;
}

// constants

struct ConstantsArgs {
  std::string config;
  std::string eps;
  long max_n = 500;
  unsigned threads = 1;
};

int cmd_constants(const ConstantsArgs& a, std::ostream& out) {
  const Loaded l = load(a.config);
  const CZReport report = evaluate_cz(l.cfg, l.wb, cz_options(l.file));
  if (report.overall != Verdict::pass) {
    out << "checklist verdict " << to_string(report.overall) << " (" << report.first_failure << "); no constants\n";
    return exit_for(report.overall);
  }
  if (!l.wb.integral()) throw ConfigError("constants need integral weights");
  const Rational eps = a.eps.empty() ? *report.epsilon_lower_bound : rational_flag(a.eps, "eps");
  ChainOptions co;
  co.max_N = a.max_n;
  co.threads = a.threads;
  const ChainResult r = find_Nb(l.cfg, l.wb, report, eps, co);
  if (!r.chain) {
    out << "inconclusive at cap: " << r.reason << "\n";
    return kInconclusive;
  }
  const ConstantsChain& c = *r.chain;
  out << "constants for eps = " << to_string(eps) << " (applied with eps/2)\n";
  print_row(out, "N", std::to_string(c.N));
  print_row(out, "b", to_string(c.b));
  print_row(out, "M", to_string(c.M));
  for (std::size_t i = 0; i < c.sum_h0_lower.size(); ++i) {
    print_row(out, "sum_h0[" + std::to_string(i) + "] >=", to_string(c.sum_h0_lower[i]));
  }
  print_row(out, "ratio", to_string(c.ratio) + " ~ " + to_decimal(c.ratio) + " (component " +
                              std::to_string(c.ratio_component) + ")");
  print_row(out, "C", to_string(c.C));
  print_row(out, "min beta >=", to_string(c.beta_min_lower));
  print_row(out, "sum beta <=", to_string(c.beta_sum_upper));
  print_row(out, "Q <=", to_string(c.Q));
  print_row(out, "m0", to_string(c.m0));
  const std::string check = verify_chain(l.cfg, l.wb, report, eps, c);
  print_row(out, "re-verified", check.empty() ? "yes" : "NO: " + check);
  return check.empty() ? kPass : kFail;
}

// stress

struct StressArgs {
  std::size_t samples = 1000;
  int max_degree = 10;
  int max_dimension = 3;
  long coeff_bound = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string emit;
};

int cmd_stress(const StressArgs& a, std::ostream& out) {
  if (a.max_dimension < 1) throw ConfigError("--max-dimension must be positive");
  if (a.max_degree < a.max_dimension) throw ConfigError("--max-degree must be at least --max-dimension");
  if (a.coeff_bound < 1) throw ConfigError("--coeff-bound must be positive");
  StressOptions o;
  o.samples = a.samples;
  o.max_degree = a.max_degree;
  o.max_dimension = a.max_dimension;
  o.coeff_bound = a.coeff_bound;
  o.seed = a.seed;
  o.threads = a.threads;
  std::unique_ptr<std::ofstream> file;
  std::ostream* records = nullptr;
  if (a.emit == "-") {
    records = &out;
  } else if (!a.emit.empty()) {
    file = std::make_unique<std::ofstream>(a.emit);
    if (!*file) throw ConfigError("cannot write " + a.emit);
    records = file.get();
  }
  const auto start = std::chrono::steady_clock::now();
  const StressSummary s = stress(o, [&](const StressSample& x) {
    if (!records) return;
    Json j;
    j["index"] = x.index;
    j["map"] = to_string(x.map);
    j["height"] = x.height;
    j["N1"] = to_string(x.counting.truncated);
    j["lhs"] = to_string(x.wang.lhs);
    j["rhs"] = to_string(x.wang.rhs);
    j["ratio"] = x.wang.rhs > 0 ? to_string(Rational(x.wang.lhs / x.wang.rhs)) : std::string("n/a");
    j["holds"] = x.wang.holds;
    j["fmt"] = x.fmt_holds;
    *records << j.dump() << "\n";
  });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << "stress summary\n";
  print_row(out, "samples", std::to_string(s.samples));
  print_row(out, "degenerate", std::to_string(s.skipped));
  print_row(out, "wang violations", std::to_string(s.wang_violations));
  print_row(out, "fmt violations", std::to_string(s.fmt_violations));
  print_row(out, "max lhs/rhs", to_string(s.max_ratio) + " (empirical)");
  std::ostringstream t;
  t << std::fixed << std::setprecision(2) << secs << " s";
  print_row(out, "time", t.str());
  return s.wang_violations == 0 && s.fmt_violations == 0 ? kPass : kFail;
}

// beta

struct BetaArgs {
  bool plane = false;
  long degree = 1;
  long max_n = 20;
  std::string config;
};

int cmd_beta(const BetaArgs& a, std::ostream& out) {
  if (a.plane) {
    if (a.degree < 1) throw ConfigError("--degree must be positive");
    if (a.max_n < 1) throw ConfigError("--max-n must be positive");
    const SurfaceConfig cfg = SurfaceConfig::plane({Component{1, false, 0, false}});
    const WeightedBoundary wb(cfg, {Rational(a.degree)});
    const QuadExt closed = beta_lower(cfg, wb, 0);
    out << "closed form beta(" << a.degree << "H, H) >= " << to_string(closed) << "\n";
    bool all = true;
    for (long n = 1; n <= a.max_n; ++n) {
      const Rational r = plane_beta_ratio(a.degree, n);
      const bool eq = QuadExt(r) == closed;
      all = all && eq;
      out << "  N = " << std::setw(4) << n << "  ratio = " << to_string(r) << (eq ? "" : "  MISMATCH") << "\n";
    }
    return all ? kPass : kFail;
  }
  if (a.config.empty()) throw ConfigError("beta needs --plane or --config");
  const Loaded l = load(a.config);
  for (std::size_t i = 0; i < l.cfg.component_count(); ++i) {
    try {
      const ComponentRecord r = component_record(l.cfg, l.wb, i);
      out << "component " << i << ": p = " << to_string(r.weight) << ", xi = " << to_string(r.xi)
          << ", beta >= " << to_string(r.beta) << " ~ " << to_decimal(r.beta) << "\n";
    } catch (const Error& e) {
      out << "component " << i << ": " << e.what() << "\n";
    }
  }
  return kPass;
}

// probe

struct ProbeArgs {
  std::string config;
  std::string realization;
  std::size_t samples = 10000;
  int max_degree = 4;
  long coeff_bound = 20;
  std::uint64_t seed = 1;
  std::string emit;
};

int cmd_probe(const ProbeArgs& a, std::ostream& out) {
  const Loaded l = load(a.config);
  const BoundaryRealization real = load_realization(a.realization);
  validate_realization(l.cfg, real);
  const CZReport report = evaluate_cz(l.cfg, l.wb, cz_options(l.file));
  if (report.overall != Verdict::pass) {
    out << "probe needs a passing checklist; verdict " << to_string(report.overall) << "\n";
    return exit_for(report.overall);
  }
  if (a.max_degree < 1 || a.coeff_bound < 1) throw ConfigError("--max-degree and --coeff-bound must be positive");
  std::unique_ptr<std::ofstream> file;
  std::ostream* records = nullptr;
  if (a.emit == "-") {
    records = &out;
  } else if (!a.emit.empty()) {
    file = std::make_unique<std::ofstream>(a.emit);
    if (!*file) throw ConfigError("cannot write " + a.emit);
    records = file.get();
  }
  std::vector<ProbeRecord> kept;
  std::map<std::string, std::size_t> excluded;
  for (std::size_t i = 0; i < a.samples; ++i) {
    auto rng = sample_rng(a.seed, i);
    const RatMap x = random_map(rng, 2, a.max_degree, a.coeff_bound);
    ProbeOutcome o = height_bound_probe(l.cfg, l.wb, real, x);
    if (!o.record) {
      const auto cut = o.excluded.find(' ', o.excluded.find(' ') + 1);
      ++excluded[o.excluded.substr(0, cut)];
      continue;
    }
    if (records) {
      Json j;
      j["map"] = to_string(o.record->map);
      j["height"] = o.record->height;
      j["N1"] = to_string(o.record->truncated);
      j["deg_pullback"] = to_string(o.record->pullback_degree);
      j["ratio"] = to_string(o.record->ratio);
      *records << j.dump() << "\n";
    }
    kept.push_back(std::move(*o.record));
  }
  Rational alpha = 0;
  for (const auto& r : kept) alpha = std::max(alpha, r.ratio);
  std::size_t violations = 0;
  for (const auto& r : kept) {
    const Integer n1 = r.truncated - 2;
    if (r.pullback_degree > alpha * Rational(std::max<Integer>(Integer(1), n1))) ++violations;
  }
  out << "probe summary\n";
  print_row(out, "sampled", std::to_string(a.samples));
  print_row(out, "kept", std::to_string(kept.size()));
  for (const auto& [why, n] : excluded) print_row(out, "excluded", std::to_string(n) + " (" + why + ")");
  print_row(out, "alpha_emp", to_string(alpha) + " (empirical)");
  print_row(out, "violations", std::to_string(violations));
  return violations == 0 ? kPass : kFail;
}

// orbifold

int cmd_orbifold(const std::string& path, std::ostream& out) {
  const ProfileFile p = parse_profile(read_text_file(path), path);
  const auto induced = induced_multiplicities(p.profile, p.delta);
  for (std::size_t i = 0; i < induced.size(); ++i) {
    out << p.profile.points[i].id << ": t = " << to_string(p.profile.points[i].total())
        << ", induced multiplicity " << to_string(induced[i]) << "\n";
  }
  const OrbifoldBound b = orbifold_bound_chain(p.profile, p.delta);
  out << "N1 = " << to_string(b.lhs) << " <= " << to_string(b.rhs) << (b.holds ? "" : "  VIOLATED") << "\n";
  return b.holds ? kPass : kFail;
}

}  // namespace

Integer count_monomials(long k) {
  if (k < 0) return 0;
  Integer n = 0;
  for (long i = 0; i <= k; ++i) n += k - i + 1;
  return n;
}

Rational plane_beta_ratio(long a, long n) {
  Integer sum = 0;
  for (long m = 1; m <= a * n; ++m) sum += count_monomials(a * n - m);
  return make_rational(sum, Integer(n * count_monomials(a * n)));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for hyperbolicity of blown-up planes", "hypcert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("hypcert ") + HYPCERT_VERSION);

  CertifyArgs ca;
  ca.threads = default_threads();
  auto* certify_cmd = app.add_subcommand("certify", "Evaluate the hypothesis checklist and write a certificate");
  certify_cmd->add_option("config", ca.config, "Configuration file")->required();
  certify_cmd->add_option("-o,--output", ca.output, "Certificate path (stdout when omitted)");
  certify_cmd->add_option("--eps", ca.eps, "Target epsilon for the constants (default: certified lower bound)");
  certify_cmd->add_option("--alpha", ca.alpha, "Twist coefficient for the orbifold threshold")->capture_default_str();
  certify_cmd->add_option("--max-n", ca.max_n, "Largest N tried for the constants")->capture_default_str();
  certify_cmd->add_option("--threads", ca.threads, "Worker threads");
  certify_cmd->add_flag("--no-constants", ca.no_constants, "Skip the constants chain");

  SearchArgs sa;
  sa.threads = default_threads();
  auto* search_cmd = app.add_subcommand("search", "Enumerate integer weight vectors passing the checklist");
  search_cmd->add_option("--config", sa.config, "Configuration file")->required();
  search_cmd->add_option("--bound", sa.bound, "Largest weight")->capture_default_str();
  search_cmd->add_option("--objective", sa.objective, "min-sum or max-epsilon")->capture_default_str();
  search_cmd->add_option("--top", sa.top, "Keep the best k vectors");
  search_cmd->add_option("--threads", sa.threads, "Worker threads");
  search_cmd->add_flag("--no-prune", sa.no_prune, "Disable ampleness pruning");

  ConstantsArgs co;
  co.threads = default_threads();
  auto* constants_cmd = app.add_subcommand("constants", "Derive N, b, M, C, Q and m0");
  constants_cmd->add_option("--config", co.config, "Configuration file")->required();
  constants_cmd->add_option("--eps", co.eps, "Target epsilon (default: certified lower bound)");
  constants_cmd->add_option("--max-n", co.max_n, "Largest N tried")->capture_default_str();
  constants_cmd->add_option("--threads", co.threads, "Worker threads");

  StressArgs st;
  st.threads = default_threads();
  auto* stress_cmd = app.add_subcommand("stress", "Random sweep of the function-field inequalities");
  stress_cmd->add_option("--samples", st.samples)->capture_default_str();
  stress_cmd->add_option("--max-degree", st.max_degree)->capture_default_str();
  stress_cmd->add_option("--max-dimension", st.max_dimension)->capture_default_str();
  stress_cmd->add_option("--coeff-bound", st.coeff_bound)->capture_default_str();
  stress_cmd->add_option("--seed", st.seed)->capture_default_str();
  stress_cmd->add_option("--threads", st.threads);
  stress_cmd->add_option("--emit-records", st.emit, "Line-delimited JSON records to a file, or - for stdout");

  BetaArgs ba;
  auto* beta_cmd = app.add_subcommand("beta", "Closed-form beta bounds and the plane monomial oracle");
  beta_cmd->add_flag("--plane", ba.plane, "Plane with L = aH and D = H");
  beta_cmd->add_option("--degree", ba.degree, "a")->capture_default_str();
  beta_cmd->add_option("--max-n", ba.max_n)->capture_default_str();
  beta_cmd->add_option("--config", ba.config, "Configuration file");

  ProbeArgs pa;
  auto* probe_cmd = app.add_subcommand("probe", "Empirical height-bound probe on random rational curves");
  probe_cmd->add_option("--config", pa.config, "Configuration file")->required();
  probe_cmd->add_option("--realization", pa.realization, "Plane equations of the boundary")->required();
  probe_cmd->add_option("--samples", pa.samples)->capture_default_str();
  probe_cmd->add_option("--max-degree", pa.max_degree)->capture_default_str();
  probe_cmd->add_option("--coeff-bound", pa.coeff_bound)->capture_default_str();
  probe_cmd->add_option("--seed", pa.seed)->capture_default_str();
  probe_cmd->add_option("--emit-records", pa.emit, "Line-delimited JSON records to a file, or - for stdout");

  std::string profile;
  auto* orbifold_cmd = app.add_subcommand("orbifold", "Induced multiplicities and the counting bound of a profile");
  orbifold_cmd->add_option("profile", profile, "Profile file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << "hypcert " << HYPCERT_VERSION << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "hypcert: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*certify_cmd) return cmd_certify(ca, out);
    if (*search_cmd) return cmd_search(sa, out);
    if (*constants_cmd) return cmd_constants(co, out);
    if (*stress_cmd) return cmd_stress(st, out);
    if (*beta_cmd) return cmd_beta(ba, out);
    if (*probe_cmd) return cmd_probe(pa, out);
    if (*orbifold_cmd) return cmd_orbifold(profile, out);
  } catch (const ConfigError& e) {
    err << "hypcert: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "hypcert: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace hypcert::cli
