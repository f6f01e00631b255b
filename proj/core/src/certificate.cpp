#include "hypcert/certificate.hpp"

#include <algorithm>

#include "hypcert/errors.hpp"
#include "hypcert/orbifold.hpp"
#include "hypcert/weight_search.hpp"
#include "json_util.hpp"

#ifndef HYPCERT_VERSION
#define HYPCERT_VERSION "0.0.0"
#endif

namespace hypcert {

using detail::Field;
using detail::Json;

std::string to_string(Exactness e) {
  switch (e) {
    case Exactness::exact_rational: return "exact-rational";
    case Exactness::exact_quadratic: return "exact-quadratic";
    case Exactness::lower_bound: return "lower-bound";
    case Exactness::upper_bound: return "upper-bound";
    case Exactness::empirical: return "empirical";
  }
  throw InvariantError("unknown exactness");
}

Exactness parse_exactness(std::string_view text) {
  for (auto e : {Exactness::exact_rational, Exactness::exact_quadratic, Exactness::lower_bound,
                 Exactness::upper_bound, Exactness::empirical}) {
    if (to_string(e) == text) return e;
  }
  throw ConfigError("unknown exactness tag '" + std::string(text) + "'");
}

namespace {

const std::vector<Reference>& standard_references() {
  static const std::vector<Reference> refs = {
      {"ampleness",
       "Nakai-Moishezon: D^2 > 0 and D.C > 0 for exceptional curves, boundary strict transforms, and "
       "(by Bezout) every other curve"},
      {"riemann-roch",
       "h^0(D) from chi(D) = 1 + D.(D - K)/2; h^2 = 0 when (K - D).D_p < 0, h^1 = 0 when D - K is ample"},
      {"beta-bound",
       "beta(D_p, D_i) >= (2/3 xi D_p^2 - 1/3 (D_p.D_i) xi^2) / D_p^2, xi the least positive root of "
       "D_i^2 x^2 - 2 (D_p.D_i) x + D_p^2"},
      {"epsilon", "epsilon = min_i (beta_i - p_i) / p_i"},
      {"constants",
       "(1 + 2/b) max_i beta_i N M / sum_m h^0(N D_p - m D_i) < 1 + eps/2, C = (1 + eps/2)/(M N), "
       "Q >= C M (M - 1) / (2 min beta), m0 least with (Q/m0) sum beta < eps/2"},
      {"orbifold",
       "induced multiplicities ceil(m_j / t_i); twist threshold for D_p - sum_j (alpha/m) D_j to stay ample"},
  };
  return refs;
}

Json num(const QuadExt& v, Exactness e) { return Json{{"value", to_string(v)}, {"exactness", to_string(e)}}; }

Json exact(const QuadExt& v) {
  return num(v, v.is_rational() ? Exactness::exact_rational : Exactness::exact_quadratic);
}

Json exact_int(const Integer& v) { return num(QuadExt(Rational(v)), Exactness::exact_rational); }

QuadExt read_num(const Field& f, std::initializer_list<Exactness> allowed) {
  f.object();
  const Exactness e = [&] {
    try {
      return parse_exactness(f.at("exactness").string());
    } catch (const ConfigError& err) {
      f.at("exactness").fail(err.what());
    }
  }();
  if (std::find(allowed.begin(), allowed.end(), e) == allowed.end()) {
    f.at("exactness").fail("unexpected exactness tag " + to_string(e));
  }
  try {
    QuadExt v = parse_quad(f.at("value").string());
    if (e == Exactness::exact_rational && !v.is_rational()) f.at("value").fail("irrational value tagged rational");
    if (e == Exactness::exact_quadratic && v.is_rational()) f.at("value").fail("rational value tagged quadratic");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& err) {
    f.at("value").fail(err.what());
  }
}

QuadExt read_exact(const Field& f) { return read_num(f, {Exactness::exact_rational, Exactness::exact_quadratic}); }

Rational read_rational(const Field& f, Exactness e) { return read_num(f, {e}).rational_part(); }

Integer read_integer(const Field& f) {
  const Rational q = read_rational(f, Exactness::exact_rational);
  if (q.get_den() != 1) f.fail("expected an integer");
  return q.get_num();
}

Json multiplicity_json(const Multiplicity& m) { return m.is_infinite() ? Json("inf") : Json(to_string(m)); }

Json chain_json(const ConstantsChain& c) {
  Json j;
  j["N"] = exact_int(c.N);
  j["b"] = exact_int(c.b);
  j["M"] = exact_int(c.M);
  Json sums = Json::array();
  for (const auto& s : c.sum_h0_lower) sums.push_back(num(s, Exactness::lower_bound));
  j["sum_h0_lower"] = sums;
  j["eps_inner"] = exact(c.eps_inner);
  j["ratio"] = exact(c.ratio);
  j["ratio_component"] = c.ratio_component;
  j["C"] = exact(c.C);
  j["beta_min_lower"] = num(c.beta_min_lower, Exactness::lower_bound);
  j["beta_sum_upper"] = num(c.beta_sum_upper, Exactness::upper_bound);
  j["Q"] = num(c.Q, Exactness::upper_bound);
  j["m0"] = exact_int(c.m0);
  return j;
}

ConstantsChain read_chain(const Field& f) {
  ConstantsChain c;
  c.N = read_integer(f.at("N")).get_si();
  c.b = read_integer(f.at("b"));
  c.M = read_integer(f.at("M"));
  const Field sums = f.at("sum_h0_lower");
  for (std::size_t i = 0; i < sums.size(); ++i) c.sum_h0_lower.push_back(read_rational(sums.at(i), Exactness::lower_bound));
  c.eps_inner = read_rational(f.at("eps_inner"), Exactness::exact_rational);
  c.ratio = read_exact(f.at("ratio"));
  c.ratio_component = static_cast<std::size_t>(f.at("ratio_component").integer());
  c.C = read_rational(f.at("C"), Exactness::exact_rational);
  c.beta_min_lower = read_rational(f.at("beta_min_lower"), Exactness::lower_bound);
  c.beta_sum_upper = read_rational(f.at("beta_sum_upper"), Exactness::upper_bound);
  c.Q = read_rational(f.at("Q"), Exactness::upper_bound);
  c.m0 = read_integer(f.at("m0"));
  return c;
}

}  // namespace

Certificate certify(const ConfigFile& config, const CertifyOptions& options) {
  Certificate cert;
  cert.generator = std::string("hypcert ") + HYPCERT_VERSION;
  cert.config = config;
  const SurfaceConfig cfg = SurfaceConfig::build(config.spec);
  cert.blown_points = cfg.points().size();
  const DivisorClass k = canonical_class(cfg);
  cert.k_squared = intersect(k, k);

  std::optional<WeightedBoundary> wb;
  if (config.weights) {
    wb.emplace(cfg, *config.weights);
  } else {
    try {
      wb.emplace(ansatz_weights(cfg));
    } catch (const DomainError& e) {
      throw ConfigError(std::string("no weights given and the default weights do not apply: ") + e.what());
    }
    cert.weights_from_ansatz = true;
  }
  cert.weights = wb->weights();

  CZOptions cz;
  cz.require_two_components = !config.allow_single_component;
  cert.report = evaluate_cz(cfg, *wb, cz);

  if (options.constants) {
    ConstantsSection cs;
    cs.max_N = options.max_N;
    if (cert.report.overall != Verdict::pass) {
      cs.note = "checklist did not pass";
    } else if (!wb->integral()) {
      cs.note = "weights are not integral";
    } else {
      cs.eps_target = options.eps_target ? *options.eps_target : *cert.report.epsilon_lower_bound;
      ChainOptions co;
      co.max_N = options.max_N;
      co.threads = options.threads;
      ChainResult r = find_Nb(cfg, *wb, cert.report, cs.eps_target, co);
      cs.chain = r.chain;
      cs.note = r.reason;
    }
    cert.constants = cs;
  }

  if (config.multiplicities) {
    OrbifoldSection os;
    os.multiplicities = *config.multiplicities;
    os.canonical_big = orbifold_canonical_big(cfg, os.multiplicities);
    os.alpha = options.alpha;
    if (cert.report.ampleness.certified) {
      os.twist_threshold = ample_twist_threshold(cfg, *wb, options.alpha, OrbifoldDivisor(os.multiplicities));
    } else {
      os.note = "D_p is not certified ample";
    }
    cert.orbifold = os;
  }
  cert.references = standard_references();
  return cert;
}

std::string serialize_certificate(const Certificate& cert) {
  Json doc;
  doc["format"] = "hypcert-certificate";
  doc["version"] = cert.version;
  doc["generator"] = cert.generator;
  doc["config"] = Json::parse(serialize_config(cert.config));

  const CZReport& r = cert.report;
  doc["verdict"] = Json{{"overall", to_string(r.overall)}, {"first_failure", r.first_failure}};
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses) {
    hyps.push_back(Json{{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
  }
  doc["hypotheses"] = hyps;

  Json lattice;
  lattice["blown_points"] = exact_int(Integer(static_cast<unsigned long>(cert.blown_points)));
  lattice["K_squared"] = exact_int(cert.k_squared);
  lattice["weights_source"] = cert.weights_from_ansatz ? "ansatz" : "given";
  Json weights = Json::array();
  for (const auto& w : cert.weights) weights.push_back(exact(w));
  lattice["weights"] = weights;
  lattice["Dp_squared"] = exact(r.dp_squared);
  doc["lattice"] = lattice;

  Json checks = Json::array();
  for (const auto& c : r.ampleness.checks) {
    checks.push_back(Json{{"name", c.name}, {"value", exact(c.value)}, {"passed", c.passed}, {"witness", c.witness}});
  }
  doc["ampleness"] = Json{{"certified", r.ampleness.certified}, {"failing", r.ampleness.failing}, {"checks", checks}};

  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json j;
    j["index"] = c.index;
    j["weight"] = exact(c.weight);
    j["self_intersection"] = exact_int(c.self_intersection);
    j["dp_dot"] = exact(c.dp_dot);
    j["xi"] = exact(c.xi);
    j["cz_margin"] = exact(c.cz_margin);
    j["cz_inequality_holds"] = c.cz_inequality_holds;
    j["beta"] = num(c.beta, Exactness::lower_bound);
    j["beta_exceeds_p"] = c.beta_exceeds_p;
    comps.push_back(j);
  }
  doc["components"] = comps;

  if (r.epsilon) {
    doc["epsilon"] = Json{{"value", exact(*r.epsilon)},
                          {"lower_bound", num(*r.epsilon_lower_bound, Exactness::lower_bound)},
                          {"component", *r.epsilon_component}};
  } else {
    doc["epsilon"] = nullptr;
  }

  if (cert.constants) {
    const auto& cs = *cert.constants;
    Json j;
    j["eps_target"] = exact(cs.eps_target);
    j["max_N"] = exact_int(Integer(cs.max_N));
    j["chain"] = cs.chain ? chain_json(*cs.chain) : Json(nullptr);
    j["note"] = cs.note;
    doc["constants"] = j;
  }
  if (cert.orbifold) {
    const auto& os = *cert.orbifold;
    Json j;
    Json m = Json::array();
    for (const auto& x : os.multiplicities) m.push_back(multiplicity_json(x));
    j["multiplicities"] = m;
    j["canonical_big"] = Json{{"certified", os.canonical_big.certified},
                              {"plane_degree", exact(os.canonical_big.plane_degree)}};
    j["alpha"] = exact(os.alpha);
    j["twist_threshold"] = os.twist_threshold ? exact_int(*os.twist_threshold) : Json(nullptr);
    j["note"] = os.note;
    doc["orbifold"] = j;
  }
  Json refs = Json::array();
  for (const auto& ref : cert.references) refs.push_back(Json{{"label", ref.label}, {"statement", ref.statement}});
  doc["references"] = refs;
  return doc.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text, std::string_view source) {
  const Json doc = detail::parse_json(text, source);
  const Field root(doc, std::string(source));
  if (root.at("format").string() != "hypcert-certificate") root.at("format").fail("not a certificate");
  Certificate cert;
  cert.version = static_cast<int>(root.at("version").integer());
  if (cert.version != 1) root.at("version").fail("unsupported version");
  cert.generator = root.at("generator").string();
  cert.config = parse_config(root.at("config").value().dump(), std::string(source) + "#/config");

  CZReport& r = cert.report;
  const Field verdict = root.at("verdict");
  auto verdict_of = [](const Field& f) {
    try {
      return parse_verdict(f.string());
    } catch (const Error& e) {
      f.fail(e.what());
    }
  };
  r.overall = verdict_of(verdict.at("overall"));
  r.first_failure = verdict.at("first_failure").string();
  const Field hyps = root.at("hypotheses");
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    const Field h = hyps.at(i);
    r.hypotheses.push_back({h.at("name").string(), verdict_of(h.at("status")), h.at("detail").string()});
  }

  const Field lattice = root.at("lattice");
  cert.blown_points = read_integer(lattice.at("blown_points")).get_ui();
  cert.k_squared = read_integer(lattice.at("K_squared"));
  const std::string source_tag = lattice.at("weights_source").string();
  if (source_tag != "ansatz" && source_tag != "given") lattice.at("weights_source").fail("expected ansatz or given");
  cert.weights_from_ansatz = source_tag == "ansatz";
  const Field weights = lattice.at("weights");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cert.weights.push_back(read_rational(weights.at(i), Exactness::exact_rational));
  }
  r.dp_squared = read_rational(lattice.at("Dp_squared"), Exactness::exact_rational);

  const Field amp = root.at("ampleness");
  r.ampleness.certified = amp.at("certified").boolean();
  r.ampleness.failing = amp.at("failing").string();
  const Field checks = amp.at("checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Field c = checks.at(i);
    r.ampleness.checks.push_back({c.at("name").string(), read_rational(c.at("value"), Exactness::exact_rational),
                                  c.at("passed").boolean(), c.at("witness").string()});
  }

  const Field comps = root.at("components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Field c = comps.at(i);
    ComponentRecord rec;
    rec.index = static_cast<std::size_t>(c.at("index").integer());
    rec.weight = read_rational(c.at("weight"), Exactness::exact_rational);
    rec.self_intersection = read_integer(c.at("self_intersection"));
    rec.dp_dot = read_rational(c.at("dp_dot"), Exactness::exact_rational);
    rec.xi = read_exact(c.at("xi"));
    rec.cz_margin = read_exact(c.at("cz_margin"));
    rec.cz_inequality_holds = c.at("cz_inequality_holds").boolean();
    rec.beta = read_num(c.at("beta"), {Exactness::lower_bound});
    rec.beta_exceeds_p = c.at("beta_exceeds_p").boolean();
    r.components.push_back(rec);
  }

  const Field eps = root.at("epsilon");
  if (!eps.value().is_null()) {
    r.epsilon = read_exact(eps.at("value"));
    r.epsilon_lower_bound = read_rational(eps.at("lower_bound"), Exactness::lower_bound);
    r.epsilon_component = static_cast<std::size_t>(eps.at("component").integer());
  }

  if (root.has("constants")) {
    const Field c = root.at("constants");
    ConstantsSection cs;
    cs.eps_target = read_rational(c.at("eps_target"), Exactness::exact_rational);
    cs.max_N = read_integer(c.at("max_N")).get_si();
    if (!c.at("chain").value().is_null()) cs.chain = read_chain(c.at("chain"));
    cs.note = c.at("note").string();
    cert.constants = cs;
  }
  if (root.has("orbifold")) {
    const Field o = root.at("orbifold");
    OrbifoldSection os;
    const Field m = o.at("multiplicities");
    for (std::size_t i = 0; i < m.size(); ++i) {
      try {
        os.multiplicities.push_back(parse_multiplicity(m.at(i).string()));
      } catch (const Error& e) {
        m.at(i).fail(e.what());
      }
    }
    const Field big = o.at("canonical_big");
    os.canonical_big.certified = big.at("certified").boolean();
    os.canonical_big.plane_degree = read_rational(big.at("plane_degree"), Exactness::exact_rational);
    os.alpha = read_rational(o.at("alpha"), Exactness::exact_rational);
    if (!o.at("twist_threshold").value().is_null()) os.twist_threshold = read_integer(o.at("twist_threshold"));
    os.note = o.at("note").string();
    cert.orbifold = os;
  }
  const Field refs = root.at("references");
  for (std::size_t i = 0; i < refs.size(); ++i) {
    cert.references.push_back({refs.at(i).at("label").string(), refs.at(i).at("statement").string()});
  }
  return cert;
}

}  // namespace hypcert
