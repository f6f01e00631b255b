#include "hypcert/ffheights.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "hypcert/errors.hpp"
#include "hypcert/factor.hpp"

namespace hypcert {

// Place

Place Place::infinity() {
  Place p;
  p.infinite_ = true;
  return p;
}

Place Place::finite(const Poly& p) {
  if (!is_irreducible(p)) throw DomainError("not an irreducible polynomial: " + to_string(p));
  return trusted(monic(p));
}

Place Place::trusted(Poly monic_irreducible) {
  Place p;
  p.p_ = std::move(monic_irreducible);
  return p;
}

bool operator<(const Place& a, const Place& b) {
  if (a.infinite_ != b.infinite_) return b.infinite_;
  if (a.p_.degree() != b.p_.degree()) return a.p_.degree() < b.p_.degree();
  for (int k = a.p_.degree(); k >= 0; --k) {
    const int c = cmp(a.p_.coeff(k), b.p_.coeff(k));
    if (c != 0) return c < 0;
  }
  return false;
}

std::string to_string(const Place& p) { return p.is_infinite() ? "inf" : "(" + to_string(p.poly()) + ")"; }

int valuation(const Poly& f, const Place& p) {
  if (f.is_zero()) throw DomainError("valuation of zero");
  if (p.is_infinite()) return -f.degree();
  return valuation(f, p.poly());
}

// RatMap

RatMap::RatMap(std::vector<Poly> coords) : x_(std::move(coords)) {
  if (x_.size() < 2) throw DomainError("a map to P^m needs at least two coordinates");
  Poly g;
  for (const auto& c : x_) g = gcd(g, c);
  if (g.is_zero()) throw DomainError("all coordinates are zero");
  for (auto& c : x_) c = c / g;
  for (const auto& c : x_) {
    if (c.is_zero()) continue;
    const Rational inv = 1 / Rational(c.leading());
    for (auto& d : x_) d *= inv;
    break;
  }
}

std::string to_string(const RatMap& x) {
  std::string out = "[";
  for (std::size_t j = 0; j < x.coords().size(); ++j) {
    if (j) out += " : ";
    out += to_string(x.coords()[j]);
  }
  return out + "]";
}

RatMap parse_map(std::string_view text) {
  std::string s(text);
  const auto open = s.find('[');
  const auto close = s.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw ConfigError("map must look like [x0 : x1 : ...]");
  }
  std::vector<Poly> coords;
  std::string body = s.substr(open + 1, close - open - 1);
  std::size_t start = 0;
  for (;;) {
    const auto colon = body.find(':', start);
    coords.push_back(parse_poly(body.substr(start, colon == std::string::npos ? std::string::npos : colon - start)));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  try {
    return RatMap(std::move(coords));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

int height(const RatMap& x) {
  int h = 0;
  for (const auto& c : x.coords()) h = std::max(h, c.degree());
  return h;
}

// Form

Form::Form(int nvars, std::map<std::vector<int>, Rational> terms) : n_(nvars) {
  if (nvars < 1) throw DomainError("form needs at least one variable");
  bool first = true;
  for (auto& [exps, c] : terms) {
    if (c == 0) continue;
    if (static_cast<int>(exps.size()) != nvars) throw DomainError("exponent vector has the wrong length");
    int e = 0;
    for (int k : exps) {
      if (k < 0) throw DomainError("negative exponent in form");
      e += k;
    }
    if (first) {
      e_ = e;
      first = false;
    } else if (e != e_) {
      throw DomainError("form is not homogeneous");
    }
    terms_.emplace(exps, c);
  }
  if (terms_.empty()) throw DomainError("zero form");
}

Form Form::linear(const std::vector<Rational>& coeffs) {
  std::map<std::vector<int>, Rational> t;
  const int n = static_cast<int>(coeffs.size());
  for (int j = 0; j < n; ++j) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    t[e] = coeffs[static_cast<std::size_t>(j)];
  }
  return Form(n, std::move(t));
}

Poly Form::operator()(const std::vector<Poly>& x) const {
  if (static_cast<int>(x.size()) != n_) throw DomainError("form evaluated at a point of the wrong dimension");
  std::vector<std::vector<Poly>> powers(x.size(), std::vector<Poly>{Poly(1)});
  Poly out;
  for (const auto& [exps, c] : terms_) {
    Poly term(c);
    for (std::size_t j = 0; j < exps.size(); ++j) {
      auto& pw = powers[j];
      while (static_cast<int>(pw.size()) <= exps[j]) pw.push_back(pw.back() * x[j]);
      if (exps[j]) term *= pw[static_cast<std::size_t>(exps[j])];
    }
    out += term;
  }
  return out;
}

Rational Form::operator()(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != n_) throw DomainError("form evaluated at a point of the wrong dimension");
  Rational out = 0;
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      for (int k = 0; k < exps[j]; ++k) term *= x[j];
    }
    out += term;
  }
  return out;
}

std::string to_string(const Form& f) {
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    Rational c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t j = 0; j < it->first.size(); ++j) {
      const int e = it->first[j];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "X" + std::to_string(j);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += mono;
    }
  }
  return out;
}

Form parse_form(std::string_view text, int nvars) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ConfigError("empty form");
  std::map<std::vector<int>, Rational> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ConfigError("unexpected character in form '" + std::string(text) + "'");
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    const std::string term = s.substr(i, j - i);
    if (term.empty()) throw ConfigError("empty term in form '" + std::string(text) + "'");
    Rational c = sign;
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    std::size_t k = 0;
    while (k <= term.size()) {
      const auto star = term.find('*', k);
      const std::string factor = term.substr(k, star == std::string::npos ? std::string::npos : star - k);
      if (factor.empty()) throw ConfigError("bad term '" + term + "'");
      if (factor[0] == 'X') {
        const auto caret = factor.find('^');
        int var = 0;
        int e = 1;
        try {
          var = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
          if (caret != std::string::npos) e = std::stoi(factor.substr(caret + 1));
        } catch (const std::exception&) {
          throw ConfigError("bad factor '" + factor + "'");
        }
        if (var < 0 || var >= nvars) throw ConfigError("variable " + factor + " out of range");
        if (e < 0) throw ConfigError("negative exponent in '" + factor + "'");
        exps[static_cast<std::size_t>(var)] += e;
      } else {
        c *= parse_rational(factor);
      }
      if (star == std::string::npos) break;
      k = star + 1;
    }
    terms[exps] += c;
    i = j;
  }
  try {
    return Form(nvars, std::move(terms));
  } catch (const DomainError& e) {
    throw ConfigError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

// Weil functions and counting

namespace {

int min_valuation(const RatMap& x, const Place& p) {
  std::optional<int> best;
  for (const auto& c : x.coords()) {
    if (c.is_zero()) continue;
    const int v = valuation(c, p);
    if (!best || v < *best) best = v;
  }
  return *best;
}

Poly evaluate_nonzero(const Form& f, const RatMap& x) {
  Poly g = f(x.coords());
  if (g.is_zero()) throw DomainError("image of the map lies in the hypersurface " + to_string(f));
  return g;
}

void require_distinct(const std::vector<Place>& s) {
  std::set<Place> seen(s.begin(), s.end());
  if (seen.size() != s.size()) throw DomainError("place set has repeated places");
}

}  // namespace

Rational weil_hypersurface(const Form& f, const RatMap& x, const Place& p) {
  const Poly g = evaluate_nonzero(f, x);
  return Rational(valuation(g, p) - f.degree() * min_valuation(x, p));
}

Integer place_count(const std::vector<Place>& s) {
  Integer n = 0;
  for (const auto& p : s) n += p.degree();
  return n;
}

CountingFunctions counting_functions(const Form& f, const RatMap& x, const std::vector<Place>& s) {
  require_distinct(s);
  const Poly g = evaluate_nonzero(f, x);
  const int e = f.degree();
  CountingFunctions out;
  out.proximity = 0;
  for (const auto& p : s) {
    out.proximity += p.degree() * Rational(valuation(g, p) - e * min_valuation(x, p));
  }

  const std::set<Place> in_s(s.begin(), s.end());
  out.counting = 0;
  for (const auto& fac : factor(g)) {
    const Place p = Place::trusted(fac.poly);
    if (in_s.count(p)) continue;
    out.counting += p.degree() * Rational(fac.multiplicity - e * min_valuation(x, p));
  }
  const Place inf = Place::infinity();
  const int lambda_inf = valuation(g, inf) - e * min_valuation(x, inf);
  const bool inf_outside = !in_s.count(inf);
  if (inf_outside) out.counting += lambda_inf;

  out.truncated = radical(g).degree();
  for (const auto& p : s) {
    if (!p.is_infinite() && valuation(g, p) > 0) out.truncated -= p.degree();
  }
  if (inf_outside && lambda_inf > 0) out.truncated += 1;
  return out;
}

int rank(std::vector<std::vector<Rational>> rows) {
  int r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
                             return a.size() < b.size();
                           })->size();
  for (auto& row : rows) row.resize(cols);
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(r);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(r)]);
    const auto& pr = rows[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / pr[c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * pr[k];
    }
    ++r;
  }
  return r;
}

bool linearly_nondegenerate(const RatMap& x) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& c : x.coords()) rows.push_back(c.coeffs());
  return rank(rows) == static_cast<int>(x.coords().size());
}

WangCheck wang_smt_check(const RatMap& x, const std::vector<std::vector<Rational>>& hyperplanes,
                         const std::vector<Place>& s) {
  require_distinct(s);
  WangCheck out;
  const int m = x.dimension();
  for (const auto& h : hyperplanes) {
    if (static_cast<int>(h.size()) != m + 1) throw DomainError("hyperplane has the wrong number of coefficients");
    if (std::all_of(h.begin(), h.end(), [](const Rational& c) { return c == 0; })) {
      throw DomainError("zero hyperplane");
    }
  }
  if (!linearly_nondegenerate(x)) {
    out.skipped = true;
    out.reason = "coordinates are linearly dependent over Q";
    return out;
  }
  std::vector<Poly> values;
  values.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) values.push_back(evaluate_nonzero(Form::linear(h), x));

  out.lhs = 0;
  for (const auto& p : s) {
    const int vmin = min_valuation(x, p);
    std::vector<std::pair<int, std::size_t>> lambdas;
    for (std::size_t j = 0; j < values.size(); ++j) lambdas.emplace_back(valuation(values[j], p) - vmin, j);
    std::sort(lambdas.begin(), lambdas.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    // Greedy choice is optimal: independent sets of hyperplanes form a matroid.
    std::vector<std::vector<Rational>> chosen;
    long best = 0;
    for (const auto& [lambda, j] : lambdas) {
      if (static_cast<int>(chosen.size()) == m + 1) break;
      chosen.push_back(hyperplanes[j]);
      if (rank(chosen) < static_cast<int>(chosen.size())) {
        chosen.pop_back();
        continue;
      }
      best += lambda;
    }
    out.lhs += p.degree() * Rational(best);
  }
  const Integer h = height(x);
  out.rhs = Rational((m + 1) * h) + make_rational(m * (m + 1), 2) * Rational(place_count(s) - 2);
  out.holds = out.lhs <= out.rhs;
  return out;
}

// Probe

void validate_realization(const SurfaceConfig& cfg, const BoundaryRealization& r) {
  if (r.components.size() != cfg.component_count()) {
    throw ConfigError("realization has " + std::to_string(r.components.size()) + " components, configuration has " +
                      std::to_string(cfg.component_count()));
  }
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    if (r.components[i].nvars() != 3) throw ConfigError("component " + std::to_string(i) + " is not a plane curve");
    if (r.components[i].degree() != cfg.components()[i].degree) {
      throw ConfigError("component " + std::to_string(i) + " has degree " +
                        std::to_string(r.components[i].degree()) + ", expected " +
                        std::to_string(cfg.components()[i].degree));
    }
  }
  for (const auto& pt : cfg.points()) {
    auto it = r.points.find(pt.id);
    if (it == r.points.end()) throw ConfigError("realization lacks coordinates for point " + pt.id);
    const auto& q = it->second;
    if (q.size() != 3 || std::all_of(q.begin(), q.end(), [](const Rational& c) { return c == 0; })) {
      throw ConfigError("point " + pt.id + " needs three coordinates, not all zero");
    }
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      const bool on = r.components[i](q) == 0;
      const bool expected = std::find(pt.incident.begin(), pt.incident.end(), i) != pt.incident.end();
      if (on != expected) {
        throw ConfigError("point " + pt.id + (on ? " lies on" : " does not lie on") + " component " +
                          std::to_string(i));
      }
    }
  }
  if (r.points.size() != cfg.points().size()) throw ConfigError("realization has coordinates for unknown points");
}

namespace {

bool passes_through(const RatMap& x, const std::vector<Rational>& q) {
  const auto& c = x.coords();
  Poly g;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) g = gcd(g, c[a] * q[b] - c[b] * q[a]);
  }
  if (g.is_zero() || g.degree() > 0) return true;
  const int h = height(x);
  std::vector<Rational> lead;
  for (const auto& p : c) lead.push_back(p.coeff(h));
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      if (lead[a] * q[b] != lead[b] * q[a]) return false;
    }
  }
  return true;
}

}  // namespace

ProbeOutcome height_bound_probe(const SurfaceConfig& cfg, const WeightedBoundary& wb, const BoundaryRealization& r,
                                const RatMap& x) {
  if (x.dimension() != 2) throw DomainError("probe needs a map to the plane");
  ProbeOutcome out;
  const int h = height(x);
  if (h == 0) {
    out.excluded = "constant map";
    return out;
  }
  std::vector<Poly> pulled;
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    Poly g = r.components[i](x.coords());
    if (g.is_zero()) {
      out.excluded = "image lies in component " + std::to_string(i);
      return out;
    }
    pulled.push_back(std::move(g));
  }
  for (const auto& [id, q] : r.points) {
    if (passes_through(x, q)) {
      out.excluded = "curve passes through blown point " + id;
      return out;
    }
  }
  ProbeRecord rec{x, h, 0, 0, 0};
  Poly prod(1);
  bool meets_at_infinity = false;
  for (std::size_t i = 0; i < pulled.size(); ++i) {
    const int d = cfg.components()[i].degree;
    rec.pullback_degree += wb.weights()[i] * Rational(d * h);
    prod *= pulled[i];
    if (pulled[i].degree() < d * h) meets_at_infinity = true;
  }
  rec.truncated = radical(prod).degree() + (meets_at_infinity ? 1 : 0);
  const Integer denom = std::max<Integer>(Integer(1), Integer(rec.truncated - 2));
  rec.ratio = rec.pullback_degree / Rational(denom);
  out.record = std::move(rec);
  return out;
}

// Sampling

Poly random_poly(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coef(rng);
  if (bound > 0 && degree >= 0) {
    std::uniform_int_distribution<long> nonzero(1, bound);
    if (c.back() == 0) c.back() = nonzero(rng) * (coef(rng) < 0 ? -1 : 1);
  }
  return Poly(std::move(c));
}

RatMap random_map(std::mt19937_64& rng, int m, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (;;) {
    std::vector<Poly> coords;
    for (int j = 0; j <= m; ++j) coords.push_back(random_poly(rng, deg(rng), bound));
    if (std::any_of(coords.begin(), coords.end(), [](const Poly& p) { return !p.is_zero(); })) {
      return RatMap(std::move(coords));
    }
  }
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32U)};
  return std::mt19937_64(seq);
}

StressSample stress_sample(const StressOptions& options, std::size_t index) {
  auto rng = sample_rng(options.seed, index);
  std::uniform_int_distribution<int> dim(1, std::max(1, options.max_dimension));
  const int m = dim(rng);
  if (options.max_degree < m) throw DomainError("max degree must be at least the dimension");
  StressSample out;
  out.index = index;
  for (;;) {
    RatMap x = random_map(rng, m, options.max_degree, options.coeff_bound);
    if (linearly_nondegenerate(x)) {
      out.map = std::move(x);
      break;
    }
  }
  out.height = height(out.map);

  std::uniform_int_distribution<int> extra(0, 2);
  std::uniform_int_distribution<long> small(-3, 3);
  std::vector<std::vector<Rational>> hyperplanes;
  const int q = m + 1 + extra(rng);
  while (static_cast<int>(hyperplanes.size()) < q) {
    std::vector<Rational> h(static_cast<std::size_t>(m) + 1);
    for (auto& c : h) c = small(rng);
    if (std::any_of(h.begin(), h.end(), [](const Rational& c) { return c != 0; })) hyperplanes.push_back(h);
  }

  std::set<Place> s;
  if (std::bernoulli_distribution(0.5)(rng)) s.insert(Place::infinity());
  const int linear = extra(rng);
  std::uniform_int_distribution<long> root(-5, 5);
  for (int k = 0; k < linear; ++k) s.insert(Place::trusted(Poly({Rational(-root(rng)), Rational(1)})));
  for (const auto& f : factor(Form::linear(hyperplanes.front())(out.map.coords()))) s.insert(Place::trusted(f.poly));
  std::vector<Place> places(s.begin(), s.end());

  out.wang = wang_smt_check(out.map, hyperplanes, places);
  const Form h1 = Form::linear(hyperplanes.back());
  out.counting = counting_functions(h1, out.map, places);
  out.fmt_holds = out.counting.proximity + out.counting.counting == Rational(h1.degree() * out.height) &&
                  Rational(out.counting.truncated) <= out.counting.counting;
  return out;
}

StressSummary stress(const StressOptions& options, const std::function<void(const StressSample&)>& on_sample) {
  StressSummary summary;
  summary.max_ratio = 0;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= options.samples) return;
      StressSample s = stress_sample(options, i);
      std::lock_guard<std::mutex> lock(mu);
      ++summary.samples;
      if (s.wang.skipped) {
        ++summary.skipped;
      } else {
        if (!s.wang.holds) ++summary.wang_violations;
        if (s.wang.rhs > 0) summary.max_ratio = std::max(summary.max_ratio, Rational(s.wang.lhs / s.wang.rhs));
      }
      if (!s.fmt_holds) ++summary.fmt_violations;
      if (on_sample) on_sample(s);
    }
  };
  const unsigned n = std::max(1u, options.threads);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return summary;
}

}  // namespace hypcert
