#include "hypcert/rv_constants.hpp"

#include <algorithm>
#include <thread>

#include "hypcert/errors.hpp"

namespace hypcert {

H0Bound h0_certified(const SurfaceConfig& cfg, const DivisorClass& d, const DivisorClass& polarization) {
  const DivisorClass k = canonical_class(cfg);
  const Rational euler = chi(d);
  H0Bound out;
  if (ample_sufficient(cfg, d - k).certified) {
    out.exact = euler;
    out.lower = euler;
    return out;
  }
  if (intersect(k - d, polarization) < 0) {
    out.lower = euler > 0 ? euler : Rational(0);
  }
  return out;
}

namespace {

// Pairings needed to evaluate chi(N D_p - m D_i) and its h^2 guard in closed form.
struct TwistData {
  Integer dp_sq;   // D_p^2
  Integer dp_di;   // D_p.D_i
  Integer di_sq;   // D_i^2
  Integer k_dp;    // K.D_p
  Integer k_di;    // K.D_i
  QuadExt xi;
};

TwistData twist_data(const SurfaceConfig& cfg, const DivisorClass& dp, std::size_t i, const QuadExt& xi) {
  const DivisorClass di = strict_transform(cfg, i);
  const DivisorClass k = canonical_class(cfg);
  return {intersect(dp, dp), intersect(dp, di), intersect(di, di), intersect(k, dp), intersect(k, di), xi};
}

Rational twisted_sum(const TwistData& t, long N) {
  if (N <= 0) return 0;
  const Integer n(N);
  const Integer top = floor(t.xi * QuadExt(Rational(n)));
  Integer total = 0;
  for (Integer m = 1; m <= top; ++m) {
    // (K - d).D_p with d = N D_p - m D_i
    const Integer guard = t.k_dp - n * t.dp_sq + m * t.dp_di;
    if (guard >= 0) continue;
    const Integer d_sq = n * n * t.dp_sq - 2 * n * m * t.dp_di + m * m * t.di_sq;
    const Integer k_d = n * t.k_dp - m * t.k_di;
    const Integer twice = d_sq - k_d;
    const Integer euler = 1 + twice / 2;
    if (euler > 0) total += euler;
  }
  return Rational(total);
}

struct Candidate {
  long N = 0;
  bool feasible = false;
  std::string reason;
  Integer M;
  std::vector<Rational> sums;
  QuadExt ratio;
  std::size_t ratio_component = 0;
};

Candidate evaluate_candidate(const SurfaceConfig& cfg, const DivisorClass& dp, const std::vector<TwistData>& twists,
                             const std::vector<ComponentRecord>& records, const Rational& threshold, long N) {
  Candidate c;
  c.N = N;
  const DivisorClass ndp = Integer(N) * dp;
  H0Bound m = h0_certified(cfg, ndp, dp);
  if (!m.exact) {
    c.reason = "h^0(N D_p) not certified";
    return c;
  }
  c.M = m.exact->get_num();
  bool first = true;
  for (std::size_t i = 0; i < twists.size(); ++i) {
    Rational s = twisted_sum(twists[i], N);
    c.sums.push_back(s);
    if (s <= 0) {
      c.reason = "empty filtration sum for component " + std::to_string(i);
      return c;
    }
    QuadExt r = records[i].beta * QuadExt(Rational(Rational(N * c.M) / s));
    if (first || compare_cross(r, c.ratio) > 0) {
      c.ratio = r;
      c.ratio_component = i;
      first = false;
    }
  }
  if (compare_cross(c.ratio, QuadExt(threshold)) >= 0) {
    c.reason = "ratio " + to_decimal(c.ratio) + " not below 1 + eps/2";
    return c;
  }
  c.feasible = true;
  return c;
}

const Rational& bracket_width() {
  static const Rational w(1, Integer("1000000000000000000000000000000"));
  return w;
}

bool feasible_b(const QuadExt& ratio, const Integer& b, const Rational& threshold) {
  QuadExt lhs = QuadExt(Rational(1 + make_rational(Integer(2), b))) * ratio;
  return compare_cross(lhs, QuadExt(threshold)) < 0;
}

void finish_chain(const std::vector<ComponentRecord>& records, const Rational& eps_inner, ConstantsChain& chain) {
  const Rational threshold = 1 + eps_inner;
  // (1 + 2/b) R < T  <=>  b > 2R / (T - R)
  QuadExt limit = QuadExt(2) * chain.ratio / (QuadExt(threshold) - chain.ratio);
  chain.b = floor(limit) + 1;
  if (chain.b < 1) chain.b = 1;
  if (!feasible_b(chain.ratio, chain.b, threshold)) {
    throw InvariantError("computed b does not satisfy the feasibility inequality");
  }

  chain.C = Rational(1 + eps_inner) / Rational(chain.M * chain.N);
  chain.C.canonicalize();

  QuadExt beta_min = records.front().beta;
  chain.beta_sum_upper = 0;
  for (const auto& r : records) {
    if (compare_cross(r.beta, beta_min) < 0) beta_min = r.beta;
    chain.beta_sum_upper += rational_bracket(r.beta, bracket_width()).upper;
  }
  chain.beta_min_lower = rational_bracket(beta_min, bracket_width()).lower;
  chain.Q = chain.C * Rational(chain.M * (chain.M - 1)) / (2 * chain.beta_min_lower);
  chain.Q.canonicalize();
  chain.m0 = floor(Rational(chain.Q * chain.beta_sum_upper / eps_inner)) + 1;
}

void check_preconditions(const WeightedBoundary& wb, const CZReport& report, const Rational& eps_target) {
  if (report.overall != Verdict::pass || !report.epsilon_lower_bound) {
    throw DomainError("constants chain needs a passing certificate");
  }
  if (!wb.integral()) throw DomainError("constants chain needs integral weights");
  if (eps_target <= 0 || eps_target > *report.epsilon_lower_bound) {
    throw DomainError("eps_target must lie in (0, " + to_string(*report.epsilon_lower_bound) + "]");
  }
}

}  // namespace

Rational sum_h0_lower(const SurfaceConfig& cfg, const WeightedBoundary& wb, std::size_t i, long N) {
  const DivisorClass& dp = wb.integral_class();
  return twisted_sum(twist_data(cfg, dp, i, xi(cfg, wb, i)), N);
}

ChainResult find_Nb(const SurfaceConfig& cfg, const WeightedBoundary& wb, const CZReport& report,
                    const Rational& eps_target, const ChainOptions& options) {
  check_preconditions(wb, report, eps_target);
  const DivisorClass& dp = wb.integral_class();
  const Rational eps_inner = eps_target / 2;
  const Rational threshold = 1 + eps_inner;

  std::vector<TwistData> twists;
  for (const auto& r : report.components) twists.push_back(twist_data(cfg, dp, r.index, r.xi));

  const unsigned workers = std::max(1u, options.threads);
  ChainResult result;
  std::string last_reason = "cap reached";
  for (long start = 1; start <= options.max_N; start += workers) {
    const long stop = std::min<long>(options.max_N, start + workers - 1);
    std::vector<Candidate> batch(static_cast<std::size_t>(stop - start + 1));
    auto work = [&](std::size_t k) {
      batch[k] = evaluate_candidate(cfg, dp, twists, report.components, threshold, start + static_cast<long>(k));
    };
    if (batch.size() == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t k = 0; k < batch.size(); ++k) pool.emplace_back(work, k);
    }
    for (auto& c : batch) {
      if (!c.feasible) {
        last_reason = "N = " + std::to_string(c.N) + ": " + c.reason;
        continue;
      }
      ConstantsChain chain;
      chain.N = c.N;
      chain.M = c.M;
      chain.sum_h0_lower = c.sums;
      chain.eps_inner = eps_inner;
      chain.ratio = c.ratio;
      chain.ratio_component = c.ratio_component;
      finish_chain(report.components, eps_inner, chain);
      result.chain = std::move(chain);
      return result;
    }
  }
  result.reason = "no feasible N <= " + std::to_string(options.max_N) + " (last: " + last_reason + ")";
  return result;
}

std::string verify_chain(const SurfaceConfig& cfg, const WeightedBoundary& wb, const CZReport& report,
                         const Rational& eps_target, const ConstantsChain& chain) {
  check_preconditions(wb, report, eps_target);
  const DivisorClass& dp = wb.integral_class();
  const Rational eps_inner = eps_target / 2;
  const Rational threshold = 1 + eps_inner;
  if (chain.eps_inner != eps_inner) return "eps_inner differs from eps_target / 2";

  const DivisorClass ndp = Integer(chain.N) * dp;
  H0Bound m = h0_certified(cfg, ndp, dp);
  if (!m.exact || *m.exact != Rational(chain.M)) return "M is not the certified h^0(N D_p)";

  QuadExt ratio;
  bool first = true;
  for (const auto& r : report.components) {
    const DivisorClass di = strict_transform(cfg, r.index);
    const Integer top = floor(r.xi * QuadExt(Rational(chain.N)));
    Rational sum = 0;
    for (Integer k = 1; k <= top; ++k) {
      sum += h0_certified(cfg, ndp - k * di, dp).lower;
    }
    if (r.index >= chain.sum_h0_lower.size() || sum != chain.sum_h0_lower[r.index]) {
      return "sum of h^0 lower bounds differs for component " + std::to_string(r.index);
    }
    QuadExt q = r.beta * QuadExt(Rational(Rational(chain.N * chain.M) / sum));
    if (first || compare_cross(q, ratio) > 0) ratio = q;
    first = false;
  }
  if (!(ratio == chain.ratio)) return "ratio differs";
  if (!feasible_b(ratio, chain.b, threshold)) return "feasibility inequality fails at b";
  if (chain.b > 1 && feasible_b(ratio, Integer(chain.b - 1), threshold)) return "b is not minimal";

  Rational c = Rational(1 + eps_inner) / Rational(chain.M * chain.N);
  if (c != chain.C) return "C differs from (1 + eps) / (M N)";

  QuadExt beta_min = report.components.front().beta;
  Rational beta_sum = 0;
  for (const auto& r : report.components) {
    if (compare_cross(r.beta, beta_min) < 0) beta_min = r.beta;
    beta_sum += rational_bracket(r.beta, bracket_width()).upper;
    if (compare_cross(QuadExt(rational_bracket(r.beta, bracket_width()).upper), r.beta) < 0) {
      return "beta upper bound below beta";
    }
  }
  if (beta_sum != chain.beta_sum_upper) return "beta sum bound differs";
  if (compare_cross(QuadExt(chain.beta_min_lower), beta_min) > 0) return "beta min bound above min beta";
  // Q >= C M (M - 1) / (2 min beta), exactly.
  QuadExt q_exact = QuadExt(Rational(c * chain.M * (chain.M - 1) / 2)) / beta_min;
  if (compare_cross(QuadExt(chain.Q), q_exact) < 0) return "Q is below C M (M - 1) / (2 min beta)";

  if (!(chain.Q * chain.beta_sum_upper / Rational(chain.m0) < eps_inner)) return "m0 violates (Q/m0) sum beta < eps/2";
  if (chain.m0 > 1 && chain.Q * chain.beta_sum_upper / Rational(chain.m0 - 1) < eps_inner) return "m0 is not minimal";
  return {};
}

}  // namespace hypcert
