#include "hypcert/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <random>
#include <set>

#include "hypcert/errors.hpp"

namespace hypcert {

std::vector<Factor> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<Factor> out;
  if (f.degree() == 0) return out;
  if (is_squarefree(f)) return {{monic(f), 1}};
  Poly df = derivative(f);
  Poly a = gcd(f, df);
  Poly b = f / a;
  Poly c = df / a;
  Poly d = c - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    b = b / g;
    c = d / g;
    d = c - derivative(b);
    if (g.degree() > 0) out.push_back({monic(g), i});
    ++i;
  }
  return out;
}

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;
using ZPoly = std::vector<Integer>;

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mpow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

u64 minv(u64 a, u64 p) { return mpow(a, p - 2, p); }

ModPoly msub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  mtrim(r);
  return r;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mtrim(r);
  return r;
}

void mdivmod(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* q, ModPoly* r) {
  ModPoly rem = a;
  const std::size_t db = b.size() - 1;
  ModPoly quo(rem.size() >= b.size() ? rem.size() - db : 0, 0);
  const u64 inv = minv(b.back(), p);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const u64 f = rem[k + db] * inv % p;
    quo[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = (rem[k + j] + p - f * b[j] % p) % p;
  }
  rem.resize(std::min(rem.size(), db));
  mtrim(rem);
  mtrim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

ModPoly mmod(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  mdivmod(a, b, p, nullptr, &r);
  return r;
}

ModPoly mdiv(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly q;
  mdivmod(a, b, p, &q, nullptr);
  return q;
}

ModPoly mmonic(ModPoly a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = minv(a.back(), p);
  for (auto& x : a) x = x * inv % p;
  return a;
}

ModPoly mgcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(std::move(a), p);
}

/// s, t with s a + t b = 1 for coprime a, b.
void mext_gcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    mdivmod(r0, r1, p, &q, &r);
    ModPoly s2 = msub(s0, mmul(q, s1, p), p);
    ModPoly t2 = msub(t0, mmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw InvariantError("extended gcd of non-coprime polynomials");
  const u64 inv = minv(r0[0], p);
  for (auto& x : s0) x = x * inv % p;
  for (auto& x : t0) x = x * inv % p;
  s = std::move(s0);
  t = std::move(t0);
}

ModPoly mpowmod(ModPoly base, const Integer& e, const ModPoly& f, u64 p) {
  ModPoly r{1};
  base = mmod(base, f, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mmod(mmul(r, r, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mmod(mmul(r, base, p), f, p);
  }
  return r;
}

ModPoly reduce(const ZPoly& f, u64 p) {
  ModPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  mtrim(r);
  return r;
}

/// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> ddf(ModPoly f, u64 p) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  int i = 0;
  while (static_cast<int>(f.size()) - 1 >= 2 * (i + 1)) {
    ++i;
    h = mpowmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    ModPoly g = mgcd(f, msub(h, x, p), p);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = mdiv(f, g, p);
      h = mmod(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

/// Equal-degree splitting (p odd) into monic irreducible factors of degree d.
void edf(const ModPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = dist(rng);
    mtrim(a);
    if (a.size() <= 1) continue;
    ModPoly b = msub(mpowmod(a, e, g, p), ModPoly{1}, p);
    ModPoly h = mgcd(g, b, p);
    if (h.size() > 1 && h.size() < g.size()) {
      edf(h, d, p, rng, out);
      edf(mdiv(g, h, p), d, p, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod(const ZPoly& f, u64 p) {
  ModPoly fm = mmonic(reduce(f, p), p);
  std::mt19937_64 rng(p * 2654435761ULL + f.size());
  std::vector<ModPoly> out;
  for (auto& [g, d] : ddf(fm, p)) edf(g, d, p, rng, out);
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

bool squarefree_mod(const ZPoly& f, u64 p) {
  ModPoly fm = reduce(f, p);
  if (fm.size() != f.size()) return false;  // p divides the leading coefficient
  ModPoly df;
  for (std::size_t i = 1; i < fm.size(); ++i) df.push_back(fm[i] * (i % p) % p);
  mtrim(df);
  if (df.empty()) return false;
  return mgcd(fm, df, p).size() == 1;
}

std::set<int> subset_degrees(const std::vector<ModPoly>& facs) {
  std::set<int> sums{0};
  for (const auto& g : facs) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + static_cast<int>(g.size()) - 1);
    sums = std::move(next);
  }
  return sums;
}

// Integer polynomial helpers modulo M (coefficients kept in [0, M)).

ZPoly zreduce(const ZPoly& a, const Integer& M) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), M.get_mpz_t());
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

ZPoly lift_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

ModPoly mprod(const std::vector<ModPoly>& fs, u64 p) {
  ModPoly r{1};
  for (const auto& g : fs) r = mmul(r, g, p);
  return r;
}

/// Lifts f = lc * g * h (mod p), g and h monic and coprime mod p, to modulus p^k.
void hensel_pair(const ZPoly& f, const ModPoly& g0, const ModPoly& h0, u64 p, int k, ZPoly& G, ZPoly& H) {
  ModPoly s, t;
  mext_gcd(g0, h0, p, s, t);
  const Integer lc = f.back();
  const u64 lc_inv = minv(mpz_fdiv_ui(lc.get_mpz_t(), p), p);
  G = lift_mod(g0);
  H = lift_mod(h0);
  Integer pj = static_cast<unsigned long>(p);
  for (int j = 1; j < k; ++j) {
    const Integer next = pj * static_cast<unsigned long>(p);
    ZPoly prod = zmul(G, H);
    ZPoly e(std::max(f.size(), prod.size()), Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i) e[i] = f[i];
    for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= lc * prod[i];
    e = zreduce(e, next);
    ModPoly em(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      Integer q = e[i] / pj;
      em[i] = mpz_fdiv_ui(q.get_mpz_t(), p) * lc_inv % p;
    }
    mtrim(em);
    if (!em.empty()) {
      ModPoly dg = mmod(mmul(t, em, p), g0, p);
      ModPoly dh = mmod(mmul(s, em, p), h0, p);
      for (std::size_t i = 0; i < dg.size(); ++i) G[i] += pj * static_cast<unsigned long>(dg[i]);
      for (std::size_t i = 0; i < dh.size(); ++i) H[i] += pj * static_cast<unsigned long>(dh[i]);
    }
    pj = next;
  }
}

/// Monic lifts modulo p^k of the modular factors of f.
std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<ModPoly>& facs, u64 p, int k,
                                const Integer& pk) {
  if (facs.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
    ZPoly m(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) m[i] = f[i] * inv;
    return {zreduce(m, pk)};
  }
  const std::size_t half = facs.size() / 2;
  std::vector<ModPoly> left(facs.begin(), facs.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ModPoly> right(facs.begin() + static_cast<std::ptrdiff_t>(half), facs.end());
  ZPoly G, H;
  hensel_pair(f, mprod(left, p), mprod(right, p), p, k, G, H);
  G = zreduce(G, pk);
  H = zreduce(H, pk);
  auto a = hensel_multi(G, left, p, k, pk);
  auto b = hensel_multi(H, right, p, k, pk);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

/// Exact quotient f / g in Z[x] when g divides f, otherwise nullopt.
std::optional<ZPoly> zdivide(const ZPoly& f, const ZPoly& g) {
  if (f.front() != 0 && g.front() != 0 && !mpz_divisible_p(f.front().get_mpz_t(), g.front().get_mpz_t())) {
    return std::nullopt;
  }
  ZPoly r = f;
  const std::size_t dg = g.size() - 1;
  ZPoly q(f.size() - dg);
  for (std::size_t k = q.size(); k-- > 0;) {
    if (!mpz_divisible_p(r[k + dg].get_mpz_t(), g.back().get_mpz_t())) return std::nullopt;
    q[k] = r[k + dg] / g.back();
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) r[k + j] -= q[k] * g[j];
  }
  for (std::size_t j = 0; j < dg; ++j) {
    if (r[j] != 0) return std::nullopt;
  }
  return q;
}

std::vector<ZPoly> recombine(ZPoly f, std::vector<ZPoly> lifted, const Integer& M) {
  std::vector<ZPoly> out;
  const Integer half = M / 2;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly g{f.back()};
      for (std::size_t i : idx) g = zreduce(zmul(g, lifted[i]), M);
      for (auto& c : g) {
        if (c > half) c -= M;
      }
      g = primitive(g);
      if (auto q = zdivide(f, g)) {
        out.push_back(g);
        f = primitive(*q);
        for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        found = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i-- > 0) {
        if (idx[i] != i + lifted.size() - s) break;
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

struct ModularImage {
  u64 p = 0;
  std::vector<ModPoly> factors;
};

constexpr int kPrimeTrials = 3;

/// Factors of a squarefree primitive integer polynomial with positive leading coefficient.
std::vector<ZPoly> factor_squarefree(const ZPoly& f, bool& irreducible) {
  irreducible = true;
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  ModularImage best;
  std::set<int> degrees;
  int trials = 0;
  for (u64 p = 32771; trials < kPrimeTrials; p += 2) {
    if (!is_prime(p) || !squarefree_mod(f, p)) continue;
    ++trials;
    auto facs = factor_mod(f, p);
    if (facs.size() == 1) return {f};
    std::set<int> sums = subset_degrees(facs);
    if (degrees.empty()) {
      degrees = sums;
    } else {
      std::set<int> both;
      std::set_intersection(degrees.begin(), degrees.end(), sums.begin(), sums.end(),
                            std::inserter(both, both.begin()));
      degrees = std::move(both);
    }
    if (degrees.size() == 2) return {f};  // only 0 and n remain
    if (best.p == 0 || facs.size() < best.factors.size()) best = {p, std::move(facs)};
  }
  // Coefficient bound for any factor: |lc| 2^n ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound = abs(f.back()) * (isqrt(norm2) + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  bound *= 2;
  int k = 1;
  Integer pk = static_cast<unsigned long>(best.p);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(best.p);
    ++k;
  }
  auto lifted = hensel_multi(zreduce(f, pk), best.factors, best.p, k, pk);
  auto out = recombine(f, std::move(lifted), pk);
  irreducible = out.size() == 1;
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    const int c = cmp(a.coeff(k), b.coeff(k));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<Factor> factor(const Poly& f) {
  std::vector<Factor> out;
  for (const auto& part : squarefree_decomposition(f)) {
    bool irreducible = false;
    for (const auto& g : factor_squarefree(primitive_integer(part.poly), irreducible)) {
      out.push_back({monic(Poly::from_integers(g)), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  if (gcd(f, derivative(f)).degree() > 0) return false;
  bool irreducible = false;
  factor_squarefree(primitive_integer(f), irreducible);
  return irreducible;
}

}  // namespace hypcert
