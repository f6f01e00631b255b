#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's algorithms beyond its value types.

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <vector>

#include "hypcert/quad_field.hpp"
#include "hypcert/rational.hpp"

namespace oracle {

using hypcert::Integer;
using hypcert::Rational;

/// Closed interval with outward-rounded MPFR endpoints.
class Interval {
 public:
  static constexpr mpfr_prec_t kPrec = 400;

  Interval() {
    mpfr_init2(lo_, kPrec);
    mpfr_init2(hi_, kPrec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  explicit Interval(const Rational& q) : Interval() {
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
  }
  Interval(const Interval& o) : Interval() {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval& operator=(const Interval& o) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval sqrt(const Rational& q) {
    Interval r(q);
    mpfr_sqrt(r.lo_, r.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, r.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_t t;
    mpfr_init2(t, kPrec);
    bool first = true;
    for (auto x : {a.lo_, a.hi_}) {
      for (auto y : {b.lo_, b.hi_}) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    }
    mpfr_clear(t);
    return r;
  }
  /// Requires b strictly positive.
  friend Interval operator/(const Interval& a, const Interval& b) {
    Interval inv;
    mpfr_t one;
    mpfr_init2(one, kPrec);
    mpfr_set_ui(one, 1, MPFR_RNDN);
    mpfr_div(inv.lo_, one, b.hi_, MPFR_RNDD);
    mpfr_div(inv.hi_, one, b.lo_, MPFR_RNDU);
    mpfr_clear(one);
    return a * inv;
  }

  bool certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
  }
  /// Width below 10^-digits.
  bool narrower_than_digits(int digits) const {
    mpfr_t w, eps;
    mpfr_init2(w, kPrec);
    mpfr_init2(eps, kPrec);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_set_ui(eps, 10, MPFR_RNDN);
    mpfr_pow_si(eps, eps, -digits, MPFR_RNDD);
    const bool ok = mpfr_less_p(w, eps);
    mpfr_clear(w);
    mpfr_clear(eps);
    return ok;
  }
  /// Decimal rendering of the lower endpoint with the given number of digits.
  std::string lower_digits(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rf", digits, lo_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }
  std::string upper_digits(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rf", digits, hi_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

/// a + b sqrt(d) read off the canonical fields of x.
inline Interval enclose(const hypcert::QuadExt& x) {
  Interval r(x.rational_part());
  if (x.is_rational()) return r;
  return r + Interval(x.radical_coeff()) * Interval::sqrt(Rational(x.radicand()));
}

/// Number of monomials x^i y^j z^k with i + j + k = d, by enumeration.
inline Integer plane_sections(long d) {
  if (d < 0) return 0;
  Integer n = 0;
  for (long i = 0; i <= d; ++i) {
    for (long j = 0; i + j <= d; ++j) ++n;
  }
  return n;
}

/// Rational roots of an integer polynomial by the rational root theorem.
inline std::vector<Rational> rational_roots(const std::vector<Integer>& c) {
  std::vector<Rational> roots;
  if (c.empty()) return roots;
  auto divisors = [](Integer n) {
    std::vector<Integer> d;
    n = abs(n);
    for (Integer k = 1; k * k <= n; ++k) {
      if (n % k == 0) {
        d.push_back(k);
        if (k * k != n) d.push_back(n / k);
      }
    }
    return d;
  };
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (low + 1 >= c.size()) return roots;
  for (const auto& p : divisors(c[low])) {
    for (const auto& q : divisors(c.back())) {
      for (int s : {1, -1}) {
        Rational r(s * p, q);
        r.canonicalize();
        Rational acc = 0;
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + c[k];
        if (acc == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
  }
  return roots;
}

}  // namespace oracle
