#include "hypcert/polynomial.hpp"

#include <cctype>
#include <cstdint>

#include "hypcert/errors.hpp"

namespace hypcert {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(int k, const Rational& c) {
  if (k < 0) throw DomainError("negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& z : coeffs) v.emplace_back(z);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  Poly p;
  p.c_ = std::move(out);
  p.trim();
  return p;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= k;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> q(r.size() - db);
  const Rational inv = 1 / Rational(b.leading());
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = r[k + db] * inv;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * bc[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly pow(const Poly& a, unsigned k) {
  Poly out(1);
  Poly base = a;
  while (k) {
    if (k & 1U) out *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return out;
}

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return a * Rational(1 / a.leading());
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

Poly derivative(const Poly& a) {
  if (a.degree() <= 0) return {};
  std::vector<Rational> d(a.coeffs().size() - 1);
  for (std::size_t k = 1; k < a.coeffs().size(); ++k) d[k - 1] = a.coeffs()[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

namespace {

constexpr std::uint64_t kModPrime = 2147483647;

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kModPrime;
  while (e) {
    if (e & 1U) r = r * b % kModPrime;
    b = b * b % kModPrime;
    e >>= 1U;
  }
  return r;
}

/// Image modulo kModPrime, or empty when a denominator or the leading coefficient vanishes.
std::vector<std::uint64_t> reduce_mod(const Poly& a) {
  std::vector<std::uint64_t> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    const std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), kModPrime);
    if (den == 0) return {};
    out.push_back(mpz_fdiv_ui(c.get_num_mpz_t(), kModPrime) * powmod(den, kModPrime - 2) % kModPrime);
  }
  if (out.empty() || out.back() == 0) return {};
  return out;
}

/// True when gcd(a, a') = 1 modulo the prime, which certifies a squarefree over Q.
bool squarefree_mod(const Poly& a) {
  auto f = reduce_mod(a);
  if (f.size() < 2) return false;
  std::vector<std::uint64_t> g;
  for (std::size_t i = 1; i < f.size(); ++i) g.push_back(f[i] * i % kModPrime);
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(g);
  while (!g.empty()) {
    // f <- f mod g
    const std::uint64_t inv = powmod(g.back(), kModPrime - 2);
    while (f.size() >= g.size()) {
      const std::uint64_t q = f.back() * inv % kModPrime;
      const std::size_t shift = f.size() - g.size();
      for (std::size_t j = 0; j < g.size(); ++j) {
        f[shift + j] = (f[shift + j] + kModPrime - q * g[j] % kModPrime) % kModPrime;
      }
      trim(f);
      if (f.empty()) break;
    }
    std::swap(f, g);
  }
  return f.size() == 1;
}

}  // namespace

bool is_squarefree(const Poly& a) {
  if (a.is_zero()) throw DomainError("squarefree test of zero");
  if (a.degree() <= 1 || squarefree_mod(a)) return true;
  return gcd(a, derivative(a)).degree() == 0;
}

Poly radical(const Poly& a) {
  if (a.is_zero()) throw DomainError("radical of zero");
  if (a.degree() == 0) return Poly(1);
  if (squarefree_mod(a)) return monic(a);
  return monic(a / gcd(a, derivative(a)));
}

int valuation(const Poly& f, const Poly& p) {
  if (f.is_zero()) throw DomainError("valuation of zero");
  if (p.degree() < 1) throw DomainError("valuation needs a nonconstant polynomial");
  int k = 0;
  if (p.degree() == 1) {
    // Synthetic division by t - r.
    const Rational r = -p.coeff(0) / p.coeff(1);
    std::vector<Rational> c = f.coeffs();
    while (c.size() > 1) {
      Rational acc = 0;
      std::vector<Rational> q(c.size() - 1);
      for (std::size_t i = c.size(); i-- > 1;) {
        acc = acc * r + c[i];
        q[i - 1] = acc;
      }
      if (acc * r + c[0] != 0) break;
      c = std::move(q);
      ++k;
    }
    return k;
  }
  Poly g = f;
  while (g.degree() >= p.degree()) {
    auto [q, r] = divmod(g, p);
    if (!r.is_zero()) break;
    g = std::move(q);
    ++k;
  }
  return k;
}

std::vector<Integer> primitive_integer(const Poly& a) {
  std::vector<Integer> out;
  if (a.is_zero()) return out;
  Integer l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    out.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& z : out) z /= g;
  return out;
}

std::string to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += to_string(c);
      continue;
    }
    if (c != 1) out += to_string(c) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Poly parse_poly(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ConfigError("empty polynomial");
  Poly out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ConfigError("unexpected '" + std::string(1, s[i]) + "' in polynomial '" + std::string(text) + "'");
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw ConfigError("empty term in polynomial '" + std::string(text) + "'");
    Rational c = 1;
    int e = 0;
    const auto at = term.find(var);
    std::string coef = at == std::string::npos ? term : term.substr(0, at);
    if (at != std::string::npos) {
      std::string rest = term.substr(at + var.size());
      e = 1;
      if (!rest.empty()) {
        if (rest[0] != '^') throw ConfigError("bad term '" + term + "'");
        try {
          e = std::stoi(rest.substr(1));
        } catch (const std::exception&) {
          throw ConfigError("bad exponent in '" + term + "'");
        }
        if (e < 0) throw ConfigError("negative exponent in '" + term + "'");
      }
      if (!coef.empty()) {
        if (coef.back() != '*') throw ConfigError("bad term '" + term + "'");
        coef.pop_back();
      }
    }
    if (!coef.empty()) c = parse_rational(coef);
    out += Poly::monomial(e, c * sign);
    i = j;
  }
  return out;
}

}  // namespace hypcert
