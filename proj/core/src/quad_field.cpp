#include "hypcert/quad_field.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "hypcert/errors.hpp"

namespace hypcert {

namespace {

int sgn(const Rational& q) { return ::sgn(q); }

constexpr unsigned long kApproxBits = 512;

mpf_class approximate(const QuadExt& x) {
  mpf_class a(x.rational_part(), kApproxBits);
  if (x.is_rational()) return a;
  mpf_class d(x.radicand(), kApproxBits);
  mpf_class b(x.radical_coeff(), kApproxBits);
  mpf_class r(0, kApproxBits);
  r = sqrt(d);
  r = a + b * r;
  return r;
}

}  // namespace

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& delta) : a_(a) {
  if (delta < 0) throw DomainError("negative radicand " + hypcert::to_string(delta));
  if (b == 0 || delta == 0) {
    return;
  }
  // sqrt(p/q) = sqrt(p*q)/q, then pull the square part of p*q out.
  Integer pq = delta.get_num() * delta.get_den();
  auto [square, core] = square_free_split(pq);
  b_ = b * make_rational(square, delta.get_den());
  b_.canonicalize();
  d_ = core;
  canonicalize();
}

void QuadExt::canonicalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
  if (b_ == 0) d_ = 0;
  if (d_ == 0) b_ = 0;
}

void QuadExt::require_same_field(const QuadExt& other) const {
  if (!is_rational() && !other.is_rational() && d_ != other.d_) {
    throw DomainError("cross-field arithmetic between Q(sqrt(" + d_.get_str() + ")) and Q(sqrt(" +
                      other.d_.get_str() + "))");
  }
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadExt::norm() const { return Rational(a_ * a_ - b_ * b_ * d_); }

int QuadExt::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger of a^2 and b^2 d wins.
  const int c = cmp(Rational(a_ * a_), Rational(b_ * b_ * d_));
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  require_same_field(rhs);
  if (is_rational()) d_ = rhs.d_;
  a_ += rhs.a_;
  b_ += rhs.b_;
  canonicalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) { return *this += -rhs; }

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  require_same_field(rhs);
  const Integer d = is_rational() ? rhs.d_ : d_;
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  canonicalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  require_same_field(rhs);
  const Rational n = rhs.norm();
  if (n == 0) throw DomainError("division by zero in quadratic field");
  *this *= rhs.conjugate();
  a_ /= n;
  b_ /= n;
  canonicalize();
  return *this;
}

double QuadExt::to_double() const { return approximate(*this).get_d(); }

namespace {

// sign(alpha + beta*sqrt(u) + gamma*sqrt(v)) for distinct squarefree u, v > 1.
int sign_two_radicals(const Rational& alpha, const Rational& beta, const Integer& u,
                      const Rational& gamma, const Integer& v) {
  int radicals;
  const int sb = sgn(beta);
  const int sg = sgn(gamma);
  if (sb == 0 || sg == 0 || sb == sg) {
    radicals = sb != 0 ? sb : sg;
  } else {
    // beta^2 u == gamma^2 v would make u/v a square, impossible for distinct squarefree u, v.
    radicals = cmp(Rational(beta * beta * u), Rational(gamma * gamma * v)) > 0 ? sb : sg;
  }
  const int sa = sgn(alpha);
  if (radicals == 0) return sa;
  if (sa == 0 || sa == radicals) return radicals;
  // alpha and X = beta sqrt(u) + gamma sqrt(v) have opposite signs; compare alpha^2 with X^2.
  QuadExt diff(Rational(alpha * alpha - beta * beta * u - gamma * gamma * v),
               Rational(-2 * beta * gamma), Rational(u * v));
  const int s = diff.sign();
  if (s > 0) return sa;
  if (s < 0) return radicals;
  return 0;
}

}  // namespace

int compare_cross(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) {
    return (x - y).sign();
  }
  return sign_two_radicals(Rational(x.rational_part() - y.rational_part()), x.radical_coeff(),
                           x.radicand(), Rational(-y.radical_coeff()), y.radicand());
}

Integer floor(const QuadExt& x) {
  if (x.is_rational()) return floor(x.rational_part());
  mpf_class approx = approximate(x);
  mpf_class fl(0, kApproxBits);
  fl = ::floor(approx);
  Integer k(fl);
  while (compare_cross(x, QuadExt(Rational(k))) < 0) --k;
  while (compare_cross(x, QuadExt(Rational(k + 1))) >= 0) ++k;
  return k;
}

QuadExt min_root_quadratic(const Integer& A, const Integer& B, const Integer& C) {
  if (A == 0) {
    if (B <= 0) throw DomainError("linear equation -2Bx + C = 0 has no positive root (B <= 0)");
    Rational r(C, 2 * B);
    r.canonicalize();
    if (r <= 0) throw DomainError("linear equation has no positive root");
    return QuadExt(r);
  }
  const Integer disc = B * B - A * C;
  if (disc < 0) {
    throw DomainError("negative discriminant B^2 - AC = " + disc.get_str() + "; no real root");
  }
  Rational a(B, A);
  a.canonicalize();
  Rational b(-1, A);
  b.canonicalize();
  QuadExt root(a, b, Rational(disc));
  if (root.sign() <= 0) throw DomainError("quadratic has no positive root");
  return root;
}

RationalBracket rational_bracket(const QuadExt& x, const Rational& max_width) {
  if (x.is_rational()) return {x.rational_part(), x.rational_part()};
  // Convergents h_k / k_k; even k lie below x, odd k above.
  Integer h_prev = 1, k_prev = 0;
  Integer h = floor(x), k = 1;
  QuadExt rest = x - QuadExt(Rational(h));
  Rational lower(h), upper;
  bool have_upper = false;
  for (int index = 1;; ++index) {
    QuadExt next = QuadExt(1) / rest;
    Integer term = floor(next);
    Integer h_next = term * h + h_prev;
    Integer k_next = term * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    Rational c(h, k);
    c.canonicalize();
    if (index % 2 == 0) {
      lower = c;
    } else {
      upper = c;
      have_upper = true;
    }
    if (have_upper && upper - lower <= max_width) break;
    rest = next - QuadExt(Rational(term));
  }
  return {lower, upper};
}

std::string to_string(const QuadExt& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  std::string radical = "*sqrt(" + x.radicand().get_str() + ")";
  if (x.rational_part() == 0) return to_string(x.radical_coeff()) + radical;
  const Rational& b = x.radical_coeff();
  if (b < 0) return to_string(x.rational_part()) + " - " + to_string(Rational(-b)) + radical;
  return to_string(x.rational_part()) + " + " + to_string(b) + radical;
}

namespace {

// Parses "<rational>*sqrt(<integer>)".
QuadExt parse_radical_term(std::string_view term, bool negate) {
  const auto star = term.find("*sqrt(");
  if (star == std::string_view::npos || term.back() != ')') {
    throw ConfigError("malformed radical term '" + std::string(term) + "'");
  }
  Rational coeff = parse_rational(term.substr(0, star));
  if (negate) coeff = -coeff;
  auto inner = term.substr(star + 6, term.size() - star - 7);
  return QuadExt(0, coeff, parse_rational(inner));
}

}  // namespace

QuadExt parse_quad(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.find("sqrt") == std::string::npos) return QuadExt(parse_rational(s));
  for (const char* sep : {" + ", " - "}) {
    auto pos = s.find(sep);
    if (pos != std::string::npos) {
      QuadExt a(parse_rational(std::string_view(s).substr(0, pos)));
      return a + parse_radical_term(std::string_view(s).substr(pos + 3), sep[1] == '-');
    }
  }
  return parse_radical_term(s, false);
}

std::string to_decimal(const QuadExt& x, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << approximate(x);
  return out.str();
}

}  // namespace hypcert
