#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hypcert/polynomial.hpp"
#include "hypcert/positivity.hpp"

namespace hypcert {

/// A place of Q(t): a monic irreducible polynomial (one Galois orbit of points
/// of P^1, weighted by its degree) or the point at infinity.
class Place {
 public:
  static Place infinity();
  /// Normalizes to monic; throws DomainError unless p is irreducible over Q.
  static Place finite(const Poly& p);
  /// For polynomials already known to be monic irreducible (factorization output).
  static Place trusted(Poly monic_irreducible);

  bool is_infinite() const { return infinite_; }
  const Poly& poly() const { return p_; }
  int degree() const { return infinite_ ? 1 : p_.degree(); }

  friend bool operator==(const Place&, const Place&) = default;
  friend bool operator<(const Place& a, const Place& b);

 private:
  bool infinite_ = false;
  Poly p_;
};

std::string to_string(const Place& p);

/// v_p(f); v_inf(f) = -deg f. Throws DomainError for f = 0.
int valuation(const Poly& f, const Place& p);

/// Point [x_0 : ... : x_m] of P^m(Q(t)) with polynomial coordinates, normalized
/// to be jointly coprime with the first nonzero coordinate monic.
class RatMap {
 public:
  explicit RatMap(std::vector<Poly> coords);

  const std::vector<Poly>& coords() const { return x_; }
  int dimension() const { return static_cast<int>(x_.size()) - 1; }

  friend bool operator==(const RatMap&, const RatMap&) = default;

 private:
  std::vector<Poly> x_;
};

/// "[x_0 : x_1 : ...]"
std::string to_string(const RatMap& x);
RatMap parse_map(std::string_view text);

/// max_j deg x_j for the normalized coordinates.
int height(const RatMap& x);

/// Homogeneous form in X0..X(n-1) with rational coefficients.
class Form {
 public:
  Form(int nvars, std::map<std::vector<int>, Rational> terms);
  static Form linear(const std::vector<Rational>& coeffs);

  int nvars() const { return n_; }
  int degree() const { return e_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  Poly operator()(const std::vector<Poly>& x) const;
  Rational operator()(const std::vector<Rational>& x) const;

  friend bool operator==(const Form&, const Form&) = default;

 private:
  int n_ = 0;
  int e_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

std::string to_string(const Form& f);
/// Sums of terms like "3/2*X0^2*X1", "-X2"; the variables are X0..X(nvars-1).
Form parse_form(std::string_view text, int nvars);

/// lambda_p = v_p(F(x)) - e * min_j v_p(x_j). Throws DomainError when F(x) = 0.
Rational weil_hypersurface(const Form& f, const RatMap& x, const Place& p);

struct CountingFunctions {
  /// m_S = sum over p in S of deg(p) lambda_p.
  Rational proximity;
  /// N_S = sum over p outside S of deg(p) lambda_p, from the factorization of F(x).
  Rational counting;
  /// Number of geometric points outside S where lambda > 0, from the radical of F(x).
  Integer truncated;
};

/// Throws DomainError when F(x) = 0 or S has repeated places.
CountingFunctions counting_functions(const Form& f, const RatMap& x, const std::vector<Place>& s);

/// Number of geometric points in S.
Integer place_count(const std::vector<Place>& s);

/// Rank over Q of a list of coefficient vectors.
int rank(std::vector<std::vector<Rational>> rows);

/// True when the coordinates are linearly independent over Q.
bool linearly_nondegenerate(const RatMap& x);

struct WangCheck {
  bool skipped = false;
  std::string reason;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// lhs = sum over p in S of deg(p) max_J sum_{j in J} lambda_{H_j,p}, J ranging over
/// linearly independent subsets; rhs = (m+1) h + m(m+1)/2 (#S - 2).
/// Skipped (not failed) when x is linearly degenerate.
WangCheck wang_smt_check(const RatMap& x, const std::vector<std::vector<Rational>>& hyperplanes,
                         const std::vector<Place>& s);

/// Plane equations of the boundary components and coordinates of the blown points.
struct BoundaryRealization {
  std::vector<Form> components;
  std::map<std::string, std::vector<Rational>> points;

  friend bool operator==(const BoundaryRealization&, const BoundaryRealization&) = default;
};

/// Degrees, incidences and point coordinates must match the configuration.
/// Throws ConfigError otherwise.
void validate_realization(const SurfaceConfig& cfg, const BoundaryRealization& r);

struct ProbeRecord {
  RatMap map;
  int height = 0;
  /// deg phi^*D_p
  Rational pullback_degree;
  /// Number of points of P^1 mapping into the boundary.
  Integer truncated;
  /// pullback_degree / max(1, N^[1] - 2)
  Rational ratio;
};

struct ProbeOutcome {
  std::optional<ProbeRecord> record;
  /// Why the curve was excluded when record is empty.
  std::string excluded;
};

ProbeOutcome height_bound_probe(const SurfaceConfig& cfg, const WeightedBoundary& wb, const BoundaryRealization& r,
                                const RatMap& x);

// Sampling.

/// Coefficients uniform in [-bound, bound], exact degree unless the draw is zero.
Poly random_poly(std::mt19937_64& rng, int degree, long bound);
/// m+1 coordinates of degree drawn uniformly in [0, max_degree], not all zero.
RatMap random_map(std::mt19937_64& rng, int m, int max_degree, long bound);
/// Per-sample generator, independent of the thread layout.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

struct StressOptions {
  std::size_t samples = 1000;
  int max_dimension = 3;
  int max_degree = 10;
  long coeff_bound = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct StressSample {
  std::size_t index = 0;
  RatMap map{std::vector<Poly>{Poly(1), Poly()}};
  int height = 0;
  WangCheck wang;
  /// Counting data for the first hyperplane outside S.
  CountingFunctions counting;
  /// m_S + N_S = height for that hyperplane.
  bool fmt_holds = false;
};

struct StressSummary {
  std::size_t samples = 0;
  std::size_t skipped = 0;
  std::size_t wang_violations = 0;
  std::size_t fmt_violations = 0;
  /// Largest lhs / rhs over samples with rhs > 0.
  Rational max_ratio;
};

/// Samples a nondegenerate map, hyperplanes with small coefficients and a place set
/// (optionally infinity, random linear places, the factors of one H_j(x)).
StressSample stress_sample(const StressOptions& options, std::size_t index);

/// Runs the sweep; on_sample is called from worker threads under a lock.
StressSummary stress(const StressOptions& options,
                     const std::function<void(const StressSample&)>& on_sample = {});

}  // namespace hypcert
