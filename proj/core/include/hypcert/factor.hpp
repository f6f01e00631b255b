#pragma once

#include <vector>

#include "hypcert/polynomial.hpp"

namespace hypcert {

struct Factor {
  /// Monic, irreducible over Q.
  Poly poly;
  int multiplicity = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Yun's decomposition: monic squarefree, pairwise coprime parts with their multiplicities.
std::vector<Factor> squarefree_decomposition(const Poly& f);

/// Complete factorization over Q by Zassenhaus (modular factorization, Hensel
/// lifting, exhaustive recombination). Factors are sorted by degree, then by
/// coefficients. The constant content is dropped. Throws DomainError for zero.
std::vector<Factor> factor(const Poly& f);

/// True for polynomials of degree >= 1 with no nontrivial factorization over Q.
bool is_irreducible(const Poly& f);

}  // namespace hypcert
