#pragma once

#include <cstdint>
#include <vector>

#include "composites/poly.hpp"
#include "composites/prng.hpp"

namespace composites {

// Monic irreducible factors with multiplicities; unit * prod(factor^mult)
// reproduces the input exactly. seed is echoed so randomized splitting
// (equal-degree stage) is reproducible.
struct PolyFactorization {
  FieldElem unit;
  std::vector<std::pair<Poly, int>> factors;  // sorted by poly_compare
  std::uint64_t seed = kDefaultSeed;
};

// Supported fields: finite fields (full); Q and number fields of defining
// degree <= 6 (input degree <= 8); function fields (squarefree split plus
// perfect-power root extraction only). Throws UnsupportedFactorization
// elsewhere.
PolyFactorization factor(const Poly& a, std::uint64_t seed = kDefaultSeed);

bool is_irreducible(const Poly& a, std::uint64_t seed = kDefaultSeed);

// Squarefree part (product of distinct irreducible factors), finite fields
// and characteristic zero.
Poly squarefree_part(const Poly& a);

// Factorization of a primitive squarefree polynomial over Q via reduction
// mod p, Hensel lifting and factor recombination. Used internally by
// factor() and by the norm step of number-field factorization; no input
// degree cap beyond practicality.
std::vector<Poly> factor_squarefree_rational(const Poly& a);

// Irreducibility over Q without the degree-8 public cap (construction-time
// check for number-field moduli).
bool rational_poly_irreducible(const std::vector<BigRat>& coeffs);

}  // namespace composites
