#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "composites/linalg.hpp"
#include "composites/poly.hpp"

namespace composites {

enum class Tri { yes, no, unknown };
const char* tri_name(Tri t);

struct DegreeValue {
  bool finite = true;
  BigInt value = 1;  // meaningful when finite
  std::string str() const;
};

// An embedded field pair K <= L. Supported shapes: identity pairs of any
// kind, GF(p^m) <= GF(p^n) with m | n, Q <= Q(th), and F_p(t^(p^e)) inside
// F_p(t). The embedding is verified to be a ring homomorphism fixing the
// prime field at construction time.
class ExtensionPair;
using PairPtr = std::shared_ptr<const ExtensionPair>;

class ExtensionPair : public std::enable_shared_from_this<ExtensionPair> {
 public:
  static PairPtr make(FieldPtr small, FieldPtr big);

  const FieldPtr& small() const { return small_; }
  const FieldPtr& big() const { return big_; }
  bool is_identity() const { return identity_; }

  DegreeValue degree() const;

  FieldElem embed(const FieldElem& k) const;         // K -> L
  bool in_small(const FieldElem& l) const;           // l in the image of K?
  FieldElem retract(const FieldElem& l) const;       // inverse of embed on the image

  // Coordinates of an L-element in a fixed K-basis of L (finite pairs only;
  // basis is {1, g, ..., g^(r-1)} with g the generator of L).
  std::vector<FieldElem> to_coords(const FieldElem& l) const;
  FieldElem from_coords(const std::vector<FieldElem>& coords) const;
  int relative_degree_int() const;  // r = [L:K] as int (finite pairs)

  // Lift/lower polynomials through the embedding coefficient-wise.
  Poly embed_poly(const Poly& over_small) const;
  Poly retract_poly(const Poly& over_big) const;  // all coefficients must lie in K

 private:
  ExtensionPair() = default;
  friend void init_pair_tables(ExtensionPair&);

  FieldPtr small_, big_;
  bool identity_ = false;
  // finite-field pairs: image of K's generator in L and coordinate matrices
  FieldElem small_gen_image_;
  std::optional<Matrix> coord_matrix_inv_;  // GF(p)-matrix: L-coords -> stacked K-basis coords
};

struct Predicates {
  Tri algebraic = Tri::unknown;
  Tri separable = Tri::unknown;
  Tri normal = Tri::unknown;
  Tri galois = Tri::unknown;
  Tri purely_inseparable = Tri::unknown;
};

Predicates extension_predicates(const PairPtr& pair);

// Automorphisms of L fixing K; finite-field pairs (and identity pairs) only.
struct Automorphism {
  int frobenius_power = 0;  // x -> x^(p^(m * frobenius_power))
  FieldElem apply(const FieldElem& x) const;
  FieldPtr field;
};
std::vector<Automorphism> automorphism_group(const PairPtr& pair);

struct CosetIndex {
  bool finite = true;
  BigInt index = 1;
  std::vector<FieldElem> representatives;  // lexicographically least per coset
  std::string str() const;
};
// |L* / K*| with explicit representatives for finite pairs.
CosetIndex unit_coset_index(const PairPtr& pair);

// Monic irreducible polynomial over K with alpha as a root.
Poly minimal_polynomial(const PairPtr& pair, const FieldElem& alpha);

}  // namespace composites
