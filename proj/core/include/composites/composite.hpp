#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "composites/factor.hpp"
#include "composites/tower.hpp"

namespace composites {

enum class RingKind { field_field, z_in_q, z_localized };

class CompositeRing;
using RingPtr = std::shared_ptr<const CompositeRing>;

// The ring A + X*B[X]: polynomials over the big field whose constant term
// lies in the small component (a field K embedded in L, or Z, or Z with a
// list of inverted primes sitting inside Q).
class CompositeRing : public std::enable_shared_from_this<CompositeRing> {
 public:
  static RingPtr field_pair(PairPtr pair);
  static RingPtr z_in_q();
  static RingPtr z_localized(std::vector<std::int64_t> inverted_primes);  // nonempty

  RingKind kind() const { return kind_; }
  const PairPtr& pair() const { return pair_; }     // field_field only
  const FieldPtr& big() const { return big_; }
  const std::vector<std::int64_t>& inverted_primes() const { return primes_; }

  bool small_is_field() const { return kind_ == RingKind::field_field; }
  bool same(const CompositeRing& o) const;
  std::string name() const;

  // is the denominator supported on the inverted primes? (z_localized)
  bool denominator_allowed(const BigInt& d) const;

 private:
  CompositeRing() = default;
  RingKind kind_ = RingKind::field_field;
  PairPtr pair_;
  FieldPtr big_;
  std::vector<std::int64_t> primes_;
};

struct CompositeElement {
  RingPtr ring;
  Poly poly;  // over ring->big()
};

// membership of an arbitrary B[X] polynomial
bool contains(const RingPtr& ring, const Poly& p);

// throws NotAMember when p violates the constant-term/denominator constraints
CompositeElement make_element(const RingPtr& ring, const Poly& p);

bool is_unit(const CompositeElement& e);
bool is_zero(const CompositeElement& e);

enum class IrreducibleTag { scaled_x, unit_constant_form, reducible, non_atom_divisible };
const char* tag_name(IrreducibleTag t);

struct IrreducibilityVerdict {
  bool irreducible = false;
  IrreducibleTag tag = IrreducibleTag::reducible;
};

struct SearchOptions {
  int degree_bound = 4;        // cap for exhaustive divisor enumeration
  std::uint64_t big_field_cap = 9;  // |L| cap for exhaustive searches
  bool cross_check = false;    // brute-force verification of the classifier
  std::uint64_t seed = kDefaultSeed;
};

// Classifier from the irreducible-element shapes: a*X with a in L*, or
// a*q(X) with a in K*, q(0) = 1 and q irreducible in L[X]. For Z-kind rings
// the decision enumerates constant splits against the Q[X] factorization.
IrreducibilityVerdict is_irreducible_in_composite(const CompositeElement& e,
                                                  const SearchOptions& opts = {});

struct Factorization {
  FieldElem unit;  // element of the small component's unit group (in L for
                   // field pairs; +-1 over Q for Z-kinds)
  std::vector<CompositeElement> atoms;
};

// Atomic factorization in a field-field composite; SmallRingNotAField for
// Z-kind rings.
Factorization factor_atoms(const CompositeElement& e, std::uint64_t seed = kDefaultSeed);

// Brute-force oracle: lengths of ALL atomic factorizations found by
// exhaustive divisor enumeration. Independent of factor_atoms.
std::set<int> length_set(const CompositeElement& e, int search_bound,
                         const SearchOptions& opts = {});

// Complete list of pairwise non-associate irreducible divisors (associates
// differ by a K* factor); finite big fields only.
std::vector<CompositeElement> irreducible_divisors(const CompositeElement& e,
                                                   const SearchOptions& opts = {});

// Exhaustive reducibility oracle (used by tests and verification mode).
bool brute_force_irreducible(const CompositeElement& e, const SearchOptions& opts = {});

// All elements of the composite with degree <= bound (finite big fields).
std::vector<CompositeElement> enumerate_elements(const RingPtr& ring, int degree_bound,
                                                 const SearchOptions& opts = {});

struct PrincipalChain {
  std::vector<CompositeElement> generators;  // (f) strictly inside (f/d) inside ...
  BigInt ratio;                              // the nonunit d
};

// (f) < (f/d) < (f/d^2) < ...; small component must not be a field.
PrincipalChain accp_failure_chain(const RingPtr& ring, const CompositeElement& f,
                                  const BigInt& d, int steps);

struct AlmostBezoutWitness {
  int n = 0;            // least n with f^(p^n), g^(p^n) in K[X]
  Poly fpow, gpow;      // those powers, written over K
  Poly h;               // monic gcd generating (f^(p^n), g^(p^n)) K[X]
  Poly s, t;            // Bezout cofactors: s*fpow + t*gpow = h
};

AlmostBezoutWitness almost_bezout_witness(const CompositeElement& f, const CompositeElement& g);

struct QuotientClass {
  bool zero = false;
  std::string rep;  // canonical representative of the coset of the constant term
};

// Coset of the constant coefficient in B/A; zero iff the polynomial lies in
// the composite. For z_localized rings the ambient is Z_S[X].
QuotientClass quotient_class(const RingPtr& ring, const Poly& p);

enum class Verdict { v_true, v_false, conditional };
struct AssertedProperty {
  Verdict verdict = Verdict::conditional;
  std::string cite;       // the criterion the verdict is read from
  std::string condition;  // present for conditional verdicts
};

enum class PropTested { confirmed, refuted, untested };

struct PropertyEntry {
  AssertedProperty asserted;
  PropTested tested = PropTested::untested;
  std::string witness;
};

// property name -> entry; names: atomic accp bfd hfd idf ffd noetherian
// integrally_closed s_domain hilbert dedekind
struct PropertyReport {
  RingPtr ring;
  std::map<std::string, PropertyEntry> entries;
};

extern const std::vector<std::string> kPropertyNames;

PropertyReport property_report(const RingPtr& ring);

// canonical representative of the K*-associate class (field pairs, finite K)
CompositeElement associate_normal_form(const CompositeElement& e);

std::string element_str(const CompositeElement& e);

}  // namespace composites
