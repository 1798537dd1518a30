#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "composites/errors.hpp"
#include "composites/rational.hpp"

namespace composites {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

enum class FieldKind {
  prime_field,        // GF(p)
  finite_field,       // GF(p)[y]/(modulus), degree n >= 2
  rationals,          // Q
  number_field,       // Q[y]/(minpoly), degree <= 6
  function_field,     // F_p(t)
  function_subfield,  // F_p(u) embedded in F_p(t) as u = t^(p^e)
};

// Coefficient vector over GF(p), length = extension degree.
struct FFCoeffs {
  std::vector<std::int64_t> c;
  auto operator<=>(const FFCoeffs&) const = default;
};

// Coefficient vector over Q, length = defining degree.
struct NFCoeffs {
  std::vector<BigRat> c;
  bool operator==(const NFCoeffs&) const = default;
};

// Reduced fraction of GF(p)[t] polynomials; den monic, gcd(num, den) = 1,
// zero is {0}/{1}. Coefficients index = exponent, trailing zeros trimmed.
struct FuncRat {
  std::vector<std::int64_t> num;
  std::vector<std::int64_t> den;
  bool operator==(const FuncRat&) const = default;
};

class FieldElem {
 public:
  using Payload = std::variant<std::int64_t, FFCoeffs, BigRat, NFCoeffs, FuncRat>;

  FieldElem() = default;
  FieldElem(FieldPtr parent, Payload v) : parent_(std::move(parent)), v_(std::move(v)) {}

  const FieldPtr& parent() const { return parent_; }
  const Payload& payload() const { return v_; }
  Payload& payload() { return v_; }

  bool valid() const { return parent_ != nullptr; }

 private:
  FieldPtr parent_;
  Payload v_;
};

class Field : public std::enable_shared_from_this<Field> {
 public:
  // --- construction -------------------------------------------------------
  static FieldPtr prime(std::int64_t p);
  static FieldPtr finite(std::int64_t p, int n);  // auto-selected modulus
  static FieldPtr finite(std::int64_t p, int n, std::vector<std::int64_t> modulus);
  static FieldPtr rationals();
  static FieldPtr number_field(std::vector<BigRat> minpoly);  // low-to-high, any lc
  static FieldPtr function_field(std::int64_t p);
  static FieldPtr function_subfield(std::int64_t p, int e);

  FieldKind kind() const { return kind_; }
  std::int64_t p() const { return p_; }
  int degree() const { return deg_; }  // over the prime/base field; 1 for Q, F_p(t)
  int sub_exponent() const { return sub_e_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  const std::vector<BigRat>& minpoly() const { return minpoly_; }

  BigInt characteristic() const;
  bool is_finite() const;
  std::optional<BigInt> order() const;  // p^n for finite fields

  bool same(const Field& other) const;  // structural identity
  static bool same(const FieldPtr& a, const FieldPtr& b) { return a->same(*b); }

  // --- elements ------------------------------------------------------------
  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(const BigInt& n) const;
  FieldElem from_rational(const BigRat& q) const;  // rationals / number fields only
  // The distinguished generator: y-class for extensions, t for F_p(t),
  // u for F_p(u), theta for number fields; from_int(1) otherwise.
  FieldElem generator() const;

  bool is_zero(const FieldElem& a) const;
  bool is_one(const FieldElem& a) const;
  bool eq(const FieldElem& a, const FieldElem& b) const;
  int compare(const FieldElem& a, const FieldElem& b) const;  // fixed total order

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, const BigInt& e) const;

  // Enumeration of a finite field in a fixed order; element_at(i) is the
  // i-th element of enumerate(). Throws SearchSpaceTooLarge past the cap.
  std::vector<FieldElem> enumerate() const;
  FieldElem element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElem& a) const;

  // p-th power root where it exists (finite fields: always; function fields:
  // iff num and den are polynomials in t^p). nullopt when the root is absent.
  std::optional<FieldElem> pth_root(const FieldElem& a) const;
  bool is_pth_power(const FieldElem& a) const;

  // --- io -------------------------------------------------------------------
  std::string str(const FieldElem& a) const;
  std::string name() const;          // "GF(4)", "Q", "Q(th)", "F_2(t)", "F_2(u), u=t^2"
  std::string generator_name() const;  // "w", "t", "u", "th", "" for prime/Q

  void check_parent(const FieldElem& a, const char* op) const;

 private:
  Field() = default;

  FieldKind kind_ = FieldKind::rationals;
  std::int64_t p_ = 0;
  int deg_ = 1;
  int sub_e_ = 0;
  std::vector<std::int64_t> modulus_;  // over GF(p), monic, length deg_+1
  std::vector<BigRat> minpoly_;        // over Q, monic, length deg_+1
};

// Convenience operators routed through the parent field.
FieldElem operator+(const FieldElem& a, const FieldElem& b);
FieldElem operator-(const FieldElem& a, const FieldElem& b);
FieldElem operator*(const FieldElem& a, const FieldElem& b);
FieldElem operator/(const FieldElem& a, const FieldElem& b);
FieldElem operator-(const FieldElem& a);
bool operator==(const FieldElem& a, const FieldElem& b);
bool operator!=(const FieldElem& a, const FieldElem& b);

// GF(p)[z] helpers shared by the finite-field and function-field kernels
// (dense int64 coefficient vectors, index = exponent).
namespace gfp {
using Vec = std::vector<std::int64_t>;
int deg(const Vec& a);
void trim(Vec& a);
Vec add(const Vec& a, const Vec& b, std::int64_t p);
Vec sub(const Vec& a, const Vec& b, std::int64_t p);
Vec mul(const Vec& a, const Vec& b, std::int64_t p);
Vec scale(const Vec& a, std::int64_t s, std::int64_t p);
std::pair<Vec, Vec> divmod(const Vec& a, const Vec& b, std::int64_t p);
Vec mod(const Vec& a, const Vec& b, std::int64_t p);
Vec gcd(Vec a, Vec b, std::int64_t p);  // monic
Vec monic(const Vec& a, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);
Vec substitute_power(const Vec& a, int k);  // a(t) -> a(t^k)
bool is_power_substitution(const Vec& a, int k, Vec& base_out);  // a == b(t^k)?
bool irreducible(const Vec& a, std::int64_t p);  // trial division, desk scale
Vec least_irreducible(std::int64_t p, int n);    // lexicographically least monic
}  // namespace gfp

}  // namespace composites
