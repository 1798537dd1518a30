#pragma once

#include <string>
#include <vector>

#include "composites/field.hpp"

namespace composites {

// Dense univariate polynomial over a runtime field. Coefficient index =
// exponent, trailing zeros trimmed, zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<FieldElem> coeffs);

  static Poly zero(FieldPtr field) { return Poly(std::move(field)); }
  static Poly constant(const FieldPtr& field, const FieldElem& c);
  static Poly x(const FieldPtr& field);  // the variable itself
  static Poly from_ints(const FieldPtr& field, const std::vector<BigInt>& coeffs);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const FieldElem& coeff(int i) const;      // 0 beyond degree
  const FieldElem& leading() const;          // requires nonzero
  FieldElem constant_term() const;           // 0 for the zero polynomial
  const std::vector<FieldElem>& coeffs() const { return c_; }

  void set_coeff(int i, const FieldElem& v);

  Poly monic() const;             // leading coefficient scaled to 1
  Poly scaled(const FieldElem& s) const;
  Poly shifted(int k) const;      // multiply by X^k (k >= 0)
  Poly derivative() const;
  FieldElem evaluate(const FieldElem& x) const;  // Horner

  std::string str(const std::string& var = "X") const;

 private:
  FieldPtr field_;
  std::vector<FieldElem> c_;
  void trim();
};

bool operator==(const Poly& a, const Poly& b);
bool operator!=(const Poly& a, const Poly& b);
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);

// a = q*b + r with deg r < deg b; throws DivisionByZeroPoly on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);  // exact division test
Poly exact_div(const Poly& a, const Poly& d);

// monic gcd (zero if both inputs are zero)
Poly poly_gcd(Poly a, Poly b);

// (g, s, t) with s*a + t*b = g, g monic or zero
struct ExtendedGcd {
  Poly g, s, t;
};
ExtendedGcd gcd_extended(const Poly& a, const Poly& b);

Poly poly_pow(const Poly& a, unsigned e);
Poly poly_pow_mod(const Poly& a, const BigInt& e, const Poly& m);

// deterministic total order: degree first, then coefficients from the top
int poly_compare(const Poly& a, const Poly& b);

}  // namespace composites
