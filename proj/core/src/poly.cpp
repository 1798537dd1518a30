#include "composites/poly.hpp"

#include <algorithm>

namespace composites {

Poly::Poly(FieldPtr field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_) field_->check_parent(c, "Poly");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
}

Poly Poly::constant(const FieldPtr& field, const FieldElem& c) {
  return Poly(field, std::vector<FieldElem>{c});
}

Poly Poly::x(const FieldPtr& field) {
  return Poly(field, {field->zero(), field->one()});
}

Poly Poly::from_ints(const FieldPtr& field, const std::vector<BigInt>& coeffs) {
  std::vector<FieldElem> c;
  c.reserve(coeffs.size());
  for (const auto& n : coeffs) c.push_back(field->from_int(n));
  return Poly(field, std::move(c));
}

const FieldElem& Poly::coeff(int i) const {
  static thread_local FieldElem zero_cache;
  if (i >= 0 && i < static_cast<int>(c_.size())) return c_[i];
  zero_cache = field_->zero();
  return zero_cache;
}

const FieldElem& Poly::leading() const {
  if (is_zero()) fail(errc::invalid_argument, "Poly::leading", "zero polynomial");
  return c_.back();
}

FieldElem Poly::constant_term() const {
  return c_.empty() ? field_->zero() : c_.front();
}

void Poly::set_coeff(int i, const FieldElem& v) {
  field_->check_parent(v, "Poly::set_coeff");
  if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, field_->zero());
  c_[i] = v;
  trim();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::scaled(const FieldElem& s) const {
  std::vector<FieldElem> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(field_->mul(v, s));
  return Poly(field_, std::move(c));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<FieldElem> c(c_.size() + k, field_->zero());
  std::copy(c_.begin(), c_.end(), c.begin() + k);
  return Poly(field_, std::move(c));
}

Poly Poly::derivative() const {
  std::vector<FieldElem> c;
  for (int i = 1; i <= degree(); ++i)
    c.push_back(field_->mul(c_[i], field_->from_int(i)));
  return Poly(field_, std::move(c));
}

FieldElem Poly::evaluate(const FieldElem& x) const {
  field_->check_parent(x, "Poly::evaluate");
  FieldElem acc = field_->zero();
  for (int i = degree(); i >= 0; --i) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (field_->is_zero(c_[i])) continue;
    if (!out.empty()) out += " + ";
    std::string cs = field_->str(c_[i]);
    bool needs_parens = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos ||
                        cs.find('/') != std::string::npos;
    if (i == 0) {
      out += needs_parens && cs.front() != '(' ? "(" + cs + ")" : cs;
    } else {
      if (!field_->is_one(c_[i]))
        out += (needs_parens && cs.front() != '(' ? "(" + cs + ")" : cs) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

static void check_same_field(const Poly& a, const Poly& b, const char* op) {
  if (!a.field()->same(*b.field())) fail(errc::field_mismatch, op, "polynomials over different fields");
}

bool operator==(const Poly& a, const Poly& b) {
  check_same_field(a, b, "Poly::eq");
  if (a.degree() != b.degree()) return false;
  for (int i = 0; i <= a.degree(); ++i)
    if (!a.field()->eq(a.coeff(i), b.coeff(i))) return false;
  return true;
}

bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a, b, "Poly::add");
  const auto& F = a.field();
  std::vector<FieldElem> c(std::max(a.degree(), b.degree()) + 1, F->zero());
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    c[i] = F->add(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(c));
}

Poly operator-(const Poly& a) {
  const auto& F = a.field();
  std::vector<FieldElem> c;
  for (int i = 0; i <= a.degree(); ++i) c.push_back(F->neg(a.coeff(i)));
  return Poly(F, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a, b, "Poly::mul");
  const auto& F = a.field();
  if (a.is_zero() || b.is_zero()) return Poly::zero(F);
  std::vector<FieldElem> c(a.degree() + b.degree() + 1, F->zero());
  for (int i = 0; i <= a.degree(); ++i) {
    if (F->is_zero(a.coeff(i))) continue;
    for (int j = 0; j <= b.degree(); ++j)
      c[i + j] = F->add(c[i + j], F->mul(a.coeff(i), b.coeff(j)));
  }
  return Poly(F, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_same_field(a, b, "divmod");
  const auto& F = a.field();
  if (b.is_zero()) fail(errc::division_by_zero_poly, "divmod", "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly::zero(F), a};
  std::vector<FieldElem> rem(a.coeffs());
  std::vector<FieldElem> q(a.degree() - b.degree() + 1, F->zero());
  FieldElem lcinv = F->inv(b.leading());
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (F->is_zero(rem[i])) continue;
    FieldElem c = F->mul(rem[i], lcinv);
    int shift = i - b.degree();
    q[shift] = c;
    for (int j = 0; j <= b.degree(); ++j)
      rem[j + shift] = F->sub(rem[j + shift], F->mul(c, b.coeff(j)));
  }
  return {Poly(F, std::move(q)), Poly(F, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

Poly exact_div(const Poly& a, const Poly& d) {
  auto [q, r] = divmod(a, d);
  if (!r.is_zero()) fail(errc::invalid_argument, "exact_div", "division is not exact");
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd gcd_extended(const Poly& a, const Poly& b) {
  check_same_field(a, b, "gcd_extended");
  const auto& F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, F->one()), s1 = Poly::zero(F);
  Poly t0 = Poly::zero(F), t1 = Poly::constant(F, F->one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly snew = s0 - q * s1;
    Poly tnew = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(snew);
    t0 = std::move(t1);
    t1 = std::move(tnew);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FieldElem scale = F->inv(r0.leading());
  return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

Poly poly_pow(const Poly& a, unsigned e) {
  Poly r = Poly::constant(a.field(), a.field()->one());
  Poly base = a;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly poly_pow_mod(const Poly& a, const BigInt& e, const Poly& m) {
  Poly r = Poly::constant(a.field(), a.field()->one());
  Poly base = poly_mod(a, m);
  BigInt k = e;
  while (k > 0) {
    if ((k & 1) != 0) r = poly_mod(r * base, m);
    base = poly_mod(base * base, m);
    k >>= 1;
  }
  return r;
}

int poly_compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& F = a.field();
  for (int i = a.degree(); i >= 0; --i)
    if (int c = F->compare(a.coeff(i), b.coeff(i))) return c;
  return 0;
}

}  // namespace composites
