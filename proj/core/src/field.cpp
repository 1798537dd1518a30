#include "composites/field.hpp"

#include <algorithm>
#include <sstream>

#include "composites/factor.hpp"

namespace composites {

namespace gfp {

int deg(const Vec& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

static std::int64_t norm(std::int64_t x, std::int64_t p) {
  x %= p;
  if (x < 0) x += p;
  return x;
}

Vec add(const Vec& a, const Vec& b, std::int64_t p) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % p;
  }
  trim(r);
  return r;
}

Vec sub(const Vec& a, const Vec& b, std::int64_t p) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    r[i] = norm(v, p);
  }
  trim(r);
  return r;
}

Vec mul(const Vec& a, const Vec& b, std::int64_t p) {
  if (deg(a) < 0 || deg(b) < 0) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Vec scale(const Vec& a, std::int64_t s, std::int64_t p) {
  Vec r(a.size());
  s = norm(s, p);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * s) % p;
  trim(r);
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = norm(a, p);
  std::int64_t t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  return norm(t, p);
}

std::pair<Vec, Vec> divmod(const Vec& a, const Vec& b, std::int64_t p) {
  int db = deg(b);
  if (db < 0) fail(errc::division_by_zero_poly, "gfp::divmod", "zero divisor");
  Vec rem = a;
  trim(rem);
  int dr = deg(rem);
  if (dr < db) return {{}, rem};
  Vec q(dr - db + 1, 0);
  std::int64_t lcinv = inv_mod(b[db], p);
  while ((dr = deg(rem)) >= db) {
    std::int64_t c = (rem[dr] * lcinv) % p;
    int shift = dr - db;
    q[shift] = c;
    for (int i = 0; i <= db; ++i)
      rem[i + shift] = norm(rem[i + shift] - c * b[i], p);
  }
  trim(rem);
  return {q, rem};
}

Vec mod(const Vec& a, const Vec& b, std::int64_t p) { return divmod(a, b, p).second; }

Vec monic(const Vec& a, std::int64_t p) {
  int d = deg(a);
  if (d < 0) return {};
  return scale(a, inv_mod(a[d], p), p);
}

Vec gcd(Vec a, Vec b, std::int64_t p) {
  trim(a);
  trim(b);
  while (deg(b) >= 0) {
    Vec r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Vec substitute_power(const Vec& a, int k) {
  if (deg(a) < 0) return {};
  Vec r(static_cast<std::size_t>(deg(a)) * k + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i * k] = a[i];
  return r;
}

bool is_power_substitution(const Vec& a, int k, Vec& base_out) {
  base_out.clear();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (i % k != 0) return false;
  }
  base_out.assign(a.size() / k + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) base_out[i / k] = a[i];
  trim(base_out);
  return true;
}

// index -> monic polynomial of degree n over GF(p); digit order makes
// ascending index the lexicographic order on (c_0, ..., c_{n-1}).
static Vec monic_at(std::int64_t p, int n, std::uint64_t idx) {
  Vec f(n + 1, 0);
  f[n] = 1;
  for (int i = 0; i < n; ++i) {
    int pos = n - 1 - i;  // c_0 is the most significant digit
    std::uint64_t pw = 1;
    for (int j = 0; j < pos; ++j) pw *= static_cast<std::uint64_t>(p);
    f[i] = static_cast<std::int64_t>((idx / pw) % static_cast<std::uint64_t>(p));
  }
  return f;
}

bool irreducible(const Vec& a, std::int64_t p) {
  int d = deg(a);
  if (d <= 0) return false;
  if (d == 1) return true;
  if (a[0] == 0) return false;  // divisible by t
  for (int dd = 1; dd <= d / 2; ++dd) {
    std::uint64_t count = 1;
    for (int j = 0; j < dd; ++j) count *= static_cast<std::uint64_t>(p);
    if (count > (1u << 22))
      fail(errc::search_space_too_large, "gfp::irreducible", "trial-division space too large");
    for (std::uint64_t k = 0; k < count; ++k) {
      Vec f = monic_at(p, dd, k);
      if (deg(mod(a, f, p)) < 0) return false;
    }
  }
  return true;
}

Vec least_irreducible(std::int64_t p, int n) {
  std::uint64_t count = 1;
  for (int j = 0; j < n; ++j) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t k = 0; k < count; ++k) {
    Vec f = monic_at(p, n, k);
    if (irreducible(f, p)) return f;
  }
  fail(errc::invalid_argument, "gfp::least_irreducible", "no irreducible found");
}

}  // namespace gfp

// ---------------------------------------------------------------------------

namespace {

FuncRat reduce_funcrat(gfp::Vec num, gfp::Vec den, std::int64_t p) {
  gfp::trim(num);
  gfp::trim(den);
  if (gfp::deg(den) < 0)
    fail(errc::invalid_argument, "FuncRat", "zero denominator");
  if (gfp::deg(num) < 0) return FuncRat{{}, {1}};
  gfp::Vec g = gfp::gcd(num, den, p);
  if (gfp::deg(g) > 0) {
    num = gfp::divmod(num, g, p).first;
    den = gfp::divmod(den, g, p).first;
  }
  std::int64_t lc = den[gfp::deg(den)];
  if (lc != 1) {
    std::int64_t s = gfp::inv_mod(lc, p);
    num = gfp::scale(num, s, p);
    den = gfp::scale(den, s, p);
  }
  return FuncRat{std::move(num), std::move(den)};
}

int compare_vec(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int compare_ratvec(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

// Q[y] arithmetic for number-field elements (dense BigRat vectors).
using QVec = std::vector<BigRat>;

int qdeg(const QVec& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

void qtrim(QVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QVec qmul(const QVec& a, const QVec& b) {
  if (qdeg(a) < 0 || qdeg(b) < 0) return {};
  QVec r(a.size() + b.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qtrim(r);
  return r;
}

std::pair<QVec, QVec> qdivmod(const QVec& a, const QVec& b) {
  int db = qdeg(b);
  QVec rem = a;
  qtrim(rem);
  int dr = qdeg(rem);
  if (dr < db) return {{}, rem};
  QVec q(dr - db + 1, BigRat(0));
  while ((dr = qdeg(rem)) >= db) {
    BigRat c = rem[dr] / b[db];
    int shift = dr - db;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) rem[i + shift] -= c * b[i];
  }
  qtrim(rem);
  return {q, rem};
}

// extended euclid in Q[y]: returns (g, s) with s*a = g mod m, g = gcd(a, m)
std::pair<QVec, QVec> qhalf_egcd(QVec a, QVec m) {
  QVec s0{BigRat(1)}, s1{};
  QVec r0 = std::move(a), r1 = std::move(m);
  qtrim(r0);
  qtrim(r1);
  while (qdeg(r1) >= 0) {
    auto [q, r] = qdivmod(r0, r1);
    QVec qs = qmul(q, s1);
    QVec snew(std::max(s0.size(), qs.size()), BigRat(0));
    for (std::size_t i = 0; i < snew.size(); ++i)
      snew[i] = (i < s0.size() ? s0[i] : BigRat(0)) - (i < qs.size() ? qs[i] : BigRat(0));
    qtrim(snew);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  return {r0, s0};
}

}  // namespace

// --- constructors -----------------------------------------------------------

FieldPtr Field::prime(std::int64_t p) {
  if (p < 2 || !is_prime(BigInt(p)))
    fail(errc::invalid_argument, "Field::prime", "p must be prime, got " + std::to_string(p));
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::prime_field;
  f->p_ = p;
  f->deg_ = 1;
  return f;
}

FieldPtr Field::finite(std::int64_t p, int n) {
  if (n == 1) return prime(p);
  if (p < 2 || !is_prime(BigInt(p)))
    fail(errc::invalid_argument, "Field::finite", "p must be prime, got " + std::to_string(p));
  if (n < 1 || n > 16)
    fail(errc::invalid_argument, "Field::finite", "extension degree out of range");
  return finite(p, n, gfp::least_irreducible(p, n));
}

FieldPtr Field::finite(std::int64_t p, int n, std::vector<std::int64_t> modulus) {
  if (p < 2 || !is_prime(BigInt(p)))
    fail(errc::invalid_argument, "Field::finite", "p must be prime, got " + std::to_string(p));
  if (n == 1) return prime(p);
  for (auto& c : modulus) c = ((c % p) + p) % p;
  gfp::trim(modulus);
  if (gfp::deg(modulus) != n || modulus[n] != 1)
    fail(errc::invalid_argument, "Field::finite", "modulus must be monic of degree n");
  if (!gfp::irreducible(modulus, p))
    fail(errc::invalid_argument, "Field::finite", "modulus is reducible over GF(p)");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::finite_field;
  f->p_ = p;
  f->deg_ = n;
  f->modulus_ = std::move(modulus);
  return f;
}

FieldPtr Field::rationals() {
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::rationals;
  return f;
}

FieldPtr Field::number_field(std::vector<BigRat> minpoly) {
  QVec m = std::move(minpoly);
  qtrim(m);
  int d = qdeg(m);
  if (d < 2 || d > 6)
    fail(errc::invalid_argument, "Field::number_field", "defining degree must be in [2, 6]");
  BigRat lc = m[d];
  for (auto& c : m) c /= lc;
  if (!rational_poly_irreducible(m))
    fail(errc::invalid_argument, "Field::number_field", "minimal polynomial is reducible over Q");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::number_field;
  f->deg_ = d;
  f->minpoly_ = std::move(m);
  return f;
}

FieldPtr Field::function_field(std::int64_t p) {
  if (p < 2 || !is_prime(BigInt(p)))
    fail(errc::invalid_argument, "Field::function_field", "p must be prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::function_field;
  f->p_ = p;
  return f;
}

FieldPtr Field::function_subfield(std::int64_t p, int e) {
  if (p < 2 || !is_prime(BigInt(p)))
    fail(errc::invalid_argument, "Field::function_subfield", "p must be prime");
  if (e < 1 || e > 6)
    fail(errc::invalid_argument, "Field::function_subfield", "exponent out of range");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::function_subfield;
  f->p_ = p;
  f->sub_e_ = e;
  return f;
}

// --- structure ----------------------------------------------------------------

BigInt Field::characteristic() const {
  switch (kind_) {
    case FieldKind::rationals:
    case FieldKind::number_field: return 0;
    default: return p_;
  }
}

bool Field::is_finite() const {
  return kind_ == FieldKind::prime_field || kind_ == FieldKind::finite_field;
}

std::optional<BigInt> Field::order() const {
  if (!is_finite()) return std::nullopt;
  return big_pow(BigInt(p_), static_cast<unsigned>(deg_));
}

bool Field::same(const Field& o) const {
  return kind_ == o.kind_ && p_ == o.p_ && deg_ == o.deg_ && sub_e_ == o.sub_e_ &&
         modulus_ == o.modulus_ && minpoly_ == o.minpoly_;
}

void Field::check_parent(const FieldElem& a, const char* op) const {
  if (!a.valid() || !a.parent()->same(*this))
    fail(errc::field_mismatch, op, "element does not belong to " + name());
}

// --- element factories --------------------------------------------------------

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(const BigInt& n) const {
  switch (kind_) {
    case FieldKind::prime_field: {
      BigInt r = n % p_;
      if (r < 0) r += p_;
      return FieldElem(shared_from_this(), static_cast<std::int64_t>(r));
    }
    case FieldKind::finite_field: {
      BigInt r = n % p_;
      if (r < 0) r += p_;
      FFCoeffs c;
      c.c.assign(deg_, 0);
      c.c[0] = static_cast<std::int64_t>(r);
      return FieldElem(shared_from_this(), std::move(c));
    }
    case FieldKind::rationals: return FieldElem(shared_from_this(), BigRat(n));
    case FieldKind::number_field: {
      NFCoeffs c;
      c.c.assign(deg_, BigRat(0));
      c.c[0] = BigRat(n);
      return FieldElem(shared_from_this(), std::move(c));
    }
    case FieldKind::function_field:
    case FieldKind::function_subfield: {
      BigInt r = n % p_;
      if (r < 0) r += p_;
      std::int64_t v = static_cast<std::int64_t>(r);
      FuncRat fr;
      if (v != 0) fr.num = {v};
      fr.den = {1};
      return FieldElem(shared_from_this(), std::move(fr));
    }
  }
  fail(errc::invalid_argument, "Field::from_int", "unreachable");
}

FieldElem Field::from_rational(const BigRat& q) const {
  switch (kind_) {
    case FieldKind::rationals: return FieldElem(shared_from_this(), q);
    case FieldKind::number_field: {
      NFCoeffs c;
      c.c.assign(deg_, BigRat(0));
      c.c[0] = q;
      return FieldElem(shared_from_this(), std::move(c));
    }
    default:
      if (is_integer(q)) return from_int(num(q));
      // q = a/b with b invertible mod p
      return div(from_int(num(q)), from_int(den(q)));
  }
}

FieldElem Field::generator() const {
  switch (kind_) {
    case FieldKind::prime_field:
    case FieldKind::rationals: return one();
    case FieldKind::finite_field: {
      FFCoeffs c;
      c.c.assign(deg_, 0);
      c.c[1] = 1;
      return FieldElem(shared_from_this(), std::move(c));
    }
    case FieldKind::number_field: {
      NFCoeffs c;
      c.c.assign(deg_, BigRat(0));
      c.c[1] = BigRat(1);
      return FieldElem(shared_from_this(), std::move(c));
    }
    case FieldKind::function_field:
    case FieldKind::function_subfield:
      return FieldElem(shared_from_this(), FuncRat{{0, 1}, {1}});
  }
  fail(errc::invalid_argument, "Field::generator", "unreachable");
}

// --- predicates ----------------------------------------------------------------

bool Field::is_zero(const FieldElem& a) const {
  check_parent(a, "Field::is_zero");
  switch (kind_) {
    case FieldKind::prime_field: return std::get<std::int64_t>(a.payload()) == 0;
    case FieldKind::finite_field: {
      const auto& c = std::get<FFCoeffs>(a.payload()).c;
      return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
    }
    case FieldKind::rationals: return std::get<BigRat>(a.payload()) == 0;
    case FieldKind::number_field: {
      const auto& c = std::get<NFCoeffs>(a.payload()).c;
      return std::all_of(c.begin(), c.end(), [](const BigRat& x) { return x == 0; });
    }
    default: return std::get<FuncRat>(a.payload()).num.empty();
  }
}

bool Field::is_one(const FieldElem& a) const { return eq(a, one()); }

bool Field::eq(const FieldElem& a, const FieldElem& b) const { return compare(a, b) == 0; }

int Field::compare(const FieldElem& a, const FieldElem& b) const {
  check_parent(a, "Field::compare");
  check_parent(b, "Field::compare");
  switch (kind_) {
    case FieldKind::prime_field: {
      auto x = std::get<std::int64_t>(a.payload()), y = std::get<std::int64_t>(b.payload());
      return x == y ? 0 : (x < y ? -1 : 1);
    }
    case FieldKind::finite_field: {
      // order by enumeration index (little-endian digits)
      const auto& x = std::get<FFCoeffs>(a.payload()).c;
      const auto& y = std::get<FFCoeffs>(b.payload()).c;
      for (int i = deg_ - 1; i >= 0; --i)
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
      return 0;
    }
    case FieldKind::rationals: {
      const auto& x = std::get<BigRat>(a.payload());
      const auto& y = std::get<BigRat>(b.payload());
      return x == y ? 0 : (x < y ? -1 : 1);
    }
    case FieldKind::number_field:
      return compare_ratvec(std::get<NFCoeffs>(a.payload()).c, std::get<NFCoeffs>(b.payload()).c);
    default: {
      const auto& x = std::get<FuncRat>(a.payload());
      const auto& y = std::get<FuncRat>(b.payload());
      if (int c = compare_vec(x.den, y.den)) return c;
      return compare_vec(x.num, y.num);
    }
  }
}

// --- arithmetic ------------------------------------------------------------------

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  check_parent(a, "Field::add");
  check_parent(b, "Field::add");
  switch (kind_) {
    case FieldKind::prime_field:
      return FieldElem(shared_from_this(),
                       (std::get<std::int64_t>(a.payload()) + std::get<std::int64_t>(b.payload())) % p_);
    case FieldKind::finite_field: {
      FFCoeffs r = std::get<FFCoeffs>(a.payload());
      const auto& y = std::get<FFCoeffs>(b.payload()).c;
      for (int i = 0; i < deg_; ++i) r.c[i] = (r.c[i] + y[i]) % p_;
      return FieldElem(shared_from_this(), std::move(r));
    }
    case FieldKind::rationals:
      return FieldElem(shared_from_this(), std::get<BigRat>(a.payload()) + std::get<BigRat>(b.payload()));
    case FieldKind::number_field: {
      NFCoeffs r = std::get<NFCoeffs>(a.payload());
      const auto& y = std::get<NFCoeffs>(b.payload()).c;
      for (int i = 0; i < deg_; ++i) r.c[i] += y[i];
      return FieldElem(shared_from_this(), std::move(r));
    }
    default: {
      const auto& x = std::get<FuncRat>(a.payload());
      const auto& y = std::get<FuncRat>(b.payload());
      gfp::Vec n = gfp::add(gfp::mul(x.num, y.den, p_), gfp::mul(y.num, x.den, p_), p_);
      gfp::Vec d = gfp::mul(x.den, y.den, p_);
      return FieldElem(shared_from_this(), reduce_funcrat(std::move(n), std::move(d), p_));
    }
  }
  fail(errc::invalid_argument, "Field::add", "unreachable");
}

FieldElem Field::neg(const FieldElem& a) const {
  check_parent(a, "Field::neg");
  switch (kind_) {
    case FieldKind::prime_field:
      return FieldElem(shared_from_this(), (p_ - std::get<std::int64_t>(a.payload())) % p_);
    case FieldKind::finite_field: {
      FFCoeffs r = std::get<FFCoeffs>(a.payload());
      for (auto& c : r.c) c = (p_ - c) % p_;
      return FieldElem(shared_from_this(), std::move(r));
    }
    case FieldKind::rationals:
      return FieldElem(shared_from_this(), -std::get<BigRat>(a.payload()));
    case FieldKind::number_field: {
      NFCoeffs r = std::get<NFCoeffs>(a.payload());
      for (auto& c : r.c) c = -c;
      return FieldElem(shared_from_this(), std::move(r));
    }
    default: {
      FuncRat r = std::get<FuncRat>(a.payload());
      r.num = gfp::scale(r.num, p_ - 1, p_);
      return FieldElem(shared_from_this(), std::move(r));
    }
  }
  fail(errc::invalid_argument, "Field::neg", "unreachable");
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  check_parent(a, "Field::mul");
  check_parent(b, "Field::mul");
  switch (kind_) {
    case FieldKind::prime_field:
      return FieldElem(shared_from_this(),
                       (std::get<std::int64_t>(a.payload()) * std::get<std::int64_t>(b.payload())) % p_);
    case FieldKind::finite_field: {
      gfp::Vec prod = gfp::mul(std::get<FFCoeffs>(a.payload()).c, std::get<FFCoeffs>(b.payload()).c, p_);
      prod = gfp::mod(prod, modulus_, p_);
      prod.resize(deg_, 0);
      return FieldElem(shared_from_this(), FFCoeffs{std::move(prod)});
    }
    case FieldKind::rationals:
      return FieldElem(shared_from_this(), std::get<BigRat>(a.payload()) * std::get<BigRat>(b.payload()));
    case FieldKind::number_field: {
      QVec prod = qmul(std::get<NFCoeffs>(a.payload()).c, std::get<NFCoeffs>(b.payload()).c);
      prod = qdivmod(prod, minpoly_).second;
      prod.resize(deg_, BigRat(0));
      return FieldElem(shared_from_this(), NFCoeffs{std::move(prod)});
    }
    default: {
      const auto& x = std::get<FuncRat>(a.payload());
      const auto& y = std::get<FuncRat>(b.payload());
      return FieldElem(shared_from_this(),
                       reduce_funcrat(gfp::mul(x.num, y.num, p_), gfp::mul(x.den, y.den, p_), p_));
    }
  }
  fail(errc::invalid_argument, "Field::mul", "unreachable");
}

FieldElem Field::inv(const FieldElem& a) const {
  check_parent(a, "Field::inv");
  if (is_zero(a)) fail(errc::invalid_argument, "Field::inv", "division by zero");
  switch (kind_) {
    case FieldKind::prime_field:
      return FieldElem(shared_from_this(), gfp::inv_mod(std::get<std::int64_t>(a.payload()), p_));
    case FieldKind::finite_field: {
      // extended euclid in GF(p)[y] against the modulus
      gfp::Vec r0 = std::get<FFCoeffs>(a.payload()).c, r1 = modulus_;
      gfp::trim(r0);
      gfp::Vec s0{1}, s1{};
      while (gfp::deg(r1) >= 0) {
        auto [q, r] = gfp::divmod(r0, r1, p_);
        gfp::Vec qs = gfp::mul(q, s1, p_);
        gfp::Vec snew = gfp::sub(s0, qs, p_);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(snew);
      }
      // r0 = gcd = nonzero constant; scale s0 by its inverse
      gfp::Vec out = gfp::scale(s0, gfp::inv_mod(r0[0], p_), p_);
      out.resize(deg_, 0);
      return FieldElem(shared_from_this(), FFCoeffs{std::move(out)});
    }
    case FieldKind::rationals:
      return FieldElem(shared_from_this(), BigRat(1) / std::get<BigRat>(a.payload()));
    case FieldKind::number_field: {
      QVec av = std::get<NFCoeffs>(a.payload()).c;
      qtrim(av);
      auto [g, s] = qhalf_egcd(av, minpoly_);
      // g is a nonzero constant since minpoly is irreducible
      QVec out(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] / g[0];
      out.resize(deg_, BigRat(0));
      return FieldElem(shared_from_this(), NFCoeffs{std::move(out)});
    }
    default: {
      const auto& x = std::get<FuncRat>(a.payload());
      return FieldElem(shared_from_this(), reduce_funcrat(x.den, x.num, p_));
    }
  }
  fail(errc::invalid_argument, "Field::inv", "unreachable");
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

FieldElem Field::pow(const FieldElem& a, const BigInt& e) const {
  check_parent(a, "Field::pow");
  if (e < 0) return pow(inv(a), -e);
  FieldElem base = a, r = one();
  BigInt k = e;
  while (k > 0) {
    if ((k & 1) != 0) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

// --- enumeration -----------------------------------------------------------------

std::vector<FieldElem> Field::enumerate() const {
  auto n = order();
  if (!n) fail(errc::search_space_too_large, "Field::enumerate", "field is infinite");
  if (*n > 1 << 20) fail(errc::search_space_too_large, "Field::enumerate", "field too large");
  std::vector<FieldElem> out;
  std::uint64_t cnt = static_cast<std::uint64_t>(*n);
  out.reserve(cnt);
  for (std::uint64_t i = 0; i < cnt; ++i) out.push_back(element_at(i));
  return out;
}

FieldElem Field::element_at(std::uint64_t index) const {
  switch (kind_) {
    case FieldKind::prime_field:
      return FieldElem(shared_from_this(), static_cast<std::int64_t>(index % p_));
    case FieldKind::finite_field: {
      FFCoeffs c;
      c.c.assign(deg_, 0);
      for (int i = 0; i < deg_; ++i) {
        c.c[i] = static_cast<std::int64_t>(index % p_);
        index /= p_;
      }
      return FieldElem(shared_from_this(), std::move(c));
    }
    default:
      fail(errc::search_space_too_large, "Field::element_at", "field is infinite");
  }
}

std::uint64_t Field::index_of(const FieldElem& a) const {
  check_parent(a, "Field::index_of");
  switch (kind_) {
    case FieldKind::prime_field:
      return static_cast<std::uint64_t>(std::get<std::int64_t>(a.payload()));
    case FieldKind::finite_field: {
      const auto& c = std::get<FFCoeffs>(a.payload()).c;
      std::uint64_t idx = 0, pw = 1;
      for (int i = 0; i < deg_; ++i) {
        idx += static_cast<std::uint64_t>(c[i]) * pw;
        pw *= static_cast<std::uint64_t>(p_);
      }
      return idx;
    }
    default:
      fail(errc::search_space_too_large, "Field::index_of", "field is infinite");
  }
}

// --- p-th roots ------------------------------------------------------------------

std::optional<FieldElem> Field::pth_root(const FieldElem& a) const {
  check_parent(a, "Field::pth_root");
  switch (kind_) {
    case FieldKind::prime_field: return a;  // Frobenius is the identity on GF(p)
    case FieldKind::finite_field:
      return pow(a, big_pow(BigInt(p_), static_cast<unsigned>(deg_ - 1)));
    case FieldKind::function_field:
    case FieldKind::function_subfield: {
      const auto& x = std::get<FuncRat>(a.payload());
      gfp::Vec n, d;
      if (!gfp::is_power_substitution(x.num, static_cast<int>(p_), n)) return std::nullopt;
      if (!gfp::is_power_substitution(x.den, static_cast<int>(p_), d)) return std::nullopt;
      if (x.num.empty()) return zero();
      return FieldElem(shared_from_this(), reduce_funcrat(std::move(n), std::move(d), p_));
    }
    default: return std::nullopt;  // characteristic zero
  }
}

bool Field::is_pth_power(const FieldElem& a) const { return pth_root(a).has_value(); }

// --- io ----------------------------------------------------------------------------

namespace {

std::string gfp_poly_str(const gfp::Vec& v, const std::string& var) {
  int d = gfp::deg(v);
  if (d < 0) return "0";
  std::string out;
  for (int i = d; i >= 0; --i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(v[i]);
    } else {
      if (v[i] != 1) out += std::to_string(v[i]) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string rat_str(const BigRat& q) {
  std::ostringstream os;
  os << num(q);
  if (den(q) != 1) os << "/" << den(q);
  return os.str();
}

std::string qvec_poly_str(const QVec& v, const std::string& var) {
  int d = qdeg(v);
  if (d < 0) return "0";
  std::string out;
  for (int i = d; i >= 0; --i) {
    if (v[i] == 0) continue;
    BigRat c = v[i];
    std::string sep = out.empty() ? "" : (c > 0 ? "+" : "-");
    if (!out.empty() && c < 0) c = -c;
    out += sep;
    if (i == 0) {
      out += rat_str(c);
    } else {
      if (c != 1) out += rat_str(c) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace

std::string Field::generator_name() const {
  switch (kind_) {
    case FieldKind::finite_field: return "w";
    case FieldKind::number_field: return "th";
    case FieldKind::function_field: return "t";
    case FieldKind::function_subfield: return "u";
    default: return "";
  }
}

std::string Field::str(const FieldElem& a) const {
  check_parent(a, "Field::str");
  switch (kind_) {
    case FieldKind::prime_field: return std::to_string(std::get<std::int64_t>(a.payload()));
    case FieldKind::finite_field: {
      gfp::Vec v = std::get<FFCoeffs>(a.payload()).c;
      gfp::trim(v);
      return gfp_poly_str(v, "w");
    }
    case FieldKind::rationals: return rat_str(std::get<BigRat>(a.payload()));
    case FieldKind::number_field: {
      QVec v = std::get<NFCoeffs>(a.payload()).c;
      qtrim(v);
      return qvec_poly_str(v, "th");
    }
    default: {
      const auto& x = std::get<FuncRat>(a.payload());
      std::string var = generator_name();
      std::string n = gfp_poly_str(x.num, var);
      if (gfp::deg(x.den) == 0) return n;
      return "(" + n + ")/(" + gfp_poly_str(x.den, var) + ")";
    }
  }
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::prime_field: return "GF(" + std::to_string(p_) + ")";
    case FieldKind::finite_field: {
      BigInt q = big_pow(BigInt(p_), static_cast<unsigned>(deg_));
      std::ostringstream os;
      os << "GF(" << q << ")";
      return os.str();
    }
    case FieldKind::rationals: return "Q";
    case FieldKind::number_field: return "Q(th), " + qvec_poly_str(minpoly_, "th") + "=0";
    case FieldKind::function_field: return "F_" + std::to_string(p_) + "(t)";
    case FieldKind::function_subfield: {
      BigInt q = big_pow(BigInt(p_), static_cast<unsigned>(sub_e_));
      std::ostringstream os;
      os << "F_" << p_ << "(u), u=t^" << q;
      return os.str();
    }
  }
  return "?";
}

// --- free operators ------------------------------------------------------------------

FieldElem operator+(const FieldElem& a, const FieldElem& b) { return a.parent()->add(a, b); }
FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a.parent()->sub(a, b); }
FieldElem operator*(const FieldElem& a, const FieldElem& b) { return a.parent()->mul(a, b); }
FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a.parent()->div(a, b); }
FieldElem operator-(const FieldElem& a) { return a.parent()->neg(a); }
bool operator==(const FieldElem& a, const FieldElem& b) { return a.parent()->eq(a, b); }
bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

}  // namespace composites
