#include "composites/factor.hpp"

#include <algorithm>
#include <map>

namespace composites {

namespace {

void push_factor(std::vector<std::pair<Poly, int>>& out, const Poly& f, int mult) {
  for (auto& [g, m] : out) {
    if (g == f) {
      m += mult;
      return;
    }
  }
  out.emplace_back(f, mult);
}

void sort_factors(std::vector<std::pair<Poly, int>>& out) {
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return poly_compare(a.first, b.first) < 0; });
}

// --- finite fields: squarefree / distinct-degree / equal-degree -------------

// p-th root of f = g(X^p): root has coefficients pth_root(coeff).
Poly ff_pth_root(const Poly& f) {
  const auto& F = f.field();
  std::int64_t p = F->p();
  std::vector<FieldElem> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
    c.push_back(*F->pth_root(f.coeff(i)));
  return Poly(F, std::move(c));
}

// monic squarefree decomposition over a finite field (Yun adapted to char p)
std::vector<std::pair<Poly, int>> ff_squarefree(const Poly& f_in) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = f_in;
  std::int64_t p = f.field()->p();
  int power = 1;
  while (f.degree() > 0) {
    Poly d = f.derivative();
    if (d.is_zero()) {
      // f = g(X^p); recurse on the p-th root with multiplicity scaled by p
      Poly root = ff_pth_root(f);
      auto inner = ff_squarefree(root);
      for (auto& [g, m] : inner) push_factor(out, g, m * static_cast<int>(p) * power);
      return out;
    }
    Poly c = poly_gcd(f, d);
    Poly w = exact_div(f, c);  // product of squarefree factors of mult not divisible by p
    int i = 1;
    while (w.degree() > 0) {
      Poly y = poly_gcd(w, c);
      Poly part = exact_div(w, y);
      if (part.degree() > 0) push_factor(out, part.monic(), i * power);
      w = y;
      c = exact_div(c, y);
      ++i;
    }
    // c now collects the part whose multiplicity is divisible by p
    f = c;
    if (f.degree() > 0) {
      Poly root = ff_pth_root(f);
      auto inner = ff_squarefree(root);
      for (auto& [g, m] : inner) push_factor(out, g, m * static_cast<int>(p) * power);
      return out;
    }
  }
  return out;
}

// distinct-degree: splits monic squarefree f into products of irreducibles
// of equal degree d, via gcd(f, X^(q^d) - X).
std::vector<std::pair<Poly, int>> ff_distinct_degree(const Poly& f_in) {
  const auto& F = f_in.field();
  BigInt q = *F->order();
  std::vector<std::pair<Poly, int>> out;  // (product, factor degree)
  Poly f = f_in;
  Poly h = Poly::x(F);
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = poly_pow_mod(h, q, f);
    Poly g = poly_gcd(f, h - Poly::x(F));
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = poly_mod(h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

// equal-degree splitting (Cantor–Zassenhaus), deterministic PRNG stream.
void ff_equal_degree(const Poly& f, int d, SplitMix64& rng, std::vector<Poly>& out) {
  const auto& F = f.field();
  int n = f.degree();
  if (n == d) {
    out.push_back(f.monic());
    return;
  }
  BigInt q = *F->order();
  std::uint64_t qu = static_cast<std::uint64_t>(q);
  while (true) {
    // random nonconstant polynomial of degree < n
    std::vector<FieldElem> c;
    for (int i = 0; i < n; ++i) c.push_back(F->element_at(rng.below(qu)));
    Poly r(F, std::move(c));
    if (r.degree() < 1) continue;
    Poly g = poly_gcd(f, r);
    if (g.degree() == 0) {
      if (F->p() == 2) {
        // trace map T(r) = r + r^2 + ... + r^(2^(kd-1)) mod f
        int kd = 0;
        BigInt qq = q;
        while (qq > 1) { qq >>= 1; ++kd; }
        Poly tr = poly_mod(r, f), term = poly_mod(r, f);
        for (int i = 1; i < kd * d; ++i) {
          term = poly_mod(term * term, f);
          tr = tr + term;
        }
        g = poly_gcd(f, tr);
      } else {
        BigInt e = (big_pow(q, static_cast<unsigned>(d)) - 1) / 2;
        Poly h = poly_pow_mod(r, e, f);
        g = poly_gcd(f, h - Poly::constant(F, F->one()));
      }
    }
    if (g.degree() > 0 && g.degree() < n) {
      ff_equal_degree(g, d, rng, out);
      ff_equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

PolyFactorization ff_factor(const Poly& a, std::uint64_t seed) {
  PolyFactorization result;
  result.seed = seed;
  result.unit = a.leading();
  SplitMix64 rng(seed);
  Poly f = a.monic();
  for (auto& [part, mult] : ff_squarefree(f)) {
    for (auto& [prod, d] : ff_distinct_degree(part)) {
      std::vector<Poly> irr;
      ff_equal_degree(prod, d, rng, irr);
      for (auto& g : irr) push_factor(result.factors, g, mult);
    }
  }
  sort_factors(result.factors);
  return result;
}

// --- rationals: content, mod-p reduction, Hensel lifting, recombination -----

// Z[x] polynomial as BigInt vector, index = exponent.
using ZVec = std::vector<BigInt>;

int zdeg(const ZVec& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

void ztrim(ZVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZVec zmul(const ZVec& a, const ZVec& b) {
  if (zdeg(a) < 0 || zdeg(b) < 0) return {};
  ZVec r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

BigInt zcontent(const ZVec& a) {
  BigInt g = 0;
  for (const auto& c : a) g = big_gcd(g, c);
  return g == 0 ? BigInt(1) : g;
}

BigInt mod_sym(BigInt x, const BigInt& m) {
  x %= m;
  if (x < 0) x += m;
  if (2 * x > m) x -= m;
  return x;
}

BigInt mod_pos(BigInt x, const BigInt& m) {
  x %= m;
  if (x < 0) x += m;
  return x;
}

ZVec zmod(const ZVec& a, const BigInt& m, bool symmetric) {
  ZVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = symmetric ? mod_sym(a[i], m) : mod_pos(a[i], m);
  ztrim(r);
  return r;
}

BigInt inv_mod_big(const BigInt& a, const BigInt& m) {
  BigInt t = 0, newt = 1, r = m, newr = mod_pos(a, m);
  while (newr != 0) {
    BigInt q = r / newr;
    BigInt tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  return mod_pos(t, m);
}

// divmod by a monic polynomial in (Z/m)[x]
std::pair<ZVec, ZVec> zdivmod_monic(const ZVec& a, const ZVec& b, const BigInt& m) {
  int db = zdeg(b);
  ZVec rem = a;
  ztrim(rem);
  int dr = zdeg(rem);
  if (dr < db) return {{}, rem};
  ZVec q(dr - db + 1, BigInt(0));
  while ((dr = zdeg(rem)) >= db) {
    BigInt c = mod_pos(rem[dr], m);
    int shift = dr - db;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) rem[i + shift] = mod_pos(rem[i + shift] - c * b[i], m);
  }
  ztrim(rem);
  return {q, rem};
}

// Quadratic Hensel: lift f = g*h (mod m) with s*g + t*h = 1 (mod m) to mod m^2.
// f, g, h monic; all vectors reduced mod the stated modulus.
struct HenselPair {
  ZVec g, h, s, t;
};

HenselPair hensel_step(const ZVec& f, const HenselPair& in, const BigInt& m) {
  BigInt m2 = m * m;
  auto mul2 = [&](const ZVec& a, const ZVec& b) { return zmod(zmul(a, b), m2, false); };
  auto add2 = [&](const ZVec& a, const ZVec& b) {
    ZVec r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = mod_pos((i < a.size() ? a[i] : BigInt(0)) + (i < b.size() ? b[i] : BigInt(0)), m2);
    ztrim(r);
    return r;
  };
  auto sub2 = [&](const ZVec& a, const ZVec& b) {
    ZVec r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = mod_pos((i < a.size() ? a[i] : BigInt(0)) - (i < b.size() ? b[i] : BigInt(0)), m2);
    ztrim(r);
    return r;
  };
  ZVec e = sub2(zmod(f, m2, false), mul2(in.g, in.h));
  auto [q, r] = zdivmod_monic(mul2(in.s, e), in.h, m2);
  ZVec g1 = add2(in.g, add2(mul2(in.t, e), mul2(q, in.g)));
  ZVec h1 = add2(in.h, r);
  // lift the Bezout pair
  ZVec one{BigInt(1)};
  ZVec b = sub2(add2(mul2(in.s, g1), mul2(in.t, h1)), one);
  auto [c, d] = zdivmod_monic(mul2(in.s, b), h1, m2);
  ZVec s1 = sub2(in.s, d);
  ZVec t1 = sub2(in.t, add2(mul2(in.t, b), mul2(c, g1)));
  return {g1, h1, s1, t1};
}

// Lift a factorization of monic f into r monic factors mod p to mod p^(2^k) >= bound.
std::vector<ZVec> hensel_lift_list(const ZVec& f, std::vector<ZVec> factors, std::int64_t p,
                                   const BigInt& bound, BigInt& modulus_out) {
  BigInt m(p);
  if (factors.size() == 1) {
    while (m < bound) m *= m;
    modulus_out = m;
    return {zmod(f, m, false)};
  }
  // split the list in half: f = G*H mod p
  std::size_t half = factors.size() / 2;
  ZVec G{BigInt(1)}, H{BigInt(1)};
  for (std::size_t i = 0; i < half; ++i) G = zmod(zmul(G, factors[i]), m, false);
  for (std::size_t i = half; i < factors.size(); ++i) H = zmod(zmul(H, factors[i]), m, false);
  // Bezout pair mod p via extended euclid in GF(p)
  auto Fp = Field::prime(p);
  auto toP = [&](const ZVec& v) {
    std::vector<BigInt> c(v.begin(), v.end());
    return Poly::from_ints(Fp, c);
  };
  auto toZ = [&](const Poly& v) {
    ZVec c;
    for (int i = 0; i <= v.degree(); ++i)
      c.push_back(BigInt(std::get<std::int64_t>(v.coeff(i).payload())));
    return c;
  };
  auto eg = gcd_extended(toP(G), toP(H));
  HenselPair hp{zmod(G, m, false), zmod(H, m, false), toZ(eg.s), toZ(eg.t)};
  while (m < bound) {
    hp = hensel_step(f, hp, m);
    m *= m;
  }
  BigInt sub_modulus;
  std::vector<ZVec> left(factors.begin(), factors.begin() + half);
  std::vector<ZVec> right(factors.begin() + half, factors.end());
  auto L = hensel_lift_list(hp.g, std::move(left), p, bound, sub_modulus);
  auto R = hensel_lift_list(hp.h, std::move(right), p, bound, sub_modulus);
  modulus_out = m;
  L.insert(L.end(), R.begin(), R.end());
  return L;
}

BigInt mignotte_bound(const ZVec& f) {
  // |coeff of any factor| <= 2^deg * sqrt(sum f_i^2) * |lc|; integer sqrt + margin
  BigInt sum = 0;
  for (const auto& c : f) sum += c * c;
  BigInt root = 1;
  while (root * root < sum) root <<= 1;
  BigInt b = (BigInt(1) << static_cast<unsigned>(zdeg(f) + 2)) * root * big_abs(f[zdeg(f)]);
  return 2 * b + 1;
}

// factor a primitive squarefree polynomial in Z[x], positive leading coeff
std::vector<ZVec> factor_squarefree_z(const ZVec& f_in) {
  ZVec f = f_in;
  int n = zdeg(f);
  if (n <= 0) return {};
  if (n == 1) return {f};
  // choose a prime keeping f squarefree with lc nonzero
  std::int64_t p = 0;
  for (std::int64_t cand : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                            67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131}) {
    if (f[n] % cand == 0) continue;
    auto Fp = Field::prime(cand);
    Poly fp = Poly::from_ints(Fp, f);
    if (fp.degree() != n) continue;
    if (poly_gcd(fp, fp.derivative()).degree() == 0) {
      p = cand;
      break;
    }
  }
  if (p == 0)
    fail(errc::unsupported_factorization, "factor_squarefree_z", "no suitable prime found");
  auto Fp = Field::prime(p);
  Poly fp = Poly::from_ints(Fp, f).monic();
  auto modular = ff_factor(fp, kDefaultSeed);
  std::vector<ZVec> mod_factors;
  for (auto& [g, m] : modular.factors) {
    ZVec v;
    for (int i = 0; i <= g.degree(); ++i)
      v.push_back(BigInt(std::get<std::int64_t>(g.coeff(i).payload())));
    mod_factors.push_back(std::move(v));
  }
  if (mod_factors.size() == 1) return {f};

  // lift against the monic image of lc*scaled f: work with monic f* = lc^(n-1) f(x/lc)
  // Simpler route: lift factors of monic (f / lc mod p^k) and recombine with lc handling.
  BigInt lc = f[n];
  BigInt bound = mignotte_bound(f) * big_abs(lc) * 2;
  // lift the factorization of the monic image g = lc^{-1} f mod p^k
  BigInt modulus(p);
  while (modulus < bound) modulus *= modulus;
  BigInt lcinv = inv_mod_big(lc, modulus);
  ZVec g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = mod_pos(f[i] * lcinv, modulus);
  BigInt modulus_check;
  auto lifted = hensel_lift_list(g, mod_factors, p, bound, modulus_check);

  // recombination over subsets
  std::vector<ZVec> result;
  std::vector<int> alive(lifted.size(), 1);
  ZVec remaining = f;
  int r = static_cast<int>(lifted.size());
  for (int take = 1; take <= r; ++take) {
    // iterate subsets of size `take` over alive indices
    std::vector<int> idx;
    for (int i = 0; i < r; ++i)
      if (alive[i]) idx.push_back(i);
    if (static_cast<int>(idx.size()) < take) continue;
    std::vector<int> comb(take);
    for (int i = 0; i < take; ++i) comb[i] = i;
    bool restart = false;
    while (!restart) {
      // candidate = lc * prod(lifted[comb]) mod modulus, symmetric range
      ZVec cand{mod_pos(remaining[zdeg(remaining)], modulus)};
      for (int i = 0; i < take; ++i) cand = zmod(zmul(cand, lifted[idx[comb[i]]]), modulus, false);
      cand = zmod(cand, modulus, true);
      BigInt cc = zcontent(cand);
      ZVec prim(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) prim[i] = cand[i] / cc;
      // trial divide remaining by prim in Z[x]
      bool ok = zdeg(prim) >= 1;
      if (ok) {
        // division in Q[x] then integrality check
        auto QF = Field::rationals();
        Poly A = Poly::from_ints(QF, remaining), B = Poly::from_ints(QF, prim);
        auto [q, rem] = divmod(A, B);
        if (!rem.is_zero()) {
          ok = false;
        } else {
          ZVec qz;
          bool integral = true;
          for (int i = 0; i <= q.degree(); ++i) {
            BigRat c = std::get<BigRat>(q.coeff(i).payload());
            if (!is_integer(c)) {
              integral = false;
              break;
            }
            qz.push_back(num(c));
          }
          if (integral) {
            result.push_back(prim);
            for (int i = 0; i < take; ++i) alive[idx[comb[i]]] = 0;
            remaining = qz;
            restart = true;  // recompute alive set for this size
          } else {
            ok = false;
          }
        }
      }
      if (!restart) {
        // next combination
        int i = take - 1;
        while (i >= 0 && comb[i] == static_cast<int>(idx.size()) - take + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
    if (restart) { --take; continue; }  // retry same size after removal
    if (zdeg(remaining) == 0) break;
  }
  if (zdeg(remaining) >= 1) result.push_back(remaining);
  return result;
}

Poly zvec_to_poly(const FieldPtr& Q, const ZVec& v) {
  std::vector<BigInt> c(v.begin(), v.end());
  return Poly::from_ints(Q, c);
}

// squarefree factorization over a characteristic-zero field (Yun)
std::vector<std::pair<Poly, int>> char0_squarefree(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  Poly d = f.derivative();
  Poly a = poly_gcd(f, d);
  Poly b = exact_div(f, a);
  Poly c = exact_div(d, a);
  int i = 1;
  while (b.degree() > 0) {
    Poly e = c - b.derivative();
    Poly g = poly_gcd(b, e);
    if (g.degree() > 0) push_factor(out, g.monic(), i);
    b = exact_div(b, g);
    c = exact_div(e, g);
    ++i;
  }
  return out;
}

std::vector<Poly> q_factor_squarefree(const Poly& a) {
  const auto& Q = a.field();
  // clear denominators, make primitive with positive lc
  BigInt l = 1;
  for (int i = 0; i <= a.degree(); ++i) l = big_lcm(l, den(std::get<BigRat>(a.coeff(i).payload())));
  ZVec z(a.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) {
    BigRat c = std::get<BigRat>(a.coeff(i).payload()) * BigRat(l);
    z[i] = num(c);
  }
  BigInt cont = zcontent(z);
  for (auto& c : z) c /= cont;
  if (z[zdeg(z)] < 0)
    for (auto& c : z) c = -c;
  std::vector<Poly> out;
  for (auto& zf : factor_squarefree_z(z)) out.push_back(zvec_to_poly(Q, zf).monic());
  std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) { return poly_compare(x, y) < 0; });
  return out;
}

PolyFactorization q_factor(const Poly& a, std::uint64_t seed) {
  PolyFactorization result;
  result.seed = seed;
  result.unit = a.leading();
  Poly f = a.monic();
  for (auto& [part, mult] : char0_squarefree(f))
    for (auto& g : q_factor_squarefree(part)) push_factor(result.factors, g, mult);
  sort_factors(result.factors);
  return result;
}

// --- number fields: Trager's norm reduction ---------------------------------

// Res_y(m(y), f_y(x)) where f_y substitutes y for the generator in f's
// coefficients, computed by evaluation at rational points + interpolation.
Poly trager_norm(const Poly& f, const FieldPtr& L) {
  auto Q = Field::rationals();
  const auto& m = L->minpoly();
  int dm = static_cast<int>(m.size()) - 1;
  int df = f.degree();
  int dn = dm * df;
  // bivariate f as polynomials in y for each x-power: coeff_i(y)
  // evaluate resultant at x = x0: Res_y(m(y), f(x0)(y)) over Q via euclid
  auto resultant_q = [&](const Poly& A, const Poly& B) -> BigRat {
    // Res(A, B) for A, B over Q via the euclidean recurrence
    Poly a = A, b = B;
    BigRat res(1);
    while (true) {
      if (b.is_zero()) return BigRat(0);
      if (b.degree() == 0)
        return res * rat_pow(std::get<BigRat>(b.coeff(0).payload()),
                                                 static_cast<unsigned>(a.degree()));
      Poly r = poly_mod(a, b);
      BigRat lc = std::get<BigRat>(b.leading().payload());
      int da = a.degree(), db = b.degree(), dr = r.degree();
      BigRat sign = (da % 2 == 1 && db % 2 == 1) ? BigRat(-1) : BigRat(1);
      res *= sign * rat_pow(lc, static_cast<unsigned>(da - (dr < 0 ? 0 : dr)));
      a = b;
      b = r;
    }
  };
  Poly mq = Poly(Q, [&] {
    std::vector<FieldElem> c;
    for (const auto& q : m) c.push_back(Q->from_rational(q));
    return c;
  }());
  std::vector<BigRat> xs, ys;
  for (int k = 0; xs.size() < static_cast<std::size_t>(dn + 1); ++k) {
    BigRat x0(k);
    // B(y) = f with x := x0: coefficients of y
    std::vector<FieldElem> bc(static_cast<std::size_t>(dm), Q->zero());
    for (int i = 0; i <= df; ++i) {
      const auto& ci = std::get<NFCoeffs>(f.coeff(i).payload()).c;
      BigRat xpow = rat_pow(x0, static_cast<unsigned>(i));
      for (int j = 0; j < dm; ++j)
        bc[j] = Q->add(bc[j], Q->from_rational(ci[j] * xpow));
    }
    Poly B(Q, std::move(bc));
    xs.push_back(x0);
    ys.push_back(resultant_q(mq, B));
  }
  // Lagrange interpolation over Q
  Poly N = Poly::zero(Q);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly term = Poly::constant(Q, Q->from_rational(ys[i]));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      Poly lin(Q, {Q->from_rational(-xs[j]), Q->one()});
      term = term * lin.scaled(Q->from_rational(BigRat(1) / (xs[i] - xs[j])));
    }
    N = N + term;
  }
  return N;
}

// substitute x -> x - s*theta into f over L
Poly nf_shift(const Poly& f, const FieldPtr& L, int s) {
  Poly x = Poly::x(L);
  Poly shift = x - Poly::constant(L, L->mul(L->from_int(s), L->generator()));
  Poly out = Poly::zero(L);
  for (int i = f.degree(); i >= 0; --i)
    out = out * shift + Poly::constant(L, f.coeff(i));
  return out;
}

Poly lift_q_to_nf(const Poly& g, const FieldPtr& L) {
  std::vector<FieldElem> c;
  for (int i = 0; i <= g.degree(); ++i)
    c.push_back(L->from_rational(std::get<BigRat>(g.coeff(i).payload())));
  return Poly(L, std::move(c));
}

std::vector<Poly> nf_factor_squarefree(const Poly& f) {
  const auto& L = f.field();
  auto Q = Field::rationals();
  for (int s = 0; s <= 20; ++s) {
    Poly shifted = nf_shift(f, L, s);
    Poly N = trager_norm(shifted, L);
    if (poly_gcd(N, N.derivative()).degree() != 0) continue;  // need squarefree norm
    std::vector<Poly> nf_factors;
    for (auto& Ni : q_factor_squarefree(N.monic())) {
      Poly gi = poly_gcd(shifted, lift_q_to_nf(Ni, L));
      if (gi.degree() < 1) continue;
      // undo the shift: x -> x + s*theta
      Poly x = Poly::x(L);
      Poly unshift = x + Poly::constant(L, L->mul(L->from_int(s), L->generator()));
      Poly out = Poly::zero(L);
      for (int i = gi.degree(); i >= 0; --i)
        out = out * unshift + Poly::constant(L, gi.coeff(i));
      nf_factors.push_back(out.monic());
    }
    std::sort(nf_factors.begin(), nf_factors.end(),
              [](const Poly& x, const Poly& y) { return poly_compare(x, y) < 0; });
    return nf_factors;
  }
  fail(errc::unsupported_factorization, "factor", "no squarefree norm shift found");
}

PolyFactorization nf_factor(const Poly& a, std::uint64_t seed) {
  PolyFactorization result;
  result.seed = seed;
  result.unit = a.leading();
  Poly f = a.monic();
  for (auto& [part, mult] : char0_squarefree(f))
    for (auto& g : nf_factor_squarefree(part)) push_factor(result.factors, g, mult);
  sort_factors(result.factors);
  return result;
}

// --- function fields: squarefree split + perfect-power extraction only ------

PolyFactorization func_factor(const Poly& a, std::uint64_t seed) {
  const auto& F = a.field();
  std::int64_t p = F->p();
  PolyFactorization result;
  result.seed = seed;
  result.unit = a.leading();
  Poly f = a.monic();

  std::vector<std::pair<Poly, int>> stack{{f, 1}};
  while (!stack.empty()) {
    auto [g, mult] = stack.back();
    stack.pop_back();
    if (g.degree() == 0) continue;
    // peel X^k while the constant term vanishes
    while (g.degree() > 0 && F->is_zero(g.constant_term())) {
      push_factor(result.factors, Poly::x(F), mult);
      g = exact_div(g, Poly::x(F));
    }
    if (g.degree() == 0) continue;
    if (g.degree() == 1) {
      push_factor(result.factors, g, mult);
      continue;
    }
    Poly d = g.derivative();
    if (!d.is_zero()) {
      Poly c = poly_gcd(g, d);
      if (c.degree() > 0) {
        // proper squarefree split
        Poly w = exact_div(g, c);
        stack.emplace_back(w, mult);
        stack.emplace_back(c, mult);
        continue;
      }
      // squarefree of degree >= 2: only the quadratic nonsquare test is supported
      if (g.degree() == 2 && F->is_zero(g.coeff(1)) && p == 2) {
        // X^2 + c with c not a square is irreducible in characteristic 2
        if (!F->is_pth_power(g.coeff(0))) {
          push_factor(result.factors, g, mult);
          continue;
        }
        // c = b^2: X^2 + b^2 = (X + b)^2
        Poly lin(F, {*F->pth_root(g.coeff(0)), F->one()});
        push_factor(result.factors, lin, 2 * mult);
        continue;
      }
      fail(errc::unsupported_factorization, "factor",
           "function-field factorization supports squarefree splits and perfect-power roots only");
    }
    // d == 0: g = h(X^p); extract the p-th root when coefficients allow
    std::vector<FieldElem> rc;
    bool ok = true;
    for (int i = 0; i <= g.degree(); i += static_cast<int>(p)) {
      auto root = F->pth_root(g.coeff(i));
      if (!root) {
        ok = false;
        break;
      }
      rc.push_back(*root);
    }
    if (ok) {
      stack.emplace_back(Poly(F, std::move(rc)), mult * static_cast<int>(p));
      continue;
    }
    if (g.degree() == 2 && p == 2 && F->is_zero(g.coeff(1))) {
      // X^2 + c, c not a square: irreducible
      push_factor(result.factors, g, mult);
      continue;
    }
    fail(errc::unsupported_factorization, "factor",
         "function-field factorization supports squarefree splits and perfect-power roots only");
  }
  sort_factors(result.factors);
  return result;
}

}  // namespace

// --- public entry points ------------------------------------------------------

PolyFactorization factor(const Poly& a, std::uint64_t seed) {
  if (a.is_zero()) fail(errc::invalid_argument, "factor", "zero polynomial");
  const auto& F = a.field();
  if (a.degree() == 0) {
    PolyFactorization r;
    r.unit = a.coeff(0);
    r.seed = seed;
    return r;
  }
  switch (F->kind()) {
    case FieldKind::prime_field:
    case FieldKind::finite_field: return ff_factor(a, seed);
    case FieldKind::rationals:
      if (a.degree() > 8)
        fail(errc::unsupported_factorization, "factor", "degree cap over Q is 8");
      return q_factor(a, seed);
    case FieldKind::number_field:
      if (a.degree() > 8)
        fail(errc::unsupported_factorization, "factor", "degree cap over number fields is 8");
      return nf_factor(a, seed);
    case FieldKind::function_field:
    case FieldKind::function_subfield: return func_factor(a, seed);
  }
  fail(errc::unsupported_factorization, "factor", "unsupported field kind");
}

bool is_irreducible(const Poly& a, std::uint64_t seed) {
  if (a.is_zero() || a.degree() == 0) return false;
  if (a.degree() == 1) return true;
  const auto& F = a.field();
  if (F->kind() == FieldKind::function_field || F->kind() == FieldKind::function_subfield) {
    // supported patterns: derivative-based square split, quadratic square test
    Poly f = a.monic();
    Poly d = f.derivative();
    if (!d.is_zero() && poly_gcd(f, d).degree() > 0) return false;
    if (f.degree() == 2 && F->p() == 2 && F->is_zero(f.coeff(1)))
      return !F->is_pth_power(f.coeff(0));
    auto fac = func_factor(f, seed);  // may throw UnsupportedFactorization
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
  }
  auto fac = factor(a, seed);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

Poly squarefree_part(const Poly& a) {
  const auto& F = a.field();
  if (a.is_zero()) return a;
  Poly f = a.monic();
  if (F->characteristic() == 0) {
    Poly g = poly_gcd(f, f.derivative());
    return exact_div(f, g);
  }
  Poly out = Poly::constant(F, F->one());
  for (auto& [g, m] : ff_squarefree(f)) out = out * g;
  return out;
}

std::vector<Poly> factor_squarefree_rational(const Poly& a) { return q_factor_squarefree(a); }

bool rational_poly_irreducible(const std::vector<BigRat>& coeffs) {
  auto Q = Field::rationals();
  std::vector<FieldElem> c;
  for (const auto& q : coeffs) c.push_back(Q->from_rational(q));
  Poly f(Q, std::move(c));
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  if (poly_gcd(f, f.derivative()).degree() != 0) return false;
  return q_factor_squarefree(f.monic()).size() == 1;
}

}  // namespace composites
