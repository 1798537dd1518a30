#include "composites/composite.hpp"

#include <algorithm>

#include "composites/citations.hpp"

namespace composites {

const char* tag_name(IrreducibleTag t) {
  switch (t) {
    case IrreducibleTag::scaled_x: return "scaled-X";
    case IrreducibleTag::unit_constant_form: return "unit-constant-form";
    case IrreducibleTag::reducible: return "reducible";
    case IrreducibleTag::non_atom_divisible: return "non-atom-divisible";
  }
  return "?";
}

const std::vector<std::string> kPropertyNames = {
    "atomic", "accp", "bfd", "hfd", "idf", "ffd",
    "noetherian", "integrally_closed", "s_domain", "hilbert", "dedekind"};

// --- ring construction ---------------------------------------------------------

RingPtr CompositeRing::field_pair(PairPtr pair) {
  auto r = std::shared_ptr<CompositeRing>(new CompositeRing());
  r->kind_ = RingKind::field_field;
  r->big_ = pair->big();
  r->pair_ = std::move(pair);
  return r;
}

RingPtr CompositeRing::z_in_q() {
  auto r = std::shared_ptr<CompositeRing>(new CompositeRing());
  r->kind_ = RingKind::z_in_q;
  r->big_ = Field::rationals();
  return r;
}

RingPtr CompositeRing::z_localized(std::vector<std::int64_t> inverted_primes) {
  if (inverted_primes.empty())
    fail(errc::invalid_argument, "CompositeRing::z_localized",
         "at least one inverted prime is required");
  auto r = std::shared_ptr<CompositeRing>(new CompositeRing());
  r->kind_ = RingKind::z_localized;
  r->big_ = Field::rationals();
  std::sort(inverted_primes.begin(), inverted_primes.end());
  inverted_primes.erase(std::unique(inverted_primes.begin(), inverted_primes.end()),
                        inverted_primes.end());
  for (auto p : inverted_primes)
    if (!is_prime(BigInt(p)))
      fail(errc::invalid_argument, "CompositeRing::z_localized",
           std::to_string(p) + " is not prime");
  r->primes_ = std::move(inverted_primes);
  return r;
}

bool CompositeRing::same(const CompositeRing& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == RingKind::field_field)
    return pair_->small()->same(*o.pair_->small()) && pair_->big()->same(*o.pair_->big());
  return primes_ == o.primes_;
}

std::string CompositeRing::name() const {
  switch (kind_) {
    case RingKind::field_field:
      return pair_->small()->name() + " + X*" + pair_->big()->name() + "[X]";
    case RingKind::z_in_q: return "Z + X*Q[X]";
    case RingKind::z_localized: {
      std::string s = "Z + X*Z[";
      for (std::size_t i = 0; i < primes_.size(); ++i)
        s += (i ? ",1/" : "1/") + std::to_string(primes_[i]);
      return s + "][X]";
    }
  }
  return "?";
}

bool CompositeRing::denominator_allowed(const BigInt& d) const {
  if (kind_ == RingKind::z_in_q) return true;
  BigInt rest = big_abs(d);
  for (auto p : primes_)
    while (rest % p == 0) rest /= p;
  return rest == 1;
}

// --- membership ------------------------------------------------------------------

bool contains(const RingPtr& ring, const Poly& p) {
  ring->big()->check_parent(p.is_zero() ? ring->big()->zero() : p.coeff(0), "contains");
  if (!p.field()->same(*ring->big()))
    fail(errc::field_mismatch, "contains", "polynomial is not over the big component");
  switch (ring->kind()) {
    case RingKind::field_field:
      return p.is_zero() || ring->pair()->in_small(p.constant_term());
    case RingKind::z_in_q: {
      if (p.is_zero()) return true;
      return is_integer(std::get<BigRat>(p.constant_term().payload()));
    }
    case RingKind::z_localized: {
      if (p.is_zero()) return true;
      if (!is_integer(std::get<BigRat>(p.constant_term().payload()))) return false;
      for (int i = 1; i <= p.degree(); ++i)
        if (!ring->denominator_allowed(den(std::get<BigRat>(p.coeff(i).payload()))))
          return false;
      return true;
    }
  }
  return false;
}

CompositeElement make_element(const RingPtr& ring, const Poly& p) {
  if (!contains(ring, p))
    fail(errc::not_a_member, "make_element",
         p.str() + " is not a member of " + ring->name());
  return CompositeElement{ring, p};
}

bool is_zero(const CompositeElement& e) { return e.poly.is_zero(); }

bool is_unit(const CompositeElement& e) {
  const auto& ring = e.ring;
  if (e.poly.degree() != 0) return false;
  switch (ring->kind()) {
    case RingKind::field_field: return true;  // nonzero constant of K
    default: {
      const BigRat& c = std::get<BigRat>(e.poly.constant_term().payload());
      return c == 1 || c == -1;
    }
  }
}

std::string element_str(const CompositeElement& e) { return e.poly.str(); }

// --- enumeration and brute-force oracles -------------------------------------------

namespace {

void require_finite_search(const RingPtr& ring, const SearchOptions& opts, const char* op) {
  if (ring->kind() != RingKind::field_field)
    fail(errc::search_space_too_large, op, "exhaustive search needs a field-field ring");
  auto ord = ring->big()->order();
  if (!ord)
    fail(errc::search_space_too_large, op, "big field is infinite");
  if (*ord > opts.big_field_cap)
    fail(errc::search_space_too_large, op,
         "big field exceeds the search cap (" + std::to_string(opts.big_field_cap) + ")");
}

std::vector<FieldElem> small_image_elements(const RingPtr& ring) {
  std::vector<FieldElem> out;
  for (const auto& k : ring->pair()->small()->enumerate())
    out.push_back(ring->pair()->embed(k));
  return out;
}

}  // namespace

std::vector<CompositeElement> enumerate_elements(const RingPtr& ring, int degree_bound,
                                                 const SearchOptions& opts) {
  require_finite_search(ring, opts, "enumerate_elements");
  const auto& L = ring->big();
  auto consts = small_image_elements(ring);
  auto all = L->enumerate();
  std::vector<CompositeElement> out;
  for (int d = 0; d <= degree_bound; ++d) {
    // odometer over (c_0 in K-image, c_1..c_{d-1} in L, c_d in L*)
    std::vector<std::size_t> idx(static_cast<std::size_t>(d) + 1, 0);
    while (true) {
      std::vector<FieldElem> coeffs;
      coeffs.push_back(consts[idx[0]]);
      bool lead_ok = true;
      for (int i = 1; i <= d; ++i) {
        coeffs.push_back(all[idx[static_cast<std::size_t>(i)]]);
        if (i == d && L->is_zero(coeffs.back())) lead_ok = false;
      }
      if (d == 0 || lead_ok) {
        Poly p(L, coeffs);
        if (d == 0 && p.is_zero()) {
          if (idx[0] == 0) out.push_back(CompositeElement{ring, p});
        } else if (p.degree() == d) {
          out.push_back(CompositeElement{ring, p});
        }
      }
      // advance
      std::size_t pos = 0;
      while (pos < idx.size()) {
        std::size_t lim = pos == 0 ? consts.size() : all.size();
        if (++idx[pos] < lim) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
    }
  }
  return out;
}

bool brute_force_irreducible(const CompositeElement& e, const SearchOptions& opts) {
  const auto& ring = e.ring;
  require_finite_search(ring, opts, "brute_force_irreducible");
  if (is_zero(e) || is_unit(e))
    fail(errc::is_zero_or_unit, "brute_force_irreducible", "need a nonzero nonunit");
  int d = e.poly.degree();
  if (d == 0) return false;  // nonunit constants do not exist over a field pair
  for (int dd = 1; dd < d; ++dd) {
    for (const auto& cand : enumerate_elements(ring, dd, opts)) {
      if (cand.poly.degree() != dd) continue;
      auto [q, r] = divmod(e.poly, cand.poly);
      if (!r.is_zero() && q.is_zero()) continue;
      if (r.is_zero() && contains(ring, q)) return false;  // both cofactors nonconstant
    }
  }
  return true;
}

CompositeElement associate_normal_form(const CompositeElement& e) {
  const auto& ring = e.ring;
  if (ring->kind() != RingKind::field_field) {
    // normalize sign so the leading coefficient is positive
    if (e.poly.is_zero()) return e;
    const BigRat& lc = std::get<BigRat>(e.poly.leading().payload());
    if (lc < 0) return CompositeElement{ring, e.poly.scaled(ring->big()->from_int(-1))};
    return e;
  }
  const auto& L = ring->big();
  if (e.poly.is_zero()) return e;
  const FieldElem c = e.poly.constant_term();
  if (!L->is_zero(c))
    return CompositeElement{ring, e.poly.scaled(L->inv(c))};  // constant scaled to 1
  // constant-free: least K*-multiple in the fixed polynomial order
  Poly best = e.poly;
  for (const auto& k : ring->pair()->small()->enumerate()) {
    if (ring->pair()->small()->is_zero(k)) continue;
    Poly cand = e.poly.scaled(ring->pair()->embed(k));
    if (poly_compare(cand, best) < 0) best = cand;
  }
  return CompositeElement{ring, best};
}

// --- irreducibility ------------------------------------------------------------------

namespace {

// decision for Z-kind rings: constants split against the Q[X] factorization
IrreducibilityVerdict z_irreducible(const CompositeElement& e, std::uint64_t seed) {
  const auto& ring = e.ring;
  const auto& Q = ring->big();
  const Poly& f = e.poly;
  if (f.degree() == 0) {
    BigRat c = std::get<BigRat>(f.constant_term().payload());
    bool prime = is_integer(c) && is_prime(big_abs(num(c)));
    return {prime, prime ? IrreducibleTag::unit_constant_form : IrreducibleTag::reducible};
  }
  if (Q->is_zero(f.constant_term()))
    return {false, IrreducibleTag::non_atom_divisible};  // f = d*(f/d) forever

  BigInt a0 = num(std::get<BigRat>(f.constant_term().payload()));
  if (big_abs(a0) > 1000000)
    fail(errc::search_space_too_large, "is_irreducible_in_composite",
         "constant term too large to enumerate divisors");
  // e = a0 * prod g_j with g_j(0) = 1 (from the monic Q[X] factorization)
  auto fac = factor(f, seed);
  std::vector<Poly> gs;
  for (auto& [g, mult] : fac.factors) {
    Poly unitized = g.scaled(Q->inv(g.constant_term()));
    for (int i = 0; i < mult; ++i) gs.push_back(unitized);
  }
  // all divisors of |a0|, signed
  std::vector<BigInt> divisors;
  {
    auto pf = factor_integer(a0);
    divisors.push_back(1);
    for (auto& [p, k] : pf) {
      std::vector<BigInt> next;
      for (const auto& d : divisors) {
        BigInt pw = 1;
        for (int i = 0; i <= k; ++i) {
          next.push_back(d * pw);
          pw *= p;
        }
      }
      divisors = std::move(next);
    }
  }
  std::size_t r = gs.size();
  for (const auto& dv : divisors) {
    for (BigInt c1 : {dv, -dv}) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        Poly u = Poly::constant(Q, Q->from_int(c1));
        for (std::size_t j = 0; j < r; ++j)
          if (mask & (std::size_t{1} << j)) u = u * gs[j];
        if (!divides(u, f)) continue;
        Poly v = exact_div(f, u);
        if (!contains(ring, u) || !contains(ring, v)) continue;
        CompositeElement ue{ring, u}, ve{ring, v};
        if (is_unit(ue) || is_unit(ve)) continue;
        return {false, IrreducibleTag::reducible};
      }
    }
  }
  return {true, IrreducibleTag::unit_constant_form};
}

// field-field classification via the L[X] factorization: atoms are a*X with
// a in L*, or a*q with a in K*, q(0) = 1 irreducible in L[X]
struct FieldFieldSplit {
  FieldElem scale;            // c in L*: e = c * X^k * prod q_i, q_i(0) = 1
  int x_mult = 0;             // k
  std::vector<std::pair<Poly, int>> unit_constant_factors;  // the q_i, monic->unitized
};

FieldFieldSplit field_split(const CompositeElement& e, std::uint64_t seed) {
  const auto& L = e.ring->big();
  auto fac = factor(e.poly, seed);
  FieldFieldSplit out;
  out.scale = fac.unit;
  Poly x = Poly::x(L);
  for (auto& [g, mult] : fac.factors) {
    if (g == x) {
      out.x_mult = mult;
      continue;
    }
    FieldElem g0 = g.constant_term();
    // normalize constant term to 1; fold the constants into the scale
    out.scale = L->mul(out.scale, L->pow(g0, BigInt(mult)));
    out.unit_constant_factors.emplace_back(g.scaled(L->inv(g0)), mult);
  }
  return out;
}

}  // namespace

IrreducibilityVerdict is_irreducible_in_composite(const CompositeElement& e,
                                                  const SearchOptions& opts) {
  const auto& ring = e.ring;
  if (!contains(ring, e.poly))
    fail(errc::not_a_member, "is_irreducible_in_composite", "element is not in the ring");
  if (is_zero(e) || is_unit(e))
    fail(errc::is_zero_or_unit, "is_irreducible_in_composite", "need a nonzero nonunit");

  IrreducibilityVerdict verdict;
  if (ring->kind() != RingKind::field_field) {
    verdict = z_irreducible(e, opts.seed);
  } else {
    auto split = field_split(e, opts.seed);
    int total = split.x_mult;
    for (auto& [q, m] : split.unit_constant_factors) total += m;
    if (total == 1) {
      verdict.irreducible = true;
      verdict.tag = split.x_mult == 1 ? IrreducibleTag::scaled_x : IrreducibleTag::unit_constant_form;
    } else {
      verdict.irreducible = false;
      verdict.tag = IrreducibleTag::reducible;
    }
  }
  if (opts.cross_check && ring->kind() == RingKind::field_field) {
    bool brute = brute_force_irreducible(e, opts);
    if (brute != verdict.irreducible)
      fail(errc::invalid_argument, "is_irreducible_in_composite",
           "classifier disagrees with the exhaustive oracle on " + element_str(e));
  }
  return verdict;
}

// --- factorization --------------------------------------------------------------------

Factorization factor_atoms(const CompositeElement& e, std::uint64_t seed) {
  const auto& ring = e.ring;
  if (ring->kind() != RingKind::field_field)
    fail(errc::small_ring_not_a_field, "factor_atoms",
         std::string("atomic factorization refused: \"") + cite::P1a + "\"");
  if (!contains(ring, e.poly))
    fail(errc::not_a_member, "factor_atoms", "element is not in the ring");
  if (is_zero(e) || is_unit(e))
    fail(errc::is_zero_or_unit, "factor_atoms", "need a nonzero nonunit");

  const auto& L = ring->big();
  auto split = field_split(e, seed);
  Factorization out;
  out.unit = L->one();
  if (split.x_mult >= 1) {
    // fold the L* constant into the first scaled-X atom
    Poly cx(L, {L->zero(), split.scale});
    out.atoms.push_back(CompositeElement{ring, cx});
    for (int i = 1; i < split.x_mult; ++i)
      out.atoms.push_back(CompositeElement{ring, Poly::x(L)});
  } else {
    // the leading constant is the constant term, necessarily in K*
    out.unit = split.scale;
  }
  for (auto& [q, m] : split.unit_constant_factors)
    for (int i = 0; i < m; ++i) out.atoms.push_back(CompositeElement{ring, q});
  return out;
}

std::set<int> length_set(const CompositeElement& e, int search_bound, const SearchOptions& opts) {
  const auto& ring = e.ring;
  require_finite_search(ring, opts, "length_set");
  if (is_zero(e) || is_unit(e))
    fail(errc::is_zero_or_unit, "length_set", "need a nonzero nonunit");
  if (e.poly.degree() > opts.degree_bound)
    fail(errc::search_space_too_large, "length_set", "degree exceeds the search bound");

  std::map<std::string, std::set<int>> memo;
  // candidate atoms by degree, computed once
  std::map<int, std::vector<CompositeElement>> atoms_by_degree;
  for (int d = 1; d <= std::min(search_bound, e.poly.degree()); ++d)
    for (const auto& cand : enumerate_elements(ring, d, opts))
      if (cand.poly.degree() == d && !is_zero(cand) && !is_unit(cand) &&
          brute_force_irreducible(cand, opts))
        atoms_by_degree[d].push_back(cand);

  std::function<std::set<int>(const CompositeElement&)> lengths =
      [&](const CompositeElement& x) -> std::set<int> {
    if (is_unit(x)) return {0};
    std::string key = element_str(associate_normal_form(x));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    memo[key] = {};  // cycle guard; divisor degrees strictly decrease so none occur
    std::set<int> out;
    for (int d = 1; d <= std::min(search_bound, x.poly.degree()); ++d) {
      for (const auto& a : atoms_by_degree[d]) {
        auto [q, r] = divmod(x.poly, a.poly);
        if (!r.is_zero() || !contains(ring, q)) continue;
        for (int l : lengths(CompositeElement{ring, q})) out.insert(1 + l);
      }
    }
    memo[key] = out;
    return out;
  };
  return lengths(e);
}

std::vector<CompositeElement> irreducible_divisors(const CompositeElement& e,
                                                   const SearchOptions& opts) {
  const auto& ring = e.ring;
  require_finite_search(ring, opts, "irreducible_divisors");
  if (is_zero(e)) fail(errc::is_zero_or_unit, "irreducible_divisors", "element is zero");
  std::vector<CompositeElement> out;
  for (int d = 1; d <= e.poly.degree(); ++d) {
    for (const auto& cand : enumerate_elements(ring, d, opts)) {
      if (cand.poly.degree() != d) continue;
      auto [q, r] = divmod(e.poly, cand.poly);
      if (!r.is_zero() || !contains(ring, q)) continue;
      if (!brute_force_irreducible(cand, opts)) continue;
      CompositeElement nf = associate_normal_form(cand);
      bool fresh = true;
      for (const auto& seen : out)
        if (poly_compare(seen.poly, nf.poly) == 0) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(nf);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CompositeElement& a, const CompositeElement& b) {
              return poly_compare(a.poly, b.poly) < 0;
            });
  return out;
}

// --- ACCP failure chains -----------------------------------------------------------------

PrincipalChain accp_failure_chain(const RingPtr& ring, const CompositeElement& f,
                                  const BigInt& d, int steps) {
  if (ring->kind() == RingKind::field_field)
    fail(errc::small_ring_is_a_field, "accp_failure_chain",
         "the small component is a field; ACCP holds");
  if (!ring->same(*f.ring))
    fail(errc::ring_mismatch, "accp_failure_chain", "element belongs to a different ring");
  if (f.poly.is_zero() || !ring->big()->is_zero(f.poly.constant_term()))
    fail(errc::not_in_xb, "accp_failure_chain", "f must be a nonzero element of X*B[X]");
  if (d == 0 || d == 1 || d == -1)
    fail(errc::not_a_nonunit, "accp_failure_chain",
         "d must be a nonzero nonunit of the small component");

  PrincipalChain chain;
  chain.ratio = d;
  Poly cur = f.poly;
  const auto& Q = ring->big();
  FieldElem dinv = Q->inv(Q->from_int(d));
  chain.generators.push_back(make_element(ring, cur));
  for (int k = 1; k <= steps; ++k) {
    cur = cur.scaled(dinv);
    // strictness: previous = d * current with d a nonunit, and current in R
    chain.generators.push_back(make_element(ring, cur));
  }
  return chain;
}

// --- almost Bezout -----------------------------------------------------------------------

AlmostBezoutWitness almost_bezout_witness(const CompositeElement& f, const CompositeElement& g) {
  const auto& ring = f.ring;
  if (!ring->same(*g.ring))
    fail(errc::ring_mismatch, "almost_bezout_witness", "elements from different rings");
  if (ring->kind() != RingKind::field_field ||
      ring->pair()->small()->kind() != FieldKind::function_subfield)
    fail(errc::not_purely_inseparable_pair, "almost_bezout_witness",
         "ring must be built over F_p(t^(p^e)) inside F_p(t)");
  if (f.poly.is_zero() || g.poly.is_zero())
    fail(errc::invalid_argument, "almost_bezout_witness", "f and g must be nonzero");

  const auto& pair = ring->pair();
  const auto& L = ring->big();
  std::int64_t p = L->p();
  int e_cap = pair->small()->sub_exponent();

  auto least_power = [&](const Poly& poly) {
    int s = 0;
    for (int i = 0; i <= poly.degree(); ++i) {
      FieldElem c = poly.coeff(i);
      int si = 0;
      while (!pair->in_small(c)) {
        c = L->pow(c, BigInt(p));
        if (++si > e_cap)
          fail(errc::not_purely_inseparable_pair, "almost_bezout_witness",
               "coefficient power never lands in K");
      }
      s = std::max(s, si);
    }
    return s;
  };
  AlmostBezoutWitness out;
  out.n = std::max(least_power(f.poly), least_power(g.poly));
  unsigned pn = 1;
  for (int i = 0; i < out.n; ++i) pn *= static_cast<unsigned>(p);
  Poly F = poly_pow(f.poly, pn);
  Poly G = poly_pow(g.poly, pn);
  out.fpow = pair->retract_poly(F);
  out.gpow = pair->retract_poly(G);
  auto eg = gcd_extended(out.fpow, out.gpow);
  out.h = eg.g;
  out.s = eg.s;
  out.t = eg.t;
  // certify (F, G) K[X] = (h): h divides both, and s*F + t*G = h
  if (!divides(out.h, out.fpow) || !divides(out.h, out.gpow) ||
      out.s * out.fpow + out.t * out.gpow != out.h)
    fail(errc::invalid_argument, "almost_bezout_witness", "gcd certificate failed");
  return out;
}

// --- quotient classes ---------------------------------------------------------------------

namespace {

BigInt rat_floor(const BigRat& q) {
  BigInt n = num(q), d = den(q);
  BigInt fl = n / d;
  if (n < 0 && fl * d != n) fl -= 1;
  return fl;
}

}  // namespace

QuotientClass quotient_class(const RingPtr& ring, const Poly& p) {
  if (!p.field()->same(*ring->big()))
    fail(errc::field_mismatch, "quotient_class", "polynomial is not over the big component");
  QuotientClass out;
  switch (ring->kind()) {
    case RingKind::field_field: {
      const auto& pair = ring->pair();
      FieldElem c = p.is_zero() ? ring->big()->zero() : p.constant_term();
      if (pair->in_small(c)) {
        out.zero = true;
        out.rep = "0";
        return out;
      }
      // strip the K-component of the constant term
      auto coords = pair->to_coords(c);
      coords[0] = pair->small()->zero();
      FieldElem rep = pair->from_coords(coords);
      out.zero = false;
      out.rep = ring->big()->str(rep);
      return out;
    }
    case RingKind::z_in_q:
    case RingKind::z_localized: {
      BigRat c = p.is_zero() ? BigRat(0) : std::get<BigRat>(p.constant_term().payload());
      if (ring->kind() == RingKind::z_localized) {
        // ambient ring is Z_S[X]; all coefficients must live there
        for (int i = 0; i <= p.degree(); ++i)
          if (!ring->denominator_allowed(den(std::get<BigRat>(p.coeff(i).payload()))))
            fail(errc::not_a_member, "quotient_class",
                 "polynomial lies outside the ambient ring Z_S[X]");
      }
      BigRat frac = c - BigRat(rat_floor(c));
      out.zero = (frac == 0);
      std::ostringstream os;
      os << num(frac);
      if (den(frac) != 1) os << "/" << den(frac);
      out.rep = out.zero ? "0" : os.str();
      return out;
    }
  }
  fail(errc::invalid_argument, "quotient_class", "unreachable");
}

// --- property report ------------------------------------------------------------------------

namespace {

AssertedProperty asserted(Verdict v, const char* cite_str, std::string condition = "") {
  return AssertedProperty{v, cite_str, std::move(condition)};
}

void check_lattice(const PropertyReport& rep) {
  auto val = [&](const std::string& name) { return rep.entries.at(name).asserted.verdict; };
  auto implies = [&](const std::string& a, const std::string& b) {
    if (val(a) == Verdict::v_true && val(b) == Verdict::v_false)
      fail(errc::invalid_argument, "property_report",
           "implication " + a + " => " + b + " violated");
  };
  implies("ffd", "bfd");
  implies("hfd", "atomic");
  implies("bfd", "accp");
  implies("accp", "atomic");
  implies("ffd", "idf");
}

}  // namespace

PropertyReport property_report(const RingPtr& ring) {
  PropertyReport rep;
  rep.ring = ring;
  auto& E = rep.entries;
  switch (ring->kind()) {
    case RingKind::field_field: {
      const auto& pair = ring->pair();
      bool identity = pair->is_identity();
      bool coset_finite = unit_coset_index(pair).finite;
      E["atomic"].asserted = asserted(Verdict::v_true, cite::P1a);
      E["accp"].asserted = asserted(Verdict::v_true, cite::P1b);
      E["bfd"].asserted = asserted(Verdict::v_true, cite::P3);
      E["hfd"].asserted = asserted(Verdict::v_true, cite::P10);
      E["idf"].asserted = asserted(coset_finite ? Verdict::v_true : Verdict::v_false, cite::P5);
      E["ffd"].asserted = asserted(coset_finite ? Verdict::v_true : Verdict::v_false, cite::P7);
      E["noetherian"].asserted = asserted(Verdict::v_true, cite::NOETHERIAN);
      E["integrally_closed"].asserted =
          asserted(identity ? Verdict::v_true : Verdict::v_false, cite::P13);
      E["s_domain"].asserted =
          identity ? asserted(Verdict::v_true, cite::P8)
                   : asserted(Verdict::conditional, cite::P8,
                              "criterion covers D + X*D_S[X] shapes only");
      E["hilbert"].asserted =
          identity ? asserted(Verdict::v_true, cite::T9)
                   : asserted(Verdict::conditional, cite::T9,
                              "criterion covers D + X*D_S[X] shapes only");
      E["dedekind"].asserted = asserted(Verdict::v_true, cite::T_DEDEKIND);
      break;
    }
    case RingKind::z_in_q: {
      E["atomic"].asserted = asserted(Verdict::v_false, cite::P1a);
      E["accp"].asserted = asserted(Verdict::v_false, cite::P1b);
      E["bfd"].asserted = asserted(Verdict::v_false, cite::P3);
      E["hfd"].asserted = asserted(Verdict::v_false, cite::P10);
      E["idf"].asserted = asserted(Verdict::conditional, cite::P5,
                                   "criteria need a subfield or a quasilocal hypothesis");
      E["ffd"].asserted = asserted(Verdict::v_false, cite::P7);
      E["noetherian"].asserted = asserted(Verdict::v_false, cite::NON_NOETHERIAN);
      E["integrally_closed"].asserted = asserted(Verdict::v_true, cite::P13);
      E["s_domain"].asserted = asserted(Verdict::v_true, cite::P8);
      E["hilbert"].asserted = asserted(Verdict::v_true, cite::T9);
      E["dedekind"].asserted = asserted(Verdict::v_false, cite::NON_NOETHERIAN);
      break;
    }
    case RingKind::z_localized: {
      const char* shape_note = "criterion stated for D + X*L[X] with L a field";
      E["atomic"].asserted = asserted(Verdict::conditional, cite::P1a, shape_note);
      E["accp"].asserted = asserted(Verdict::conditional, cite::P1b, shape_note);
      E["bfd"].asserted = asserted(Verdict::conditional, cite::P3, shape_note);
      E["hfd"].asserted = asserted(Verdict::conditional, cite::P10, shape_note);
      E["idf"].asserted = asserted(Verdict::conditional, cite::P5, shape_note);
      E["ffd"].asserted = asserted(Verdict::conditional, cite::P7, shape_note);
      E["noetherian"].asserted = asserted(Verdict::v_false, cite::NON_NOETHERIAN);
      E["integrally_closed"].asserted = asserted(Verdict::v_true, cite::P13);
      E["s_domain"].asserted = asserted(Verdict::v_true, cite::P8);
      E["hilbert"].asserted = asserted(Verdict::v_true, cite::T9);
      E["dedekind"].asserted = asserted(Verdict::v_false, cite::NON_NOETHERIAN);
      break;
    }
  }
  check_lattice(rep);
  return rep;
}

}  // namespace composites
