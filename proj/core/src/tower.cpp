#include "composites/tower.hpp"

#include <algorithm>

#include "composites/factor.hpp"

namespace composites {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    default: return "unknown";
  }
}

std::string DegreeValue::str() const {
  if (!finite) return "infinite";
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string CosetIndex::str() const {
  if (!finite) return "infinite";
  std::ostringstream os;
  os << index;
  return os.str();
}

namespace {

enum class PairShape { identity, finite_finite, q_numberfield, func_sub };

PairShape classify(const Field& small, const Field& big, const char* op) {
  if (small.same(big)) return PairShape::identity;
  bool small_ff = small.kind() == FieldKind::prime_field || small.kind() == FieldKind::finite_field;
  bool big_ff = big.kind() == FieldKind::prime_field || big.kind() == FieldKind::finite_field;
  if (small_ff && big_ff) {
    if (small.p() != big.p())
      fail(errc::incompatible_fields, op, "characteristic mismatch");
    if (big.degree() % small.degree() != 0)
      fail(errc::incompatible_fields, op,
           std::to_string(small.degree()) + " does not divide " + std::to_string(big.degree()));
    return PairShape::finite_finite;
  }
  if (small.kind() == FieldKind::rationals && big.kind() == FieldKind::number_field)
    return PairShape::q_numberfield;
  if (small.kind() == FieldKind::function_subfield && big.kind() == FieldKind::function_field) {
    if (small.p() != big.p())
      fail(errc::incompatible_fields, op, "characteristic mismatch");
    return PairShape::func_sub;
  }
  fail(errc::incompatible_fields, op,
       "unsupported pair " + small.name() + " inside " + big.name());
}

PairShape shape_of(const ExtensionPair& pair) {
  return classify(*pair.small(), *pair.big(), "ExtensionPair");
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

gfp::Vec gfp_pow(const gfp::Vec& a, int e, std::int64_t p) {
  gfp::Vec r{1};
  for (int i = 0; i < e; ++i) r = gfp::mul(r, a, p);
  return r;
}

}  // namespace

PairPtr ExtensionPair::make(FieldPtr small, FieldPtr big) {
  PairShape shape = classify(*small, *big, "make_extension");
  auto pair = std::shared_ptr<ExtensionPair>(new ExtensionPair());
  pair->small_ = std::move(small);
  pair->big_ = std::move(big);
  pair->identity_ = (shape == PairShape::identity);

  if (shape == PairShape::finite_finite && !pair->identity_) {
    const auto& K = pair->small_;
    const auto& L = pair->big_;
    if (K->kind() == FieldKind::finite_field) {
      // image of K's generator: the least root of K's modulus in L
      Poly mk = Poly::from_ints(L, [&] {
        std::vector<BigInt> c;
        for (auto v : K->modulus()) c.push_back(BigInt(v));
        return c;
      }());
      bool found = false;
      for (const auto& cand : L->enumerate()) {
        if (L->is_zero(mk.evaluate(cand))) {
          pair->small_gen_image_ = cand;
          found = true;
          break;
        }
      }
      if (!found)
        fail(errc::incompatible_fields, "make_extension", "modulus of K has no root in L");
    } else {
      pair->small_gen_image_ = L->one();
    }
    // GF(p)-coordinate matrix of the K-basis {emb(y^j) * g^i}
    int n = L->degree(), m = K->degree(), r = n / m;
    auto Fp = Field::prime(L->p());
    Matrix M(Fp, n, n);
    FieldElem g = L->generator();
    FieldElem gi = L->one();
    for (int i = 0; i < r; ++i) {
      FieldElem kj = L->one();
      for (int j = 0; j < m; ++j) {
        FieldElem basis = L->mul(kj, gi);
        const auto& coords = std::get<FFCoeffs>(basis.payload()).c;
        for (int row = 0; row < n; ++row)
          M.at(row, static_cast<std::size_t>(i) * m + j) = Fp->from_int(coords[row]);
        kj = L->mul(kj, pair->small_gen_image_);
      }
      gi = L->mul(gi, g);
    }
    auto inv = inverse(M);
    if (!inv)
      fail(errc::incompatible_fields, "make_extension", "relative basis is degenerate");
    pair->coord_matrix_inv_ = std::move(*inv);
  }

  // spot-check: the embedding preserves 0, 1, + and * on a few elements
  const auto& K = pair->small_;
  std::vector<FieldElem> sample{K->zero(), K->one(), K->generator(),
                                K->add(K->generator(), K->one()),
                                K->mul(K->generator(), K->generator())};
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      if (!pair->big_->eq(pair->embed(K->add(a, b)),
                          pair->big_->add(pair->embed(a), pair->embed(b))) ||
          !pair->big_->eq(pair->embed(K->mul(a, b)),
                          pair->big_->mul(pair->embed(a), pair->embed(b))))
        fail(errc::incompatible_fields, "make_extension", "embedding is not a homomorphism");
    }
  }
  return pair;
}

DegreeValue ExtensionPair::degree() const {
  if (identity_) return {true, 1};
  switch (shape_of(*this)) {
    case PairShape::finite_finite: return {true, BigInt(big_->degree() / small_->degree())};
    case PairShape::q_numberfield: return {true, BigInt(big_->degree())};
    case PairShape::func_sub: return {true, big_pow(BigInt(big_->p()), static_cast<unsigned>(small_->sub_exponent()))};
    default: return {true, 1};
  }
}

int ExtensionPair::relative_degree_int() const {
  DegreeValue d = degree();
  return static_cast<int>(d.value);
}

FieldElem ExtensionPair::embed(const FieldElem& k) const {
  small_->check_parent(k, "ExtensionPair::embed");
  if (identity_) return k;
  switch (shape_of(*this)) {
    case PairShape::finite_finite: {
      if (small_->kind() == FieldKind::prime_field)
        return big_->from_int(std::get<std::int64_t>(k.payload()));
      const auto& coords = std::get<FFCoeffs>(k.payload()).c;
      FieldElem acc = big_->zero(), pw = big_->one();
      for (std::size_t i = 0; i < coords.size(); ++i) {
        acc = big_->add(acc, big_->mul(big_->from_int(coords[i]), pw));
        pw = big_->mul(pw, small_gen_image_);
      }
      return acc;
    }
    case PairShape::q_numberfield:
      return big_->from_rational(std::get<BigRat>(k.payload()));
    case PairShape::func_sub: {
      const auto& fr = std::get<FuncRat>(k.payload());
      std::int64_t q = ipow(big_->p(), small_->sub_exponent());
      FuncRat out{gfp::substitute_power(fr.num, static_cast<int>(q)),
                  gfp::substitute_power(fr.den, static_cast<int>(q))};
      // substitution preserves reducedness and monic denominators
      return FieldElem(big_, std::move(out));
    }
    default: return k;
  }
}

bool ExtensionPair::in_small(const FieldElem& l) const {
  big_->check_parent(l, "ExtensionPair::in_small");
  if (identity_) return true;
  switch (shape_of(*this)) {
    case PairShape::finite_finite: {
      auto coords = to_coords(l);
      for (std::size_t i = 1; i < coords.size(); ++i)
        if (!small_->is_zero(coords[i])) return false;
      return true;
    }
    case PairShape::q_numberfield: {
      const auto& c = std::get<NFCoeffs>(l.payload()).c;
      for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
      return true;
    }
    case PairShape::func_sub: {
      const auto& fr = std::get<FuncRat>(l.payload());
      std::int64_t q = ipow(big_->p(), small_->sub_exponent());
      gfp::Vec tmp;
      return gfp::is_power_substitution(fr.num, static_cast<int>(q), tmp) &&
             gfp::is_power_substitution(fr.den, static_cast<int>(q), tmp);
    }
    default: return true;
  }
}

FieldElem ExtensionPair::retract(const FieldElem& l) const {
  big_->check_parent(l, "ExtensionPair::retract");
  if (identity_) return l;
  if (!in_small(l))
    fail(errc::not_a_member, "ExtensionPair::retract", big_->str(l) + " is not in " + small_->name());
  switch (shape_of(*this)) {
    case PairShape::finite_finite: return to_coords(l)[0];
    case PairShape::q_numberfield:
      return small_->from_rational(std::get<NFCoeffs>(l.payload()).c[0]);
    case PairShape::func_sub: {
      const auto& fr = std::get<FuncRat>(l.payload());
      std::int64_t q = ipow(big_->p(), small_->sub_exponent());
      gfp::Vec n, d;
      gfp::is_power_substitution(fr.num, static_cast<int>(q), n);
      gfp::is_power_substitution(fr.den, static_cast<int>(q), d);
      return FieldElem(small_, FuncRat{std::move(n), std::move(d)});
    }
    default: return l;
  }
}

std::vector<FieldElem> ExtensionPair::to_coords(const FieldElem& l) const {
  big_->check_parent(l, "ExtensionPair::to_coords");
  if (identity_) return {l};
  switch (shape_of(*this)) {
    case PairShape::finite_finite: {
      int n = big_->degree(), m = small_->degree(), r = n / m;
      auto Fp = Field::prime(big_->p());
      std::vector<FieldElem> lvec;
      const auto& raw = std::get<FFCoeffs>(l.payload()).c;
      for (int i = 0; i < n; ++i) lvec.push_back(Fp->from_int(raw[i]));
      auto x = mat_vec(*coord_matrix_inv_, lvec);
      std::vector<FieldElem> out;
      for (int i = 0; i < r; ++i) {
        if (small_->kind() == FieldKind::prime_field) {
          out.push_back(small_->from_int(std::get<std::int64_t>(x[static_cast<std::size_t>(i) * m].payload())));
        } else {
          FFCoeffs c;
          c.c.resize(m);
          for (int j = 0; j < m; ++j)
            c.c[j] = std::get<std::int64_t>(x[static_cast<std::size_t>(i) * m + j].payload());
          out.push_back(FieldElem(small_, std::move(c)));
        }
      }
      return out;
    }
    case PairShape::q_numberfield: {
      const auto& c = std::get<NFCoeffs>(l.payload()).c;
      std::vector<FieldElem> out;
      for (const auto& q : c) out.push_back(small_->from_rational(q));
      return out;
    }
    case PairShape::func_sub: {
      // l = f/h; f*h^(q-1) / h^q with h^q in K; split the numerator by
      // exponent residue mod q
      std::int64_t p = big_->p();
      int q = static_cast<int>(ipow(p, small_->sub_exponent()));
      if (q > 64)
        fail(errc::search_space_too_large, "to_coords", "relative degree too large");
      const auto& fr = std::get<FuncRat>(l.payload());
      gfp::Vec hq = gfp_pow(fr.den, q, p);
      gfp::Vec numer = gfp::mul(fr.num, gfp_pow(fr.den, q - 1, p), p);
      gfp::Vec H;
      gfp::is_power_substitution(hq, q, H);
      std::vector<FieldElem> out;
      for (int i = 0; i < q; ++i) {
        gfp::Vec Ni;
        for (std::size_t j = i; j < numer.size(); j += q) Ni.push_back(numer[j]);
        gfp::trim(Ni);
        FieldElem coord(small_, FuncRat{{}, {1}});
        if (gfp::deg(Ni) >= 0) {
          // reduce Ni/H inside K
          FieldElem n_el(small_, FuncRat{Ni, {1}});
          FieldElem d_el(small_, FuncRat{H, {1}});
          coord = small_->div(n_el, d_el);
        }
        out.push_back(std::move(coord));
      }
      return out;
    }
    default: return {l};
  }
}

FieldElem ExtensionPair::from_coords(const std::vector<FieldElem>& coords) const {
  if (identity_) return coords.at(0);
  switch (shape_of(*this)) {
    case PairShape::finite_finite:
    case PairShape::q_numberfield: {
      FieldElem g = big_->generator(), pw = big_->one(), acc = big_->zero();
      for (const auto& c : coords) {
        acc = big_->add(acc, big_->mul(embed(c), pw));
        pw = big_->mul(pw, g);
      }
      return acc;
    }
    case PairShape::func_sub: {
      FieldElem t = big_->generator(), pw = big_->one(), acc = big_->zero();
      for (const auto& c : coords) {
        acc = big_->add(acc, big_->mul(embed(c), pw));
        pw = big_->mul(pw, t);
      }
      return acc;
    }
    default: return coords.at(0);
  }
}

Poly ExtensionPair::embed_poly(const Poly& over_small) const {
  std::vector<FieldElem> c;
  for (int i = 0; i <= over_small.degree(); ++i) c.push_back(embed(over_small.coeff(i)));
  return Poly(big_, std::move(c));
}

Poly ExtensionPair::retract_poly(const Poly& over_big) const {
  std::vector<FieldElem> c;
  for (int i = 0; i <= over_big.degree(); ++i) c.push_back(retract(over_big.coeff(i)));
  return Poly(small_, std::move(c));
}

// --- predicates ---------------------------------------------------------------

Predicates extension_predicates(const PairPtr& pair) {
  Predicates out;
  if (pair->is_identity()) {
    out.algebraic = out.separable = out.normal = out.galois = Tri::yes;
    out.purely_inseparable = Tri::yes;  // trivially, every element is already in K
    return out;
  }
  switch (shape_of(*pair)) {
    case PairShape::finite_finite:
      // x^(p^n) - x is squarefree and Frobenius orbits close up, so finite
      // extensions of finite fields are separable, normal and Galois.
      out.algebraic = out.separable = out.normal = out.galois = Tri::yes;
      out.purely_inseparable = Tri::no;
      break;
    case PairShape::q_numberfield: {
      out.algebraic = Tri::yes;
      out.separable = Tri::yes;  // characteristic zero
      out.purely_inseparable = Tri::no;
      const auto& L = pair->big();
      std::vector<FieldElem> mc;
      for (const auto& q : L->minpoly()) mc.push_back(L->from_rational(q));
      Poly m(L, std::move(mc));
      auto fac = factor(m);
      bool splits = true;
      for (auto& [g, mult] : fac.factors)
        if (g.degree() > 1) splits = false;
      out.normal = splits ? Tri::yes : Tri::no;
      out.galois = splits ? Tri::yes : Tri::no;
      break;
    }
    case PairShape::func_sub:
      out.algebraic = Tri::yes;
      out.separable = Tri::no;
      out.purely_inseparable = Tri::yes;
      // the minimal polynomial of any element is (X - a)^(p^s), which splits
      out.normal = Tri::yes;
      out.galois = Tri::no;
      break;
    default: break;
  }
  return out;
}

FieldElem Automorphism::apply(const FieldElem& x) const {
  return field->pow(x, big_pow(BigInt(field->p()), static_cast<unsigned>(frobenius_power)));
}

std::vector<Automorphism> automorphism_group(const PairPtr& pair) {
  const auto& L = pair->big();
  if (pair->is_identity()) return {Automorphism{0, L}};
  if (shape_of(*pair) != PairShape::finite_finite)
    fail(errc::unsupported_predicate, "automorphism_group",
         "only finite-field pairs have computable automorphism groups here");
  int m = pair->small()->degree();
  int r = pair->relative_degree_int();
  std::vector<Automorphism> group;
  for (int i = 0; i < r; ++i) group.push_back(Automorphism{m * i, L});
  // fixed-field check: an element is fixed by the whole group iff it lies in K
  for (const auto& l : L->enumerate()) {
    bool fixed = true;
    for (const auto& s : group)
      if (!L->eq(s.apply(l), l)) {
        fixed = false;
        break;
      }
    if (fixed != pair->in_small(l))
      fail(errc::unsupported_predicate, "automorphism_group", "fixed field is not K");
  }
  return group;
}

CosetIndex unit_coset_index(const PairPtr& pair) {
  CosetIndex out;
  if (pair->is_identity()) {
    out.finite = true;
    out.index = 1;
    out.representatives = {pair->big()->one()};
    return out;
  }
  if (shape_of(*pair) != PairShape::finite_finite) {
    out.finite = false;
    return out;
  }
  const auto& L = pair->big();
  out.finite = true;
  BigInt ln = *L->order() - 1, kn = *pair->small()->order() - 1;
  out.index = ln / kn;
  for (const auto& l : L->enumerate()) {
    if (L->is_zero(l)) continue;
    bool fresh = true;
    for (const auto& r : out.representatives)
      if (pair->in_small(L->div(l, r))) {
        fresh = false;
        break;
      }
    if (fresh) out.representatives.push_back(l);
  }
  return out;
}

Poly minimal_polynomial(const PairPtr& pair, const FieldElem& alpha) {
  const auto& K = pair->small();
  const auto& L = pair->big();
  L->check_parent(alpha, "minimal_polynomial");
  if (pair->is_identity()) {
    // x - a
    return Poly(K, {K->neg(alpha), K->one()});
  }
  if (shape_of(*pair) == PairShape::func_sub) {
    // purely inseparable: x^(p^s) - alpha^(p^s) for the least s with
    // alpha^(p^s) in K
    std::int64_t p = L->p();
    FieldElem pw = alpha;
    int s = 0;
    while (!pair->in_small(pw)) {
      pw = L->pow(pw, BigInt(p));
      ++s;
      if (s > pair->small()->sub_exponent())
        fail(errc::not_algebraic, "minimal_polynomial", "no p-power lands in K");
    }
    int d = static_cast<int>(ipow(p, s));
    Poly out = Poly::x(K);
    out = poly_pow(out, static_cast<unsigned>(d));
    return out - Poly::constant(K, pair->retract(pw));
  }
  // linear dependence of 1, alpha, alpha^2, ... in K-coordinates
  int r = pair->relative_degree_int();
  std::vector<std::vector<FieldElem>> powers;  // K-coords of alpha^i
  FieldElem cur = L->one();
  for (int d = 1; d <= r + 1; ++d) {
    powers.push_back(pair->to_coords(cur));
    cur = L->mul(cur, alpha);
    std::vector<FieldElem> target = pair->to_coords(cur);
    Matrix A(K, static_cast<std::size_t>(r), powers.size());
    for (std::size_t col = 0; col < powers.size(); ++col)
      for (int row = 0; row < r; ++row) A.at(row, col) = powers[col][row];
    auto sol = solve(A, target);
    if (sol) {
      std::vector<FieldElem> c;
      for (auto& v : *sol) c.push_back(K->neg(v));
      c.push_back(K->one());
      return Poly(K, std::move(c));
    }
  }
  fail(errc::not_algebraic, "minimal_polynomial", "no linear dependence found");
}

}  // namespace composites
