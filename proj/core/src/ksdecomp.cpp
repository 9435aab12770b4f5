#include "strmod/ksdecomp.hpp"

#include <deque>

#include "strmod/polynomials.hpp"

namespace strmod {

namespace {

// coordinates of each target in the span of the basis matrices (must lie in
// the span); columns of the result follow the targets
Matrix represent_in_basis(const FieldSpec& field, int d,
                          const std::vector<Matrix>& basis,
                          const std::vector<Matrix>& targets) {
  const int e = static_cast<int>(basis.size());
  const int t = static_cast<int>(targets.size());
  const std::size_t entries = static_cast<std::size_t>(d) * d * (e + t);
  if (entries <= (std::size_t{1} << 28)) {
    Matrix stacked(field, d * d, e + t);
    for (int k = 0; k < e; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          stacked.set(i * d + j, k, basis[static_cast<std::size_t>(k)].at(i, j));
    for (int k = 0; k < t; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          stacked.set(i * d + j, e + k,
                      targets[static_cast<std::size_t>(k)].at(i, j));
    const Echelon ech = rref(stacked);
    for (int c : ech.pivots)
      if (c >= e)
        throw Error("internal: endomorphism product outside the span");
    Matrix out(field, e, t);
    for (int r = 0; r < ech.rank(); ++r)
      for (int k = 0; k < t; ++k)
        out.set(ech.pivots[static_cast<std::size_t>(r)], k,
                ech.mat.at(r, e + k));
    return out;
  }
  // memory-lean fallback
  EchelonBasis eb(field, d * d, e + 1);
  for (const Matrix& b : basis)
    eb.insert(b.vec_row());
  Matrix out(field, e, t);
  for (int k = 0; k < t; ++k) {
    auto rep = eb.representation(targets[static_cast<std::size_t>(k)].vec_row());
    if (!rep)
      throw Error("internal: endomorphism product outside the span");
    for (int i = 0; i < e; ++i)
      out.set(i, k, (*rep)[static_cast<std::size_t>(i)]);
  }
  return out;
}

Matrix gram_matrix_trace(const FieldSpec& field,
                         const std::vector<Matrix>& basis) {
  const int e = static_cast<int>(basis.size());
  Matrix g(field, e, e);
  for (int i = 0; i < e; ++i)
    for (int j = i; j < e; ++j) {
      const Matrix& a = basis[static_cast<std::size_t>(i)];
      const Matrix& b = basis[static_cast<std::size_t>(j)];
      Scalar s = field.zero();
      for (int u = 0; u < a.rows(); ++u)
        for (int v = 0; v < a.cols(); ++v)
          s = field.add(s, field.mul(a.at(u, v), b.at(v, u)));
      g.set(i, j, s);
      g.set(j, i, s);
    }
  return g;
}

Matrix gram_regular(const FieldSpec& field, int e,
                    const std::vector<Scalar>& table) {
  auto at = [&](int i, int j, int k) -> const Scalar& {
    return table[(static_cast<std::size_t>(i) * e + j) * e + k];
  };
  // (L_i)_{k j} = coefficient of b_k in b_i b_j
  Matrix g(field, e, e);
  for (int i = 0; i < e; ++i)
    for (int j = i; j < e; ++j) {
      Scalar s = field.zero();
      for (int k = 0; k < e; ++k)
        for (int l = 0; l < e; ++l)
          s = field.add(s, field.mul(at(i, l, k), at(j, k, l)));
      g.set(i, j, s);
      g.set(j, i, s);
    }
  return g;
}

void check_radical_precondition(const FieldSpec& field, int e) {
  if (field.is_rationals())
    return;
  if (field.characteristic() <= e)
    throw UsageError(
        "characteristic too small for the trace-form radical: need p > " +
        std::to_string(e) + " = dim End; use a larger prime or Q");
}

// -- the semisimple quotient S = End/rad ----------------------------------------

struct SemisimpleQuotient {
  FieldSpec field = FieldSpec::rationals();
  int dim = 0;
  std::vector<Scalar> table; // (i * dim + j) * dim + k
  std::vector<Scalar> one;
  std::vector<Matrix> lift_mats; // chosen endomorphism lifts of the basis

  std::vector<Scalar> mul(const std::vector<Scalar>& a,
                          const std::vector<Scalar>& b) const {
    std::vector<Scalar> out(static_cast<std::size_t>(dim), field.zero());
    for (int i = 0; i < dim; ++i) {
      if (field.is_zero(a[static_cast<std::size_t>(i)]))
        continue;
      for (int j = 0; j < dim; ++j) {
        if (field.is_zero(b[static_cast<std::size_t>(j)]))
          continue;
        const Scalar c = field.mul(a[static_cast<std::size_t>(i)],
                                   b[static_cast<std::size_t>(j)]);
        for (int k = 0; k < dim; ++k) {
          const Scalar& t =
              table[(static_cast<std::size_t>(i) * dim + j) * dim + k];
          if (!field.is_zero(t))
            out[static_cast<std::size_t>(k)] =
                field.add(out[static_cast<std::size_t>(k)], field.mul(c, t));
        }
      }
    }
    return out;
  }

  bool commutative() const {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
          if (!(table[(static_cast<std::size_t>(i) * dim + j) * dim + k] ==
                table[(static_cast<std::size_t>(j) * dim + i) * dim + k]))
            return false;
    return true;
  }

  std::vector<Scalar> pow(std::vector<Scalar> base, std::uint64_t exp) const {
    std::vector<Scalar> acc = one;
    while (exp > 0) {
      if (exp & 1)
        acc = mul(acc, base);
      base = mul(base, base);
      exp >>= 1;
    }
    return acc;
  }

  Matrix coords_as_row(const std::vector<Scalar>& a) const {
    Matrix r(field, 1, dim);
    for (int i = 0; i < dim; ++i)
      r.set(0, i, a[static_cast<std::size_t>(i)]);
    return r;
  }

  std::vector<Scalar> min_poly_of(const std::vector<Scalar>& a) const {
    EchelonBasis eb(field, dim, dim + 2);
    std::vector<Scalar> p = one;
    for (int k = 0; k <= dim; ++k) {
      if (!eb.insert(coords_as_row(p))) {
        auto rep = eb.representation(coords_as_row(p));
        if (!rep)
          throw Error("internal: dependent power without representation");
        std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1,
                                   field.zero());
        for (int i = 0; i < k; ++i)
          coeffs[static_cast<std::size_t>(i)] =
              field.neg((*rep)[static_cast<std::size_t>(i)]);
        coeffs[static_cast<std::size_t>(k)] = field.one();
        return coeffs;
      }
      p = mul(p, a);
    }
    throw Error("internal: no power dependence in the quotient algebra");
  }

  std::vector<Scalar> eval_poly(const Poly& f,
                                const std::vector<Scalar>& a) const {
    std::vector<Scalar> acc(static_cast<std::size_t>(dim), field.zero());
    for (int k = f.degree(); k >= 0; --k) {
      acc = mul(acc, a);
      for (int i = 0; i < dim; ++i)
        acc[static_cast<std::size_t>(i)] =
            field.add(acc[static_cast<std::size_t>(i)],
                      field.mul(f.coeff[static_cast<std::size_t>(k)],
                                one[static_cast<std::size_t>(i)]));
    }
    return acc;
  }

  Matrix lift(const std::vector<Scalar>& a) const {
    Matrix out(field, lift_mats[0].rows(), lift_mats[0].cols());
    for (int i = 0; i < dim; ++i)
      if (!field.is_zero(a[static_cast<std::size_t>(i)]))
        out = out.add(
            lift_mats[static_cast<std::size_t>(i)].scaled(a[static_cast<std::size_t>(i)]));
    return out;
  }

  /// Matrix of (Frobenius - id) on S; prime fields only.
  Matrix frobenius_minus_id() const {
    const std::uint64_t p = static_cast<std::uint64_t>(field.characteristic());
    Matrix f(field, dim, dim);
    for (int k = 0; k < dim; ++k) {
      std::vector<Scalar> u(static_cast<std::size_t>(dim), field.zero());
      u[static_cast<std::size_t>(k)] = field.one();
      const std::vector<Scalar> up = pow(u, p);
      for (int i = 0; i < dim; ++i)
        f.set(i, k, up[static_cast<std::size_t>(i)]);
      f.set(k, k, field.sub(f.at(k, k), field.one()));
    }
    return f;
  }
};

SemisimpleQuotient build_quotient(const FieldSpec& field, int d,
                                  const std::vector<Matrix>& basis,
                                  const Matrix& rad_coords) {
  const int e = static_cast<int>(basis.size());
  const int r = rad_coords.cols();
  const int s = e - r;

  // complement of the radical inside the coordinate space
  EchelonBasis eb(field, e);
  for (int j = 0; j < r; ++j)
    eb.insert(rad_coords.col(j).transpose());
  Matrix comp(field, e, 0);
  for (int i = 0; i < e && comp.cols() < s; ++i) {
    Matrix u(field, e, 1);
    u.set_int(i, 0, 1);
    if (eb.insert(u.transpose()))
      comp = comp.hstack(u);
  }
  if (comp.cols() != s)
    throw Error("internal: radical complement has the wrong dimension");

  Matrix pmat = rad_coords.hstack(comp);
  const auto pinv = inverse(pmat);
  if (!pinv)
    throw Error("internal: radical basis change is singular");
  Matrix project(field, s, e);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < e; ++j)
      project.set(i, j, pinv->at(r + i, j));

  SemisimpleQuotient q;
  q.field = field;
  q.dim = s;
  for (int k = 0; k < s; ++k) {
    Matrix mk(field, d, d);
    for (int i = 0; i < e; ++i)
      if (!field.is_zero(comp.at(i, k)))
        mk = mk.add(basis[static_cast<std::size_t>(i)].scaled(comp.at(i, k)));
    q.lift_mats.push_back(std::move(mk));
  }

  // structure constants and the image of the identity
  std::vector<Matrix> targets;
  targets.push_back(Matrix::identity(field, d));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      targets.push_back(q.lift_mats[static_cast<std::size_t>(i)].mul(
          q.lift_mats[static_cast<std::size_t>(j)]));
  const Matrix coords_e = represent_in_basis(field, d, basis, targets);
  const Matrix coords_s = project.mul(coords_e);
  q.one.assign(static_cast<std::size_t>(s), field.zero());
  for (int i = 0; i < s; ++i)
    q.one[static_cast<std::size_t>(i)] = coords_s.at(i, 0);
  q.table.assign(static_cast<std::size_t>(s) * s * s, field.zero());
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < s; ++k)
        q.table[(static_cast<std::size_t>(i) * s + j) * s + k] =
            coords_s.at(k, 1 + i * s + j);
  return q;
}

// idempotent from a coprime factorization f = g h of the minimal polynomial
// of a: (u g)(a) with u g + v h = 1
std::optional<std::vector<Scalar>>
idempotent_from_split(const SemisimpleQuotient& s, const std::vector<Scalar>& a,
                      const Poly& g, const Poly& h) {
  const auto bez = ext_gcd(g, h);
  if (bez.g.degree() != 0)
    return std::nullopt; // factors were not coprime
  const Scalar c = bez.g.coeff[0];
  Poly ug = scale(mul(bez.u, g), s.field.inv(c));
  std::vector<Scalar> idem = s.eval_poly(ug, a);
  // nontrivial idempotent or bust
  const auto sq = s.mul(idem, idem);
  if (!(sq == idem))
    return std::nullopt;
  bool zero = true, unit = true;
  for (int i = 0; i < s.dim; ++i) {
    if (!s.field.is_zero(idem[static_cast<std::size_t>(i)]))
      zero = false;
    if (!(idem[static_cast<std::size_t>(i)] == s.one[static_cast<std::size_t>(i)]))
      unit = false;
  }
  if (zero || unit)
    return std::nullopt;
  return idem;
}

Matrix newton_idempotent(Matrix a, const FieldSpec& field) {
  const Scalar three = field.from_int(3), two = field.from_int(2);
  for (int it = 0; it < 64; ++it) {
    const Matrix sq = a.mul(a);
    if (sq == a)
      return a;
    const Matrix cube = sq.mul(a);
    a = sq.scaled(three).sub(cube.scaled(two));
  }
  throw Error("internal: idempotent lifting did not converge");
}

std::vector<Scalar> random_coords(const FieldSpec& field, int n, Rng& rng) {
  const std::uint64_t space =
      field.is_rationals() ? (std::uint64_t{1} << 20)
                           : static_cast<std::uint64_t>(field.characteristic());
  std::vector<Scalar> out(static_cast<std::size_t>(n), field.zero());
  for (auto& c : out)
    c = field.from_int(static_cast<std::int64_t>(rng.below(space)));
  return out;
}

Poly poly_from_coeffs(const FieldSpec& field, const std::vector<Scalar>& c) {
  return Poly(field, c);
}

} // namespace

std::vector<Scalar> EndoAlgebra::mul_coords(const std::vector<Scalar>& a,
                                            const std::vector<Scalar>& b) const {
  const FieldSpec& f = module.field();
  const int e = dim();
  std::vector<Scalar> out(static_cast<std::size_t>(e), f.zero());
  for (int i = 0; i < e; ++i) {
    if (f.is_zero(a[static_cast<std::size_t>(i)]))
      continue;
    for (int j = 0; j < e; ++j) {
      if (f.is_zero(b[static_cast<std::size_t>(j)]))
        continue;
      const Scalar c =
          f.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
      for (int k = 0; k < e; ++k) {
        const Scalar& t = table[(static_cast<std::size_t>(i) * e + j) * e + k];
        if (!f.is_zero(t))
          out[static_cast<std::size_t>(k)] =
              f.add(out[static_cast<std::size_t>(k)], f.mul(c, t));
      }
    }
  }
  return out;
}

EndoAlgebra endo_algebra(const ModuleRep& m) {
  const FieldSpec field = m.field();
  const int d = m.dim();
  HomSpace h = hom_basis(m, m);
  const int e = h.dim();
  EndoAlgebra out{m, std::move(h.basis), {}, {}};
  if (e == 0)
    return out;

  std::vector<Matrix> targets;
  targets.reserve(static_cast<std::size_t>(e) * e + 1);
  targets.push_back(Matrix::identity(field, d));
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j)
      targets.push_back(out.basis[static_cast<std::size_t>(i)].mul(
          out.basis[static_cast<std::size_t>(j)]));
  const Matrix coords = represent_in_basis(field, d, out.basis, targets);

  out.one.assign(static_cast<std::size_t>(e), field.zero());
  for (int i = 0; i < e; ++i)
    out.one[static_cast<std::size_t>(i)] = coords.at(i, 0);
  out.table.assign(static_cast<std::size_t>(e) * e * e, field.zero());
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j)
      for (int k = 0; k < e; ++k)
        out.table[(static_cast<std::size_t>(i) * e + j) * e + k] =
            coords.at(k, 1 + i * e + j);
  return out;
}

RadicalBasis radical_of_endo(const EndoAlgebra& e) {
  const FieldSpec field = e.module.field();
  const int dim_e = e.dim();
  check_radical_precondition(field, dim_e);
  const int d = e.module.dim();
  const bool matrix_trace_ok =
      field.is_rationals() || field.characteristic() > d;
  const Matrix gram = matrix_trace_ok
                          ? gram_matrix_trace(field, e.basis)
                          : gram_regular(field, dim_e, e.table);
  RadicalBasis out{kernel(gram), {}};
  for (int j = 0; j < out.coords.cols(); ++j) {
    Matrix mj(field, d, d);
    for (int i = 0; i < dim_e; ++i)
      if (!field.is_zero(out.coords.at(i, j)))
        mj = mj.add(e.basis[static_cast<std::size_t>(i)].scaled(out.coords.at(i, j)));
    out.matrices.push_back(std::move(mj));
  }
  return out;
}

std::optional<FittingSplit> fitting_split(const ModuleRep& m,
                                          const Matrix& endo) {
  const FieldSpec field = m.field();
  const int d = m.dim();
  if (endo.field() != field || endo.rows() != d || endo.cols() != d)
    throw UsageError("endomorphism shape mismatch");
  if (!(endo.mul(m.act_x()) == m.act_x().mul(endo)) ||
      !(endo.mul(m.act_y()) == m.act_y().mul(endo)))
    throw UsageError("matrix is not an endomorphism of the module");

  const Matrix psi = endo.pow(d);
  const Matrix ker = kernel(psi);
  const Matrix img = image(psi);
  if (ker.cols() == 0 || img.cols() == 0)
    return std::nullopt;
  if (ker.cols() + img.cols() != d)
    throw Error("internal: Fitting parts do not fill the space");
  const Matrix p = ker.hstack(img);
  const auto pinv = inverse(p);
  if (!pinv)
    throw Error("internal: Fitting base change is singular");

  const int k = ker.cols();
  Matrix xs[2] = {Matrix(field, k, k), Matrix(field, d - k, d - k)};
  Matrix ys[2] = {Matrix(field, k, k), Matrix(field, d - k, d - k)};
  for (int which = 0; which < 2; ++which) {
    const Matrix& act = which == 0 ? m.act_x() : m.act_y();
    const Matrix conj = pinv->mul(act.mul(p));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const bool bi = i >= k, bj = j >= k;
        if (bi != bj) {
          if (!field.is_zero(conj.at(i, j)))
            throw Error("internal: Fitting parts are not action-stable");
          continue;
        }
        Matrix& block = which == 0 ? xs[bi ? 1 : 0] : ys[bi ? 1 : 0];
        block.set(bi ? i - k : i, bj ? j - k : j, conj.at(i, j));
      }
  }
  return FittingSplit{ModuleRep::make(std::move(xs[0]), std::move(ys[0])),
                      ModuleRep::make(std::move(xs[1]), std::move(ys[1])), p};
}

IndecompResult is_indecomposable(const ModuleRep& m, Rng rng, int mc_budget) {
  if (mc_budget < 1)
    throw UsageError("Monte Carlo budget must be >= 1");
  if (m.dim() == 0)
    throw UsageError("the zero module is neither decomposable nor indecomposable");
  const FieldSpec field = m.field();
  const int d = m.dim();

  HomSpace endo = hom_basis(m, m);
  const int e = endo.dim();
  check_radical_precondition(field, e);

  Matrix rad_coords(field, e, 0);
  if (field.is_rationals() || field.characteristic() > d) {
    rad_coords = kernel(gram_matrix_trace(field, endo.basis));
  } else {
    // small characteristic: fall back to the regular representation
    const EndoAlgebra full = endo_algebra(m);
    rad_coords = kernel(gram_regular(field, e, full.table));
  }
  const SemisimpleQuotient s = build_quotient(field, d, endo.basis, rad_coords);

  IndecompResult res;
  if (s.dim == 1) {
    res.indecomposable = true;
    res.certificate = {Certificate::Kind::LocalEndo, 1, 0, 0};
    return res;
  }

  const bool comm = s.commutative();
  std::optional<std::vector<Scalar>> idem;

  if (!field.is_rationals() && comm) {
    // number of simple factors = fixed space of Frobenius
    const Matrix fixed = kernel(s.frobenius_minus_id());
    if (fixed.cols() == 1) {
      res.indecomposable = true; // S is a field
      res.certificate = {Certificate::Kind::LocalEndo, s.dim, 0, 0};
      return res;
    }
    // a Frobenius-fixed element outside the scalars has a squarefree minimal
    // polynomial with >= 2 roots in GF(p)
    for (int j = 0; j < fixed.cols() && !idem; ++j) {
      std::vector<Scalar> b(static_cast<std::size_t>(s.dim), field.zero());
      for (int i = 0; i < s.dim; ++i)
        b[static_cast<std::size_t>(i)] = fixed.at(i, j);
      const Poly f = poly_from_coeffs(field, s.min_poly_of(b));
      if (f.degree() < 2)
        continue;
      auto split = coprime_split(f, rng);
      if (!split)
        throw Error("internal: Frobenius-fixed element did not split");
      idem = idempotent_from_split(s, b, split->first, split->second);
    }
    if (!idem)
      throw Error("internal: no splitting element in the Frobenius space");
  } else {
    // random elements of S; any coprime factor pair of a minimal polynomial
    // yields an idempotent
    const int rounds = std::max(mc_budget, 32);
    for (int round = 0; round < rounds && !idem; ++round) {
      const std::vector<Scalar> a = random_coords(field, s.dim, rng);
      const Poly f = poly_from_coeffs(field, s.min_poly_of(a));
      if (f.degree() < 2)
        continue;
      auto split = coprime_split(f, rng);
      if (!split)
        continue;
      idem = idempotent_from_split(s, a, split->first, split->second);
    }
    if (!idem) {
      if (field.is_rationals())
        throw CertificationError(
            "cannot certify indecomposability over Q: End/rad has dimension " +
            std::to_string(s.dim) +
            " and no splitting idempotent was found; rerun over a prime field");
      throw CertificationError(
          "split search budget exhausted for a noncommutative residue algebra");
    }
  }

  const Matrix lifted = newton_idempotent(s.lift(*idem), field);
  if (lifted.is_zero() || lifted.is_identity())
    throw Error("internal: lifted idempotent degenerated");
  auto fs = fitting_split(m, lifted);
  if (!fs)
    throw Error("internal: idempotent produced no Fitting split");
  res.indecomposable = false;
  res.split = std::move(*fs);
  return res;
}

DecompositionResult decompose(const ModuleRep& m, std::uint64_t seed,
                              int mc_budget) {
  const FieldSpec field = m.field();
  const int d = m.dim();
  const Rng base(seed);

  struct Leaf {
    ModuleRep rep;
    Matrix emb;
    Certificate cert;
  };
  struct Node {
    ModuleRep rep;
    Matrix emb;
  };
  std::vector<Leaf> leaves;
  std::deque<Node> queue;
  if (d > 0)
    queue.push_back({m, Matrix::identity(field, d)});

  std::uint64_t node_tag = 1;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    const auto r =
        is_indecomposable(node.rep, base.split(node_tag++), mc_budget);
    if (r.indecomposable) {
      leaves.push_back({node.rep, node.emb, r.certificate});
      continue;
    }
    const FittingSplit& fs = *r.split;
    const int d1 = fs.part_kernel.dim();
    const int dn = node.rep.dim();
    queue.push_back(
        {fs.part_kernel, node.emb.mul(fs.witness.col_range(0, d1))});
    queue.push_back(
        {fs.part_image, node.emb.mul(fs.witness.col_range(d1, dn))});
  }
  if (static_cast<int>(leaves.size()) > d)
    throw Error("internal: more summands than the dimension");

  // aggregate isomorphic leaves
  struct Group {
    ModuleRep rep;
    Certificate cert;
    std::vector<Matrix> embs;
  };
  std::vector<Group> groups;
  Rng agg = base.split(0xa77e6a7e);
  for (Leaf& leaf : leaves) {
    bool placed = false;
    for (Group& g : groups) {
      if (g.rep.dim() != leaf.rep.dim())
        continue;
      const IsoResult iso = is_isomorphic(leaf.rep, g.rep, agg, mc_budget);
      if (iso.isomorphic) {
        const auto hinv = inverse(*iso.witness);
        if (!hinv)
          throw Error("internal: iso witness not invertible");
        g.embs.push_back(leaf.emb.mul(*hinv));
        placed = true;
        break;
      }
    }
    if (!placed)
      groups.push_back({leaf.rep, leaf.cert, {leaf.emb}});
  }

  DecompositionResult out{{}, Matrix(field, d, d), d};
  {
    int col = 0;
    Matrix bx(field, 0, 0), by(field, 0, 0);
    for (const Group& g : groups) {
      out.parts.push_back(
          {g.rep, static_cast<int>(g.embs.size()), g.cert});
      for (const Matrix& emb : g.embs) {
        for (int j = 0; j < g.rep.dim(); ++j, ++col)
          for (int i = 0; i < d; ++i)
            out.witness.set(i, col, emb.at(i, j));
        bx = Matrix::block_diag(bx, g.rep.act_x());
        by = Matrix::block_diag(by, g.rep.act_y());
      }
    }
    if (col != d)
      throw Error("internal: decomposition does not fill the dimension");
    const auto winv = inverse(out.witness);
    if (!winv)
      throw Error("internal: decomposition witness is singular");
    if (!(winv->mul(m.act_x().mul(out.witness)) == bx) ||
        !(winv->mul(m.act_y().mul(out.witness)) == by))
      throw Error("internal: decomposition witness fails to conjugate");
  }
  return out;
}

} // namespace strmod
