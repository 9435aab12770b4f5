#include "strmod/modrep.hpp"

#include <algorithm>

namespace strmod {

namespace {

bool is_nilpotent(const Matrix& a) {
  const int d = a.rows();
  if (d == 0)
    return true;
  Matrix sq = a;
  int reach = 1;
  while (reach < d) {
    sq = sq.mul(sq);
    reach *= 2;
  }
  return sq.is_zero();
}

} // namespace

ModuleRep ModuleRep::make(Matrix act_x, Matrix act_y) {
  if (act_x.field() != act_y.field())
    throw UsageError("action matrices over different fields");
  if (act_x.rows() != act_x.cols() || act_y.rows() != act_y.cols() ||
      act_x.rows() != act_y.rows())
    throw UsageError("action matrices must be square of equal size");
  if (!act_x.mul(act_y).is_zero() || !act_y.mul(act_x).is_zero())
    throw DomainError("actions violate x y = y x = 0");
  if (!is_nilpotent(act_x))
    throw DomainError("x-action is not nilpotent");
  if (!is_nilpotent(act_y))
    throw DomainError("y-action is not nilpotent");
  return ModuleRep(std::move(act_x), std::move(act_y));
}

// -- band parameters -------------------------------------------------------------

BandParam BandParam::jordan(const FieldSpec& f, const Scalar& eigenvalue,
                            int size) {
  if (!f.accepts(eigenvalue))
    throw UsageError("eigenvalue does not belong to the field");
  if (f.is_zero(eigenvalue))
    throw DomainError("band eigenvalue must be nonzero");
  if (size < 1)
    throw DomainError("Jordan size must be >= 1");
  BandParam b;
  b.field_ = f;
  b.jordan_ = {eigenvalue, size};
  return b;
}

BandParam BandParam::companion(Poly f, int power) {
  if (!f.is_monic() || f.degree() < 1)
    throw DomainError("band polynomial must be monic of degree >= 1");
  if (f.field.is_zero(f.coeff[0]))
    throw DomainError("band polynomial must not vanish at 0");
  if (power < 1)
    throw DomainError("band polynomial power must be >= 1");
  BandParam b;
  b.field_ = f.field;
  b.companion_ = {std::move(f), power};
  return b;
}

Matrix BandParam::twist() const {
  if (jordan_) {
    const auto& [lambda, m] = *jordan_;
    Matrix t(field_, m, m);
    for (int i = 0; i < m; ++i) {
      t.set(i, i, lambda);
      if (i + 1 < m)
        t.set_int(i, i + 1, 1);
    }
    return t;
  }
  const auto& [f, e] = *companion_;
  Poly fe = Poly::constant(f.field, f.field.one());
  for (int i = 0; i < e; ++i)
    fe = mul(fe, f);
  return companion_matrix(fe);
}

int BandParam::dim() const {
  if (jordan_)
    return jordan_->second;
  return companion_->first.degree() * companion_->second;
}

// -- materialization -------------------------------------------------------------

ModuleRep materialize_string(const StringWord& w, FieldSpec field) {
  if (!w.is_finite())
    throw UsageError("cannot materialize an infinite word; truncate first");
  const int d = w.vertex_count();
  Matrix x(field, d, d), y(field, d, d);
  for (int j = 0; j < w.core_size(); ++j) {
    const Letter l = w.core()[static_cast<std::size_t>(j)];
    Matrix& act = l.sym == Sym::X ? x : y;
    if (l.dir == Dir::Direct)
      act.set_int(j + 1, j, 1); // vertex j -> vertex j+1
    else
      act.set_int(j, j + 1, 1); // vertex j+1 -> vertex j
  }
  return ModuleRep::make(std::move(x), std::move(y));
}

ModuleRep materialize_band_twist(const PeriodicWord& pw, const Matrix& twist) {
  if (twist.rows() != twist.cols())
    throw UsageError("twist must be square");
  const auto tinv = inverse(twist);
  if (!tinv)
    throw DomainError("twist matrix is singular");
  const FieldSpec field = twist.field();
  const int n = pw.period();
  const int m = twist.rows();
  const int d = n * m;
  Matrix x(field, d, d), y(field, d, d);
  for (int j = 0; j < n; ++j) {
    const Letter l = pw.cycle()[static_cast<std::size_t>(j)];
    Matrix& act = l.sym == Sym::X ? x : y;
    const bool wrap = (j == n - 1);
    if (!wrap) {
      for (int v = 0; v < m; ++v) {
        if (l.dir == Dir::Direct)
          act.set_int((j + 1) * m + v, j * m + v, 1);
        else
          act.set_int(j * m + v, (j + 1) * m + v, 1);
      }
    } else {
      for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
          if (l.dir == Dir::Direct)
            act.set(u, (n - 1) * m + v, twist.at(u, v)); // vertex n-1 -> 0, via T
          else
            act.set((n - 1) * m + u, v, tinv->at(u, v)); // vertex 0 -> n-1, via T^-1
        }
    }
  }
  return ModuleRep::make(std::move(x), std::move(y));
}

ModuleRep materialize_band(const PeriodicWord& pw, const BandParam& v,
                           FieldSpec field) {
  const Matrix t = v.twist();
  if (t.field() != field)
    throw UsageError("band parameter field mismatch");
  return materialize_band_twist(pw, t);
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  if (a.field() != b.field())
    throw UsageError("direct sum over different fields");
  return ModuleRep::make(Matrix::block_diag(a.act_x(), b.act_x()),
                         Matrix::block_diag(a.act_y(), b.act_y()));
}

ModuleRep dual(const ModuleRep& m) {
  return ModuleRep::make(m.act_x().transpose(), m.act_y().transpose());
}

Matrix double_dual_unit(const ModuleRep& m) {
  const ModuleRep dd = dual(dual(m));
  if (!(dd == m))
    throw Error("internal: double dual differs from the module");
  // evaluation e_i -> (f -> f(e_i)) is the identity in the canonical bases
  return Matrix::identity(m.field(), m.dim());
}

// -- nilpotent chain structure ------------------------------------------------------

namespace {

struct NilpotentJordan {
  Matrix p;     // columns: per chain, deepest vector first
  Matrix p_inv;
  std::vector<int> lengths; // chain lengths, matching the column blocks
};

NilpotentJordan jordan_nilpotent(const Matrix& n) {
  const FieldSpec field = n.field();
  const int d = n.rows();

  // kernel flags ker n, ker n^2, ...
  std::vector<Matrix> kers;
  {
    Matrix power = n;
    while (true) {
      Matrix k = kernel(power);
      const int got = k.cols();
      kers.push_back(std::move(k));
      if (got == d)
        break;
      if (static_cast<int>(kers.size()) > d)
        throw Error("internal: chain structure of a non-nilpotent matrix");
      power = power.mul(n);
    }
  }
  const int s = static_cast<int>(kers.size());

  struct Chain {
    Matrix head;
    int length;
    Matrix down; // descends as the level sweep goes down
  };
  std::vector<Chain> chains;
  for (int level = s; level >= 1; --level) {
    for (Chain& ch : chains)
      ch.down = n.mul(ch.down);
    EchelonBasis eb(field, d);
    if (level >= 2) {
      const Matrix& below = kers[static_cast<std::size_t>(level - 2)];
      for (int j = 0; j < below.cols(); ++j)
        eb.insert(below.col(j).transpose());
    }
    for (const Chain& ch : chains)
      eb.insert(ch.down.transpose());
    const Matrix& cand = kers[static_cast<std::size_t>(level - 1)];
    for (int j = 0; j < cand.cols(); ++j) {
      Matrix u = cand.col(j);
      if (eb.insert(u.transpose()))
        chains.push_back({u, level, u});
    }
  }
  std::stable_sort(chains.begin(), chains.end(),
                   [](const Chain& a, const Chain& b) {
                     return a.length > b.length;
                   });

  NilpotentJordan out{Matrix(field, d, d), Matrix(field, d, d), {}};
  int col = 0;
  for (const Chain& ch : chains) {
    std::vector<Matrix> seq{ch.head};
    for (int t = 1; t < ch.length; ++t)
      seq.push_back(n.mul(seq.back()));
    // deepest first
    for (int t = 0; t < ch.length; ++t) {
      const Matrix& v = seq[static_cast<std::size_t>(ch.length - 1 - t)];
      for (int i = 0; i < d; ++i)
        out.p.set(i, col, v.at(i, 0));
      ++col;
    }
    out.lengths.push_back(ch.length);
  }
  if (col != d)
    throw Error("internal: Jordan chains do not fill the space");
  auto inv = inverse(out.p);
  if (!inv)
    throw Error("internal: Jordan basis is singular");
  out.p_inv = std::move(*inv);
  return out;
}

std::int64_t pair_cost(const std::vector<int>& a, const std::vector<int>& b) {
  std::int64_t n1 = 0;
  for (int la : a)
    for (int lb : b)
      n1 += std::min(la, lb);
  return n1;
}

// sparse shift map between one source chain and one target chain, embedded at
// the given column blocks: entries (to + t + h - ls, so + t) for
// t = ls-h .. ls-1
struct ShiftMap {
  int to, so, ls, h;
};

} // namespace

HomSpace hom_basis(const ModuleRep& src, const ModuleRep& tgt) {
  if (src.field() != tgt.field())
    throw UsageError("hom over different fields");
  const FieldSpec field = src.field();
  const int ds = src.dim(), dt = tgt.dim();
  if (ds == 0 || dt == 0)
    return {};

  const NilpotentJordan jsx = jordan_nilpotent(src.act_x());
  const NilpotentJordan jtx = jordan_nilpotent(tgt.act_x());
  const NilpotentJordan jsy = jordan_nilpotent(src.act_y());
  const NilpotentJordan jty = jordan_nilpotent(tgt.act_y());
  const Sym stage1 =
      pair_cost(jsx.lengths, jtx.lengths) <= pair_cost(jsy.lengths, jty.lengths)
          ? Sym::X
          : Sym::Y;
  const NilpotentJordan& js = stage1 == Sym::X ? jsx : jsy;
  const NilpotentJordan& jt = stage1 == Sym::X ? jtx : jty;
  const Sym other = stage1 == Sym::X ? Sym::Y : Sym::X;

  // enumerate the chain-to-chain shift maps
  std::vector<ShiftMap> maps;
  {
    int to = 0;
    for (int b = 0; b < static_cast<int>(jt.lengths.size()); ++b) {
      int so = 0;
      for (int a = 0; a < static_cast<int>(js.lengths.size()); ++a) {
        const int ls = js.lengths[static_cast<std::size_t>(a)];
        const int lt = jt.lengths[static_cast<std::size_t>(b)];
        for (int h = 1; h <= std::min(ls, lt); ++h)
          maps.push_back({to, so, ls, h});
        so += ls;
      }
      to += jt.lengths[static_cast<std::size_t>(b)];
    }
  }
  const int n1 = static_cast<int>(maps.size());

  // impose the other action on the reduced space
  const Matrix& a_mat = jt.p;        // dt x dt
  const Matrix& b_mat = js.p_inv;    // ds x ds
  const Matrix c1 = tgt.act(other).mul(a_mat); // dt x dt
  const Matrix c2 = b_mat.mul(src.act(other)); // ds x ds
  Matrix constraints(field, dt * ds, n1);
  for (int beta = 0; beta < n1; ++beta) {
    const ShiftMap& sm = maps[static_cast<std::size_t>(beta)];
    for (int t = sm.ls - sm.h; t < sm.ls; ++t) {
      const int rt = sm.to + t + sm.h - sm.ls;
      const int cs = sm.so + t;
      // contribution C1[:,rt] * B[cs,:] - A[:,rt] * C2[cs,:]
      for (int u = 0; u < dt; ++u) {
        const Scalar c1u = c1.at(u, rt);
        const Scalar au = a_mat.at(u, rt);
        for (int v = 0; v < ds; ++v) {
          Scalar val = field.sub(field.mul(c1u, b_mat.at(cs, v)),
                                 field.mul(au, c2.at(cs, v)));
          if (!field.is_zero(val))
            constraints.set(u * ds + v, beta,
                            field.add(constraints.at(u * ds + v, beta), val));
        }
      }
    }
  }
  const Matrix coeffs = kernel(constraints); // n1 x homdim

  HomSpace out;
  for (int k = 0; k < coeffs.cols(); ++k) {
    Matrix phi(field, dt, ds);
    for (int beta = 0; beta < n1; ++beta) {
      const Scalar c = coeffs.at(beta, k);
      if (field.is_zero(c))
        continue;
      const ShiftMap& sm = maps[static_cast<std::size_t>(beta)];
      for (int t = sm.ls - sm.h; t < sm.ls; ++t)
        phi.set(sm.to + t + sm.h - sm.ls, sm.so + t,
                field.add(phi.at(sm.to + t + sm.h - sm.ls, sm.so + t), c));
    }
    out.basis.push_back(a_mat.mul(phi).mul(b_mat));
  }
  return out;
}

HomSpace hom_basis_dense(const ModuleRep& src, const ModuleRep& tgt) {
  if (src.field() != tgt.field())
    throw UsageError("hom over different fields");
  const FieldSpec field = src.field();
  const int ds = src.dim(), dt = tgt.dim();
  if (ds == 0 || dt == 0)
    return {};
  // unknowns H_{ab}, a < dt, b < ds, vec index a*ds + b
  Matrix sys(field, 2 * dt * ds, dt * ds);
  for (int which = 0; which < 2; ++which) {
    const Matrix& as = which == 0 ? src.act_x() : src.act_y();
    const Matrix& at = which == 0 ? tgt.act_x() : tgt.act_y();
    const int base = which * dt * ds;
    for (int i = 0; i < dt; ++i)
      for (int j = 0; j < ds; ++j) {
        const int row = base + i * ds + j;
        // (H A_s - A_t H)_{ij}
        for (int b = 0; b < ds; ++b) {
          const Scalar v = as.at(b, j);
          if (!field.is_zero(v))
            sys.set(row, i * ds + b, field.add(sys.at(row, i * ds + b), v));
        }
        for (int a = 0; a < dt; ++a) {
          const Scalar v = at.at(i, a);
          if (!field.is_zero(v))
            sys.set(row, a * ds + j,
                    field.sub(sys.at(row, a * ds + j), v));
        }
      }
  }
  const Matrix ker = kernel(sys);
  HomSpace out;
  for (int k = 0; k < ker.cols(); ++k) {
    Matrix h(field, dt, ds);
    for (int a = 0; a < dt; ++a)
      for (int b = 0; b < ds; ++b)
        h.set(a, b, ker.at(a * ds + b, k));
    out.basis.push_back(std::move(h));
  }
  return out;
}

int hom_dim(const ModuleRep& src, const ModuleRep& tgt) {
  return hom_basis(src, tgt).dim();
}

// -- socle / radical ---------------------------------------------------------------

Matrix socle(const ModuleRep& m) {
  return kernel(m.act_x().vstack(m.act_y()));
}

Matrix radical(const ModuleRep& m) {
  return image(m.act_x().hstack(m.act_y()));
}

int top_dim(const ModuleRep& m) { return m.dim() - radical(m).cols(); }

Matrix socle_power(const ModuleRep& m, int j) {
  if (j < 0)
    throw UsageError("negative socle power");
  if (j == 0)
    return Matrix(m.field(), m.dim(), 0);
  // x y = 0 makes m^j = (x^j, y^j)
  return kernel(m.act_x().pow(j).vstack(m.act_y().pow(j)));
}

std::vector<int> socle_series(const ModuleRep& m) {
  std::vector<int> out;
  if (m.dim() == 0)
    return out;
  for (int j = 1;; ++j) {
    const int dj = socle_power(m, j).cols();
    out.push_back(dj);
    if (dj == m.dim())
      return out;
    if (j > m.dim())
      throw Error("internal: socle series did not terminate");
  }
}

std::vector<int> radical_series(const ModuleRep& m) {
  std::vector<int> out{m.dim()};
  Matrix layer = Matrix::identity(m.field(), m.dim());
  while (out.back() > 0) {
    layer = image(m.act_x().mul(layer).hstack(m.act_y().mul(layer)));
    out.push_back(layer.cols());
    if (static_cast<int>(out.size()) > m.dim() + 2)
      throw Error("internal: radical series did not terminate");
  }
  return out;
}

// -- submodules ---------------------------------------------------------------------

SubQuotient submodule_on_basis(const ModuleRep& m, const Matrix& basis_cols) {
  if (basis_cols.rows() != m.dim() || basis_cols.field() != m.field())
    throw UsageError("basis shape mismatch");
  if (rank(basis_cols) != basis_cols.cols())
    throw UsageError("basis columns are dependent");
  auto xs = solve_linear(basis_cols, m.act_x().mul(basis_cols));
  auto ys = solve_linear(basis_cols, m.act_y().mul(basis_cols));
  if (!xs || !ys)
    throw UsageError("subspace is not action-stable");
  return {ModuleRep::make(std::move(*xs), std::move(*ys)), basis_cols};
}

SubQuotient submodule_generated(const ModuleRep& m,
                                const std::vector<Matrix>& generators) {
  const FieldSpec field = m.field();
  EchelonBasis eb(field, m.dim());
  std::vector<Matrix> queue;
  for (const Matrix& g : generators) {
    if (g.rows() != m.dim() || g.cols() != 1 || g.field() != field)
      throw UsageError("generator shape mismatch");
    if (eb.insert(g.transpose()))
      queue.push_back(g);
  }
  while (!queue.empty()) {
    const Matrix v = queue.back();
    queue.pop_back();
    for (const Matrix* act : {&m.act_x(), &m.act_y()}) {
      Matrix u = act->mul(v);
      if (eb.insert(u.transpose()))
        queue.push_back(std::move(u));
    }
  }
  return submodule_on_basis(m, eb.basis_rows().transpose());
}

ModuleRep quotient(const ModuleRep& m, const Matrix& inclusion) {
  const FieldSpec field = m.field();
  const int d = m.dim();
  const int k = inclusion.cols();
  if (inclusion.rows() != d || inclusion.field() != field)
    throw UsageError("inclusion shape mismatch");
  if (rank(inclusion) != k)
    throw UsageError("inclusion columns are dependent");

  // complete to a basis with standard vectors
  EchelonBasis eb(field, d);
  for (int j = 0; j < k; ++j)
    eb.insert(inclusion.col(j).transpose());
  Matrix p = inclusion;
  for (int i = 0; i < d && p.cols() < d; ++i) {
    Matrix e(field, d, 1);
    e.set_int(i, 0, 1);
    if (eb.insert(e.transpose()))
      p = p.hstack(e);
  }
  const auto pinv = inverse(p);
  if (!pinv)
    throw Error("internal: completed basis is singular");

  Matrix qx(field, d - k, d - k), qy(field, d - k, d - k);
  for (const Matrix* act : {&m.act_x(), &m.act_y()}) {
    const Matrix conj = pinv->mul(act->mul(p));
    for (int i = k; i < d; ++i)
      for (int j = 0; j < k; ++j)
        if (!field.is_zero(conj.at(i, j)))
          throw UsageError("inclusion is not action-stable");
    Matrix& out = act == &m.act_x() ? qx : qy;
    for (int i = k; i < d; ++i)
      for (int j = k; j < d; ++j)
        out.set(i - k, j - k, conj.at(i, j));
  }
  return ModuleRep::make(std::move(qx), std::move(qy));
}

// -- isomorphism -----------------------------------------------------------------

IsoResult is_isomorphic(const ModuleRep& a, const ModuleRep& b, Rng& rng,
                        int mc_budget) {
  if (a.field() != b.field())
    throw UsageError("isomorphism test over different fields");
  if (mc_budget < 1)
    throw UsageError("Monte Carlo budget must be >= 1");
  const FieldSpec field = a.field();
  IsoResult res;
  if (a.dim() != b.dim())
    return res; // certain no
  const int d = a.dim();
  if (d == 0) {
    res.isomorphic = true;
    res.witness = Matrix(field, 0, 0);
    return res;
  }
  const HomSpace hab = hom_basis(a, b);
  if (hab.dim() == 0)
    return res; // certain no
  if (hab.dim() != hom_dim(b, a))
    return res; // certain no: hom dimensions asymmetric

  for (const Matrix& h : hab.basis)
    if (rank(h) == d) {
      res.isomorphic = true;
      res.witness = h;
      return res;
    }

  const std::uint64_t space =
      field.is_rationals() ? (std::uint64_t{1} << 20)
                           : static_cast<std::uint64_t>(field.characteristic());
  for (int round = 0; round < mc_budget; ++round) {
    Matrix h(field, d, d);
    for (const Matrix& basis_elt : hab.basis) {
      const Scalar c =
          field.from_int(static_cast<std::int64_t>(rng.below(space)));
      h = h.add(basis_elt.scaled(c));
    }
    if (rank(h) == d) {
      res.isomorphic = true;
      res.witness = h;
      return res;
    }
  }
  res.certain = false;
  res.samples = mc_budget;
  res.sample_space = space;
  return res;
}

} // namespace strmod
