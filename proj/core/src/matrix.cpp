#include "strmod/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace strmod {

namespace {

// Barrett reduction for x < 2^63, p < 2^31.
struct Barrett {
  std::uint64_t p;
  std::uint64_t m;
  explicit Barrett(std::int64_t prime)
      : p(static_cast<std::uint64_t>(prime)), m(~std::uint64_t{0} / p) {}
  std::int64_t reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * m) >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p)
      r -= p;
    return static_cast<std::int64_t>(r);
  }
};

std::int64_t fp_inv_raw(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return t < 0 ? t + p : t;
}

// dst[k] += c * src[k] (mod p) for k in [start, n)
void axpy_fp(std::int64_t* dst, const std::int64_t* src, std::int64_t c,
             int start, int n, const Barrett& br) {
  if (c == 0)
    return;
  const std::uint64_t cu = static_cast<std::uint64_t>(c);
  for (int k = start; k < n; ++k) {
    std::uint64_t x = static_cast<std::uint64_t>(dst[k]) +
                      cu * static_cast<std::uint64_t>(src[k]);
    dst[k] = br.reduce(x);
  }
}

void rref_fp(std::vector<std::int64_t>& a, int rows, int cols, std::int64_t p,
             std::vector<int>& pivots) {
  const Barrett br(p);
  int r = 0;
  // forward echelon
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<std::size_t>(i) * cols + c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    if (piv != r)
      for (int k = c; k < cols; ++k)
        std::swap(a[static_cast<std::size_t>(piv) * cols + k],
                  a[static_cast<std::size_t>(r) * cols + k]);
    std::int64_t* rowr = &a[static_cast<std::size_t>(r) * cols];
    for (int i = r + 1; i < rows; ++i) {
      std::int64_t* rowi = &a[static_cast<std::size_t>(i) * cols];
      if (rowi[c] == 0)
        continue;
      // rowi += (-rowi[c]/rowr[c]) * rowr
      std::int64_t f = br.reduce(
          static_cast<std::uint64_t>(rowi[c]) *
          static_cast<std::uint64_t>(fp_inv_raw(rowr[c], p)));
      rowi[c] = 0;
      axpy_fp(rowi, rowr, p - f, c + 1, cols, br);
    }
    pivots.push_back(c);
    ++r;
  }
  // normalize and back-substitute
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    const int c = pivots[k];
    std::int64_t* rowk = &a[static_cast<std::size_t>(k) * cols];
    const std::int64_t inv = fp_inv_raw(rowk[c], p);
    if (inv != 1)
      for (int j = c; j < cols; ++j)
        rowk[j] = br.reduce(static_cast<std::uint64_t>(rowk[j]) *
                            static_cast<std::uint64_t>(inv));
    for (int i = 0; i < k; ++i) {
      std::int64_t* rowi = &a[static_cast<std::size_t>(i) * cols];
      const std::int64_t f = rowi[c];
      if (f == 0)
        continue;
      rowi[c] = 0;
      axpy_fp(rowi, rowk, p - f, c + 1, cols, br);
    }
  }
}

// Fraction-free forward phase (Bareiss) on denominator-cleared rows, then a
// rational backward phase. The one-step division is exact by Sylvester's
// identity; this is asserted rather than trusted.
void rref_q(std::vector<mpq_class>& aq, int rows, int cols,
            std::vector<int>& pivots) {
  std::vector<std::vector<mpz_class>> az(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              aq[static_cast<std::size_t>(i) * cols + j].get_den().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      const mpq_class& e = aq[static_cast<std::size_t>(i) * cols + j];
      az[i][j] = e.get_num() * (l / e.get_den());
    }
  }

  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (az[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    if (piv != r)
      std::swap(az[piv], az[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class num = az[r][c] * az[i][j] - az[i][c] * az[r][j];
        mpz_class quo, rem;
        mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                    prev.get_mpz_t());
        if (rem != 0)
          throw Error("internal: fraction-free elimination step not exact");
        az[i][j] = quo;
      }
      az[i][c] = 0;
    }
    prev = az[r][c];
    pivots.push_back(c);
    ++r;
  }

  // write back: normalized echelon rows, then clear above pivots
  for (std::size_t k = 0; k < aq.size(); ++k)
    aq[k] = 0;
  for (int i = 0; i < r; ++i) {
    const int c = pivots[i];
    for (int j = c; j < cols; ++j) {
      mpq_class v(az[i][j]);
      v /= mpq_class(az[i][c]);
      v.canonicalize();
      aq[static_cast<std::size_t>(i) * cols + j] = v;
    }
  }
  for (int k = r - 1; k >= 0; --k) {
    const int c = pivots[k];
    for (int i = 0; i < k; ++i) {
      mpq_class f = aq[static_cast<std::size_t>(i) * cols + c];
      if (f == 0)
        continue;
      for (int j = c; j < cols; ++j)
        aq[static_cast<std::size_t>(i) * cols + j] -=
            f * aq[static_cast<std::size_t>(k) * cols + j];
    }
  }
}

} // namespace

Matrix::Matrix(FieldSpec field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw UsageError("negative matrix dimension");
  const std::size_t n = static_cast<std::size_t>(rows) * cols;
  if (field_.is_rationals())
    data_ = std::vector<mpq_class>(n, mpq_class(0));
  else
    data_ = std::vector<std::int64_t>(n, 0);
}

Matrix Matrix::identity(FieldSpec field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i)
    m.set_int(i, i, 1);
  return m;
}

Matrix Matrix::from_int_rows(FieldSpec field,
                             const std::vector<std::vector<std::int64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw UsageError("ragged rows");
    for (int j = 0; j < c; ++j)
      m.set_int(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_cols(FieldSpec field, int rows,
                         const std::vector<Matrix>& cols) {
  Matrix m(field, rows, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    const Matrix& v = cols[j];
    if (v.field() != field || v.rows() != rows || v.cols() != 1)
      throw UsageError("column vector shape mismatch");
    for (int i = 0; i < rows; ++i)
      m.set(i, j, v.at(i, 0));
  }
  return m;
}

Scalar Matrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw UsageError("matrix index out of range");
  const std::size_t k = static_cast<std::size_t>(i) * cols_ + j;
  if (field_.is_rationals())
    return Scalar(q_data()[k]);
  return Scalar(fp_data()[k]);
}

void Matrix::set(int i, int j, const Scalar& v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw UsageError("matrix index out of range");
  if (!field_.accepts(v))
    throw UsageError("scalar does not belong to the matrix field");
  const std::size_t k = static_cast<std::size_t>(i) * cols_ + j;
  if (field_.is_rationals())
    q_data()[k] = v.rational();
  else
    fp_data()[k] = v.residue();
}

void Matrix::set_int(int i, int j, std::int64_t v) {
  set(i, j, field_.from_int(v));
}

Matrix Matrix::mul(const Matrix& o) const {
  if (field_ != o.field_)
    throw UsageError("field mismatch in matrix product");
  if (cols_ != o.rows_)
    throw UsageError("shape mismatch in matrix product");
  Matrix out(field_, rows_, o.cols_);
  const int n = o.cols_;
  if (field_.is_rationals()) {
    const auto& a = q_data();
    const auto& b = o.q_data();
    auto& c = out.q_data();
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const mpq_class& aik = a[static_cast<std::size_t>(i) * cols_ + k];
        if (aik == 0)
          continue;
        for (int j = 0; j < n; ++j)
          c[static_cast<std::size_t>(i) * n + j] +=
              aik * b[static_cast<std::size_t>(k) * n + j];
      }
  } else {
    const std::int64_t p = field_.characteristic();
    const auto& a = fp_data();
    const auto& b = o.fp_data();
    auto& c = out.fp_data();
    std::vector<unsigned __int128> acc(static_cast<std::size_t>(n));
    for (int i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int k = 0; k < cols_; ++k) {
        const std::uint64_t aik =
            static_cast<std::uint64_t>(a[static_cast<std::size_t>(i) * cols_ + k]);
        if (aik == 0)
          continue;
        const std::int64_t* brow = &b[static_cast<std::size_t>(k) * n];
        for (int j = 0; j < n; ++j)
          acc[j] += static_cast<unsigned __int128>(aik) *
                    static_cast<std::uint64_t>(brow[j]);
      }
      for (int j = 0; j < n; ++j)
        c[static_cast<std::size_t>(i) * n + j] = static_cast<std::int64_t>(
            static_cast<std::uint64_t>(acc[j] % static_cast<std::uint64_t>(p)));
    }
  }
  return out;
}

Matrix Matrix::add(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw UsageError("shape or field mismatch in matrix sum");
  Matrix out(field_, rows_, cols_);
  if (field_.is_rationals()) {
    for (std::size_t k = 0; k < q_data().size(); ++k)
      out.q_data()[k] = q_data()[k] + o.q_data()[k];
  } else {
    const std::int64_t p = field_.characteristic();
    for (std::size_t k = 0; k < fp_data().size(); ++k) {
      std::int64_t s = fp_data()[k] + o.fp_data()[k];
      out.fp_data()[k] = s >= p ? s - p : s;
    }
  }
  return out;
}

Matrix Matrix::sub(const Matrix& o) const { return add(o.neg()); }

Matrix Matrix::neg() const {
  Matrix out(field_, rows_, cols_);
  if (field_.is_rationals()) {
    for (std::size_t k = 0; k < q_data().size(); ++k)
      out.q_data()[k] = -q_data()[k];
  } else {
    const std::int64_t p = field_.characteristic();
    for (std::size_t k = 0; k < fp_data().size(); ++k)
      out.fp_data()[k] = fp_data()[k] == 0 ? 0 : p - fp_data()[k];
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out.set(i, j, field_.mul(at(i, j), c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out.set(j, i, at(i, j));
  return out;
}

Matrix Matrix::pow(std::int64_t k) const {
  if (rows_ != cols_)
    throw UsageError("power of a non-square matrix");
  if (k < 0)
    throw UsageError("negative matrix power");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (k > 0) {
    if (k & 1)
      result = result.mul(base);
    base = base.mul(base);
    k >>= 1;
  }
  return result;
}

bool Matrix::is_zero() const {
  if (field_.is_rationals()) {
    for (const auto& e : q_data())
      if (e != 0)
        return false;
  } else {
    for (const auto& e : fp_data())
      if (e != 0)
        return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  return *this == identity(field_, rows_);
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         data_ == o.data_;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_)
    throw UsageError("trace of a non-square matrix");
  Scalar t = field_.zero();
  for (int i = 0; i < rows_; ++i)
    t = field_.add(t, at(i, i));
  return t;
}

Matrix Matrix::row(int i) const {
  Matrix out(field_, 1, cols_);
  for (int j = 0; j < cols_; ++j)
    out.set(0, j, at(i, j));
  return out;
}

Matrix Matrix::col(int j) const {
  Matrix out(field_, rows_, 1);
  for (int i = 0; i < rows_; ++i)
    out.set(i, 0, at(i, j));
  return out;
}

Matrix Matrix::col_range(int j0, int j1) const {
  if (j0 < 0 || j1 < j0 || j1 > cols_)
    throw UsageError("column range out of bounds");
  Matrix out(field_, rows_, j1 - j0);
  for (int i = 0; i < rows_; ++i)
    for (int j = j0; j < j1; ++j)
      out.set(i, j - j0, at(i, j));
  return out;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_)
    throw UsageError("hstack mismatch");
  Matrix out(field_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j)
      out.set(i, j, at(i, j));
    for (int j = 0; j < o.cols_; ++j)
      out.set(i, cols_ + j, o.at(i, j));
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (field_ != o.field_ || cols_ != o.cols_)
    throw UsageError("vstack mismatch");
  Matrix out(field_, rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out.set(i, j, at(i, j));
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out.set(rows_ + i, j, o.at(i, j));
  return out;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field())
    throw UsageError("field mismatch in block_diag");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      out.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return out;
}

Matrix Matrix::vec_row() const {
  Matrix out(field_, 1, rows_ * cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out.set(0, i * cols_ + j, at(i, j));
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) {
      if (j)
        os << ' ';
      os << field_.to_string(at(i, j));
    }
    os << "]";
    if (i + 1 < rows_)
      os << '\n';
  }
  return os.str();
}

Echelon rref(const Matrix& a) {
  Echelon e{a, {}};
  if (a.field().is_rationals())
    rref_q(e.mat.q_data(), a.rows(), a.cols(), e.pivots);
  else
    rref_fp(e.mat.fp_data(), a.rows(), a.cols(), a.field().characteristic(),
            e.pivots);
  return e;
}

int rank(const Matrix& a) { return rref(a).rank(); }

Matrix kernel(const Matrix& a) {
  const Echelon e = rref(a);
  const FieldSpec& f = a.field();
  std::vector<int> free_cols;
  {
    std::size_t pi = 0;
    for (int c = 0; c < a.cols(); ++c) {
      if (pi < e.pivots.size() && e.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix out(f, a.cols(), static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    const int fc = free_cols[k];
    out.set_int(fc, k, 1);
    for (int i = 0; i < e.rank(); ++i)
      out.set(e.pivots[i], k, f.neg(e.mat.at(i, fc)));
  }
  return out;
}

std::vector<Matrix> kernel_basis(const Matrix& a) {
  const Matrix k = kernel(a);
  std::vector<Matrix> out;
  out.reserve(k.cols());
  for (int j = 0; j < k.cols(); ++j)
    out.push_back(k.col(j));
  return out;
}

Matrix image(const Matrix& a) {
  const Echelon e = rref(a);
  Matrix out(a.field(), a.rows(), e.rank());
  for (int k = 0; k < e.rank(); ++k)
    for (int i = 0; i < a.rows(); ++i)
      out.set(i, k, a.at(i, e.pivots[k]));
  return out;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field())
    throw UsageError("field mismatch in solve");
  if (a.rows() != b.rows())
    throw UsageError("row count mismatch in solve");
  const Echelon e = rref(a.hstack(b));
  for (int c : e.pivots)
    if (c >= a.cols())
      return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (int i = 0; i < e.rank(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      x.set(e.pivots[i], j, e.mat.at(i, a.cols() + j));
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols())
    throw UsageError("inverse of a non-square matrix");
  return solve_linear(a, Matrix::identity(a.field(), a.rows()));
}

std::vector<Scalar> min_poly(const Matrix& m) {
  if (m.rows() != m.cols())
    throw UsageError("minimal polynomial of a non-square matrix");
  const FieldSpec& f = m.field();
  const int d = m.rows();
  if (d == 0)
    return {f.one()};
  EchelonBasis eb(f, d * d, d + 2);
  Matrix p = Matrix::identity(f, d);
  for (int k = 0; k <= d; ++k) {
    const Matrix v = p.vec_row();
    if (!eb.insert(v)) {
      auto rep = eb.representation(v);
      if (!rep)
        throw Error("internal: dependent Krylov vector without representation");
      std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1, f.zero());
      for (int i = 0; i < k; ++i)
        coeffs[i] = f.neg((*rep)[i]);
      coeffs[k] = f.one();
      return coeffs;
    }
    p = p.mul(m);
  }
  throw Error("internal: no Krylov dependence up to the dimension");
}

Matrix eval_poly(const std::vector<Scalar>& coeffs, const Matrix& m) {
  if (m.rows() != m.cols())
    throw UsageError("polynomial of a non-square matrix");
  const FieldSpec& f = m.field();
  Matrix acc(f, m.rows(), m.rows());
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    acc = acc.mul(m);
    for (int i = 0; i < m.rows(); ++i)
      acc.set(i, i, f.add(acc.at(i, i), coeffs[k]));
  }
  return acc;
}

EchelonBasis::EchelonBasis(FieldSpec field, int width, int track_limit)
    : field_(field), width_(width), track_limit_(track_limit) {}

bool EchelonBasis::insert(const Matrix& row_vec) {
  if (row_vec.rows() != 1 || row_vec.cols() != width_ ||
      row_vec.field() != field_)
    throw UsageError("echelon insert shape mismatch");
  const bool track = track_limit_ > 0;
  if (track && inserted_ >= track_limit_)
    throw UsageError("echelon tracking capacity exceeded");
  const int full = width_ + (track ? track_limit_ : 0);
  std::vector<Scalar> v(static_cast<std::size_t>(full), field_.zero());
  for (int j = 0; j < width_; ++j)
    v[j] = row_vec.at(0, j);
  if (track)
    v[width_ + inserted_] = field_.one();
  ++inserted_;

  // eliminate against stored rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (field_.is_zero(c))
      continue;
    for (int k = 0; k < full; ++k)
      if (!field_.is_zero(rows_[r][k]))
        v[k] = field_.sub(v[k], field_.mul(c, rows_[r][k]));
  }
  int pivot = -1;
  for (int k = 0; k < width_; ++k)
    if (!field_.is_zero(v[k])) {
      pivot = k;
      break;
    }
  if (pivot < 0)
    return false;
  const Scalar inv = field_.inv(v[pivot]);
  for (int k = 0; k < full; ++k)
    if (!field_.is_zero(v[k]))
      v[k] = field_.mul(v[k], inv);
  // keep stored rows reduced against the new pivot
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = rows_[r][pivot];
    if (field_.is_zero(c))
      continue;
    for (int k = 0; k < full; ++k)
      if (!field_.is_zero(v[k]))
        rows_[r][k] = field_.sub(rows_[r][k], field_.mul(c, v[k]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(const Matrix& row_vec) const {
  if (row_vec.rows() != 1 || row_vec.cols() != width_ ||
      row_vec.field() != field_)
    throw UsageError("echelon query shape mismatch");
  std::vector<Scalar> v(static_cast<std::size_t>(width_), field_.zero());
  for (int j = 0; j < width_; ++j)
    v[j] = row_vec.at(0, j);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (field_.is_zero(c))
      continue;
    for (int k = 0; k < width_; ++k)
      if (!field_.is_zero(rows_[r][k]))
        v[k] = field_.sub(v[k], field_.mul(c, rows_[r][k]));
  }
  for (int k = 0; k < width_; ++k)
    if (!field_.is_zero(v[k]))
      return false;
  return true;
}

std::optional<std::vector<Scalar>>
EchelonBasis::representation(const Matrix& row_vec) const {
  if (track_limit_ <= 0)
    throw UsageError("echelon basis was built without tracking");
  if (row_vec.rows() != 1 || row_vec.cols() != width_ ||
      row_vec.field() != field_)
    throw UsageError("echelon query shape mismatch");
  const int full = width_ + track_limit_;
  std::vector<Scalar> v(static_cast<std::size_t>(full), field_.zero());
  for (int j = 0; j < width_; ++j)
    v[j] = row_vec.at(0, j);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (field_.is_zero(c))
      continue;
    for (int k = 0; k < full; ++k)
      if (!field_.is_zero(rows_[r][k]))
        v[k] = field_.sub(v[k], field_.mul(c, rows_[r][k]));
  }
  for (int k = 0; k < width_; ++k)
    if (!field_.is_zero(v[k]))
      return std::nullopt;
  std::vector<Scalar> coeffs(static_cast<std::size_t>(inserted_), field_.zero());
  for (int i = 0; i < inserted_; ++i)
    coeffs[i] = field_.neg(v[width_ + i]);
  return coeffs;
}

Matrix EchelonBasis::basis_rows() const {
  Matrix out(field_, rank(), width_);
  for (int r = 0; r < rank(); ++r)
    for (int j = 0; j < width_; ++j)
      out.set(r, j, rows_[r][j]);
  return out;
}

} // namespace strmod
