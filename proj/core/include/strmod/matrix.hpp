#ifndef STRMOD_MATRIX_HPP
#define STRMOD_MATRIX_HPP
//
// strmod / matrix
// Dense exact matrices over GF(p) or Q, row-major. Elimination over GF(p) is
// plain Gauss-Jordan with Barrett-reduced word arithmetic; over Q the forward
// phase is fraction-free (Bareiss) on scaled integer rows so coefficients stay
// small. Dimensions are desk scale (a few hundred); no sparsity machinery.
//

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strmod/field.hpp"

namespace strmod {

class Matrix {
public:
  /// Zero matrix of the given shape.
  Matrix(FieldSpec field, int rows, int cols);

  static Matrix identity(FieldSpec field, int n);
  /// Entries given row-major as integers (reduced into the field).
  static Matrix from_int_rows(FieldSpec field,
                              const std::vector<std::vector<std::int64_t>>& rows);
  /// Assemble from column vectors (each cols()==1, same field and height).
  static Matrix from_cols(FieldSpec field, int rows,
                          const std::vector<Matrix>& cols);

  const FieldSpec& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar at(int i, int j) const;
  void set(int i, int j, const Scalar& v);
  void set_int(int i, int j, std::int64_t v);

  Matrix mul(const Matrix& o) const;
  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  Matrix neg() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Matrix pow(std::int64_t k) const; // square matrices, k >= 0

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Scalar trace() const;

  Matrix row(int i) const;
  Matrix col(int j) const;
  /// Columns [j0, j1).
  Matrix col_range(int j0, int j1) const;
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  static Matrix block_diag(const Matrix& a, const Matrix& b);
  /// Row-major flattening as a 1 x (rows*cols) row vector.
  Matrix vec_row() const;

  std::string to_string() const;

  // Raw buffers for the typed kernels; index [i*cols + j].
  std::vector<std::int64_t>& fp_data() { return std::get<0>(data_); }
  const std::vector<std::int64_t>& fp_data() const { return std::get<0>(data_); }
  std::vector<mpq_class>& q_data() { return std::get<1>(data_); }
  const std::vector<mpq_class>& q_data() const { return std::get<1>(data_); }

private:
  FieldSpec field_;
  int rows_, cols_;
  std::variant<std::vector<std::int64_t>, std::vector<mpq_class>> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix mat;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon rref(const Matrix& a);
int rank(const Matrix& a);

/// Basis of the right kernel {v : a v = 0}, as the columns of the result
/// (cols() == nullity). Canonical free-variable basis from the RREF.
Matrix kernel(const Matrix& a);
/// Same basis as a list of column vectors.
std::vector<Matrix> kernel_basis(const Matrix& a);

/// Basis of the column space: the pivot columns of a.
Matrix image(const Matrix& a);

/// Exact solution x of a x = b (all columns of b at once), or nullopt when
/// rank([a|b]) > rank(a). Throws UsageError on shape or field mismatch.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);

/// Monic minimal polynomial of a square matrix, coefficients low to high.
/// The 0 x 0 matrix yields the constant polynomial 1.
std::vector<Scalar> min_poly(const Matrix& m);

/// Evaluate a polynomial (coefficients low to high) at a square matrix.
Matrix eval_poly(const std::vector<Scalar>& coeffs, const Matrix& m);

/// Incremental row-space accumulator. Keeps the inserted rows' reduced
/// echelon; optionally records combination coefficients so that members of
/// the span can be rewritten over the independent inserted rows.
class EchelonBasis {
public:
  /// track_limit > 0 reserves coefficient tracking for that many inserts.
  EchelonBasis(FieldSpec field, int width, int track_limit = 0);

  /// Returns true when the row was independent of the span so far.
  bool insert(const Matrix& row_vec);
  bool contains(const Matrix& row_vec) const;
  /// Coefficients over the inserted independent rows, or nullopt if the row
  /// is outside the span. Requires tracking.
  std::optional<std::vector<Scalar>> representation(const Matrix& row_vec) const;

  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::vector<int>& pivots() const { return pivots_; }
  /// The reduced independent rows, stacked (rank() x width).
  Matrix basis_rows() const;

private:
  FieldSpec field_;
  int width_;
  int track_limit_;
  int inserted_ = 0;
  std::vector<int> pivots_;          // pivot column of each stored row
  std::vector<std::vector<Scalar>> rows_; // width_ + track_limit_ wide
};

} // namespace strmod

#endif
