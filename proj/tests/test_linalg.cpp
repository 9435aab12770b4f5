#include <doctest.h>

#include "strmod/matrix.hpp"
#include "strmod/rng.hpp"

using namespace strmod;

namespace {

const FieldSpec f5 = FieldSpec::prime(5);
const FieldSpec f2 = FieldSpec::prime(2);
const FieldSpec fq = FieldSpec::rationals();

Matrix random_matrix(const FieldSpec& f, int rows, int cols, Rng& rng,
                     std::uint64_t space) {
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.set_int(i, j, static_cast<std::int64_t>(rng.below(space)) - 3);
  return m;
}

// independent plain Gauss elimination over Q, used as a rank oracle for the
// fraction-free route
int rank_oracle_q(const Matrix& a) {
  std::vector<std::vector<mpq_class>> rows(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      rows[static_cast<std::size_t>(i)].push_back(a.at(i, j).rational());
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(r)]);
    for (int i = r + 1; i < a.rows(); ++i) {
      const mpq_class q =
          rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
          rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      for (int j = c; j < a.cols(); ++j)
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            q * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    ++r;
  }
  return r;
}

} // namespace

TEST_CASE("field construction validates the modulus") {
  CHECK_THROWS_AS(FieldSpec::prime(4), UsageError);
  CHECK_THROWS_AS(FieldSpec::prime(1), UsageError);
  CHECK_THROWS_AS(FieldSpec::prime(32004), UsageError);
  CHECK(FieldSpec::prime(2).characteristic() == 2);
  CHECK(FieldSpec::prime(32003).characteristic() == 32003);
  CHECK(FieldSpec::rationals().is_rationals());
}

TEST_CASE("prime field arithmetic") {
  // 2 * 3 = 6 = 1 mod 5
  CHECK(f5.mul(f5.from_int(2), f5.from_int(3)) == f5.one());
  CHECK(f5.inv(f5.from_int(2)) == f5.from_int(3));
  CHECK(f5.from_int(-1) == f5.from_int(4));
  CHECK_THROWS_AS(f5.inv(f5.zero()), DomainError);
  CHECK(f5.from_fraction(1, 2) == f5.from_int(3));
}

TEST_CASE("rational arithmetic stays canonical") {
  const Scalar half = fq.from_fraction(2, 4);
  CHECK(fq.to_string(half) == "1/2");
  CHECK(fq.add(half, half) == fq.one());
  CHECK_THROWS_AS(fq.from_fraction(1, 0), DomainError);
}

TEST_CASE("kernel of the zero and identity maps") {
  const Matrix zero(f5, 2, 2);
  const Matrix k = kernel(zero);
  CHECK(k.cols() == 2);
  CHECK(rank(k) == 2); // spans all of k^2
  CHECK(zero.mul(k).is_zero());

  CHECK(kernel_basis(Matrix::identity(f5, 3)).empty());
}

TEST_CASE("kernel of the all-ones matrix over GF(2)") {
  const Matrix m = Matrix::from_int_rows(f2, {{1, 1}, {1, 1}});
  const auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].at(0, 0) == f2.one());
  CHECK(basis[0].at(1, 0) == f2.one());
}

TEST_CASE("solve_linear on the stated examples") {
  const Matrix i2 = Matrix::identity(f5, 2);
  const Matrix b = Matrix::from_int_rows(f5, {{3}, {1}});
  CHECK(*solve_linear(i2, b) == b);

  const Matrix zero(f5, 2, 2);
  CHECK_FALSE(solve_linear(zero, b).has_value());

  const Matrix a = Matrix::from_int_rows(f5, {{2}});
  const Matrix rhs = Matrix::from_int_rows(f5, {{1}});
  CHECK(*solve_linear(a, rhs) == Matrix::from_int_rows(f5, {{3}}));

  CHECK_THROWS_AS(solve_linear(i2, Matrix(f5, 3, 1)), UsageError);
  CHECK_THROWS_AS(solve_linear(i2, Matrix(f2, 2, 1)), UsageError);
}

TEST_CASE("solve_linear agrees with brute force over GF(2), exhaustively") {
  // all 2x2 systems
  for (int am = 0; am < 16; ++am)
    for (int bm = 0; bm < 4; ++bm) {
      Matrix a(f2, 2, 2), b(f2, 2, 1);
      for (int k = 0; k < 4; ++k)
        a.set_int(k / 2, k % 2, (am >> k) & 1);
      for (int k = 0; k < 2; ++k)
        b.set_int(k, 0, (bm >> k) & 1);
      bool solvable = false;
      for (int xm = 0; xm < 4 && !solvable; ++xm) {
        Matrix x(f2, 2, 1);
        for (int k = 0; k < 2; ++k)
          x.set_int(k, 0, (xm >> k) & 1);
        solvable = a.mul(x) == b;
      }
      const auto got = solve_linear(a, b);
      CHECK(got.has_value() == solvable);
      if (got)
        CHECK(a.mul(*got) == b);
    }
}

TEST_CASE("min_poly on the stated examples") {
  const Matrix jordan2 = Matrix::from_int_rows(f5, {{0, 1}, {0, 0}});
  CHECK(min_poly(jordan2) ==
        std::vector<Scalar>{f5.zero(), f5.zero(), f5.one()}); // t^2

  const Matrix id4 = Matrix::identity(f5, 4);
  CHECK(min_poly(id4) == std::vector<Scalar>{f5.from_int(-1), f5.one()}); // t-1

  // companion matrix of t^2 + t + 1 over GF(2)
  const Matrix comp = Matrix::from_int_rows(f2, {{0, 1}, {1, 1}});
  CHECK(min_poly(comp) ==
        std::vector<Scalar>{f2.one(), f2.one(), f2.one()});

  CHECK_THROWS_AS(min_poly(Matrix(f5, 2, 3)), UsageError);
  CHECK(min_poly(Matrix(f5, 0, 0)) == std::vector<Scalar>{f5.one()});
  CHECK(min_poly(Matrix(f5, 1, 1)) ==
        std::vector<Scalar>{f5.zero(), f5.one()}); // t on the zero map
}

TEST_CASE("rank-nullity and annihilation properties on random matrices") {
  Rng rng(1234);
  const FieldSpec fp = FieldSpec::prime(32003);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 1 + static_cast<int>(rng.below(8));
    const int cols = 1 + static_cast<int>(rng.below(8));
    const Matrix m = random_matrix(fp, rows, cols, rng, 32003);
    const Matrix k = kernel(m);
    CHECK(rank(m) + k.cols() == cols);
    CHECK(m.mul(k).is_zero());

    const Matrix sq = random_matrix(fp, cols, cols, rng, 7);
    CHECK(eval_poly(min_poly(sq), sq).is_zero());
  }
}

TEST_CASE("fraction-free elimination over Q matches a plain Gauss oracle") {
  Rng rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 1 + static_cast<int>(rng.below(6));
    const int cols = 1 + static_cast<int>(rng.below(6));
    Matrix m(fq, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m.set(i, j, fq.from_fraction(static_cast<std::int64_t>(rng.below(19)) - 9,
                                     1 + static_cast<std::int64_t>(rng.below(6))));
    CHECK(rank(m) == rank_oracle_q(m));
    const Matrix k = kernel(m);
    CHECK(m.mul(k).is_zero());
    CHECK(rank(m) + k.cols() == cols);

    // consistent systems solve exactly
    Matrix x(fq, cols, 1);
    for (int j = 0; j < cols; ++j)
      x.set(j, 0, fq.from_fraction(static_cast<std::int64_t>(rng.below(9)) - 4,
                                   1 + static_cast<std::int64_t>(rng.below(4))));
    const auto sol = solve_linear(m, m.mul(x));
    REQUIRE(sol.has_value());
    CHECK(m.mul(*sol) == m.mul(x));
  }
}

TEST_CASE("inverse") {
  const Matrix a = Matrix::from_int_rows(f5, {{1, 2}, {3, 4}});
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a.mul(*inv) == Matrix::identity(f5, 2));
  CHECK_FALSE(inverse(Matrix(f5, 2, 2)).has_value());

  Rng rng(5);
  Matrix q(fq, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      q.set(i, j, fq.from_fraction(static_cast<std::int64_t>(rng.below(9)) - 4,
                                   1 + static_cast<std::int64_t>(rng.below(5))));
  const auto qi = inverse(q);
  if (qi)
    CHECK(q.mul(*qi) == Matrix::identity(fq, 3));
}

TEST_CASE("echelon basis accumulates and represents") {
  EchelonBasis eb(f5, 3, 8);
  Matrix v1 = Matrix::from_int_rows(f5, {{1, 2, 0}});
  Matrix v2 = Matrix::from_int_rows(f5, {{0, 1, 1}});
  CHECK(eb.insert(v1));
  CHECK(eb.insert(v2));
  // 2*v1 + 3*v2 is dependent
  Matrix v3 = v1.scaled(f5.from_int(2)).add(v2.scaled(f5.from_int(3)));
  CHECK_FALSE(eb.insert(v3));
  const auto rep = eb.representation(v3);
  REQUIRE(rep.has_value());
  CHECK((*rep)[0] == f5.from_int(2));
  CHECK((*rep)[1] == f5.from_int(3));
  CHECK(eb.rank() == 2);
  CHECK_FALSE(eb.contains(Matrix::from_int_rows(f5, {{0, 0, 1}})));
}

TEST_CASE("matrix block and stacking helpers") {
  const Matrix a = Matrix::from_int_rows(f5, {{1, 2}});
  const Matrix b = Matrix::from_int_rows(f5, {{3}});
  const Matrix d = Matrix::block_diag(a, b);
  CHECK(d.rows() == 2);
  CHECK(d.cols() == 3);
  CHECK(d.at(1, 2) == f5.from_int(3));
  CHECK(d.at(0, 2) == f5.zero());
  CHECK(a.transpose().rows() == 2);
  CHECK(a.hstack(Matrix::from_int_rows(f5, {{4}})).cols() == 3);
  const Matrix n = Matrix::from_int_rows(f5, {{0, 1}, {0, 0}});
  CHECK(n.pow(2).is_zero());
  CHECK(n.pow(0) == Matrix::identity(f5, 2));
}
