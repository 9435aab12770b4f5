#ifndef STRMOD_POLYNOMIALS_HPP
#define STRMOD_POLYNOMIALS_HPP
//
// strmod / polynomials
// Dense univariate polynomials over an exact field, plus the factorization
// pieces the decomposition engine needs: squarefree decomposition, and over
// GF(p) distinct-degree and equal-degree splitting. Over Q only squarefree
// multiplicities and small rational roots are attempted; callers must treat
// a missing split as "unknown", never as "irreducible".
//

#include <optional>
#include <utility>
#include <vector>

#include "strmod/matrix.hpp"
#include "strmod/rng.hpp"

namespace strmod {

/// Coefficients low to high, no trailing zeros; the zero polynomial has an
/// empty coefficient list.
struct Poly {
  FieldSpec field;
  std::vector<Scalar> coeff;

  explicit Poly(FieldSpec f) : field(f) {}
  Poly(FieldSpec f, std::vector<Scalar> c);

  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  bool is_zero() const { return coeff.empty(); }
  bool is_constant() const { return coeff.size() <= 1; }
  bool is_monic() const;
  Scalar leading() const;

  static Poly zero(FieldSpec f) { return Poly(f); }
  static Poly constant(FieldSpec f, const Scalar& c);
  static Poly x(FieldSpec f); // the monomial t
  static Poly from_ints(FieldSpec f, const std::vector<std::int64_t>& c);

  bool operator==(const Poly& o) const;
  std::string to_string() const; // e.g. "t^2 + 3 t + 1"
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Scalar& c);
/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly make_monic(const Poly& a);
/// Monic gcd.
Poly gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
Scalar eval(const Poly& a, const Scalar& x);
/// base^e mod m, with an arbitrary-precision exponent.
Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& m);

/// Companion matrix of a monic polynomial of degree >= 1.
Matrix companion_matrix(const Poly& f);

/// g = gcd(a, b) monic, with u a + v b = g.
struct PolyExtGcd {
  Poly g, u, v;
};
PolyExtGcd ext_gcd(const Poly& a, const Poly& b);

struct PolyPower {
  Poly factor; // monic, squarefree
  int multiplicity;
};

/// f = prod factor_i^{multiplicity_i} with pairwise coprime squarefree
/// factors (Yun over Q; the char-p variant handles p-th powers).
std::vector<PolyPower> squarefree_decomposition(const Poly& f);

/// A nontrivial coprime factorization f = g * h (both nonconstant,
/// gcd(g, h) = 1), if one can be found. Over GF(p) this succeeds exactly
/// when f is not a power of a single irreducible. Over Q it is best-effort
/// (squarefree multiplicities and small rational roots only).
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& f, Rng& rng);

} // namespace strmod

#endif
