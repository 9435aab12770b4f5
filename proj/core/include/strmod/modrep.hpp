#ifndef STRMOD_MODREP_HPP
#define STRMOD_MODREP_HPP
//
// strmod / modrep
// Finite-dimensional modules over truncations k[x,y]/(xy, x^N, y^N), given as
// a pair of commuting-to-zero nilpotent action matrices. String and band
// modules are materialized from their words; Matlis duality at this finite
// level is the vector-space dual with transposed actions.
//

#include <optional>
#include <vector>

#include "strmod/matrix.hpp"
#include "strmod/polynomials.hpp"
#include "strmod/rng.hpp"
#include "strmod/words.hpp"

namespace strmod {

class ModuleRep {
public:
  /// Validates dimensions, x y = y x = 0 and nilpotency of both actions.
  static ModuleRep make(Matrix act_x, Matrix act_y);

  const FieldSpec& field() const { return x_.field(); }
  int dim() const { return x_.rows(); }
  const Matrix& act_x() const { return x_; }
  const Matrix& act_y() const { return y_; }
  const Matrix& act(Sym s) const { return s == Sym::X ? x_ : y_; }

  bool operator==(const ModuleRep& o) const { return x_ == o.x_ && y_ == o.y_; }

private:
  ModuleRep(Matrix x, Matrix y) : x_(std::move(x)), y_(std::move(y)) {}
  Matrix x_, y_;
};

/// Basis of Hom(source, target): matrices H with H X_s = X_t H, H Y_s = Y_t H.
struct HomSpace {
  std::vector<Matrix> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Isomorphism class of an indecomposable finite-length k[t,t^-1]-module on
/// which t acts invertibly: a Jordan block J_m(lambda) with lambda != 0, or
/// k[t]/(f^e) with f monic and f(0) != 0.
class BandParam {
public:
  static BandParam jordan(const FieldSpec& f, const Scalar& eigenvalue, int size);
  static BandParam companion(Poly f, int power);

  /// The invertible matrix of t on V.
  Matrix twist() const;
  int dim() const;

private:
  BandParam() = default;
  std::optional<std::pair<Scalar, int>> jordan_;
  std::optional<std::pair<Poly, int>> companion_;
  FieldSpec field_ = FieldSpec::rationals();
};

// -- construction --------------------------------------------------------------

/// Basis = vertices of the word; a direct letter at position j maps vertex j
/// to vertex j+1, an inverse letter maps vertex j+1 to vertex j. Finite
/// words only; truncate first for the infinite ones.
ModuleRep materialize_string(const StringWord& w, FieldSpec field);

/// Band module of dimension period * dim(V). The wrap letter composes with
/// the twist: a direct wrap maps vertex n-1 to vertex 0 through T, an
/// inverse wrap maps vertex 0 to vertex n-1 through T^-1.
ModuleRep materialize_band(const PeriodicWord& pw, const BandParam& v,
                           FieldSpec field);

/// Same, with an explicit invertible twist matrix (not necessarily
/// indecomposable as a k[t,t^-1]-module).
ModuleRep materialize_band_twist(const PeriodicWord& pw, const Matrix& twist);

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

/// Matlis dual at finite length: transposed actions on the dual basis.
ModuleRep dual(const ModuleRep& m);

/// Matrix of the evaluation map m -> dual(dual(m)) in the canonical bases.
/// With the transpose convention the double dual is literally m again and
/// the unit is the identity; it is still checked to intertwine.
Matrix double_dual_unit(const ModuleRep& m);

// -- hom spaces -----------------------------------------------------------------

/// Intertwiner basis via one nilpotent action's chain structure; the second
/// action is imposed on the reduced space.
HomSpace hom_basis(const ModuleRep& src, const ModuleRep& tgt);
/// Literal kernel of the stacked intertwining system. Quadratic memory;
/// kept as the reference route for cross-checking.
HomSpace hom_basis_dense(const ModuleRep& src, const ModuleRep& tgt);
int hom_dim(const ModuleRep& src, const ModuleRep& tgt);

// -- socle and radical structure --------------------------------------------------

/// Columns span soc m = ker x intersect ker y.
Matrix socle(const ModuleRep& m);
/// Columns span rad m = im x + im y.
Matrix radical(const ModuleRep& m);
/// dim(m / rad m).
int top_dim(const ModuleRep& m);
/// Columns span soc^j = ker x^j intersect ker y^j (x y = 0 collapses the
/// mixed monomials, so these two kernels suffice).
Matrix socle_power(const ModuleRep& m, int j);
/// Dimensions of soc^1 < soc^2 < ... ending at dim m.
std::vector<int> socle_series(const ModuleRep& m);
/// Dimensions of rad^0 = m > rad^1 > ... ending at 0.
std::vector<int> radical_series(const ModuleRep& m);

// -- submodules and quotients ------------------------------------------------------

struct SubQuotient {
  ModuleRep sub;
  Matrix inclusion; // dim(m) x dim(sub), intertwines the actions
};

/// Smallest action-stable subspace containing the given column vectors.
SubQuotient submodule_generated(const ModuleRep& m,
                                const std::vector<Matrix>& generators);
/// Wrap an action-stable subspace (columns independent) as a module.
SubQuotient submodule_on_basis(const ModuleRep& m, const Matrix& basis_cols);
/// Quotient by an action-stable inclusion (throws UsageError otherwise).
ModuleRep quotient(const ModuleRep& m, const Matrix& inclusion);

// -- isomorphism ----------------------------------------------------------------

struct IsoResult {
  bool isomorphic = false;
  /// Set on yes-answers: an invertible intertwiner target <- source.
  std::optional<Matrix> witness;
  /// No-answers are certain on dimension or hom-dimension mismatch and when
  /// the hom space is zero; otherwise they are one-sided Monte Carlo with
  /// failure probability <= (dim / sample_space)^samples.
  bool certain = true;
  int samples = 0;
  std::uint64_t sample_space = 0;
};

IsoResult is_isomorphic(const ModuleRep& a, const ModuleRep& b, Rng& rng,
                        int mc_budget = 20);

} // namespace strmod

#endif
