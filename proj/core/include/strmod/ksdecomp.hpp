#ifndef STRMOD_KSDECOMP_HPP
#define STRMOD_KSDECOMP_HPP
//
// strmod / ksdecomp
// Endomorphism algebras, Jacobson radicals by trace form, Fitting splits,
// and the full decomposition into indecomposables with certificates.
//
// Over GF(p) the indecomposability answers are exact: after passing to
// S = End/rad, Wedderburn s little theorem plus the Frobenius fixed space of
// a commutative S decide locality outright, and every "no" ships an explicit
// Fitting split obtained from a lifted idempotent. Over Q only dim S = 1 is
// certified; an unresolved case raises CertificationError rather than
// guessing.
//

#include <optional>
#include <vector>

#include "strmod/modrep.hpp"

namespace strmod {

struct EndoAlgebra {
  ModuleRep module;
  std::vector<Matrix> basis; // dim(module) x dim(module) intertwiners
  /// Structure constants, index (i * dim + j) * dim + k: coefficient of
  /// basis[k] in basis[i] * basis[j].
  std::vector<Scalar> table;
  /// Coordinates of the identity endomorphism.
  std::vector<Scalar> one;

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<Scalar> mul_coords(const std::vector<Scalar>& a,
                                 const std::vector<Scalar>& b) const;
};

EndoAlgebra endo_algebra(const ModuleRep& m);

/// Jacobson radical via the trace bilinear form: valid over Q, and over
/// GF(p) when p exceeds the algebra dimension (checked; the matrix-trace
/// shortcut additionally wants p > dim(module), otherwise the regular
/// representation is used). Throws UsageError naming the required bound
/// when the characteristic is too small.
struct RadicalBasis {
  Matrix coords;                // dim(endo) x r, columns in endo coordinates
  std::vector<Matrix> matrices; // the same elements as endomorphisms
  int dim() const { return coords.cols(); }
};
RadicalBasis radical_of_endo(const EndoAlgebra& e);

struct FittingSplit {
  ModuleRep part_kernel; // ker phi^dim
  ModuleRep part_image;  // im phi^dim
  /// Invertible base change: witness^-1 * act * witness is block diagonal,
  /// kernel block first.
  Matrix witness;
};

/// M = ker phi^d + im phi^d for an endomorphism phi; a split is returned
/// when both parts are nonzero (phi neither nilpotent nor invertible).
std::optional<FittingSplit> fitting_split(const ModuleRep& m,
                                          const Matrix& endo);

struct Certificate {
  enum class Kind { LocalEndo, MonteCarlo };
  Kind kind = Kind::LocalEndo;
  /// dim End/rad (the radical codimension) for LocalEndo.
  int residue_dim = 1;
  int samples = 0;
  std::uint64_t sample_space = 0;
};

struct IndecompResult {
  bool indecomposable = false;
  Certificate certificate;           // meaningful on yes
  std::optional<FittingSplit> split; // present on no
};

/// Exact over GF(p); see the header note. mc_budget bounds the split
/// search rounds for a noncommutative residue algebra.
IndecompResult is_indecomposable(const ModuleRep& m, Rng rng,
                                 int mc_budget = 20);

struct DecompositionPart {
  ModuleRep rep;
  int multiplicity;
  Certificate certificate;
};

struct DecompositionResult {
  std::vector<DecompositionPart> parts;
  /// witness^-1 * act(original) * witness equals the block diagonal of the
  /// parts, each repeated multiplicity times, in listed order.
  Matrix witness;
  int total_dim;
};

/// Recursive Fitting splitting with per-branch deterministic seeds, then
/// isomorphism aggregation of the leaves.
DecompositionResult decompose(const ModuleRep& m, std::uint64_t seed,
                              int mc_budget = 20);

} // namespace strmod

#endif
