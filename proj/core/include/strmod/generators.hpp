#ifndef STRMOD_GENERATORS_HPP
#define STRMOD_GENERATORS_HPP
//
// strmod / generators
// Seeded samplers for words, bands, catalog modules and matrices. Every
// draw is a pure function of the Rng state, so suites are reproducible.
//

#include "strmod/classify.hpp"
#include "strmod/modrep.hpp"
#include "strmod/rng.hpp"

namespace strmod {

/// Random valid finite word with at most max_core letters (length uniform,
/// letters by a random walk over the allowed successors).
StringWord random_finite_word(Rng& rng, int max_core);

/// Random valid stabilising word: tails drawn uniformly from the
/// compatible options (possibly absent), core as above.
StringWord random_word(Rng& rng, int max_core);

/// Random primitive cyclic word with period between 2 and max_period.
PeriodicWord random_band_word(Rng& rng, int max_period);

/// Nonzero scalar.
Scalar random_unit(Rng& rng, const FieldSpec& f);

Matrix random_invertible(Rng& rng, const FieldSpec& f, int n);

/// A string module with at most max_vertices vertices or a band module
/// with period <= max_period and Jordan size <= max_jordan, as drawn.
ModuleRep random_catalog_indecomposable(Rng& rng, const FieldSpec& f,
                                        int max_vertices, int max_period,
                                        int max_jordan);

/// Direct sum of parts catalog indecomposables, conjugated by a random
/// invertible base change. Returns the parts as well.
struct ConjugatedSum {
  ModuleRep module;
  std::vector<ModuleRep> parts;
};
ConjugatedSum random_conjugated_sum(Rng& rng, const FieldSpec& f, int min_parts,
                                    int max_parts, int max_vertices,
                                    int max_period, int max_jordan);

/// Random module of dimension <= max_dim (conjugated sum of catalog
/// modules; by the classification this exhausts the isomorphism classes).
ModuleRep random_module(Rng& rng, const FieldSpec& f, int max_dim);

DvrCatalogObject random_dvr_object(Rng& rng, std::int64_t max_mult,
                                   int max_finite_summands,
                                   std::int64_t max_exponent);

} // namespace strmod

#endif
