#ifndef STRMOD_CLASSIFY_HPP
#define STRMOD_CLASSIFY_HPP
//
// strmod / classify
// Chain conditions of string modules decided on the word, the canonical
// noetherian-submodule / artinian-quotient splitting, and the reflexive
// catalog over a complete discrete valuation ring.
//
// Tail typing: a left tail of a direct letter or a right tail of an inverse
// letter points into the word (every basis vector is divisible), which is
// the artinian direction; the two mirrored cases generate and are the
// noetherian direction.
//

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strmod/words.hpp"

namespace strmod {

enum class Classification { FiniteLength, Artinian, Noetherian, MixedReflexive };

std::string to_string(Classification c);
/// Artinian <-> Noetherian; fixes the other two.
Classification swap_chain_conditions(Classification c);

Classification classify_word(const StringWord& w);

/// Cut admissibility for the noetherian-by-artinian split: the connector
/// must point out of the quotient side into the submodule side, the
/// submodule side must classify noetherian-or-finite and the quotient side
/// artinian-or-finite.
bool is_admissible_cut(const StringWord& w, int j);

struct SplitResult {
  StringWord sub;  // noetherian or finite
  StringWord quot; // artinian or finite
  /// Cut position for mixed words; empty for the trivial splits, where the
  /// empty word stands for the zero module on the missing side.
  std::optional<int> split_index;
};

/// Trivial split for pure words; for mixed words the smallest admissible
/// cut position >= 0 (scanning the core letters and then the right tail).
SplitResult arno_split(const StringWord& w);

struct UniquenessReport {
  int j1 = 0, j2 = 0;
  /// Positional distance of the cuts = how many vertices move between the
  /// submodule sides.
  int vertex_difference = 0;
  /// Both cuts re-concatenate to the input and differ by exactly the letter
  /// run between them.
  bool containment_ok = false;
  Classification sub1_class, sub2_class;
};

/// Compares two admissible cuts; throws UsageError on an inadmissible index.
UniquenessReport split_uniqueness_check(const StringWord& w, int j1, int j2);

struct DualCompatReport {
  Classification original;
  Classification of_inverse;
  bool ok = false;
};

/// Checks classify(inverse_word(w)) == swap(classify(w)).
DualCompatReport classify_dual_compat(const StringWord& w);

// -- the complete-DVR reflexive catalog ---------------------------------------

/// Multiset A^a + Q^b + E^c + finite part, naming a reflexive module over a
/// complete discrete valuation ring: copies of the ring, its fraction
/// field, the injective envelope of the residue field, and A/m^d summands.
struct DvrCatalogObject {
  std::int64_t a = 0, b = 0, c = 0;
  std::vector<std::int64_t> finite; // exponents d >= 1, kept sorted

  static DvrCatalogObject make(std::int64_t a, std::int64_t b, std::int64_t c,
                               std::vector<std::int64_t> finite);
  bool operator==(const DvrCatalogObject&) const = default;
};

/// Swaps the A- and E-multiplicities; Q and the finite part are self-dual.
/// An involution.
DvrCatalogObject dvr_dual(const DvrCatalogObject& o);
Classification dvr_classify(const DvrCatalogObject& o);
DvrCatalogObject dvr_add(const DvrCatalogObject& o1, const DvrCatalogObject& o2);

/// Textual form "A^a + Q^b + E^c + [d1,d2,...]".
std::string serialize(const DvrCatalogObject& o);
DvrCatalogObject parse_dvr(std::string_view text);

} // namespace strmod

#endif
