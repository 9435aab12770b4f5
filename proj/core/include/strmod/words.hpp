#ifndef STRMOD_WORDS_HPP
#define STRMOD_WORDS_HPP
//
// strmod / words
// Words over the alphabet {x, y, x-, y-}: parsing, validation, involutions,
// cuts and truncations, and the cyclic words naming band families.
//
// A word avoids the relation pairs xy, yx, x-y-, y-x- and the backtracking
// pairs aa-, a-a. Infinite stabilising ends are stored as constant tails
// around a finite core. Two spellings of the same diagram are identified:
// core letters equal to an adjacent tail letter are absorbed into the tail,
// and a word consisting of a single tail is stored with the tail on the
// right (the parser reads such spellings the same way).
//
// Concrete syntax (ASCII, whitespace ignored): letters x y X Y, capitals
// are formal inverses; "a^inf" marks a constant infinite tail at either
// end; "band(...)" wraps a cyclic word.
//

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strmod/errors.hpp"

namespace strmod {

enum class Sym : unsigned char { X, Y };
enum class Dir : unsigned char { Direct, Inverse };

struct Letter {
  Sym sym;
  Dir dir;

  bool operator==(const Letter&) const = default;
  bool is_inverse() const { return dir == Dir::Inverse; }
  Letter inverted() const {
    return {sym, dir == Dir::Direct ? Dir::Inverse : Dir::Direct};
  }
  char to_char() const; // 'x', 'y', 'X', 'Y'
  /// Position in the letter order x < y < x- < y-.
  int rank() const;
  static Letter from_char(char c); // throws UsageError on other characters
};

/// True when b may follow a (no relation pair, no backtracking pair).
bool adjacent_ok(const Letter& a, const Letter& b);

class StringWord {
public:
  /// Canonicalizing constructor; throws DomainError when some adjacent pair
  /// is forbidden.
  StringWord(std::optional<Letter> left_tail, std::vector<Letter> core,
             std::optional<Letter> right_tail);

  static StringWord empty();
  static StringWord finite(std::vector<Letter> core);

  const std::optional<Letter>& left_tail() const { return left_; }
  const std::vector<Letter>& core() const { return core_; }
  const std::optional<Letter>& right_tail() const { return right_; }

  bool is_finite() const { return !left_ && !right_; }
  /// Letters in the core.
  int core_size() const { return static_cast<int>(core_.size()); }
  /// Vertices of a finite word (= core letters + 1). Throws on infinite.
  int vertex_count() const;

  /// Letter at position j: core letters sit at 0 .. core_size()-1, right
  /// tail letters at core_size(), core_size()+1, ..., left tail letters at
  /// -1, -2, ... Throws UsageError when j reaches into a missing tail.
  Letter letter_at(int j) const;
  bool has_letter_at(int j) const;

  bool operator==(const StringWord&) const = default;

private:
  std::optional<Letter> left_;
  std::vector<Letter> core_;
  std::optional<Letter> right_;
};

class PeriodicWord {
public:
  /// Validates cyclic adjacency (including the wrap pair), primitivity, the
  /// presence of both symbols, and length >= 2.
  explicit PeriodicWord(std::vector<Letter> cycle);

  const std::vector<Letter>& cycle() const { return cycle_; }
  int period() const { return static_cast<int>(cycle_.size()); }

  bool operator==(const PeriodicWord&) const = default;

private:
  std::vector<Letter> cycle_;
};

// -- text form ---------------------------------------------------------------

StringWord parse_word(std::string_view text);
PeriodicWord parse_band(std::string_view text);

std::string serialize(const StringWord& w);
std::string serialize(const PeriodicWord& pw);

struct ValidationReport {
  bool ok = false;
  std::string message;                  // empty when ok
  std::optional<std::size_t> position;  // offset into the input when known
};

/// Never throws; accepts both plain words and "band(...)" forms.
ValidationReport validate(std::string_view text);

// -- involutions and canonical form ------------------------------------------

/// Each letter a replaced by a-; an involution.
StringWord inverse_word(const StringWord& w);
PeriodicWord inverse_word(const PeriodicWord& pw);

/// Reverse the letter order and invert every letter (tails swap ends).
/// Names the same diagram read backwards.
StringWord reverse_inverse(const StringWord& w);

/// Lexicographic minimum of {w, reverse_inverse(w)}; tails compared before
/// cores, letters ordered x < y < x- < y-. Idempotent.
StringWord canonical_form(const StringWord& w);

// -- cuts and truncations ------------------------------------------------------

enum class ConnectorOrientation { InverseConnector, DirectConnector };

struct ConcatSplitResult {
  StringWord sub;  // submodule side
  StringWord quot; // quotient side
  Letter connector;
  ConnectorOrientation orientation;
};

/// Remove core letter j; the two vertex intervals become the returned words.
/// An inverse connector points from the right piece into the left one, so the
/// left piece is the submodule side; a direct connector swaps the roles.
ConcatSplitResult concat_split(const StringWord& w, int j);

/// Cut at an arbitrary letter position (tails allowed), same orientation
/// rule. Positions as in StringWord::letter_at.
ConcatSplitResult cut_at(const StringWord& w, int j);

/// Replace each infinite tail by `depth` copies of its letter.
StringWord truncate_end(const StringWord& w, int depth);

// -- enumeration (exhaustive suites) ------------------------------------------

/// All valid finite letter sequences with 0 <= length <= max_len.
std::vector<std::vector<Letter>> enumerate_valid_cores(int max_len);

/// All valid finite words with at most max_letters core letters.
std::vector<StringWord> enumerate_finite_words(int max_letters);

/// All valid canonical words with core length <= max_core, every tail
/// combination included.
std::vector<StringWord> enumerate_words(int max_core);

} // namespace strmod

#endif
