#include "strmod/classify.hpp"

#include <algorithm>
#include <sstream>

namespace strmod {

std::string to_string(Classification c) {
  switch (c) {
  case Classification::FiniteLength:
    return "finite-length";
  case Classification::Artinian:
    return "artinian";
  case Classification::Noetherian:
    return "noetherian";
  case Classification::MixedReflexive:
    return "mixed-reflexive";
  }
  throw Error("internal: unknown classification");
}

Classification swap_chain_conditions(Classification c) {
  switch (c) {
  case Classification::Artinian:
    return Classification::Noetherian;
  case Classification::Noetherian:
    return Classification::Artinian;
  default:
    return c;
  }
}

namespace {

bool artinian_type_left(const Letter& l) { return l.dir == Dir::Direct; }
bool artinian_type_right(const Letter& l) { return l.dir == Dir::Inverse; }

} // namespace

Classification classify_word(const StringWord& w) {
  bool any_art = false, any_noeth = false;
  if (w.left_tail())
    (artinian_type_left(*w.left_tail()) ? any_art : any_noeth) = true;
  if (w.right_tail())
    (artinian_type_right(*w.right_tail()) ? any_art : any_noeth) = true;
  if (!any_art && !any_noeth)
    return Classification::FiniteLength;
  if (any_art && any_noeth)
    return Classification::MixedReflexive;
  return any_art ? Classification::Artinian : Classification::Noetherian;
}

namespace {

bool noeth_or_finite(Classification c) {
  return c == Classification::Noetherian || c == Classification::FiniteLength;
}
bool art_or_finite(Classification c) {
  return c == Classification::Artinian || c == Classification::FiniteLength;
}

// rebuild the word from the two cut pieces and the removed connector; the
// left piece may have been normalized to a lone right tail
StringWord reconcat(const ConcatSplitResult& cut) {
  const StringWord& left = cut.orientation == ConnectorOrientation::InverseConnector
                               ? cut.sub
                               : cut.quot;
  const StringWord& right = cut.orientation == ConnectorOrientation::InverseConnector
                                ? cut.quot
                                : cut.sub;
  std::optional<Letter> lt;
  std::vector<Letter> core;
  if (left.right_tail()) {
    // lone-tail word stored right; as a left piece it is a left tail
    lt = left.right_tail()->inverted();
  } else {
    lt = left.left_tail();
    core = left.core();
  }
  core.push_back(cut.connector);
  core.insert(core.end(), right.core().begin(), right.core().end());
  return StringWord(lt, std::move(core), right.right_tail());
}

} // namespace

bool is_admissible_cut(const StringWord& w, int j) {
  if (!w.has_letter_at(j))
    return false;
  const ConcatSplitResult cut = cut_at(w, j);
  return noeth_or_finite(classify_word(cut.sub)) &&
         art_or_finite(classify_word(cut.quot));
}

SplitResult arno_split(const StringWord& w) {
  const Classification c = classify_word(w);
  if (c == Classification::Artinian)
    return {StringWord::empty(), w, std::nullopt};
  if (c == Classification::Noetherian || c == Classification::FiniteLength)
    return {w, StringWord::empty(), std::nullopt};

  // mixed: both tails present; position core_size() (the first right-tail
  // letter) is always admissible, so the scan terminates there at the latest
  for (int j = 0; j <= w.core_size(); ++j) {
    if (!is_admissible_cut(w, j))
      continue;
    ConcatSplitResult cut = cut_at(w, j);
    if (!(reconcat(cut) == w))
      throw Error("internal: cut pieces do not re-concatenate");
    return {cut.sub, cut.quot, j};
  }
  throw Error("internal: no admissible cut for a mixed word");
}

namespace {

const StringWord& left_piece(const ConcatSplitResult& cut) {
  return cut.orientation == ConnectorOrientation::InverseConnector ? cut.sub
                                                                   : cut.quot;
}

} // namespace

UniquenessReport split_uniqueness_check(const StringWord& w, int j1, int j2) {
  if (!is_admissible_cut(w, j1))
    throw UsageError("inadmissible split index " + std::to_string(j1));
  if (!is_admissible_cut(w, j2))
    throw UsageError("inadmissible split index " + std::to_string(j2));
  const ConcatSplitResult c1 = cut_at(w, j1);
  const ConcatSplitResult c2 = cut_at(w, j2);
  UniquenessReport rep;
  rep.j1 = j1;
  rep.j2 = j2;
  rep.vertex_difference = j1 < j2 ? j2 - j1 : j1 - j2;
  rep.sub1_class = classify_word(c1.sub);
  rep.sub2_class = classify_word(c2.sub);
  rep.containment_ok = reconcat(c1) == w && reconcat(c2) == w;
  if (j1 >= 0 && j2 >= 0) {
    // the vertex distance must be visible on the left pieces, except when
    // both tails carry the same letter and the absorbed copies hide it
    const int ext1 = left_piece(c1).core_size();
    const int ext2 = left_piece(c2).core_size();
    const int measured = ext1 < ext2 ? ext2 - ext1 : ext1 - ext2;
    const bool collapsed = w.core_size() == 0 && w.left_tail() &&
                           w.right_tail() && *w.left_tail() == *w.right_tail();
    if (measured != rep.vertex_difference && !(collapsed && measured == 0))
      rep.containment_ok = false;
  }
  return rep;
}

DualCompatReport classify_dual_compat(const StringWord& w) {
  DualCompatReport rep{classify_word(w), classify_word(inverse_word(w)), false};
  rep.ok = rep.of_inverse == swap_chain_conditions(rep.original);
  return rep;
}

// -- DVR catalog -----------------------------------------------------------------

DvrCatalogObject DvrCatalogObject::make(std::int64_t a, std::int64_t b,
                                        std::int64_t c,
                                        std::vector<std::int64_t> finite) {
  if (a < 0 || b < 0 || c < 0)
    throw DomainError("negative multiplicity in a catalog object");
  for (std::int64_t d : finite)
    if (d < 1)
      throw DomainError("finite summand exponents must be >= 1");
  std::sort(finite.begin(), finite.end());
  return DvrCatalogObject{a, b, c, std::move(finite)};
}

DvrCatalogObject dvr_dual(const DvrCatalogObject& o) {
  return DvrCatalogObject{o.c, o.b, o.a, o.finite};
}

Classification dvr_classify(const DvrCatalogObject& o) {
  if (o.a == 0 && o.b == 0 && o.c == 0)
    return Classification::FiniteLength;
  if (o.b == 0 && o.c == 0)
    return Classification::Noetherian;
  if (o.a == 0 && o.b == 0)
    return Classification::Artinian;
  return Classification::MixedReflexive;
}

DvrCatalogObject dvr_add(const DvrCatalogObject& o1, const DvrCatalogObject& o2) {
  std::vector<std::int64_t> finite = o1.finite;
  finite.insert(finite.end(), o2.finite.begin(), o2.finite.end());
  return DvrCatalogObject::make(o1.a + o2.a, o1.b + o2.b, o1.c + o2.c,
                                std::move(finite));
}

std::string serialize(const DvrCatalogObject& o) {
  std::ostringstream os;
  os << "A^" << o.a << " + Q^" << o.b << " + E^" << o.c << " + [";
  for (std::size_t i = 0; i < o.finite.size(); ++i) {
    if (i)
      os << ',';
    os << o.finite[i];
  }
  os << ']';
  return os.str();
}

namespace {

void skip_spaces(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
    ++i;
}

std::int64_t parse_int(std::string_view s, std::size_t& i) {
  skip_spaces(s, i);
  const std::size_t start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9')
    ++i;
  if (i == start)
    throw DomainError("expected an integer in a catalog object at offset " +
                      std::to_string(start));
  std::int64_t v = 0;
  for (std::size_t k = start; k < i; ++k)
    v = v * 10 + (s[k] - '0');
  return v;
}

} // namespace

DvrCatalogObject parse_dvr(std::string_view text) {
  std::int64_t a = 0, b = 0, c = 0;
  std::vector<std::int64_t> finite;
  std::size_t i = 0;
  bool expect_term = true;
  while (true) {
    skip_spaces(text, i);
    if (i >= text.size())
      break;
    if (!expect_term) {
      if (text[i] != '+')
        throw DomainError("expected '+' in a catalog object at offset " +
                          std::to_string(i));
      ++i;
      expect_term = true;
      continue;
    }
    const char t = text[i];
    if (t == 'A' || t == 'Q' || t == 'E') {
      ++i;
      std::int64_t mult = 1;
      skip_spaces(text, i);
      if (i < text.size() && text[i] == '^') {
        ++i;
        mult = parse_int(text, i);
      }
      (t == 'A' ? a : t == 'Q' ? b : c) += mult;
    } else if (t == '[') {
      ++i;
      skip_spaces(text, i);
      if (i < text.size() && text[i] == ']') {
        ++i;
      } else {
        while (true) {
          finite.push_back(parse_int(text, i));
          skip_spaces(text, i);
          if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
          }
          if (i < text.size() && text[i] == ']') {
            ++i;
            break;
          }
          throw DomainError("expected ',' or ']' in a catalog object at offset " +
                            std::to_string(i));
        }
      }
    } else {
      throw DomainError(std::string("unexpected character '") + t +
                        "' in a catalog object at offset " + std::to_string(i));
    }
    expect_term = false;
  }
  if (expect_term && !(a == 0 && b == 0 && c == 0 && finite.empty()))
    throw DomainError("dangling '+' in a catalog object");
  return DvrCatalogObject::make(a, b, c, std::move(finite));
}

} // namespace strmod
