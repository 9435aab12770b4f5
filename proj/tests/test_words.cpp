#include <doctest.h>

#include "strmod/words.hpp"

using namespace strmod;

namespace {
const Letter lx{Sym::X, Dir::Direct};
const Letter ly{Sym::Y, Dir::Direct};
const Letter lX{Sym::X, Dir::Inverse};
const Letter lY{Sym::Y, Dir::Inverse};
} // namespace

TEST_CASE("adjacency rules") {
  // relation pairs forbidden
  CHECK_FALSE(adjacent_ok(lx, ly));
  CHECK_FALSE(adjacent_ok(ly, lx));
  CHECK_FALSE(adjacent_ok(lX, lY));
  CHECK_FALSE(adjacent_ok(lY, lX));
  // backtracking forbidden
  CHECK_FALSE(adjacent_ok(lx, lX));
  CHECK_FALSE(adjacent_ok(lX, lx));
  CHECK_FALSE(adjacent_ok(ly, lY));
  CHECK_FALSE(adjacent_ok(lY, ly));
  // everything else allowed
  CHECK(adjacent_ok(lx, lx));
  CHECK(adjacent_ok(lx, lY));
  CHECK(adjacent_ok(lY, lx));
  CHECK(adjacent_ok(lX, ly));
}

TEST_CASE("parsing the running examples") {
  const StringWord c1 = parse_word("xY");
  CHECK(c1.core() == std::vector<Letter>{lx, lY});
  CHECK(c1.is_finite());
  CHECK(c1.vertex_count() == 3);

  const StringWord trivial = parse_word("");
  CHECK(trivial.core().empty());
  CHECK(trivial.vertex_count() == 1);

  const StringWord c_inf = parse_word("x^inf Y^inf");
  CHECK(c_inf.left_tail() == lx);
  CHECK(c_inf.core().empty());
  CHECK(c_inf.right_tail() == lY);
  CHECK_FALSE(c_inf.is_finite());
  CHECK_THROWS_AS(c_inf.vertex_count(), UsageError);

  // whitespace is ignored
  CHECK(parse_word(" x Y ") == c1);
}

TEST_CASE("parse errors carry positions and name the pair") {
  CHECK_THROWS_WITH_AS(parse_word("xy"), doctest::Contains("\"xy\""),
                       ParseError);
  try {
    parse_word("xy");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_WITH_AS(parse_word("xX"), doctest::Contains("backtracking"),
                       ParseError);
  CHECK_NOTHROW(parse_word("xYx"));
  CHECK_THROWS_AS(parse_word("xZ"), ParseError);
  CHECK_THROWS_AS(parse_word("x^in"), ParseError);
  CHECK_THROWS_AS(parse_word("x y^inf x"), ParseError); // tail inside
}

TEST_CASE("validate returns reports instead of throwing") {
  CHECK(validate("xY").ok);
  CHECK(validate("").ok);
  const ValidationReport bad = validate("xy");
  CHECK_FALSE(bad.ok);
  CHECK(bad.position == 1);
  CHECK(validate("band(xY)").ok);
  CHECK_FALSE(validate("band(xYxY)").ok);
  CHECK_FALSE(validate("\x01\x02").ok);
}

TEST_CASE("lone tails are canonical on the right") {
  const StringWord w = parse_word("x^inf");
  CHECK_FALSE(w.left_tail().has_value());
  CHECK(w.right_tail() == lx);
  CHECK(serialize(w) == "x^inf");
  // constructing the left-tail spelling lands on the mirror form
  const StringWord direct(lx, {}, std::nullopt);
  CHECK(direct.right_tail() == lX);
  CHECK(serialize(parse_word(serialize(direct))) == serialize(direct));
}

TEST_CASE("tail absorption keeps spellings canonical") {
  CHECK(parse_word("x^inf x x Y") == parse_word("x^inf Y"));
  CHECK(serialize(parse_word("x^inf xxY")) == "x^inf Y");
  CHECK(serialize(parse_word("xY Y^inf")) == "x Y^inf");
}

TEST_CASE("inverse word") {
  CHECK(serialize(inverse_word(parse_word("xY"))) == "Xy");
  CHECK(serialize(inverse_word(parse_word(""))) == "");
  // C_inf goes to D_inf
  CHECK(serialize(inverse_word(parse_word("x^inf Y^inf"))) == "X^inf y^inf");
  // involution
  for (const StringWord& w : enumerate_words(4))
    CHECK(inverse_word(inverse_word(w)) == w);
}

TEST_CASE("reverse_inverse and canonical_form") {
  CHECK(serialize(reverse_inverse(parse_word("xY"))) == "yX");
  CHECK(canonical_form(parse_word("xY")) == parse_word("xY"));
  CHECK(canonical_form(parse_word("yX")) == parse_word("xY"));
  CHECK(serialize(canonical_form(parse_word(""))) == "");
  // D_inf is fixed by reverse_inverse
  const StringWord d_inf = parse_word("X^inf y^inf");
  CHECK(reverse_inverse(d_inf) == d_inf);

  for (const StringWord& w : enumerate_words(5)) {
    CHECK(canonical_form(w) == canonical_form(reverse_inverse(w)));
    CHECK(canonical_form(canonical_form(w)) == canonical_form(w));
    CHECK(reverse_inverse(reverse_inverse(w)) == w);
  }
}

TEST_CASE("concat_split on the running examples") {
  const StringWord c1 = parse_word("xY");
  const ConcatSplitResult at1 = concat_split(c1, 1);
  CHECK(at1.orientation == ConnectorOrientation::InverseConnector);
  CHECK(serialize(at1.sub) == "x");
  CHECK(serialize(at1.quot) == "");

  const ConcatSplitResult at0 = concat_split(c1, 0);
  CHECK(at0.orientation == ConnectorOrientation::DirectConnector);
  CHECK(serialize(at0.sub) == "Y");
  CHECK(serialize(at0.quot) == "");

  const StringWord mixed = parse_word("X^inf y X^inf");
  const ConcatSplitResult aty = concat_split(mixed, 0);
  CHECK(aty.orientation == ConnectorOrientation::DirectConnector);
  CHECK(serialize(aty.sub) == "X^inf");  // the right piece
  CHECK(serialize(aty.quot) == "x^inf"); // lone left tail, stored mirrored

  CHECK_THROWS_AS(concat_split(c1, 2), UsageError);
  CHECK_THROWS_AS(concat_split(mixed, 1), UsageError); // tail letter
  CHECK_THROWS_AS(concat_split(mixed, -1), UsageError);
}

TEST_CASE("cut_at reaches tail letters") {
  const StringWord mixed = parse_word("X^inf y X^inf");
  const ConcatSplitResult cut = cut_at(mixed, 1); // first right-tail letter
  CHECK(cut.orientation == ConnectorOrientation::InverseConnector);
  CHECK(serialize(cut.sub) == "X^inf y");
  CHECK(serialize(cut.quot) == "X^inf");
  const ConcatSplitResult deeper = cut_at(mixed, 3);
  CHECK(serialize(deeper.sub) == "X^inf yXX");
  CHECK_THROWS_AS(cut_at(parse_word("xY"), 5), UsageError);
}

TEST_CASE("vertex additivity of cuts on finite words") {
  for (const StringWord& w : enumerate_finite_words(6))
    for (int j = 0; j < w.core_size(); ++j) {
      const ConcatSplitResult cut = concat_split(w, j);
      CHECK(cut.sub.vertex_count() + cut.quot.vertex_count() ==
            w.vertex_count());
    }
}

TEST_CASE("truncate_end") {
  const StringWord c_inf = parse_word("x^inf Y^inf");
  CHECK(serialize(truncate_end(c_inf, 2)) == "xxYY");
  CHECK(serialize(truncate_end(c_inf, 0)) == "");
  CHECK(truncate_end(parse_word("xY"), 7) == parse_word("xY"));
  // D_inf truncates to the letterwise inverse of C_i
  const StringWord d_inf = parse_word("X^inf y^inf");
  CHECK(truncate_end(d_inf, 3) ==
        inverse_word(truncate_end(c_inf, 3)));
  CHECK_THROWS_AS(truncate_end(c_inf, -1), UsageError);
}

TEST_CASE("parse_band and its validity conditions") {
  const PeriodicWord b = parse_band("band(xY)");
  CHECK(b.period() == 2);
  CHECK(b.cycle() == std::vector<Letter>{lx, lY});
  CHECK(serialize(b) == "band(xY)");

  CHECK_THROWS_WITH_AS(parse_band("band(xYxY)"), doctest::Contains("power"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_band("band(xx)"),
                       doctest::Contains("both x- and y-letters"), ParseError);
  CHECK_THROWS_AS(parse_band("band(x)"), ParseError);
  CHECK_THROWS_AS(parse_band("band(xy)"), ParseError);   // relation pair
  CHECK_THROWS_AS(parse_band("band(xY"), ParseError);    // missing paren
  CHECK_THROWS_AS(parse_band("band(Yx)x"), ParseError);  // trailing junk
  CHECK_NOTHROW(parse_band("band(xxYY)"));
  CHECK_NOTHROW(parse_band(" band( x x Y Y )"));
  // rotations are their own spellings
  CHECK(parse_band("band(Yx)").period() == 2);
  // inverse of a band
  CHECK(serialize(inverse_word(b)) == "band(Xy)");
}

TEST_CASE("words round-trip through their spelling") {
  for (const StringWord& w : enumerate_words(5)) {
    CHECK(parse_word(serialize(w)) == w);
    CHECK(serialize(parse_word(serialize(w))) == serialize(w));
  }
}

TEST_CASE("validity is preserved by the word operations, exhaustively") {
  // constructors validate, so surviving construction is the check
  for (const StringWord& w : enumerate_words(6)) {
    CHECK_NOTHROW(inverse_word(w));
    CHECK_NOTHROW(reverse_inverse(w));
    CHECK_NOTHROW(truncate_end(w, 3));
    for (int j = 0; j < w.core_size(); ++j)
      CHECK_NOTHROW(concat_split(w, j));
    if (w.right_tail())
      CHECK_NOTHROW(cut_at(w, w.core_size() + 1));
    if (w.left_tail())
      CHECK_NOTHROW(cut_at(w, -2));
  }
}

TEST_CASE("enumerations have the expected sizes") {
  // each letter has exactly two allowed successors: 4 * 2^(n-1) words of
  // length n, plus the empty word
  CHECK(enumerate_valid_cores(0).size() == 1);
  CHECK(enumerate_valid_cores(1).size() == 5);
  CHECK(enumerate_valid_cores(6).size() == 253);
  CHECK(enumerate_finite_words(8).size() == 1021);
  // every enumerated word is canonical and distinct
  const auto words = enumerate_words(3);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      CHECK_FALSE(words[i] == words[j]);
}
