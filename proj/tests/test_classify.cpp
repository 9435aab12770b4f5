#include <doctest.h>

#include "strmod/classify.hpp"
#include "strmod/generators.hpp"
#include "strmod/ksdecomp.hpp"

using namespace strmod;

namespace {
const FieldSpec fp = FieldSpec::prime(32003);
}

TEST_CASE("classification by tail typing") {
  CHECK(classify_word(parse_word("x^inf Y^inf")) == Classification::Artinian);
  CHECK(classify_word(parse_word("X^inf y^inf")) == Classification::Noetherian);
  CHECK(classify_word(parse_word("X^inf y X^inf")) ==
        Classification::MixedReflexive);
  CHECK(classify_word(parse_word("xYx")) == Classification::FiniteLength);
  CHECK(classify_word(parse_word("")) == Classification::FiniteLength);
  // single tails
  CHECK(classify_word(parse_word("X^inf")) == Classification::Artinian);
  CHECK(classify_word(parse_word("x^inf")) == Classification::Noetherian);
  // symbol-symmetric: a divisible left y-tail is artinian-type
  CHECK(classify_word(parse_word("y^inf X^inf")) == Classification::Artinian);
  // the bi-infinite one-letter line behaves like the fraction field
  CHECK(classify_word(parse_word("x^inf x^inf")) ==
        Classification::MixedReflexive);
}

TEST_CASE("trivial and mixed splits") {
  const SplitResult art = arno_split(parse_word("x^inf Y^inf"));
  CHECK(serialize(art.sub) == "");
  CHECK(art.quot == parse_word("x^inf Y^inf"));
  CHECK_FALSE(art.split_index.has_value());

  const SplitResult noeth = arno_split(parse_word("X^inf y^inf"));
  CHECK(noeth.sub == parse_word("X^inf y^inf"));
  CHECK(serialize(noeth.quot) == "");

  const SplitResult fin = arno_split(parse_word("xY"));
  CHECK(fin.sub == parse_word("xY"));
  CHECK(serialize(fin.quot) == "");

  // the running mixed example: cut at the first right-tail letter
  const SplitResult mixed = arno_split(parse_word("X^inf y X^inf"));
  REQUIRE(mixed.split_index.has_value());
  CHECK(*mixed.split_index == 1);
  CHECK(serialize(mixed.sub) == "X^inf y");
  CHECK(serialize(mixed.quot) == "X^inf");
  CHECK(classify_word(mixed.sub) == Classification::Noetherian);
  CHECK(classify_word(mixed.quot) == Classification::Artinian);
}

TEST_CASE("split admissibility and uniqueness reports") {
  const StringWord w = parse_word("X^inf y X^inf");
  CHECK_FALSE(is_admissible_cut(w, 0)); // the y points the wrong way
  CHECK(is_admissible_cut(w, 1));
  CHECK(is_admissible_cut(w, 4));
  CHECK(is_admissible_cut(w, -1)); // left-tail cuts move length to the quotient

  const UniquenessReport rep = split_uniqueness_check(w, 1, 4);
  CHECK(rep.vertex_difference == 3);
  CHECK(rep.containment_ok);
  CHECK(rep.sub1_class == Classification::Noetherian);
  CHECK(rep.sub2_class == Classification::Noetherian);

  const UniquenessReport same = split_uniqueness_check(w, 2, 2);
  CHECK(same.vertex_difference == 0);
  CHECK(same.containment_ok);

  CHECK_THROWS_AS(split_uniqueness_check(w, 0, 1), UsageError);
}

TEST_CASE("every mixed word of small core splits admissibly") {
  for (const StringWord& w : enumerate_words(4)) {
    const Classification c = classify_word(w);
    const SplitResult sp = arno_split(w);
    const Classification cs = classify_word(sp.sub);
    const Classification cq = classify_word(sp.quot);
    CHECK((cs == Classification::Noetherian ||
           cs == Classification::FiniteLength));
    CHECK((cq == Classification::Artinian ||
           cq == Classification::FiniteLength));
    CHECK(sp.split_index.has_value() ==
          (c == Classification::MixedReflexive));
  }
}

TEST_CASE("duality swaps the chain conditions") {
  CHECK(classify_dual_compat(parse_word("x^inf Y^inf")).ok);
  const DualCompatReport r = classify_dual_compat(parse_word("x^inf Y^inf"));
  CHECK(r.original == Classification::Artinian);
  CHECK(r.of_inverse == Classification::Noetherian);
  CHECK(classify_dual_compat(parse_word("xY")).ok);

  Rng rng(71);
  for (int i = 0; i < 100; ++i)
    CHECK(classify_dual_compat(random_word(rng, 6)).ok);
}

TEST_CASE("materialized shadow of the mixed splits") {
  // truncations realize the split as an actual submodule with the expected
  // quotient, up to a one-vertex boundary correction
  Rng rng(73);
  int verified = 0;
  for (const StringWord& w : enumerate_words(3)) {
    if (classify_word(w) != Classification::MixedReflexive)
      continue;
    const SplitResult sp = arno_split(w);
    const int j = *sp.split_index;
    for (int depth = 2; depth <= 6; depth += 2) {
      const ModuleRep total = materialize_string(truncate_end(w, depth), fp);
      // vertices of the truncation on the submodule side of the cut
      const int cut_pos = depth + j; // left-tail letters shift the cut right
      const ConcatSplitResult cut = cut_at(w, j);
      const bool sub_is_left =
          cut.orientation == ConnectorOrientation::InverseConnector;
      std::vector<Matrix> gens;
      const int lo = sub_is_left ? 0 : cut_pos + 1;
      const int hi = sub_is_left ? cut_pos : total.dim() - 1;
      for (int v = lo; v <= hi; ++v) {
        Matrix e(fp, total.dim(), 1);
        e.set_int(v, 0, 1);
        gens.push_back(std::move(e));
      }
      const SubQuotient sub = submodule_generated(total, gens);
      const ModuleRep quot = quotient(total, sub.inclusion);
      bool matched = false;
      for (int dd = depth - 1; dd <= depth + 1 && !matched; ++dd) {
        if (dd < 0)
          continue;
        const ModuleRep expected =
            materialize_string(truncate_end(sp.quot, dd), fp);
        if (expected.dim() != quot.dim())
          continue;
        matched = is_isomorphic(quot, expected, rng).isomorphic;
      }
      CHECK(matched);
      ++verified;
    }
  }
  CHECK(verified > 0);
}

TEST_CASE("DVR catalog objects") {
  const DvrCatalogObject a = DvrCatalogObject::make(1, 0, 0, {});
  CHECK(dvr_dual(a) == DvrCatalogObject::make(0, 0, 1, {}));
  const DvrCatalogObject q = DvrCatalogObject::make(0, 1, 0, {});
  CHECK(dvr_dual(q) == q); // the fraction field is self-dual

  CHECK(dvr_classify(DvrCatalogObject::make(0, 0, 0, {2, 5})) ==
        Classification::FiniteLength);
  CHECK(dvr_classify(a) == Classification::Noetherian);
  CHECK(dvr_classify(dvr_dual(a)) == Classification::Artinian);
  CHECK(dvr_classify(q) == Classification::MixedReflexive);
  CHECK(dvr_classify(DvrCatalogObject::make(1, 0, 2, {1})) ==
        Classification::MixedReflexive);

  const DvrCatalogObject sum =
      dvr_add(DvrCatalogObject::make(1, 0, 0, {2}),
              DvrCatalogObject::make(0, 1, 2, {1, 2}));
  CHECK(sum == DvrCatalogObject::make(1, 1, 2, {1, 2, 2}));

  CHECK_THROWS_AS(DvrCatalogObject::make(-1, 0, 0, {}), DomainError);
  CHECK_THROWS_AS(DvrCatalogObject::make(0, 0, 0, {0}), DomainError);

  Rng rng(79);
  for (int i = 0; i < 200; ++i) {
    const DvrCatalogObject o = random_dvr_object(rng, 4, 3, 5);
    CHECK(dvr_dual(dvr_dual(o)) == o);
    CHECK(dvr_classify(dvr_dual(o)) ==
          swap_chain_conditions(dvr_classify(o)));
    const DvrCatalogObject o2 = random_dvr_object(rng, 4, 3, 5);
    CHECK(dvr_add(o, o2) == dvr_add(o2, o));
    CHECK(dvr_add(o, DvrCatalogObject{}) == o);
  }
}

TEST_CASE("DVR textual form") {
  const DvrCatalogObject o = DvrCatalogObject::make(2, 0, 1, {3, 1});
  CHECK(serialize(o) == "A^2 + Q^0 + E^1 + [1,3]");
  CHECK(parse_dvr(serialize(o)) == o);
  CHECK(parse_dvr("A^2+E+[3,1]") == DvrCatalogObject::make(2, 0, 1, {1, 3}));
  CHECK(parse_dvr("[2]") == DvrCatalogObject::make(0, 0, 0, {2}));
  CHECK(parse_dvr("") == DvrCatalogObject{});
  CHECK(parse_dvr("A + A") == DvrCatalogObject::make(2, 0, 0, {}));
  CHECK_THROWS_AS(parse_dvr("A^"), DomainError);
  CHECK_THROWS_AS(parse_dvr("B^2"), DomainError);
  CHECK_THROWS_AS(parse_dvr("A^1 +"), DomainError);
  CHECK_THROWS_AS(parse_dvr("[0]"), DomainError);
}
