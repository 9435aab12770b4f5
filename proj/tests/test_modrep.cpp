#include <doctest.h>

#include "strmod/generators.hpp"
#include "strmod/modrep.hpp"

using namespace strmod;

namespace {
const FieldSpec f5 = FieldSpec::prime(5);
const FieldSpec fp = FieldSpec::prime(32003);

ModuleRep mod_of(const char* text, const FieldSpec& f = f5) {
  return materialize_string(parse_word(text), f);
}
} // namespace

TEST_CASE("materialize_string on the running examples") {
  const ModuleRep m = mod_of("xY");
  CHECK(m.dim() == 3);
  // x: e0 -> e1, y: e2 -> e1, everything else zero
  CHECK(m.act_x().at(1, 0) == f5.one());
  CHECK(m.act_y().at(1, 2) == f5.one());
  Matrix x_expect(f5, 3, 3), y_expect(f5, 3, 3);
  x_expect.set_int(1, 0, 1);
  y_expect.set_int(1, 2, 1);
  CHECK(m.act_x() == x_expect);
  CHECK(m.act_y() == y_expect);

  const ModuleRep k = mod_of("");
  CHECK(k.dim() == 1);
  CHECK(k.act_x().is_zero());
  CHECK(k.act_y().is_zero());

  // "Xy" carries the regular module of the square-zero truncation:
  // x: e1 -> e0, y: e1 -> e2
  const ModuleRep a2 = mod_of("Xy");
  CHECK(a2.dim() == 3);
  CHECK(a2.act_x().at(0, 1) == f5.one());
  CHECK(a2.act_y().at(2, 1) == f5.one());

  CHECK_THROWS_AS(materialize_string(parse_word("x^inf"), f5), UsageError);
}

TEST_CASE("module invariants are enforced at construction") {
  // x y != 0
  Matrix x(f5, 2, 2), y(f5, 2, 2);
  x.set_int(1, 0, 1);
  y.set_int(0, 1, 1); // x y maps e1 -> e0 -> e1: nonzero
  CHECK_THROWS_AS(ModuleRep::make(x, y), DomainError);
  // non-nilpotent action
  Matrix inv = Matrix::identity(f5, 2);
  CHECK_THROWS_AS(ModuleRep::make(inv, Matrix(f5, 2, 2)), DomainError);
  // shape and field mismatches
  CHECK_THROWS_AS(ModuleRep::make(Matrix(f5, 2, 2), Matrix(f5, 3, 3)),
                  UsageError);
  CHECK_THROWS_AS(ModuleRep::make(Matrix(f5, 2, 2), Matrix(fp, 2, 2)),
                  UsageError);
}

TEST_CASE("band modules, wrap twist and dimensions") {
  const PeriodicWord b = parse_band("band(xY)");
  // jordan(lambda=2, size=1) over GF(5): y acts through the inverse twist
  const ModuleRep m = materialize_band(b, BandParam::jordan(f5, f5.from_int(2), 1), f5);
  CHECK(m.dim() == 2);
  CHECK(m.act_x().at(1, 0) == f5.one());
  CHECK(m.act_y().at(1, 0) == f5.from_int(3)); // 2^-1 = 3 in GF(5)

  // jordan(1, 1): trivial twist
  const ModuleRep t = materialize_band(b, BandParam::jordan(f5, f5.one(), 1), f5);
  CHECK(t.act_y().at(1, 0) == f5.one());

  // dim = period * size
  for (int size = 1; size <= 3; ++size) {
    const ModuleRep j =
        materialize_band(b, BandParam::jordan(f5, f5.from_int(2), size), f5);
    CHECK(j.dim() == 2 * size);
  }
  const ModuleRep c4 = materialize_band(
      parse_band("band(xxYY)"), BandParam::jordan(f5, f5.from_int(3), 2), f5);
  CHECK(c4.dim() == 8);

  CHECK_THROWS_AS(BandParam::jordan(f5, f5.zero(), 1), DomainError);
  CHECK_THROWS_AS(BandParam::jordan(f5, f5.one(), 0), DomainError);
  // companion parameter must not vanish at zero
  CHECK_THROWS_AS(
      BandParam::companion(Poly::from_ints(f5, {0, 0, 1}), 1), DomainError);
  const BandParam comp = BandParam::companion(Poly::from_ints(f5, {2, 0, 1}), 1);
  CHECK(materialize_band(b, comp, f5).dim() == 4);
}

TEST_CASE("band modules split along the twist parameter") {
  const PeriodicWord b = parse_band("band(xY)");
  const FieldSpec& f = fp;
  const Scalar l1 = f.from_int(17), l2 = f.from_int(23);
  // block-diagonal twist gives the direct sum of the Jordan bands
  Matrix tw(f, 2, 2);
  tw.set(0, 0, l1);
  tw.set(1, 1, l2);
  const ModuleRep joint = materialize_band_twist(b, tw);
  const ModuleRep split =
      direct_sum(materialize_band(b, BandParam::jordan(f, l1, 1), f),
                 materialize_band(b, BandParam::jordan(f, l2, 1), f));
  Rng rng(3);
  CHECK(is_isomorphic(joint, split, rng).isomorphic);
  CHECK_THROWS_AS(materialize_band_twist(b, Matrix(f, 2, 2)), DomainError);
}

TEST_CASE("direct sums") {
  const ModuleRep k = mod_of("");
  const ModuleRep kk = direct_sum(k, k);
  CHECK(kk.dim() == 2);
  CHECK(kk.act_x().is_zero());
  const ModuleRep m = direct_sum(mod_of("x"), k);
  CHECK(m.dim() == 3);
  CHECK(rank(m.act_x()) == 1);
  CHECK_THROWS_AS(direct_sum(k, mod_of("", fp)), UsageError);
}

TEST_CASE("duality transposes and matches the inverse word") {
  Rng rng(11);
  const ModuleRep d = dual(mod_of("xY"));
  CHECK(is_isomorphic(d, mod_of("Xy"), rng).isomorphic);
  CHECK(dual(mod_of("")) == mod_of(""));

  // exhaustively on small words (the suite pushes this to 8 letters)
  for (const StringWord& w : enumerate_finite_words(5)) {
    const ModuleRep m = materialize_string(w, fp);
    const IsoResult iso =
        is_isomorphic(dual(m), materialize_string(inverse_word(w), fp), rng);
    CHECK(iso.isomorphic);
    REQUIRE(iso.witness);
    CHECK(rank(*iso.witness) == m.dim());
  }
}

TEST_CASE("socle, radical, top") {
  const ModuleRep m = mod_of("xY");
  const Matrix soc = socle(m);
  CHECK(soc.cols() == 1);
  CHECK(soc.at(1, 0) == f5.one()); // e1 spans the socle
  CHECK(soc.at(0, 0) == f5.zero());
  CHECK(radical(mod_of("")).cols() == 0);
  CHECK(top_dim(m) == 2);
  CHECK(radical(m).cols() == 1);

  // soc and top exchange under duality
  Rng rng(7);
  for (int i = 0; i < 12; ++i) {
    const ModuleRep r = random_module(rng, fp, 10);
    CHECK(socle(r).cols() == top_dim(dual(r)));
    // soc^j is the annihilator of rad^j of the dual
    const std::vector<int> ss = socle_series(r);
    const std::vector<int> rs = radical_series(dual(r));
    REQUIRE(ss.size() + 1 == rs.size());
    for (std::size_t k = 0; k < ss.size(); ++k)
      CHECK(ss[k] == r.dim() - rs[k + 1]);
  }
}

TEST_CASE("socle series of the truncated injective envelopes") {
  const StringWord c_inf = parse_word("x^inf Y^inf");
  for (int i = 1; i <= 4; ++i) {
    const ModuleRep m = materialize_string(truncate_end(c_inf, i), f5);
    const std::vector<int> s = socle_series(m);
    REQUIRE(static_cast<int>(s.size()) == i);
    for (int j = 1; j <= i; ++j)
      CHECK(s[static_cast<std::size_t>(j - 1)] == 2 * j - 1);
  }
  CHECK(socle_series(mod_of("")) == std::vector<int>{1});
}

TEST_CASE("hom spaces on the running examples") {
  CHECK(hom_dim(mod_of(""), mod_of("")) == 1);
  CHECK(hom_dim(mod_of("xY"), mod_of("xY")) == 3);
  CHECK(hom_dim(mod_of("x"), mod_of("y")) == 1);

  // intertwining is satisfied by every basis element
  const HomSpace h = hom_basis(mod_of("x"), mod_of("y"));
  REQUIRE(h.dim() == 1);
  const ModuleRep src = mod_of("x"), tgt = mod_of("y");
  CHECK(h.basis[0].mul(src.act_x()) == tgt.act_x().mul(h.basis[0]));
  CHECK(h.basis[0].mul(src.act_y()) == tgt.act_y().mul(h.basis[0]));

  CHECK_THROWS_AS(hom_basis(mod_of(""), mod_of("", fp)), UsageError);
}

TEST_CASE("structured hom agrees with the dense reference") {
  Rng rng(19);
  const auto words = enumerate_finite_words(4);
  for (int trial = 0; trial < 40; ++trial) {
    const StringWord& wa = words[rng.below(words.size())];
    const StringWord& wb = words[rng.below(words.size())];
    const ModuleRep a = materialize_string(wa, fp);
    const ModuleRep b = materialize_string(wb, fp);
    const HomSpace fast = hom_basis(a, b);
    const HomSpace dense = hom_basis_dense(a, b);
    CHECK(fast.dim() == dense.dim());
    for (const Matrix& h : fast.basis) {
      CHECK(h.mul(a.act_x()) == b.act_x().mul(h));
      CHECK(h.mul(a.act_y()) == b.act_y().mul(h));
    }
  }
  for (int trial = 0; trial < 8; ++trial) {
    const ModuleRep a = random_module(rng, fp, 8);
    const ModuleRep b = random_module(rng, fp, 8);
    CHECK(hom_basis(a, b).dim() == hom_basis_dense(a, b).dim());
  }
}

TEST_CASE("hom adjunction symmetry and additivity") {
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const ModuleRep a = random_module(rng, fp, 8);
    const ModuleRep b = random_module(rng, fp, 8);
    const ModuleRep c = random_module(rng, fp, 6);
    CHECK(hom_dim(a, dual(b)) == hom_dim(b, dual(a)));
    CHECK(hom_dim(direct_sum(a, b), c) == hom_dim(a, c) + hom_dim(b, c));
    CHECK(hom_dim(c, direct_sum(a, b)) == hom_dim(c, a) + hom_dim(c, b));
  }
}

TEST_CASE("submodules and quotients") {
  const ModuleRep m = mod_of("xY");
  Matrix e0(f5, 3, 1);
  e0.set_int(0, 0, 1);
  const SubQuotient sub = submodule_generated(m, {e0});
  CHECK(sub.sub.dim() == 2);
  // the inclusion intertwines
  CHECK(m.act_x().mul(sub.inclusion) == sub.inclusion.mul(sub.sub.act_x()));
  CHECK(m.act_y().mul(sub.inclusion) == sub.inclusion.mul(sub.sub.act_y()));

  CHECK(submodule_generated(m, {}).sub.dim() == 0);

  const ModuleRep q = quotient(m, sub.inclusion);
  CHECK(q.dim() == 1);
  Rng rng(31);
  CHECK(is_isomorphic(q, mod_of(""), rng).isomorphic);

  // a non-stable subspace is rejected
  Matrix e2(f5, 3, 1);
  e2.set_int(2, 0, 1);
  CHECK_THROWS_AS(quotient(m, e2), UsageError);
  CHECK_THROWS_AS(submodule_on_basis(m, e2.hstack(e2)), UsageError);
}

TEST_CASE("double dual unit") {
  CHECK(double_dual_unit(mod_of("")) == Matrix::identity(f5, 1));
  const ModuleRep m = mod_of("xY");
  const Matrix u = double_dual_unit(m);
  CHECK(rank(u) == 3);
  const ModuleRep dd = dual(dual(m));
  CHECK(u.mul(m.act_x()) == dd.act_x().mul(u));
  Rng rng(37);
  for (int i = 0; i < 10; ++i) {
    const ModuleRep r = random_module(rng, fp, 12);
    CHECK(rank(double_dual_unit(r)) == r.dim());
  }
}

TEST_CASE("isomorphism testing") {
  Rng rng(41);
  const ModuleRep a = mod_of("xY");
  // reverse-inverse words carry isomorphic modules
  CHECK(is_isomorphic(a, mod_of("yX"), rng).isomorphic);
  const IsoResult self = is_isomorphic(a, a, rng);
  CHECK(self.isomorphic);
  CHECK(rank(*self.witness) == 3);

  const IsoResult no = is_isomorphic(mod_of("x"), mod_of("y"), rng);
  CHECK_FALSE(no.isomorphic);

  // dimension mismatch is a certain no
  const IsoResult dims = is_isomorphic(a, mod_of("x"), rng);
  CHECK_FALSE(dims.isomorphic);
  CHECK(dims.certain);

  // zero modules are isomorphic
  const ModuleRep z = ModuleRep::make(Matrix(f5, 0, 0), Matrix(f5, 0, 0));
  CHECK(is_isomorphic(z, z, rng).isomorphic);

  // conjugated modules are isomorphic
  for (int i = 0; i < 6; ++i) {
    const ConjugatedSum cs = random_conjugated_sum(rng, fp, 1, 1, 5, 4, 2);
    CHECK(is_isomorphic(cs.module, cs.parts[0], rng).isomorphic);
  }
}

TEST_CASE("the dual of a band flips the eigenvalue") {
  // recorded behaviour: dual(M(band(xY), J_1(l))) = M(band(Xy), J_1(1/l)),
  // on the nose in the chosen conventions
  Rng rng(43);
  const PeriodicWord b = parse_band("band(xY)");
  const PeriodicWord bi = inverse_word(b);
  for (std::int64_t l : {2, 7, 19}) {
    const ModuleRep d =
        dual(materialize_band(b, BandParam::jordan(fp, fp.from_int(l), 1), fp));
    const ModuleRep flip = materialize_band(
        bi, BandParam::jordan(fp, fp.inv(fp.from_int(l)), 1), fp);
    CHECK(is_isomorphic(d, flip, rng).isomorphic);
    if (l != 1) {
      const ModuleRep same = materialize_band(
          bi, BandParam::jordan(fp, fp.from_int(l), 1), fp);
      CHECK_FALSE(is_isomorphic(d, same, rng).isomorphic);
    }
  }
}
