#include "strmod/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "strmod/generators.hpp"
#include "strmod/io.hpp"
#include "strmod/ksdecomp.hpp"

namespace strmod {

namespace {

struct Failure {
  std::string what;
};

using CheckFn = std::function<std::string(const SuiteOptions&)>;

void fail(const std::string& what) { throw Failure{what}; }

// ---------------------------------------------------------------- 1 ------

// dual(M(w)) is isomorphic to M(w with every letter inverted), exhaustively
// over all valid finite words with at most 8 letters, witnessed.
std::string check_string_duality(const SuiteOptions& o) {
  const FieldSpec f = FieldSpec::prime(o.prime);
  Rng rng(o.seed ^ 0x5d1);
  int count = 0;
  for (const StringWord& w : enumerate_finite_words(8)) {
    const ModuleRep m = materialize_string(w, f);
    const ModuleRep md = dual(m);
    const ModuleRep mi = materialize_string(inverse_word(w), f);
    const IsoResult iso = is_isomorphic(md, mi, rng, o.mc_budget);
    if (!iso.isomorphic || !iso.witness)
      fail("dual of M(\"" + serialize(w) + "\") not matched to the inverse word");
    ++count;
  }
  return std::to_string(count) + " words";
}

// ---------------------------------------------------------------- 2 ------

void expect_unit_ok(const ModuleRep& m, const std::string& label) {
  const Matrix u = double_dual_unit(m);
  if (rank(u) != m.dim())
    fail("double-dual unit not invertible for " + label);
  const ModuleRep dd = dual(dual(m));
  if (!(u.mul(m.act_x()) == dd.act_x().mul(u)) ||
      !(u.mul(m.act_y()) == dd.act_y().mul(u)))
    fail("double-dual unit does not intertwine for " + label);
}

std::string check_double_dual_unit(const SuiteOptions& o) {
  const FieldSpec f = FieldSpec::prime(o.prime);
  int count = 0;
  for (const StringWord& w : enumerate_finite_words(8)) {
    expect_unit_ok(materialize_string(w, f), "M(\"" + serialize(w) + "\")");
    ++count;
  }
  Rng rng(o.seed ^ 0xdd2);
  for (int i = 0; i < 100; ++i) {
    expect_unit_ok(random_module(rng, f, 12),
                   "random module #" + std::to_string(i));
    ++count;
  }
  return std::to_string(count) + " modules";
}

// ---------------------------------------------------------------- 3 ------

// soc^j of the truncated injective envelope M(C_i) is M(C_{j-1}), with
// socle series 1, 3, ..., 2i+1.
std::string check_socle_filtration(const SuiteOptions& o) {
  const FieldSpec f = FieldSpec::prime(o.prime);
  const StringWord c_inf = parse_word("x^inf Y^inf");
  Rng rng(o.seed ^ 0x50c);
  int count = 0;
  for (int i = 1; i <= 6; ++i) {
    const ModuleRep mi = materialize_string(truncate_end(c_inf, i), f);
    const std::vector<int> series = socle_series(mi);
    if (static_cast<int>(series.size()) != i)
      fail("socle series of M(C_" + std::to_string(i) + ") has wrong length");
    for (int j = 1; j <= i; ++j)
      if (series[static_cast<std::size_t>(j - 1)] != 2 * j - 1)
        fail("socle series of M(C_" + std::to_string(i) + ") misses 2j-1 at j=" +
             std::to_string(j));
    for (int j = 1; j <= i; ++j) {
      const SubQuotient socj = submodule_on_basis(mi, socle_power(mi, j));
      const ModuleRep expected =
          materialize_string(truncate_end(c_inf, j - 1), f);
      const IsoResult iso = is_isomorphic(socj.sub, expected, rng, o.mc_budget);
      if (!iso.isomorphic)
        fail("soc^" + std::to_string(j) + " of M(C_" + std::to_string(i) +
             ") is not M(C_" + std::to_string(j - 1) + ")");
      ++count;
    }
  }
  return std::to_string(count) + " layers";
}

// ---------------------------------------------------------------- 4 ------

// End(M(C_i)) has dimension 2i+1, is commutative, and is local with
// radical of codimension 1.
std::string check_endomorphism_truncation(const SuiteOptions& o) {
  const FieldSpec f = FieldSpec::prime(o.prime);
  const StringWord c_inf = parse_word("x^inf Y^inf");
  for (int i = 1; i <= 6; ++i) {
    const ModuleRep mi = materialize_string(truncate_end(c_inf, i), f);
    const EndoAlgebra e = endo_algebra(mi);
    if (e.dim() != 2 * i + 1)
      fail("dim End(M(C_" + std::to_string(i) + ")) != " +
           std::to_string(2 * i + 1) + " (got " + std::to_string(e.dim()) + ")");
    const int n = e.dim();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int k = 0; k < n; ++k)
          if (!(e.table[(static_cast<std::size_t>(a) * n + b) * n + k] ==
                e.table[(static_cast<std::size_t>(b) * n + a) * n + k]))
            fail("End(M(C_" + std::to_string(i) + ")) is not commutative");
    if (radical_of_endo(e).dim() != e.dim() - 1)
      fail("radical of End(M(C_" + std::to_string(i) +
           ")) does not have codimension 1");
  }
  return "i = 1..6";
}

// ---------------------------------------------------------------- 5 ------

std::string check_krull_schmidt(const SuiteOptions& o) {
  const FieldSpec f = FieldSpec::prime(o.prime);
  const int trials = 200;
  int certification_failures = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng(o.seed ^ 0x4b5).split(static_cast<std::uint64_t>(t));
    const ConjugatedSum inst = random_conjugated_sum(rng, f, 2, 4, 6, 4, 3);
    DecompositionResult dec{{}, Matrix(f, 0, 0), 0};
    try {
      dec = decompose(inst.module, rng.next(), o.mc_budget);
    } catch (const CertificationError&) {
      ++certification_failures;
      continue;
    }
    // expand and match as an iso-multiset
    std::vector<ModuleRep> got;
    for (const DecompositionPart& p : dec.parts)
      for (int k = 0; k < p.multiplicity; ++k)
        got.push_back(p.rep);
    if (got.size() != inst.parts.size())
      fail("trial " + std::to_string(t) + ": expected " +
           std::to_string(inst.parts.size()) + " summands, got " +
           std::to_string(got.size()));
    std::vector<bool> used(got.size(), false);
    Rng match_rng = rng.split(0xbeef);
    for (const ModuleRep& want : inst.parts) {
      bool matched = false;
      for (std::size_t k = 0; k < got.size() && !matched; ++k) {
        if (used[k] || got[k].dim() != want.dim())
          continue;
        if (is_isomorphic(want, got[k], match_rng, o.mc_budget).isomorphic) {
          used[k] = true;
          matched = true;
        }
      }
      if (!matched)
        fail("trial " + std::to_string(t) + ": a summand was not recovered");
    }
  }
  if (certification_failures != 0)
    fail(std::to_string(certification_failures) + " certification failures");
  return std::to_string(trials) + " trials, 0 certification failures";
}

// ---------------------------------------------------------------- 6 ------

std::string check_duality_chain_swap(const SuiteOptions&) {
  int count = 0;
  for (const StringWord& w : enumerate_words(6)) {
    const DualCompatReport rep = classify_dual_compat(w);
    if (!rep.ok)
      fail("chain-condition swap fails for \"" + serialize(w) + "\"");
    ++count;
  }
  return std::to_string(count) + " words (core <= 6, all tails)";
}

// ---------------------------------------------------------------- 7 ------

std::string check_arno_split(const SuiteOptions&) {
  int words = 0, pairs = 0;
  for (const StringWord& w : enumerate_words(6)) {
    if (classify_word(w) != Classification::MixedReflexive)
      continue;
    ++words;
    const SplitResult sp = arno_split(w);
    if (!sp.split_index)
      fail("mixed word \"" + serialize(w) + "\" got a trivial split");
    const Classification cs = classify_word(sp.sub);
    const Classification cq = classify_word(sp.quot);
    if (cs != Classification::Noetherian && cs != Classification::FiniteLength)
      fail("sub of \"" + serialize(w) + "\" is not noetherian-or-finite");
    if (cq != Classification::Artinian && cq != Classification::FiniteLength)
      fail("quot of \"" + serialize(w) + "\" is not artinian-or-finite");

    // a few admissible cuts; any two must differ by their vertex distance
    std::vector<int> cuts;
    for (int j = 0; j <= w.core_size() + 3 && static_cast<int>(cuts.size()) < 3;
         ++j)
      if (is_admissible_cut(w, j))
        cuts.push_back(j);
    for (std::size_t a = 0; a < cuts.size(); ++a)
      for (std::size_t b = a + 1; b < cuts.size(); ++b) {
        const UniquenessReport rep =
            split_uniqueness_check(w, cuts[a], cuts[b]);
        if (!rep.containment_ok)
          fail("cut containment fails for \"" + serialize(w) + "\"");
        if (rep.vertex_difference != cuts[b] - cuts[a])
          fail("vertex distance mismatch for \"" + serialize(w) + "\"");
        const auto nf = [](Classification c) {
          return c == Classification::Noetherian ||
                 c == Classification::FiniteLength;
        };
        if (!nf(rep.sub1_class) || !nf(rep.sub2_class))
          fail("cut submodule classification fails for \"" + serialize(w) + "\"");
        ++pairs;
      }
  }
  return std::to_string(words) + " mixed words, " + std::to_string(pairs) +
         " cut pairs";
}

// ---------------------------------------------------------------- 8 ------

std::string check_band_modules(const SuiteOptions& o) {
  const FieldSpec f = FieldSpec::prime(o.prime);
  Rng rng(o.seed ^ 0xba4d);
  const PeriodicWord bands[2] = {parse_band("band(xY)"), parse_band("band(xxYY)")};
  int count = 0;
  for (const PeriodicWord& pw : bands)
    for (int size = 1; size <= 3; ++size) {
      const Scalar lambda = random_unit(rng, f);
      const ModuleRep m =
          materialize_band(pw, BandParam::jordan(f, lambda, size), f);
      if (m.dim() != pw.period() * size)
        fail("band dimension is not period * size for " + serialize(pw));
      const IndecompResult r = is_indecomposable(m, rng.split(count), o.mc_budget);
      if (!r.indecomposable)
        fail("Jordan band over " + serialize(pw) + " splits");
      ++count;
    }
  // distinct eigenvalues give non-isomorphic bands
  for (int pair = 0; pair < 10; ++pair) {
    const PeriodicWord& pw = bands[pair % 2];
    const int size = 1 + static_cast<int>(rng.below(3));
    Scalar lambda = random_unit(rng, f), mu = random_unit(rng, f);
    while (mu == lambda)
      mu = random_unit(rng, f);
    const ModuleRep a = materialize_band(pw, BandParam::jordan(f, lambda, size), f);
    const ModuleRep b = materialize_band(pw, BandParam::jordan(f, mu, size), f);
    if (is_isomorphic(a, b, rng, o.mc_budget).isomorphic)
      fail("bands with distinct eigenvalues compared isomorphic");
  }
  return "periods {2,4}, sizes 1..3, 10 eigenvalue pairs";
}

// ---------------------------------------------------------------- 9 ------

std::string check_dvr_catalog(const SuiteOptions& o) {
  Rng rng(o.seed ^ 0xd47);
  for (int i = 0; i < 1000; ++i) {
    const DvrCatalogObject obj = random_dvr_object(rng, 5, 4, 6);
    const DvrCatalogObject d = dvr_dual(obj);
    if (!(dvr_dual(d) == obj))
      fail("dual is not an involution on " + serialize(obj));
    if (d.a != obj.c || d.c != obj.a || d.b != obj.b || d.finite != obj.finite)
      fail("dual does not swap A and E on " + serialize(obj));
    if (dvr_classify(d) != swap_chain_conditions(dvr_classify(obj)))
      fail("classification swap fails on " + serialize(obj));
  }
  return "1000 objects";
}

// ---------------------------------------------------------------- 10 -----

std::string check_parser_robustness(const SuiteOptions& o) {
  // independent forbidden-pair scan over plain letter strings
  const auto reference_valid = [](const std::string& s) {
    static const char* bad[] = {"xy", "yx", "XY", "YX",
                                "xX", "Xx", "yY", "Yy"};
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      for (const char* b : bad)
        if (s[i] == b[0] && s[i + 1] == b[1])
          return false;
    return true;
  };
  const char alphabet[4] = {'x', 'y', 'X', 'Y'};
  std::vector<std::string> all{""};
  int agree = 0;
  for (std::size_t head = 0; head < all.size(); ++head) {
    const std::string s = all[head];
    if (validate(s).ok != reference_valid(s))
      fail("validator disagrees with the reference on \"" + s + "\"");
    ++agree;
    if (s.size() < 6)
      for (char c : alphabet)
        all.push_back(s + c);
  }

  Rng rng(o.seed ^ 0xf77);
  for (int i = 0; i < 100000; ++i) {
    std::string s;
    const int len = static_cast<int>(rng.below(25));
    for (int k = 0; k < len; ++k)
      s.push_back(static_cast<char>(rng.below(256)));
    (void)validate(s); // must return a report, never throw
  }
  return std::to_string(agree) + " strings vs reference, 100000 fuzz inputs";
}

} // namespace

const std::vector<std::string>& verification_check_names() {
  static const std::vector<std::string> names = {
      "string-duality",         "double-dual-unit",
      "socle-filtration",       "endomorphism-truncation",
      "krull-schmidt",          "duality-chain-swap",
      "noetherian-by-artinian", "band-modules",
      "dvr-catalog",            "parser-robustness"};
  return names;
}

std::vector<CheckResult> run_verification_suite(
    const SuiteOptions& opts, const std::vector<std::string>& only) {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"string-duality", check_string_duality},
      {"double-dual-unit", check_double_dual_unit},
      {"socle-filtration", check_socle_filtration},
      {"endomorphism-truncation", check_endomorphism_truncation},
      {"krull-schmidt", check_krull_schmidt},
      {"duality-chain-swap", check_duality_chain_swap},
      {"noetherian-by-artinian", check_arno_split},
      {"band-modules", check_band_modules},
      {"dvr-catalog", check_dvr_catalog},
      {"parser-robustness", check_parser_robustness},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : checks) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), name) == only.end())
      continue;
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = fn(opts);
      r.passed = true;
    } catch (const Failure& f) {
      r.detail = f.what;
      r.passed = false;
    } catch (const Error& e) {
      r.detail = std::string("error: ") + e.what();
      r.passed = false;
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    results.push_back(std::move(r));
  }
  return results;
}

} // namespace strmod
