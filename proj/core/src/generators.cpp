#include "strmod/generators.hpp"

namespace strmod {

namespace {

const Letter kLetters[4] = {{Sym::X, Dir::Direct},
                            {Sym::Y, Dir::Direct},
                            {Sym::X, Dir::Inverse},
                            {Sym::Y, Dir::Inverse}};

Letter random_letter(Rng& rng) { return kLetters[rng.below(4)]; }

std::vector<Letter> random_core(Rng& rng, int len) {
  std::vector<Letter> core;
  while (static_cast<int>(core.size()) < len) {
    if (core.empty()) {
      core.push_back(random_letter(rng));
      continue;
    }
    // each letter has exactly two allowed successors
    Letter next = random_letter(rng);
    while (!adjacent_ok(core.back(), next))
      next = random_letter(rng);
    core.push_back(next);
  }
  return core;
}

} // namespace

StringWord random_finite_word(Rng& rng, int max_core) {
  return StringWord::finite(
      random_core(rng, static_cast<int>(rng.below(static_cast<std::uint64_t>(max_core) + 1))));
}

StringWord random_word(Rng& rng, int max_core) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Letter> core =
        random_core(rng, static_cast<int>(rng.below(static_cast<std::uint64_t>(max_core) + 1)));
    std::optional<Letter> lt, rt;
    const std::uint64_t lc = rng.below(5), rc = rng.below(5);
    if (lc > 0)
      lt = kLetters[lc - 1];
    if (rc > 0)
      rt = kLetters[rc - 1];
    if (lt && !core.empty() && core.front() == *lt)
      continue; // non-canonical spelling, resample
    if (rt && !core.empty() && core.back() == *rt)
      continue;
    try {
      return StringWord(lt, std::move(core), rt);
    } catch (const DomainError&) {
      // invalid tail combination, resample
    }
  }
  throw Error("internal: word sampling failed to converge");
}

PeriodicWord random_band_word(Rng& rng, int max_period) {
  if (max_period < 2)
    throw UsageError("band period bound must be >= 2");
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_period - 1)));
    std::vector<Letter> cycle = random_core(rng, n);
    try {
      return PeriodicWord(std::move(cycle));
    } catch (const DomainError&) {
      // cyclic pair, primitivity or symbol condition failed; resample
    }
  }
  throw Error("internal: band sampling failed to converge");
}

Scalar random_unit(Rng& rng, const FieldSpec& f) {
  if (f.is_rationals()) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng.below(1 << 16));
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng.below(1 << 8));
    return rng.coin() ? f.from_fraction(n, d) : f.from_fraction(-n, d);
  }
  return f.from_int(1 + static_cast<std::int64_t>(
                            rng.below(static_cast<std::uint64_t>(f.characteristic()) - 1)));
}

Matrix random_invertible(Rng& rng, const FieldSpec& f, int n) {
  const std::uint64_t space =
      f.is_rationals() ? 64 : static_cast<std::uint64_t>(f.characteristic());
  for (int attempt = 0; attempt < 256; ++attempt) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.set_int(i, j, static_cast<std::int64_t>(rng.below(space)));
    if (rank(m) == n)
      return m;
  }
  throw Error("internal: invertible sampling failed to converge");
}

ModuleRep random_catalog_indecomposable(Rng& rng, const FieldSpec& f,
                                        int max_vertices, int max_period,
                                        int max_jordan) {
  if (rng.coin()) {
    // string module with 1..max_vertices vertices
    const int core_len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices)));
    return materialize_string(StringWord::finite(random_core(rng, core_len)), f);
  }
  const PeriodicWord pw = random_band_word(rng, max_period);
  const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_jordan)));
  return materialize_band(pw, BandParam::jordan(f, random_unit(rng, f), size), f);
}

ConjugatedSum random_conjugated_sum(Rng& rng, const FieldSpec& f, int min_parts,
                                    int max_parts, int max_vertices,
                                    int max_period, int max_jordan) {
  const int count =
      min_parts +
      static_cast<int>(rng.below(static_cast<std::uint64_t>(max_parts - min_parts + 1)));
  ConjugatedSum out{ModuleRep::make(Matrix(f, 0, 0), Matrix(f, 0, 0)), {}};
  for (int i = 0; i < count; ++i) {
    out.parts.push_back(random_catalog_indecomposable(rng, f, max_vertices,
                                                      max_period, max_jordan));
    out.module = direct_sum(out.module, out.parts.back());
  }
  const Matrix p = random_invertible(rng, f, out.module.dim());
  const Matrix pinv = *inverse(p);
  out.module = ModuleRep::make(p.mul(out.module.act_x()).mul(pinv),
                               p.mul(out.module.act_y()).mul(pinv));
  return out;
}

ModuleRep random_module(Rng& rng, const FieldSpec& f, int max_dim) {
  ModuleRep sum = ModuleRep::make(Matrix(f, 0, 0), Matrix(f, 0, 0));
  int budget = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_dim)));
  while (budget > 0) {
    const ModuleRep part = random_catalog_indecomposable(
        rng, f, std::min(budget, 6), 2, std::max(1, std::min(budget / 2, 3)));
    if (part.dim() > budget) {
      budget -= 1;
      continue;
    }
    sum = direct_sum(sum, part);
    budget -= part.dim();
  }
  if (sum.dim() == 0)
    return sum;
  const Matrix p = random_invertible(rng, f, sum.dim());
  const Matrix pinv = *inverse(p);
  return ModuleRep::make(p.mul(sum.act_x()).mul(pinv),
                         p.mul(sum.act_y()).mul(pinv));
}

DvrCatalogObject random_dvr_object(Rng& rng, std::int64_t max_mult,
                                   int max_finite_summands,
                                   std::int64_t max_exponent) {
  std::vector<std::int64_t> finite;
  const int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_finite_summands) + 1));
  for (int i = 0; i < n; ++i)
    finite.push_back(1 + static_cast<std::int64_t>(
                             rng.below(static_cast<std::uint64_t>(max_exponent))));
  const auto mult = [&] {
    return static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_mult) + 1));
  };
  return DvrCatalogObject::make(mult(), mult(), mult(), std::move(finite));
}

} // namespace strmod
