#pragma once

#include <vector>

#include "repkit/homcalc.hpp"
#include "repkit/random.hpp"

namespace repkit {

/// Pairwise non-isomorphic certified indecomposables of dimension <= max_dim,
/// harvested from the projectives, the injectives and the simples by taking
/// cyclic submodules and quotients by cyclic submodules. Structure form only.
std::vector<ModuleRep> indecomposable_catalog(const AlgebraPtr& a, std::size_t max_dim, std::size_t max_count = 32,
                                              std::uint64_t seed = kDefaultSeed);

/// Random element of the radical rad(X, Y) for indecomposables X and Y.
/// `same` says that X and Y are the same module (so the map must be nilpotent).
Mat random_radical_map(const ModuleRep& x, const ModuleRep& y, bool same, Rng& rng);

struct RadicalChain {
    std::vector<ModuleRep> modules;
    std::vector<Mat> maps;
};

/// Chain of `length` random radical maps through catalog members, preferring
/// targets that admit a nonzero radical map.
RadicalChain random_radical_chain(const std::vector<ModuleRep>& catalog, std::size_t length, Rng& rng);

}  // namespace repkit
