#pragma once

#include <string>

#include "spectra/coloring.hpp"
#include "spectra/graph.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

enum class TheoremId { T1, T2, T3, T4, T5, T6, PY };

const char* theorem_name(TheoremId id);

struct ConstructionResult {
    TheoremId theorem;
    SpectrumMode mode;
    EdgeColoring coloring;
    std::vector<int> guaranteed_set; // sorted vertex ids
    int swap_count = 0;              // Kempe swaps performed (T4 / PY)
};

// Regular class-2 graphs: a (1+Delta)-coloring persistent-interval on the
// largest deficiency class, of size at least ceil(|V| / (1+Delta)).
ConstructionResult thm1_persistent_regular(
    const Graph& g, long long chi_budget = kDefaultChromaticBudget);

// Regular class-2 graphs: a (1+Delta)-coloring interval on the largest
// paired class, of size at least ceil(|V| / ceil((1+Delta)/2)).
ConstructionResult thm2_interval_regular(
    const Graph& g, long long chi_budget = kDefaultChromaticBudget);

enum class Side { X, Y };

// Bipartite graphs: the |E|-coloring that gives each chosen-side vertex a
// fresh run of consecutive colors, hence interval on the whole side.
ConstructionResult thm3_interval_side(const Graph& g, const Bipartition& b,
                                      Side side);

struct PersistentOnYOptions {
    int swap_cap_factor = 10; // at most factor * |E| Kempe swaps
    long long fallback_budget = kDefaultEtaBudget;
};

// Bipartite graphs with d(x) <= d(y) on every edge: a Delta-coloring
// persistent-interval on Y. Kempe-descent from the Delta-coloring with an
// iteration cap, then exhaustive search over proper Delta-colorings.
ConstructionResult persistent_on_Y(const Graph& g, const Bipartition& b,
                                   const PersistentOnYOptions& options = {});

// Extends a coloring persistent-interval on Y to one persistent-interval on
// {x0} union Y, by exactly |S(x0) \ [1, d(x0)]| Kempe swaps.
ConstructionResult thm4_extend(const Graph& g, const Bipartition& b,
                               const EdgeColoring& phi0, int x0);

// (k-1,k)-biregular graphs, k >= 4: a k-coloring interval on Y plus the
// largest paired deficiency class of X.
ConstructionResult thm5_biregular_interval(const Graph& g,
                                           const Bipartition& b);

// (k-1,k)-biregular graphs, k >= 3: a k-coloring persistent-interval on Y
// plus the largest deficiency class of X.
ConstructionResult thm6_biregular_persistent(const Graph& g,
                                             const Bipartition& b);

// Re-checks a construction: the coloring must validate and every vertex of
// the guaranteed set must satisfy the mode predicate. Throws
// PostconditionViolated otherwise.
void verify_construction(const Graph& g, const ConstructionResult& result);

} // namespace spectra
