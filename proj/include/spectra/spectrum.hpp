#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "spectra/coloring.hpp"
#include "spectra/graph.hpp"

namespace spectra {

inline constexpr long long kDefaultEtaBudget = 100'000'000;

enum class SpectrumMode { Interval, PersistentInterval };

struct VertexSpectrum {
    std::vector<int> colors; // ascending
    bool is_interval = false;
    bool is_persistent_interval = false;
};

struct SpectrumReport {
    std::vector<VertexSpectrum> per_vertex;
    int f_interval = 0;
    int f_persistent = 0;

    bool satisfies(int v, SpectrumMode mode) const {
        const auto& s = per_vertex[static_cast<size_t>(v)];
        return mode == SpectrumMode::Interval ? s.is_interval
                                              : s.is_persistent_interval;
    }
};

// Per-vertex spectra and the interval / persistent-interval counts.
// Rejects colorings that fail validation.
SpectrumReport analyze(const Graph& g, const EdgeColoring& c);

// Partition of a set of degree-(t-1) vertices by their single missing color.
struct DeficiencyClasses {
    int t = 0;
    std::vector<int> domain;
    std::vector<std::vector<int>> by_color; // index c-1: vertices missing c

    const std::vector<int>& of_color(int c) const {
        return by_color[static_cast<size_t>(c - 1)];
    }
};

DeficiencyClasses deficiency_classes(const Graph& g, const EdgeColoring& c,
                                     const std::vector<int>& domain);

// Color whose class is largest, ties broken toward the smaller color.
// Pigeonhole guarantees size >= ceil(|domain| / t).
std::pair<int, int> largest_class(const DeficiencyClasses& d);

// Classes joined in color pairs (2i-1, 2i); for odd t the last class stands
// alone. Index i-1 holds the vertices of pair i.
std::vector<std::vector<int>> paired_classes(const DeficiencyClasses& d);

struct EtaResult {
    int eta = 0;
    EdgeColoring witness;
    bool exact = false; // false: enumeration hit the budget, eta is a lower bound
    long long nodes = 0;
};

// Exact eta by exhaustive enumeration of all proper surjective t-colorings
// for every admissible t, with properness and color-coverage pruning.
// Desk-scale only; the node budget caps the search and a partial run is
// reported as a lower bound.
EtaResult brute_force_eta(const Graph& g, SpectrumMode mode,
                          long long budget = kDefaultEtaBudget);

// Enumerates proper surjective t-colorings in lexicographic order over a
// connectivity-respecting edge order. The callback receives the colors
// (indexed by edge id) and returns false to stop early. Returns false when
// the node budget was exhausted before the space was covered.
bool enumerate_proper_colorings(
    const Graph& g, int t, long long& budget,
    const std::function<bool(const std::vector<int>&)>& on_coloring);

} // namespace spectra
