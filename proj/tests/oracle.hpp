#pragma once

// Brute-force reference oracles, kept deliberately independent of the
// library's search code: plain edge-id recursion, per-vertex scans instead
// of bitmasks, and no lookahead pruning beyond properness.

#include <algorithm>
#include <vector>

#include "spectra/graph.hpp"

namespace oracle {

inline bool color_ok(const spectra::Graph& g, const std::vector<int>& colors,
                     int e, int c) {
    for (int v : {g.edge(e).first, g.edge(e).second})
        for (int e2 : g.incident_edges(v))
            if (e2 != e && colors[static_cast<size_t>(e2)] == c) return false;
    return true;
}

template <typename Leaf>
void for_each_proper(const spectra::Graph& g, int t, std::vector<int>& colors,
                     int e, const Leaf& leaf) {
    if (e == g.edge_count()) {
        leaf(colors);
        return;
    }
    for (int c = 1; c <= t; ++c) {
        if (!color_ok(g, colors, e, c)) continue;
        colors[static_cast<size_t>(e)] = c;
        for_each_proper(g, t, colors, e + 1, leaf);
        colors[static_cast<size_t>(e)] = 0;
    }
}

inline bool uses_all_colors(const std::vector<int>& colors, int t) {
    for (int c = 1; c <= t; ++c)
        if (std::find(colors.begin(), colors.end(), c) == colors.end())
            return false;
    return true;
}

// Smallest t admitting a proper surjective t-coloring.
inline int naive_min_t(const spectra::Graph& g) {
    for (int t = 1; t <= g.edge_count(); ++t) {
        bool found = false;
        std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
        for_each_proper(g, t, colors, 0, [&](const std::vector<int>& cs) {
            found = found || uses_all_colors(cs, t);
        });
        if (found) return t;
    }
    return 0;
}

// Does any proper t-coloring exist (colors need not all be used)?
inline bool naive_exists_proper(const spectra::Graph& g, int t) {
    bool found = false;
    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
    for_each_proper(g, t, colors, 0,
                    [&](const std::vector<int>&) { found = true; });
    return found;
}

inline int count_mode(const spectra::Graph& g, const std::vector<int>& colors,
                      bool persistent) {
    int f = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> spectrum;
        for (int e : g.incident_edges(v))
            spectrum.push_back(colors[static_cast<size_t>(e)]);
        if (spectrum.empty()) continue;
        std::sort(spectrum.begin(), spectrum.end());
        bool interval = spectrum.back() - spectrum.front() + 1 ==
                        static_cast<int>(spectrum.size());
        if (interval && (!persistent || spectrum.front() == 1)) ++f;
    }
    return f;
}

// Exact eta over every admissible t, by full enumeration.
inline int naive_eta(const spectra::Graph& g, bool persistent) {
    int best = 0;
    for (int t = 1; t <= g.edge_count(); ++t) {
        std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
        for_each_proper(g, t, colors, 0, [&](const std::vector<int>& cs) {
            if (uses_all_colors(cs, t))
                best = std::max(best, count_mode(g, cs, persistent));
        });
    }
    return best;
}

} // namespace oracle
