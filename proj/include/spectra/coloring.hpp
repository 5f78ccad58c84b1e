#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

inline constexpr long long kDefaultChromaticBudget = 10'000'000;

// Total mapping edge id -> color in [1, t]. A coloring is proper when edges
// sharing a vertex have distinct colors, and surjective when every color in
// [1, t] is used at least once.
struct EdgeColoring {
    int t = 0;
    std::vector<int> colors; // indexed by edge id

    int color(int e) const { return colors[static_cast<size_t>(e)]; }
};

// Bijection on [1, t], stored positionally (image of color c at index c-1).
struct ColorPermutation {
    std::vector<int> image;

    static ColorPermutation identity(int t);
    static ColorPermutation transposition(int t, int a, int b);
    // The shift remaps of the interval constructions: colors move by
    // c -> (c + shift) mod t, except special_source which maps to t.
    // Throws unless special_source is exactly the preimage of residue 0.
    static ColorPermutation from_shift_formula(int t, int shift,
                                               int special_source);

    int size() const { return static_cast<int>(image.size()); }
    int apply(int c) const { return image[static_cast<size_t>(c - 1)]; }
    bool is_bijection() const;
};

struct ColoringValidation {
    struct Clash {
        int vertex;
        int edge_a;
        int edge_b;
    };
    std::vector<Clash> properness_violations;
    std::vector<int> unused_colors;
    std::vector<int> out_of_range_edges;
    bool t_within_edge_count = true;

    bool ok() const {
        return properness_violations.empty() && unused_colors.empty() &&
               out_of_range_edges.empty() && t_within_edge_count;
    }
};

ColoringValidation validate_coloring(const Graph& g, const EdgeColoring& c);

// Proper coloring with exactly Delta(g) colors for bipartite g, built by
// inserting edges in id order and recoloring along an alternating two-color
// path when the endpoints have no common free color.
EdgeColoring color_bipartite_delta(const Graph& g, const Bipartition& b);

// Proper coloring with at most Delta(g)+1 colors via fan rotation, then
// compacted so every color in [1, t] is used.
EdgeColoring color_vizing(const Graph& g);

// Exact chromatic index: backtracking search for a proper Delta-coloring
// with color-symmetry breaking on the edges of one maximum-degree vertex;
// Delta+1 when none exists. Throws BudgetExhausted when the node-expansion
// budget runs out before the decision is made.
int chromatic_index(const Graph& g, long long budget = kDefaultChromaticBudget);

EdgeColoring apply_color_permutation(const EdgeColoring& c,
                                     const ColorPermutation& p);

struct KempeResult {
    EdgeColoring coloring;
    std::vector<int> path; // ordered vertices, starting at the start vertex
};

// Exchanges colors a and b along the unique maximal a/b-alternating path
// starting at `start`. Requires start to be incident to exactly one edge
// colored a or b.
KempeResult kempe_swap(const Graph& g, const EdgeColoring& c, int start,
                       int a, int b);

// Coloring document: '#' comments, "t <t>" header, then "c <edge> <color>".
EdgeColoring parse_coloring(std::string_view text, int edge_count);
std::string write_coloring(const EdgeColoring& c);

} // namespace spectra
