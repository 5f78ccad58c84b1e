#include "spectra/constructions.hpp"

#include <algorithm>
#include <set>

namespace spectra {

const char* theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
    case TheoremId::PY: return "PY";
    }
    return "?";
}

void verify_construction(const Graph& g, const ConstructionResult& result) {
    if (!validate_coloring(g, result.coloring).ok())
        throw Error(Errc::PostconditionViolated,
                    std::string(theorem_name(result.theorem)) +
                        ": constructed coloring failed validation");
    SpectrumReport report = analyze(g, result.coloring);
    for (int v : result.guaranteed_set)
        if (!report.satisfies(v, result.mode))
            throw Error(Errc::PostconditionViolated,
                        std::string(theorem_name(result.theorem)) +
                            ": vertex " + std::to_string(v) +
                            " misses the guaranteed predicate");
}

namespace {

void finish(const Graph& g, ConstructionResult& result) {
    std::sort(result.guaranteed_set.begin(), result.guaranteed_set.end());
    result.guaranteed_set.erase(std::unique(result.guaranteed_set.begin(),
                                            result.guaranteed_set.end()),
                                result.guaranteed_set.end());
    verify_construction(g, result);
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> vs(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) vs[static_cast<size_t>(v)] = v;
    return vs;
}

// Shared Theorem 1 / Theorem 2 premise: a regular class-2 graph and a proper
// surjective coloring with 1+Delta colors.
EdgeColoring class2_regular_coloring(const Graph& g, long long chi_budget) {
    if (!degree_profile(g).is_regular)
        throw Error(Errc::NotRegular, "graph is not regular");
    if (chromatic_index(g, chi_budget) == g.max_degree())
        throw Error(Errc::ClassOne,
                    "chromatic index equals the maximum degree");
    EdgeColoring beta = color_vizing(g);
    if (beta.t != g.max_degree() + 1)
        throw Error(Errc::PostconditionViolated,
                    "class-2 coloring did not use 1+Delta colors");
    return beta;
}

// The interval remaps of the paired-class constructions. For odd t the last
// pair is the lone class of color t and beta already works; every other case
// is the cyclic shift whose special source 2*i0-1 lands on color t (for even
// t the last pair reduces to the same formula with shift 1).
EdgeColoring interval_case_coloring(const EdgeColoring& beta, int i0) {
    const int t = beta.t;
    if (t % 2 == 1 && i0 == (t + 1) / 2) return beta;
    return apply_color_permutation(
        beta,
        ColorPermutation::from_shift_formula(t, 1 + t - 2 * i0, 2 * i0 - 1));
}

int largest_pair_index(const std::vector<std::vector<int>>& pairs) {
    int i0 = 1;
    for (int i = 2; i <= static_cast<int>(pairs.size()); ++i)
        if (pairs[static_cast<size_t>(i - 1)].size() >
            pairs[static_cast<size_t>(i0 - 1)].size())
            i0 = i;
    return i0;
}

// x-side degree k-1, y-side degree k; throws unless the bipartition is
// oriented that way.
int biregular_k(const Graph& g, const Bipartition& b, int min_k) {
    DegreeProfile profile = degree_profile(g, &b);
    if (!profile.biregular)
        throw Error(Errc::NotBiregular, "per-side degrees are not uniform");
    auto [a, bdeg] = *profile.biregular;
    if (bdeg != a + 1)
        throw Error(Errc::NotBiregular,
                    "expected x side of degree k-1 and y side of degree k, got (" +
                        std::to_string(a) + ", " + std::to_string(bdeg) + ")");
    if (bdeg < min_k)
        throw Error(Errc::PreconditionViolated,
                    "requires k >= " + std::to_string(min_k));
    return bdeg;
}

} // namespace

ConstructionResult thm1_persistent_regular(const Graph& g,
                                           long long chi_budget) {
    EdgeColoring beta = class2_regular_coloring(g, chi_budget);
    const int t = beta.t;
    DeficiencyClasses classes = deficiency_classes(g, beta, all_vertices(g));
    auto [j0, size] = largest_class(classes);
    (void)size;

    ConstructionResult result{TheoremId::T1, SpectrumMode::PersistentInterval,
                              beta, classes.of_color(j0), 0};
    if (j0 != t)
        result.coloring = apply_color_permutation(
            beta, ColorPermutation::transposition(t, j0, t));
    finish(g, result);
    return result;
}

ConstructionResult thm2_interval_regular(const Graph& g,
                                         long long chi_budget) {
    EdgeColoring beta = class2_regular_coloring(g, chi_budget);
    DeficiencyClasses classes = deficiency_classes(g, beta, all_vertices(g));
    auto pairs = paired_classes(classes);
    const int i0 = largest_pair_index(pairs);

    ConstructionResult result{TheoremId::T2, SpectrumMode::Interval,
                              interval_case_coloring(beta, i0),
                              pairs[static_cast<size_t>(i0 - 1)], 0};
    finish(g, result);
    return result;
}

ConstructionResult thm3_interval_side(const Graph& g, const Bipartition& b,
                                      Side side) {
    for (const auto& [u, v] : g.edges())
        if (b.is_x(u) == b.is_x(v))
            throw Error(Errc::PreconditionViolated,
                        "bipartition does not separate edge endpoints");

    const std::vector<int>& chosen = side == Side::X ? b.x_side : b.y_side;
    EdgeColoring c{g.edge_count(),
                   std::vector<int>(static_cast<size_t>(g.edge_count()), 0)};
    int next = 1;
    // every edge has exactly one endpoint on the chosen side, so each gets
    // exactly one color and the runs are consecutive per vertex
    for (int v : chosen)
        for (int e : g.incident_edges(v))
            c.colors[static_cast<size_t>(e)] = next++;

    ConstructionResult result{TheoremId::T3, SpectrumMode::Interval,
                              std::move(c), chosen, 0};
    finish(g, result);
    return result;
}

ConstructionResult persistent_on_Y(const Graph& g, const Bipartition& b,
                                   const PersistentOnYOptions& options) {
    for (const auto& [u, v] : g.edges()) {
        if (b.is_x(u) == b.is_x(v))
            throw Error(Errc::PreconditionViolated,
                        "bipartition does not separate edge endpoints");
        int x = b.is_x(u) ? u : v;
        int y = b.is_x(u) ? v : u;
        if (g.degree(x) > g.degree(y))
            throw Error(Errc::PreconditionViolated,
                        "edge (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") violates d(x) <= d(y)");
    }

    EdgeColoring cur = color_bipartite_delta(g, b);
    const long long cap =
        static_cast<long long>(options.swap_cap_factor) * g.edge_count();
    int swaps = 0;
    bool settled = false;

    while (true) {
        SpectrumReport report = analyze(g, cur);
        int offender = -1;
        for (int y : b.y_side) {
            if (!report.satisfies(y, SpectrumMode::PersistentInterval)) {
                offender = y;
                break;
            }
        }
        if (offender == -1) {
            settled = true;
            break;
        }
        if (swaps >= cap) break;

        // trade the largest out-of-range color for the smallest missing one
        const auto& spectrum =
            report.per_vertex[static_cast<size_t>(offender)].colors;
        const int dy = g.degree(offender);
        int missing = 0;
        for (int c = 1; c <= dy; ++c) {
            if (!std::binary_search(spectrum.begin(), spectrum.end(), c)) {
                missing = c;
                break;
            }
        }
        int high = spectrum.back(); // > dy, else the vertex would be persistent
        cur = kempe_swap(g, cur, offender, high, missing).coloring;
        ++swaps;
    }

    if (!settled) {
        // exhaustive fallback over proper surjective Delta-colorings
        long long budget = options.fallback_budget;
        bool found = false;
        EdgeColoring candidate;
        bool finished = enumerate_proper_colorings(
            g, g.max_degree(), budget, [&](const std::vector<int>& colors) {
                for (int y : b.y_side) {
                    int lo = g.edge_count() + 1, hi = 0;
                    for (int e : g.incident_edges(y)) {
                        lo = std::min(lo, colors[static_cast<size_t>(e)]);
                        hi = std::max(hi, colors[static_cast<size_t>(e)]);
                    }
                    if (lo != 1 || hi != g.degree(y)) return true;
                }
                candidate = EdgeColoring{g.max_degree(), colors};
                found = true;
                return false;
            });
        if (!found)
            throw Error(Errc::ConstructionFailed,
                        finished ? "no proper Delta-coloring is persistent-interval on Y"
                                 : "Kempe descent capped and the exhaustive "
                                   "fallback ran out of budget");
        cur = std::move(candidate);
    }

    ConstructionResult result{TheoremId::PY, SpectrumMode::PersistentInterval,
                              std::move(cur), b.y_side, swaps};
    finish(g, result);
    return result;
}

ConstructionResult thm4_extend(const Graph& g, const Bipartition& b,
                               const EdgeColoring& phi0, int x0) {
    if (x0 < 0 || x0 >= g.vertex_count() || !b.is_x(x0))
        throw Error(Errc::PreconditionViolated,
                    "x0 must lie on the x side");
    if (phi0.t != g.max_degree())
        throw Error(Errc::PreconditionViolated,
                    "starting coloring must use exactly Delta colors");
    {
        SpectrumReport report = analyze(g, phi0); // also validates
        for (int y : b.y_side)
            if (!report.satisfies(y, SpectrumMode::PersistentInterval))
                throw Error(Errc::PreconditionViolated,
                            "starting coloring is not persistent-interval on Y");
    }

    const int d0 = g.degree(x0);
    auto spectrum_sets = [&](const EdgeColoring& c) {
        std::set<int> spectrum;
        for (int e : g.incident_edges(x0)) spectrum.insert(c.color(e));
        return spectrum;
    };
    auto excess = [&](const std::set<int>& spectrum) {
        std::vector<int> out;
        for (int c : spectrum)
            if (c > d0) out.push_back(c);
        return out;
    };

    EdgeColoring cur = phi0;
    std::set<int> spectrum = spectrum_sets(cur);
    const int nu0 = static_cast<int>(excess(spectrum).size());

    for (int k = 0; k < nu0; ++k) {
        const int t_k = excess(spectrum).back(); // max of S \ [1, d0]
        int s_k = 0;                             // min of [1, d0] \ S
        for (int c = 1; c <= d0; ++c) {
            if (!spectrum.count(c)) {
                s_k = c;
                break;
            }
        }
        cur = kempe_swap(g, cur, x0, t_k, s_k).coloring;
        spectrum = spectrum_sets(cur);
        if (static_cast<int>(excess(spectrum).size()) != nu0 - k - 1)
            throw Error(Errc::PostconditionViolated,
                        "Kempe swap did not shrink the out-of-range spectrum");
    }

    ConstructionResult result{TheoremId::T4, SpectrumMode::PersistentInterval,
                              std::move(cur), b.y_side, nu0};
    result.guaranteed_set.push_back(x0);
    finish(g, result);
    return result;
}

ConstructionResult thm5_biregular_interval(const Graph& g,
                                           const Bipartition& b) {
    biregular_k(g, b, 4);
    EdgeColoring beta = color_bipartite_delta(g, b);
    DeficiencyClasses classes = deficiency_classes(g, beta, b.x_side);
    auto pairs = paired_classes(classes);
    const int i0 = largest_pair_index(pairs);

    ConstructionResult result{TheoremId::T5, SpectrumMode::Interval,
                              interval_case_coloring(beta, i0), b.y_side, 0};
    const auto& chosen = pairs[static_cast<size_t>(i0 - 1)];
    result.guaranteed_set.insert(result.guaranteed_set.end(), chosen.begin(),
                                 chosen.end());
    finish(g, result);
    return result;
}

ConstructionResult thm6_biregular_persistent(const Graph& g,
                                             const Bipartition& b) {
    const int k = biregular_k(g, b, 3);
    EdgeColoring beta = color_bipartite_delta(g, b);
    DeficiencyClasses classes = deficiency_classes(g, beta, b.x_side);
    auto [j0, size] = largest_class(classes);
    (void)size;

    ConstructionResult result{TheoremId::T6, SpectrumMode::PersistentInterval,
                              beta, b.y_side, 0};
    if (j0 != k)
        result.coloring = apply_color_permutation(
            beta, ColorPermutation::transposition(k, j0, k));
    const auto& chosen = classes.of_color(j0);
    result.guaranteed_set.insert(result.guaranteed_set.end(), chosen.begin(),
                                 chosen.end());
    finish(g, result);
    return result;
}

} // namespace spectra
