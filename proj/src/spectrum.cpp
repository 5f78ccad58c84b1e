#include "spectra/spectrum.hpp"

#include <algorithm>

namespace spectra {

SpectrumReport analyze(const Graph& g, const EdgeColoring& c) {
    if (!validate_coloring(g, c).ok())
        throw Error(Errc::InvalidColoring,
                    "analyze requires a proper surjective coloring");

    SpectrumReport report;
    report.per_vertex.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& s = report.per_vertex[static_cast<size_t>(v)];
        for (int e : g.incident_edges(v)) s.colors.push_back(c.color(e));
        std::sort(s.colors.begin(), s.colors.end());
        if (!s.colors.empty()) {
            int lo = s.colors.front();
            int hi = s.colors.back();
            s.is_interval = hi - lo + 1 == static_cast<int>(s.colors.size());
            s.is_persistent_interval = s.is_interval && lo == 1;
        }
        report.f_interval += s.is_interval ? 1 : 0;
        report.f_persistent += s.is_persistent_interval ? 1 : 0;
    }
    return report;
}

DeficiencyClasses deficiency_classes(const Graph& g, const EdgeColoring& c,
                                     const std::vector<int>& domain) {
    DeficiencyClasses d;
    d.t = c.t;
    d.domain = domain;
    d.by_color.assign(static_cast<size_t>(c.t), {});

    std::vector<char> present(static_cast<size_t>(c.t) + 1, 0);
    for (int v : domain) {
        if (g.degree(v) != c.t - 1)
            throw Error(Errc::DegreeMismatch,
                        "vertex " + std::to_string(v) + " has degree " +
                            std::to_string(g.degree(v)) + ", expected t-1 = " +
                            std::to_string(c.t - 1));
        std::fill(present.begin(), present.end(), 0);
        for (int e : g.incident_edges(v))
            present[static_cast<size_t>(c.color(e))] = 1;
        for (int col = 1; col <= c.t; ++col) {
            if (!present[static_cast<size_t>(col)]) {
                d.by_color[static_cast<size_t>(col - 1)].push_back(v);
                break; // exactly one color is missing at degree t-1
            }
        }
    }
    return d;
}

std::pair<int, int> largest_class(const DeficiencyClasses& d) {
    if (d.domain.empty())
        throw Error(Errc::EmptyDomain, "no vertices to classify");
    int best_color = 1;
    size_t best_size = d.by_color[0].size();
    for (int c = 2; c <= d.t; ++c) {
        size_t size = d.by_color[static_cast<size_t>(c - 1)].size();
        if (size > best_size) {
            best_size = size;
            best_color = c;
        }
    }
    return {best_color, static_cast<int>(best_size)};
}

std::vector<std::vector<int>> paired_classes(const DeficiencyClasses& d) {
    const int pairs = (d.t + 1) / 2;
    std::vector<std::vector<int>> out(static_cast<size_t>(pairs));
    for (int i = 1; i <= pairs; ++i) {
        auto& slot = out[static_cast<size_t>(i - 1)];
        slot = d.of_color(2 * i - 1);
        if (2 * i <= d.t) {
            const auto& second = d.of_color(2 * i);
            slot.insert(slot.end(), second.begin(), second.end());
        }
        std::sort(slot.begin(), slot.end());
    }
    return out;
}

namespace {

// Edge order in which every edge after the first shares a vertex with an
// earlier one; maximizes properness pruning during enumeration.
std::vector<int> connectivity_order(const Graph& g) {
    const int m = g.edge_count();
    std::vector<int> order;
    order.reserve(static_cast<size_t>(m));
    std::vector<char> edge_seen(static_cast<size_t>(m), 0);
    std::vector<char> vertex_seen(static_cast<size_t>(g.vertex_count()), 0);

    auto cover = [&](int e) {
        order.push_back(e);
        edge_seen[static_cast<size_t>(e)] = 1;
        vertex_seen[static_cast<size_t>(g.edge(e).first)] = 1;
        vertex_seen[static_cast<size_t>(g.edge(e).second)] = 1;
    };

    if (m > 0) cover(0);
    for (size_t head = 0; head < order.size(); ++head) {
        int e = order[head];
        for (int v : {g.edge(e).first, g.edge(e).second})
            for (int e2 : g.incident_edges(v))
                if (!edge_seen[static_cast<size_t>(e2)]) cover(e2);
    }
    return order; // the graph is connected, so all edges are reached
}

struct EnumContext {
    const Graph& g;
    int t;
    std::vector<int> order;
    std::vector<int> colors;         // by edge id, 0 = unassigned
    std::vector<uint64_t> used;      // per-vertex color mask
    std::vector<int> color_count;    // edges per color
    int distinct = 0;
    long long* budget;
    const std::function<bool(const std::vector<int>&)>* on_coloring;
    bool exhausted = false;
    bool stopped = false;

    void walk(size_t pos) {
        if (pos == order.size()) {
            if (!(*on_coloring)(colors)) stopped = true;
            return;
        }
        // remaining edges must be able to cover the still-unused colors
        if (static_cast<int>(order.size() - pos) < t - distinct) return;

        int e = order[pos];
        auto [u, v] = g.edge(e);
        uint64_t blocked =
            used[static_cast<size_t>(u)] | used[static_cast<size_t>(v)];
        for (int c = 1; c <= t; ++c) {
            if (blocked & (uint64_t{1} << c)) continue;
            if (--*budget < 0) {
                exhausted = true;
                return;
            }
            colors[static_cast<size_t>(e)] = c;
            used[static_cast<size_t>(u)] |= uint64_t{1} << c;
            used[static_cast<size_t>(v)] |= uint64_t{1} << c;
            if (color_count[static_cast<size_t>(c)]++ == 0) ++distinct;

            walk(pos + 1);

            if (--color_count[static_cast<size_t>(c)] == 0) --distinct;
            used[static_cast<size_t>(u)] &= ~(uint64_t{1} << c);
            used[static_cast<size_t>(v)] &= ~(uint64_t{1} << c);
            colors[static_cast<size_t>(e)] = 0;
            if (exhausted || stopped) return;
        }
    }
};

} // namespace

bool enumerate_proper_colorings(
    const Graph& g, int t, long long& budget,
    const std::function<bool(const std::vector<int>&)>& on_coloring) {
    if (t < 1 || t > g.edge_count()) return true;
    if (t >= 63)
        throw Error(Errc::BudgetExhausted,
                    "color count too large for mask-based enumeration");

    EnumContext ctx{g,
                    t,
                    connectivity_order(g),
                    std::vector<int>(static_cast<size_t>(g.edge_count()), 0),
                    std::vector<uint64_t>(static_cast<size_t>(g.vertex_count()), 0),
                    std::vector<int>(static_cast<size_t>(t) + 1, 0),
                    0,
                    &budget,
                    &on_coloring};
    ctx.walk(0);
    return !ctx.exhausted;
}

EtaResult brute_force_eta(const Graph& g, SpectrumMode mode, long long budget) {
    EtaResult result;
    if (g.edge_count() == 0) {
        result.exact = true;
        return result;
    }

    const long long initial = budget;
    std::vector<int> spectrum_min(static_cast<size_t>(g.vertex_count()));
    std::vector<int> spectrum_max(static_cast<size_t>(g.vertex_count()));

    bool complete = true;
    // colorings with fewer colors than the maximum degree cannot be proper,
    // and t below the chromatic index simply enumerates an empty set
    for (int t = g.max_degree(); t <= g.edge_count(); ++t) {
        auto on_coloring = [&](const std::vector<int>& colors) {
            auto& lo = spectrum_min;
            auto& hi = spectrum_max;
            std::fill(lo.begin(), lo.end(), 0);
            for (int e = 0; e < g.edge_count(); ++e) {
                int c = colors[static_cast<size_t>(e)];
                for (int v : {g.edge(e).first, g.edge(e).second}) {
                    auto sv = static_cast<size_t>(v);
                    if (lo[sv] == 0) {
                        lo[sv] = c;
                        hi[sv] = c;
                    } else {
                        lo[sv] = std::min(lo[sv], c);
                        hi[sv] = std::max(hi[sv], c);
                    }
                }
            }
            int f = 0;
            for (int v = 0; v < g.vertex_count(); ++v) {
                auto sv = static_cast<size_t>(v);
                bool interval = hi[sv] - lo[sv] + 1 == g.degree(v);
                if (mode == SpectrumMode::Interval ? interval
                                                   : (interval && lo[sv] == 1))
                    ++f;
            }
            if (f > result.eta) {
                result.eta = f;
                result.witness = EdgeColoring{t, colors};
            }
            return result.eta < g.vertex_count(); // |V| cannot be beaten
        };
        bool finished = enumerate_proper_colorings(g, t, budget, on_coloring);
        if (!finished) {
            complete = false;
            break;
        }
        if (result.eta == g.vertex_count()) break; // stopped early at the cap
    }

    result.exact = complete;
    result.nodes = initial - budget;
    return result;
}

} // namespace spectra
