#include "spectra/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spectra {

ColorPermutation ColorPermutation::identity(int t) {
    ColorPermutation p;
    p.image.resize(static_cast<size_t>(t));
    std::iota(p.image.begin(), p.image.end(), 1);
    return p;
}

ColorPermutation ColorPermutation::transposition(int t, int a, int b) {
    if (a < 1 || a > t || b < 1 || b > t)
        throw Error(Errc::PermutationMismatch, "transposed colors outside [1, t]");
    ColorPermutation p = identity(t);
    std::swap(p.image[static_cast<size_t>(a - 1)],
              p.image[static_cast<size_t>(b - 1)]);
    return p;
}

ColorPermutation ColorPermutation::from_shift_formula(int t, int shift,
                                                      int special_source) {
    ColorPermutation p;
    p.image.resize(static_cast<size_t>(t));
    for (int c = 1; c <= t; ++c) {
        int raw = (c + shift) % t;
        if (c == special_source) {
            if (raw != 0)
                throw Error(Errc::PermutationMismatch,
                            "special source is not the preimage of residue 0");
            p.image[static_cast<size_t>(c - 1)] = t;
        } else {
            if (raw == 0)
                throw Error(Errc::PermutationMismatch,
                            "residue 0 reached outside the special source");
            p.image[static_cast<size_t>(c - 1)] = raw;
        }
    }
    if (!p.is_bijection())
        throw Error(Errc::PermutationMismatch, "shift remap is not a bijection");
    return p;
}

bool ColorPermutation::is_bijection() const {
    std::vector<char> hit(image.size(), 0);
    for (int v : image) {
        if (v < 1 || v > size()) return false;
        if (hit[static_cast<size_t>(v - 1)]) return false;
        hit[static_cast<size_t>(v - 1)] = 1;
    }
    return true;
}

ColoringValidation validate_coloring(const Graph& g, const EdgeColoring& c) {
    ColoringValidation report;
    report.t_within_edge_count = c.t <= g.edge_count();

    for (int e = 0; e < g.edge_count(); ++e) {
        int col = c.color(e);
        if (col < 1 || col > c.t) report.out_of_range_edges.push_back(e);
    }

    std::vector<char> used(static_cast<size_t>(std::max(c.t, 0)) + 1, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        int col = c.color(e);
        if (col >= 1 && col <= c.t) used[static_cast<size_t>(col)] = 1;
    }
    for (int col = 1; col <= c.t; ++col)
        if (!used[static_cast<size_t>(col)]) report.unused_colors.push_back(col);

    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                if (c.color(inc[i]) == c.color(inc[j]))
                    report.properness_violations.push_back(
                        {v, inc[i], inc[j]});
    }
    return report;
}

namespace {

// edge id per color at a vertex, or -1; colors are 1-based.
struct ColorTable {
    ColorTable(int vertices, int colors)
        : width(colors + 1),
          slot(static_cast<size_t>(vertices) * static_cast<size_t>(colors + 1),
               -1) {}

    int& at(int v, int c) {
        return slot[static_cast<size_t>(v) * static_cast<size_t>(width) +
                    static_cast<size_t>(c)];
    }

    int smallest_free(int v, int t) {
        for (int c = 1; c <= t; ++c)
            if (at(v, c) == -1) return c;
        return -1;
    }

    void assign(const Graph& g, std::vector<int>& colors, int e, int c) {
        colors[static_cast<size_t>(e)] = c;
        at(g.edge(e).first, c) = e;
        at(g.edge(e).second, c) = e;
    }

    void clear(const Graph& g, std::vector<int>& colors, int e) {
        int c = colors[static_cast<size_t>(e)];
        if (c == 0) return;
        at(g.edge(e).first, c) = -1;
        at(g.edge(e).second, c) = -1;
        colors[static_cast<size_t>(e)] = 0;
    }

    int width;
    std::vector<int> slot;
};

// Maximal alternating path from `start` (which must miss exactly one of the
// two colors); returns edge ids in path order.
std::vector<int> alternating_path(const Graph& g, ColorTable& table, int start,
                                  int first_color, int second_color) {
    std::vector<int> path_edges;
    int cur = start;
    int want = first_color;
    while (true) {
        int e = table.at(cur, want);
        if (e == -1) break;
        path_edges.push_back(e);
        cur = g.other_end(e, cur);
        want = (want == first_color) ? second_color : first_color;
    }
    return path_edges;
}

} // namespace

EdgeColoring color_bipartite_delta(const Graph& g, const Bipartition& b) {
    for (const auto& [u, v] : g.edges())
        if (b.is_x(u) == b.is_x(v))
            throw Error(Errc::PreconditionViolated,
                        "bipartition does not separate edge endpoints");

    const int t = g.max_degree();
    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
    ColorTable table(g.vertex_count(), t);

    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        int common = -1;
        for (int c = 1; c <= t; ++c)
            if (table.at(u, c) == -1 && table.at(v, c) == -1) {
                common = c;
                break;
            }
        if (common != -1) {
            table.assign(g, colors, e, common);
            continue;
        }

        int a = table.smallest_free(u, t);
        int bb = table.smallest_free(v, t);
        // v has color a (no common free color), u misses it; the a/b path
        // from v cannot reach u by the parity of the bipartition.
        std::vector<int> path = alternating_path(g, table, v, a, bb);
        std::vector<int> old(path.size());
        for (size_t i = 0; i < path.size(); ++i)
            old[i] = colors[static_cast<size_t>(path[i])];
        for (int pe : path) table.clear(g, colors, pe);
        for (size_t i = 0; i < path.size(); ++i)
            table.assign(g, colors, path[i], old[i] == a ? bb : a);
        table.assign(g, colors, e, a);
    }

    return EdgeColoring{t, std::move(colors)};
}

namespace {

// One fan-rotation step of the (Delta+1)-coloring: colors the currently
// uncolored edge (u, v) without disturbing properness.
void color_edge_by_fan(const Graph& g, ColorTable& table,
                       std::vector<int>& colors, int u, int v, int palette) {
    auto edge_to = [&](int w) {
        for (int e2 : g.incident_edges(u))
            if (g.other_end(e2, u) == w) return e2;
        return -1;
    };

    // maximal fan: each next vertex is reached via the edge at u colored with
    // the smallest color free at the current fan tip
    std::vector<int> fan{v};
    std::vector<char> in_fan(static_cast<size_t>(g.vertex_count()), 0);
    in_fan[static_cast<size_t>(v)] = 1;
    while (true) {
        int free_tip = table.smallest_free(fan.back(), palette);
        int e2 = table.at(u, free_tip);
        if (e2 == -1) break;
        int w = g.other_end(e2, u);
        if (in_fan[static_cast<size_t>(w)]) break;
        in_fan[static_cast<size_t>(w)] = 1;
        fan.push_back(w);
    }

    const int c = table.smallest_free(u, palette);
    const int d = table.smallest_free(fan.back(), palette);

    if (table.at(u, d) != -1) {
        // invert the maximal c/d path through u; u misses c, so the path
        // starts with u's d-edge and inversion frees d at u
        std::vector<int> path = alternating_path(g, table, u, d, c);
        std::vector<int> old(path.size());
        for (size_t i = 0; i < path.size(); ++i)
            old[i] = colors[static_cast<size_t>(path[i])];
        for (int pe : path) table.clear(g, colors, pe);
        for (size_t i = 0; i < path.size(); ++i)
            table.assign(g, colors, path[i], old[i] == c ? d : c);
    }

    // shortest prefix that is still a fan and whose tip misses d
    int w = -1;
    for (size_t i = 0; i < fan.size() && w < 0; ++i) {
        if (table.at(fan[i], d) != -1) continue;
        bool prefix_ok = true;
        for (size_t j = 0; j < i && prefix_ok; ++j) {
            int fe = edge_to(fan[j + 1]);
            int fe_color = colors[static_cast<size_t>(fe)];
            prefix_ok = fe_color != 0 && table.at(fan[j], fe_color) == -1;
        }
        if (prefix_ok) w = static_cast<int>(i);
    }
    if (w < 0)
        throw Error(Errc::PostconditionViolated,
                    "fan rotation found no valid prefix");

    // rotate: each fan edge takes the color of its successor, the tip edge
    // takes d
    for (int i = 0; i < w; ++i) {
        int from = edge_to(fan[static_cast<size_t>(i) + 1]);
        int to = edge_to(fan[static_cast<size_t>(i)]);
        int moved = colors[static_cast<size_t>(from)];
        table.clear(g, colors, from);
        table.assign(g, colors, to, moved);
    }
    int last = edge_to(fan[static_cast<size_t>(w)]);
    table.assign(g, colors, last, d);
}

} // namespace

EdgeColoring color_vizing(const Graph& g) {
    const int palette = g.max_degree() + 1;
    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
    ColorTable table(g.vertex_count(), palette);

    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        color_edge_by_fan(g, table, colors, u, v, palette);
    }

    // compact to the colors actually used, order-preservingly
    std::vector<int> remap(static_cast<size_t>(palette) + 1, 0);
    for (int c : colors) remap[static_cast<size_t>(c)] = 1;
    int next = 0;
    for (int c = 1; c <= palette; ++c)
        if (remap[static_cast<size_t>(c)]) remap[static_cast<size_t>(c)] = ++next;
    for (int& c : colors) c = remap[static_cast<size_t>(c)];
    return EdgeColoring{next, std::move(colors)};
}

namespace {

struct ChiSearch {
    const Graph& g;
    int t;
    std::vector<int> order;       // edge ids to decide, after the fixed fan
    std::vector<uint64_t> used;   // per-vertex color bitmask
    long long nodes_left;

    bool extend(size_t pos) {
        if (pos == order.size()) return true;
        int e = order[pos];
        auto [u, v] = g.edge(e);
        uint64_t blocked =
            used[static_cast<size_t>(u)] | used[static_cast<size_t>(v)];
        for (int c = 1; c <= t; ++c) {
            if (blocked & (uint64_t{1} << c)) continue;
            if (--nodes_left < 0)
                throw Error(Errc::BudgetExhausted,
                            "chromatic index search exceeded its node budget");
            used[static_cast<size_t>(u)] |= uint64_t{1} << c;
            used[static_cast<size_t>(v)] |= uint64_t{1} << c;
            if (extend(pos + 1)) return true;
            used[static_cast<size_t>(u)] &= ~(uint64_t{1} << c);
            used[static_cast<size_t>(v)] &= ~(uint64_t{1} << c);
        }
        return false;
    }
};

} // namespace

int chromatic_index(const Graph& g, long long budget) {
    const int delta = g.max_degree();
    if (g.edge_count() == 0) return 0;
    if (delta >= 63)
        throw Error(Errc::BudgetExhausted, "degree too large for exact search");

    // Any proper Delta-coloring can be recolored so the edges at one
    // maximum-degree vertex carry colors 1..Delta in id order; fixing them
    // removes the color symmetry.
    int anchor = 0;
    while (g.degree(anchor) != delta) ++anchor;

    ChiSearch search{g, delta, {},
                     std::vector<uint64_t>(static_cast<size_t>(g.vertex_count()), 0),
                     budget};

    std::vector<char> fixed(static_cast<size_t>(g.edge_count()), 0);
    int next_color = 1;
    for (int e : g.incident_edges(anchor)) {
        fixed[static_cast<size_t>(e)] = 1;
        auto [u, v] = g.edge(e);
        search.used[static_cast<size_t>(u)] |= uint64_t{1} << next_color;
        search.used[static_cast<size_t>(v)] |= uint64_t{1} << next_color;
        ++next_color;
    }

    for (int e = 0; e < g.edge_count(); ++e)
        if (!fixed[static_cast<size_t>(e)]) search.order.push_back(e);
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](int a, int b) {
                         auto [au, av] = g.edge(a);
                         auto [bu, bv] = g.edge(b);
                         return g.degree(au) + g.degree(av) >
                                g.degree(bu) + g.degree(bv);
                     });

    return search.extend(0) ? delta : delta + 1;
}

EdgeColoring apply_color_permutation(const EdgeColoring& c,
                                     const ColorPermutation& p) {
    if (p.size() != c.t)
        throw Error(Errc::PermutationMismatch,
                    "permutation domain [1, " + std::to_string(p.size()) +
                        "] does not match t = " + std::to_string(c.t));
    if (!p.is_bijection())
        throw Error(Errc::PermutationMismatch, "mapping is not a bijection");
    EdgeColoring out{c.t, c.colors};
    for (int& col : out.colors) col = p.apply(col);
    return out;
}

KempeResult kempe_swap(const Graph& g, const EdgeColoring& c, int start,
                       int a, int b) {
    if (a == b) throw Error(Errc::KempeEqualColors, "swap colors must differ");
    if (a < 1 || a > c.t || b < 1 || b > c.t)
        throw Error(Errc::KempeBadStart, "swap colors outside [1, t]");

    auto edge_with = [&](int v, int col) {
        for (int e : g.incident_edges(v))
            if (c.color(e) == col) return e;
        return -1;
    };

    const int ea = edge_with(start, a);
    const int eb = edge_with(start, b);
    if ((ea == -1) == (eb == -1))
        throw Error(Errc::KempeBadStart,
                    ea == -1 ? "start vertex carries neither swap color"
                             : "start vertex carries both swap colors");

    KempeResult result{c, {start}};
    int cur = start;
    int want = (ea != -1) ? a : b;
    while (true) {
        // scans the input coloring: the arrival edge carries the other
        // color there, so the walk cannot turn back
        int e = edge_with(cur, want);
        if (e == -1) break;
        result.coloring.colors[static_cast<size_t>(e)] =
            (c.color(e) == a) ? b : a;
        cur = g.other_end(e, cur);
        want = (want == a) ? b : a;
        result.path.push_back(cur);
    }
    return result;
}

EdgeColoring parse_coloring(std::string_view text, int edge_count) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    EdgeColoring c;
    std::vector<char> set;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = true;
        for (char ch : line) {
            if (ch == '#') break;
            if (!isspace(static_cast<unsigned char>(ch))) {
                blank = false;
                break;
            }
        }
        if (blank) continue;

        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (!have_header) {
            int t = 0;
            if (tag != "t" || !(ls >> t) || t < 1)
                throw Error(Errc::SyntaxError,
                            "line " + std::to_string(line_no) +
                                ": expected 't <t>' header");
            c.t = t;
            c.colors.assign(static_cast<size_t>(edge_count), 0);
            set.assign(static_cast<size_t>(edge_count), 0);
            have_header = true;
            continue;
        }
        int e = 0, col = 0;
        if (tag != "c" || !(ls >> e >> col))
            throw Error(Errc::SyntaxError,
                        "line " + std::to_string(line_no) +
                            ": expected 'c <edge> <color>'");
        if (e < 0 || e >= edge_count)
            throw Error(Errc::SyntaxError,
                        "line " + std::to_string(line_no) +
                            ": edge id outside [0, " +
                            std::to_string(edge_count) + ")");
        if (set[static_cast<size_t>(e)])
            throw Error(Errc::SyntaxError,
                        "line " + std::to_string(line_no) + ": edge " +
                            std::to_string(e) + " colored twice");
        set[static_cast<size_t>(e)] = 1;
        c.colors[static_cast<size_t>(e)] = col;
    }
    if (!have_header)
        throw Error(Errc::SyntaxError, "missing 't <t>' header");
    for (int e = 0; e < edge_count; ++e)
        if (!set[static_cast<size_t>(e)])
            throw Error(Errc::SyntaxError,
                        "edge " + std::to_string(e) + " has no color");
    return c;
}

std::string write_coloring(const EdgeColoring& c) {
    std::ostringstream out;
    out << "t " << c.t << "\n";
    for (size_t e = 0; e < c.colors.size(); ++e)
        out << "c " << e << " " << c.colors[e] << "\n";
    return out.str();
}

} // namespace spectra
