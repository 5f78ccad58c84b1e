#include "spectra/graph.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace spectra {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::SyntaxError: return "syntax-error";
    case Errc::LoopEdge: return "loop-edge";
    case Errc::DuplicateEdge: return "duplicate-edge";
    case Errc::Disconnected: return "disconnected";
    case Errc::VertexOutOfRange: return "vertex-out-of-range";
    case Errc::NotBipartite: return "not-bipartite";
    case Errc::NotRegular: return "not-regular";
    case Errc::NotBiregular: return "not-biregular";
    case Errc::ClassOne: return "class-one";
    case Errc::DegreeMismatch: return "degree-mismatch";
    case Errc::EmptyDomain: return "empty-domain";
    case Errc::PermutationMismatch: return "permutation-mismatch";
    case Errc::KempeBadStart: return "kempe-bad-start";
    case Errc::KempeEqualColors: return "kempe-equal-colors";
    case Errc::InvalidColoring: return "invalid-coloring";
    case Errc::PreconditionViolated: return "precondition-violated";
    case Errc::PostconditionViolated: return "postcondition-violated";
    case Errc::GenerationFailure: return "generation-failure";
    case Errc::BudgetExhausted: return "budget-exhausted";
    case Errc::ConstructionFailed: return "construction-failed";
    case Errc::IoError: return "io-error";
    }
    return "unknown";
}

Graph Graph::from_edges(int vertex_count, std::vector<Edge> edges) {
    if (vertex_count < 1)
        throw Error(Errc::SyntaxError, "vertex count must be positive");

    std::set<Edge> seen;
    for (auto& e : edges) {
        if (e.first == e.second)
            throw Error(Errc::LoopEdge,
                        "loop at vertex " + std::to_string(e.first));
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= vertex_count)
            throw Error(Errc::VertexOutOfRange,
                        "edge (" + std::to_string(e.first) + ", " +
                            std::to_string(e.second) + ") outside [0, " +
                            std::to_string(vertex_count) + ")");
        if (!seen.insert(e).second)
            throw Error(Errc::DuplicateEdge,
                        "repeated edge (" + std::to_string(e.first) + ", " +
                            std::to_string(e.second) + ")");
    }

    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_ = std::move(edges);
    g.incidence_.assign(static_cast<size_t>(vertex_count), {});
    for (int e = 0; e < g.edge_count(); ++e) {
        g.incidence_[static_cast<size_t>(g.edges_[static_cast<size_t>(e)].first)]
            .push_back(e);
        g.incidence_[static_cast<size_t>(g.edges_[static_cast<size_t>(e)].second)]
            .push_back(e);
    }
    for (int v = 0; v < vertex_count; ++v)
        g.max_degree_ = std::max(g.max_degree_, g.degree(v));

    // connectivity from vertex 0
    std::vector<char> reached(static_cast<size_t>(vertex_count), 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident_edges(v)) {
            int w = g.other_end(e, v);
            if (!reached[static_cast<size_t>(w)]) {
                reached[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    if (count != vertex_count) {
        int missing = 0;
        while (reached[static_cast<size_t>(missing)]) ++missing;
        throw Error(Errc::Disconnected,
                    "vertex " + std::to_string(missing) +
                        " unreachable from vertex 0");
    }
    return g;
}

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void syntax_error(int line_no, const std::string& what) {
    throw Error(Errc::SyntaxError,
                "line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int vertex_count = 0;
    std::vector<Graph::Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank_or_comment(line)) continue;

        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (!have_header) {
            if (tag != "v") syntax_error(line_no, "expected 'v <n>' header");
            if (!(ls >> vertex_count) || vertex_count < 1)
                syntax_error(line_no, "vertex count must be a positive integer");
            std::string rest;
            if (ls >> rest) syntax_error(line_no, "trailing token '" + rest + "'");
            have_header = true;
            continue;
        }
        if (tag != "e") syntax_error(line_no, "expected 'e <u> <v>' line");
        int u = 0, v = 0;
        if (!(ls >> u >> v)) syntax_error(line_no, "expected two vertex indices");
        std::string rest;
        if (ls >> rest) syntax_error(line_no, "trailing token '" + rest + "'");
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw Error(Errc::VertexOutOfRange,
                        "line " + std::to_string(line_no) + ": vertex index outside [0, " +
                            std::to_string(vertex_count) + ")");
        edges.emplace_back(u, v);
    }
    if (!have_header)
        throw Error(Errc::SyntaxError, "missing 'v <n>' header");
    return Graph::from_edges(vertex_count, std::move(edges));
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "v " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

Bipartition Bipartition::swapped() const {
    Bipartition s;
    s.x_side = y_side;
    s.y_side = x_side;
    s.in_x.resize(in_x.size());
    for (size_t i = 0; i < in_x.size(); ++i) s.in_x[i] = in_x[i] ? 0 : 1;
    return s;
}

Bipartition bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<size_t>(n), -1);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> depth(static_cast<size_t>(n), 0);
    std::vector<int> queue{0};
    side[0] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int e : g.incident_edges(v)) {
            int w = g.other_end(e, v);
            if (side[static_cast<size_t>(w)] == -1) {
                side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(v)];
                parent[static_cast<size_t>(w)] = v;
                depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
                queue.push_back(w);
            } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
                // odd cycle: tree paths v->lca, lca->w, plus the edge (w, v)
                std::vector<int> up_v, up_w;
                int a = v, b = w;
                while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) {
                    up_v.push_back(a);
                    a = parent[static_cast<size_t>(a)];
                }
                while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) {
                    up_w.push_back(b);
                    b = parent[static_cast<size_t>(b)];
                }
                while (a != b) {
                    up_v.push_back(a);
                    up_w.push_back(b);
                    a = parent[static_cast<size_t>(a)];
                    b = parent[static_cast<size_t>(b)];
                }
                std::vector<int> cycle(up_v);
                cycle.push_back(a);
                cycle.insert(cycle.end(), up_w.rbegin(), up_w.rend());
                throw NotBipartiteError(
                    cycle, "odd cycle of length " + std::to_string(cycle.size()));
            }
        }
    }

    Bipartition b;
    b.in_x.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (side[static_cast<size_t>(v)] == 0) {
            b.x_side.push_back(v);
            b.in_x[static_cast<size_t>(v)] = 1;
        } else {
            b.y_side.push_back(v);
        }
    }
    return b;
}

DegreeProfile degree_profile(const Graph& g, const Bipartition* b) {
    DegreeProfile p;
    p.max_degree = g.max_degree();
    int min_degree = g.vertex_count() > 0 ? g.degree(0) : 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        min_degree = std::min(min_degree, g.degree(v));
    p.is_regular = (min_degree == p.max_degree);

    if (b != nullptr && !b->x_side.empty() && !b->y_side.empty()) {
        int a = g.degree(b->x_side.front());
        int bb = g.degree(b->y_side.front());
        bool uniform = true;
        for (int v : b->x_side) uniform = uniform && g.degree(v) == a;
        for (int v : b->y_side) uniform = uniform && g.degree(v) == bb;
        if (uniform) p.biregular = std::make_pair(a, bb);
    }
    return p;
}

Graph gen_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw Error(Errc::PreconditionViolated, "sides must be nonempty");
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<size_t>(m) * static_cast<size_t>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph::from_edges(m + n, std::move(edges));
}

Graph gen_petersen() {
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5); // outer C_5
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);       // spokes
    for (int i = 0; i < 5; ++i) edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    return Graph::from_edges(10, std::move(edges));
}

namespace {

// Unbiased draw in [0, n); fully determined by the mt19937_64 stream, so
// results do not depend on the standard library's shuffle implementation.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

template <typename T>
void fisher_yates(std::vector<T>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[static_cast<size_t>(bounded_draw(rng, i))]);
}

bool connected(int n, const std::vector<Graph::Edge>& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& [u, v] : edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    std::vector<char> reached(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(v)]) {
            if (!reached[static_cast<size_t>(w)]) {
                reached[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

} // namespace

Graph gen_biregular(int k, int m, std::uint64_t seed,
                    const BiregularOptions& options) {
    if (k < 3 || m < 1)
        throw Error(Errc::PreconditionViolated, "need k >= 3 and m >= 1");

    const int nx = k * m;       // degree k-1 each
    const int ny = (k - 1) * m; // degree k each
    const int stubs = nx * (k - 1);

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        std::vector<int> y_stub;
        y_stub.reserve(static_cast<size_t>(stubs));
        for (int y = 0; y < ny; ++y)
            for (int s = 0; s < k; ++s) y_stub.push_back(nx + y);
        fisher_yates(y_stub, rng);

        std::vector<Graph::Edge> edges;
        edges.reserve(static_cast<size_t>(stubs));
        bool simple = true;
        std::vector<std::set<int>> partners(static_cast<size_t>(nx));
        int s = 0;
        for (int x = 0; x < nx && simple; ++x) {
            for (int d = 0; d < k - 1; ++d, ++s) {
                int y = y_stub[static_cast<size_t>(s)];
                if (!partners[static_cast<size_t>(x)].insert(y).second) {
                    simple = false;
                    break;
                }
                edges.emplace_back(x, y);
            }
        }
        if (!simple || !connected(nx + ny, edges)) continue;
        return Graph::from_edges(nx + ny, std::move(edges));
    }
    throw Error(Errc::GenerationFailure,
                "no simple connected pairing within " +
                    std::to_string(options.max_attempts) +
                    " attempts; retry with a new seed");
}

} // namespace spectra
