#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectra/error.hpp"

namespace spectra {

// Simple undirected connected graph with indexed vertices and edges.
// Edge ids are positional: edge i is edges()[i]. Immutable once built.
class Graph {
public:
    using Edge = std::pair<int, int>; // stored with u < v

    // Validates simplicity, connectivity and vertex range; throws Error.
    static Graph from_edges(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(int e) const { return edges_[static_cast<size_t>(e)]; }

    // Ids of edges incident with v, ascending.
    const std::vector<int>& incident_edges(int v) const {
        return incidence_[static_cast<size_t>(v)];
    }

    int degree(int v) const {
        return static_cast<int>(incidence_[static_cast<size_t>(v)].size());
    }
    int max_degree() const { return max_degree_; }

    // The endpoint of edge e that is not v.
    int other_end(int e, int v) const {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        return ed.first == v ? ed.second : ed.first;
    }

private:
    Graph() = default;

    int vertex_count_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
};

// The (X, Y) split of a bipartite graph. x_side always contains vertex 0.
struct Bipartition {
    std::vector<int> x_side;
    std::vector<int> y_side;
    std::vector<char> in_x; // indexed by vertex id

    bool is_x(int v) const { return in_x[static_cast<size_t>(v)] != 0; }

    Bipartition swapped() const;
};

struct DegreeProfile {
    int max_degree = 0;
    bool is_regular = false;
    // (a, b): uniform degree on x_side / y_side; set only when both are uniform.
    std::optional<std::pair<int, int>> biregular;
};

// Edge-list document: '#' comments, "v <n>", then "e <u> <v>" lines.
// Edge order in the file defines edge ids.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

// Breadth-first 2-coloring from vertex 0. Throws NotBipartiteError with an
// odd-cycle witness.
Bipartition bipartition(const Graph& g);

DegreeProfile degree_profile(const Graph& g, const Bipartition* b = nullptr);

// K_{m,n} with the side of size m numbered first (vertices 0..m-1).
Graph gen_complete_bipartite(int m, int n);

// The standard 10-vertex, 15-edge Petersen graph with a fixed edge order.
Graph gen_petersen();

struct BiregularOptions {
    int max_attempts = 10000;
};

// Random simple connected (k-1,k)-biregular bipartite graph with
// |X| = k*m (degree k-1) and |Y| = (k-1)*m (degree k). Pairing-model
// sampling; attempts producing multi-edges or a disconnected graph are
// rejected wholesale. Deterministic for a fixed seed.
Graph gen_biregular(int k, int m, std::uint64_t seed,
                    const BiregularOptions& options = {});

} // namespace spectra
