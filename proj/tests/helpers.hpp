#pragma once

#include <random>
#include <utility>
#include <vector>

#include "spectra/graph.hpp"

namespace fixtures {

inline spectra::Graph path(int n) {
    std::vector<spectra::Graph::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return spectra::Graph::from_edges(n, std::move(edges));
}

inline spectra::Graph cycle(int n) {
    std::vector<spectra::Graph::Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return spectra::Graph::from_edges(n, std::move(edges));
}

inline spectra::Graph complete(int n) {
    std::vector<spectra::Graph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return spectra::Graph::from_edges(n, std::move(edges));
}

// Random connected simple graph: a random attachment tree plus extra edges.
inline spectra::Graph random_connected(int n, int extra_edges,
                                       std::mt19937& rng) {
    std::vector<spectra::Graph::Edge> edges;
    std::vector<std::vector<char>> present(
        static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
    auto add = [&](int u, int v) {
        if (u == v || present[static_cast<size_t>(u)][static_cast<size_t>(v)])
            return false;
        present[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        present[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
        edges.emplace_back(u, v);
        return true;
    };
    for (int v = 1; v < n; ++v)
        add(v, static_cast<int>(rng() % static_cast<unsigned>(v)));
    for (int tries = 0; extra_edges > 0 && tries < 20 * extra_edges; ++tries) {
        int u = static_cast<int>(rng() % static_cast<unsigned>(n));
        int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (add(u, v)) --extra_edges;
    }
    return spectra::Graph::from_edges(n, std::move(edges));
}

} // namespace fixtures
