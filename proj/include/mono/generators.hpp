#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mono/graph.hpp"
#include "mono/subsets.hpp"

namespace mono {

// J(n,r,i): all r-subsets of [1..n], adjacency |A cap B| = i.
// Vertices are enumerated in colexicographic order, so ids are reproducible.
// i = 0 is the Kneser graph K(n,r); i = r-1 is the Johnson graph J(n,r).
inline Graph generalized_johnson(int n, int r, int i) {
    if (r < 0 || n < 0 || r > n) throw std::invalid_argument("generalized_johnson: need 0 <= r <= n");
    if (i < 0 || i > r) throw std::invalid_argument("generalized_johnson: need 0 <= i <= r");
    const auto count = binomial(n, r);
    std::vector<SubsetVertex> labels;
    labels.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k)
        labels.push_back(SubsetVertex{colex_unrank(k, r), n});
    std::vector<std::pair<int, int>> edges;
    const int nv = static_cast<int>(count);
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
            if (intersection_size(labels[a].elements, labels[b].elements) == i) edges.emplace_back(a, b);
    Graph g(nv, edges);
    g.attach_subset_labels(std::move(labels));
    return g;
}

inline Graph kneser(int n, int r) { return generalized_johnson(n, r, 0); }

inline Graph johnson(int n, int r) {
    if (r < 1) throw std::invalid_argument("johnson: need r >= 1");
    return generalized_johnson(n, r, r - 1);
}

enum class BasicKind { complete, path, cycle, complete_minus_matching };

inline BasicKind basic_kind_from_string(const std::string& s) {
    if (s == "complete") return BasicKind::complete;
    if (s == "path") return BasicKind::path;
    if (s == "cycle") return BasicKind::cycle;
    if (s == "complete_minus_matching" || s == "complete-minus-matching")
        return BasicKind::complete_minus_matching;
    throw std::invalid_argument("unknown basic graph kind: " + s);
}

// complete_minus_matching removes the m pairs {0,1},{2,3},...; m = 1 gives K_n - e.
inline Graph basic_graph(BasicKind kind, int n, int m = 0) {
    if (n < 1) throw std::invalid_argument("basic_graph: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case BasicKind::complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            break;
        case BasicKind::path:
            for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
            break;
        case BasicKind::cycle:
            if (n < 3) throw std::invalid_argument("basic_graph: cycle needs n >= 3");
            for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
            break;
        case BasicKind::complete_minus_matching: {
            if (m < 0 || m > n / 2)
                throw std::invalid_argument("basic_graph: matching size must satisfy m <= floor(n/2)");
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    const bool matched = (v == u + 1) && (u % 2 == 0) && (u / 2 < m);
                    if (!matched) edges.emplace_back(u, v);
                }
            break;
        }
    }
    return Graph(n, edges);
}

// G box H with the fixed id convention (g,h) -> g*n(H) + h. Subset labels of
// the factors are dropped; factor coordinates are kept as pair labels.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("cartesian_product: factors must be nonempty");
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < ng; ++a) {
        for (int b = 0; b < nh; ++b) {
            const int id = a * nh + b;
            for (int b2 = h.neighbors(b).next(b + 1); b2 != -1; b2 = h.neighbors(b).next(b2 + 1))
                edges.emplace_back(id, a * nh + b2);
            for (int a2 = g.neighbors(a).next(a + 1); a2 != -1; a2 = g.neighbors(a).next(a2 + 1))
                edges.emplace_back(id, a2 * nh + b);
        }
    }
    Graph prod(ng * nh, edges);
    std::vector<std::pair<VertexId, VertexId>> coords;
    coords.reserve(static_cast<std::size_t>(ng) * nh);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) coords.emplace_back(a, b);
    prod.attach_pair_labels(std::move(coords));
    return prod;
}

// Hamming graph: iterated Cartesian product of complete graphs.
// hamming({2,...,2}) with k factors is the hypercube Q_k.
inline Graph hamming(const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("hamming: need at least one dimension");
    for (int d : dims)
        if (d < 1) throw std::invalid_argument("hamming: dimensions must be >= 1");
    Graph g = basic_graph(BasicKind::complete, dims[0]);
    for (std::size_t i = 1; i < dims.size(); ++i)
        g = cartesian_product(g, basic_graph(BasicKind::complete, dims[i]));
    return g;
}

}  // namespace mono
