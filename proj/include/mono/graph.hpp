#pragma once

#include <map>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mono/bitset.hpp"
#include "mono/subsets.hpp"

namespace mono {

using VertexId = int;

// A path given as its vertex sequence. Carries the proof obligation that the
// subgraph induced by its vertices is exactly the path; is_induced_path checks it.
// A single vertex is a path of length 0.
struct InducedPath {
    std::vector<VertexId> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool contains(VertexId v) const {
        for (VertexId w : vertices) if (w == v) return true;
        return false;
    }
    bool operator==(const InducedPath& o) const { return vertices == o.vertices; }
};

// Immutable finite simple graph with O(1) adjacency. Vertices are dense ids
// 0..n-1; adjacency is a packed bit matrix (one Bitset row per vertex).
// Set-labeled families additionally carry subset labels in colex id order;
// Cartesian products carry factor-coordinate pair labels instead.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        adj_.assign(n, Bitset(n));
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool adjacent(VertexId u, VertexId v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u].test(v);
    }

    const Bitset& neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(VertexId v) const { return neighbors(v).count(); }

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0," +
                                        std::to_string(n_) + ")");
    }

    // --- subset labels ---
    bool has_subset_labels() const { return !labels_.empty(); }
    int ground_n() const { return ground_n_; }
    int subset_r() const { return labels_.empty() ? 0 : labels_[0].r(); }

    const SubsetVertex& label(VertexId v) const {
        check_vertex(v);
        if (labels_.empty()) throw std::invalid_argument("graph has no subset labels");
        return labels_[v];
    }

    // Id of the vertex labeled by the given ascending element list, if present.
    std::optional<VertexId> vertex_of(const std::vector<int>& elements) const {
        auto it = label_index_.find(elements);
        if (it == label_index_.end()) return std::nullopt;
        return it->second;
    }

    void attach_subset_labels(std::vector<SubsetVertex> labels) {
        if (static_cast<int>(labels.size()) != n_)
            throw std::invalid_argument("label count does not match vertex count");
        int r = labels.empty() ? 0 : labels[0].r();
        int gn = labels.empty() ? 0 : labels[0].ground_n;
        for (int v = 0; v < n_; ++v) {
            if (labels[v].r() != r) throw std::invalid_argument("labels must have uniform subset size");
            if (labels[v].ground_n != gn) throw std::invalid_argument("labels must share one ground set");
            validate_subset(labels[v].elements, gn);
            auto [it, fresh] = label_index_.emplace(labels[v].elements, v);
            if (!fresh) throw std::invalid_argument("duplicate subset label " + subset_to_string(labels[v].elements));
        }
        labels_ = std::move(labels);
        ground_n_ = gn;
    }

    // --- pair labels (Cartesian products) ---
    bool has_pair_labels() const { return !pair_labels_.empty(); }
    std::pair<VertexId, VertexId> pair_label(VertexId v) const {
        check_vertex(v);
        if (pair_labels_.empty()) throw std::invalid_argument("graph has no pair labels");
        return pair_labels_[v];
    }
    void attach_pair_labels(std::vector<std::pair<VertexId, VertexId>> labels) {
        if (static_cast<int>(labels.size()) != n_)
            throw std::invalid_argument("pair label count does not match vertex count");
        pair_labels_ = std::move(labels);
    }

    // 64-bit content hash over order, edges and labels; used as a cache key.
    std::uint64_t content_hash() const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        mix(static_cast<std::uint64_t>(n_));
        for (const auto& row : adj_)
            for (auto w : row.words()) mix(w);
        for (const auto& lab : labels_) {
            mix(static_cast<std::uint64_t>(lab.ground_n));
            for (int e : lab.elements) mix(static_cast<std::uint64_t>(e));
        }
        return h;
    }

private:
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (adj_[u].test(v)) return;  // duplicates folded silently
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
    std::vector<SubsetVertex> labels_;
    std::map<std::vector<int>, VertexId> label_index_;
    int ground_n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> pair_labels_;
};

// True iff seq is a sequence of distinct vertices where consecutive pairs are
// adjacent and non-consecutive pairs are not. A single vertex qualifies.
inline bool is_induced_path(const Graph& g, std::span<const VertexId> seq) {
    const int k = static_cast<int>(seq.size());
    if (k == 0) return false;
    for (VertexId v : seq) g.check_vertex(v);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (seq[i] == seq[j]) return false;
            const bool adj = g.adjacent(seq[i], seq[j]);
            if (j == i + 1 && !adj) return false;
            if (j > i + 1 && adj) return false;
        }
    }
    return true;
}

inline bool is_induced_path(const Graph& g, const InducedPath& p) {
    return is_induced_path(g, std::span<const VertexId>(p.vertices));
}

// Exact shortest-path length by breadth-first search; nullopt when u and v
// are in different components.
inline std::optional<int> distance(const Graph& g, VertexId u, VertexId v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return 0;
    std::vector<int> dist(g.vertex_count(), -1);
    dist[u] = 0;
    std::queue<VertexId> q;
    q.push(u);
    while (!q.empty()) {
        VertexId cur = q.front();
        q.pop();
        for (int w = g.neighbors(cur).next(0); w != -1; w = g.neighbors(cur).next(w + 1)) {
            if (dist[w] != -1) continue;
            dist[w] = dist[cur] + 1;
            if (w == v) return dist[w];
            q.push(w);
        }
    }
    return std::nullopt;
}

// One shortest u,v-path (BFS tree, smallest-id tie break), or nullopt if none.
// Shortest paths have no chords, so the result is always an induced path.
inline std::optional<InducedPath> shortest_path(const Graph& g, VertexId u, VertexId v) {
    g.check_vertex(u);
    g.check_vertex(v);
    std::vector<VertexId> prev(g.vertex_count(), -2);
    prev[u] = -1;
    std::queue<VertexId> q;
    q.push(u);
    while (!q.empty() && prev[v] == -2) {
        VertexId cur = q.front();
        q.pop();
        for (int w = g.neighbors(cur).next(0); w != -1; w = g.neighbors(cur).next(w + 1)) {
            if (prev[w] != -2) continue;
            prev[w] = cur;
            q.push(w);
        }
    }
    if (prev[v] == -2) return std::nullopt;
    InducedPath p;
    for (VertexId cur = v; cur != -1; cur = prev[cur]) p.vertices.push_back(cur);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

inline std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    int next_id = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next_id;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (int w = g.neighbors(v).next(0); w != -1; w = g.neighbors(v).next(w + 1)) {
                if (comp[w] == -1) {
                    comp[w] = next_id;
                    stack.push_back(w);
                }
            }
        }
        ++next_id;
    }
    return comp;
}

inline int component_count(const Graph& g) {
    auto comp = component_ids(g);
    int best = -1;
    for (int c : comp) best = std::max(best, c);
    return best + 1;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("is_connected: empty graph");
    return component_count(g) == 1;
}

// Subgraph induced by `keep` (ascending ids); labels are not carried over.
inline Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        g.check_vertex(keep[i]);
        pos[keep[i]] = i;
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(keep.size()), edges);
}

}  // namespace mono
