#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mono/graph.hpp"

namespace mono {

namespace detail {

// Simplicial within the sub graph induced by `alive`: the closed neighborhood
// restricted to alive vertices is a clique.
inline bool is_simplicial_in(const Graph& g, VertexId v, const Bitset& alive) {
    Bitset nb = g.neighbors(v);
    nb &= alive;
    for (int u = nb.next(0); u != -1; u = nb.next(u + 1)) {
        Bitset missing = nb;
        missing.subtract(g.neighbors(u));
        missing.reset(u);
        if (missing.any()) return false;
    }
    return true;
}

inline Bitset full_mask(int n) {
    Bitset b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
}

// Number of connected components of the subgraph induced by `alive`.
inline int component_count_within(const Graph& g, const Bitset& alive) {
    const int n = g.vertex_count();
    Bitset seen(n);
    int comps = 0;
    for (int s = alive.next(0); s != -1; s = alive.next(s + 1)) {
        if (seen.test(s)) continue;
        ++comps;
        std::vector<VertexId> stack{s};
        seen.set(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            Bitset nb = g.neighbors(v);
            nb &= alive;
            for (int w = nb.next(0); w != -1; w = nb.next(w + 1)) {
                if (!seen.test(w)) {
                    seen.set(w);
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

}  // namespace detail

// All vertices whose closed neighborhood induces a complete graph.
inline std::vector<VertexId> simplicial_vertices(const Graph& g) {
    std::vector<VertexId> out;
    const Bitset all = detail::full_mask(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (detail::is_simplicial_in(g, v, all)) out.push_back(v);
    return out;
}

// Chordality via repeated simplicial elimination (a perfect elimination
// ordering exists iff the graph is chordal).
inline bool is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    Bitset alive = detail::full_mask(n);
    for (int removed = 0; removed < n; ++removed) {
        int pick = -1;
        for (int v = alive.next(0); v != -1; v = alive.next(v + 1)) {
            if (detail::is_simplicial_in(g, v, alive)) {
                pick = v;
                break;
            }
        }
        if (pick == -1) return false;
        alive.reset(pick);
    }
    return true;
}

// Exact clique number by branch and bound.
inline int clique_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("clique_number: empty graph");
    int best = 0;
    Bitset cand = detail::full_mask(n);
    auto rec = [&](auto&& self, int size, Bitset p) -> void {
        if (!p.any()) {
            best = std::max(best, size);
            return;
        }
        while (p.any()) {
            if (size + p.count() <= best) return;
            int v = p.next(0);
            Bitset next = p;
            next &= g.neighbors(v);
            self(self, size + 1, std::move(next));
            p.reset(v);
        }
    };
    rec(rec, 0, cand);
    return best;
}

struct CutAnalysis {
    std::vector<VertexId> cut_vertices;
    std::vector<VertexId> closed_neighborhood_cuts;  // x with G - N[x] disconnected and nonempty
};

inline CutAnalysis cut_analysis(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g))
        throw std::invalid_argument("cut_analysis: graph must be connected");
    const int n = g.vertex_count();
    CutAnalysis out;
    for (VertexId v = 0; v < n; ++v) {
        Bitset rest = detail::full_mask(n);
        rest.reset(v);
        if (rest.any() && detail::component_count_within(g, rest) > 1) out.cut_vertices.push_back(v);
    }
    for (VertexId x = 0; x < n; ++x) {
        Bitset rest = detail::full_mask(n);
        rest.subtract(g.neighbors(x));
        rest.reset(x);
        if (rest.any() && detail::component_count_within(g, rest) > 1)
            out.closed_neighborhood_cuts.push_back(x);
    }
    return out;
}

struct DominationReport {
    std::vector<VertexId> universal;
    std::vector<std::pair<VertexId, VertexId>> closed_dominated_pairs;  // (y,x): N[y] subseteq N[x]
    std::vector<std::pair<VertexId, VertexId>> open_dominated_pairs;    // (y,x): N(y) subseteq N(x)
    std::vector<std::pair<VertexId, VertexId>> open_twins;              // {u,v}: N(u) = N(v), u < v
};

inline DominationReport domination_report(const Graph& g) {
    const int n = g.vertex_count();
    DominationReport out;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) out.universal.push_back(v);
    for (VertexId y = 0; y < n; ++y) {
        for (VertexId x = 0; x < n; ++x) {
            if (x == y) continue;
            Bitset ny = g.neighbors(y);
            if (ny.is_subset_of(g.neighbors(x))) out.open_dominated_pairs.emplace_back(y, x);
            Bitset cy = g.neighbors(y);
            cy.set(y);
            Bitset cx = g.neighbors(x);
            cx.set(x);
            if (cy.is_subset_of(cx)) out.closed_dominated_pairs.emplace_back(y, x);
        }
    }
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (g.neighbors(u) == g.neighbors(v)) out.open_twins.emplace_back(u, v);
    return out;
}

struct DismantleResult {
    bool dismantlable = false;
    std::vector<VertexId> elimination_order;  // removed vertices, in order
};

// Greedy removal of closed-dominated vertices; greedy is complete for
// dismantlability, so order does not matter.
inline DismantleResult is_dismantlable(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("is_dismantlable: empty graph");
    Bitset alive = detail::full_mask(n);
    DismantleResult out;
    int alive_count = n;
    while (alive_count > 1) {
        int pick = -1;
        for (int u = alive.next(0); u != -1 && pick == -1; u = alive.next(u + 1)) {
            Bitset cu = g.neighbors(u);
            cu &= alive;
            cu.set(u);
            for (int v = alive.next(0); v != -1; v = alive.next(v + 1)) {
                if (v == u) continue;
                Bitset cv = g.neighbors(v);
                cv &= alive;
                cv.set(v);
                if (cu.is_subset_of(cv)) {
                    pick = u;
                    break;
                }
            }
        }
        if (pick == -1) return out;  // stuck before K_1
        out.elimination_order.push_back(pick);
        alive.reset(pick);
        --alive_count;
    }
    out.dismantlable = true;
    return out;
}

struct ConditionVerdict {
    bool passed = true;
    std::string witness;  // description of the first violation
};

struct NecessaryConditionsReport {
    ConditionVerdict no_cut_vertex;                 // (i), P_3 exempt
    ConditionVerdict no_closed_neighborhood_cut;    // (ii)
    ConditionVerdict open_domination_shape;         // (iii) N(y) in N(x) forces N[x] = V - {y}
    ConditionVerdict closed_domination_universal;   // (iv) N[y] in N[x] forces x universal

    bool all_passed() const {
        return no_cut_vertex.passed && no_closed_neighborhood_cut.passed &&
               open_domination_shape.passed && closed_domination_universal.passed;
    }
};

// The four necessary conditions of strongly 2-monophonic graphs. Any failure
// certifies that the graph is not strongly 2-monophonic.
inline NecessaryConditionsReport necessary_conditions_report(const Graph& g) {
    const int n = g.vertex_count();
    NecessaryConditionsReport rep;
    if (n == 0) return rep;
    const Bitset all = detail::full_mask(n);
    const int base_components = detail::component_count_within(g, all);
    const bool is_p3 = (n == 3 && g.edge_count() == 2 && base_components == 1);

    if (!is_p3 && n >= 2) {
        for (VertexId v = 0; v < n && rep.no_cut_vertex.passed; ++v) {
            Bitset rest = all;
            rest.reset(v);
            if (detail::component_count_within(g, rest) > base_components) {
                rep.no_cut_vertex.passed = false;
                rep.no_cut_vertex.witness = "cut vertex " + std::to_string(v);
            }
        }
    }
    for (VertexId x = 0; x < n && rep.no_closed_neighborhood_cut.passed; ++x) {
        Bitset rest = all;
        rest.subtract(g.neighbors(x));
        rest.reset(x);
        if (rest.any() && detail::component_count_within(g, rest) > 1) {
            rep.no_closed_neighborhood_cut.passed = false;
            rep.no_closed_neighborhood_cut.witness = "N[" + std::to_string(x) + "] is a cut set";
        }
    }
    for (VertexId y = 0; y < n && rep.open_domination_shape.passed; ++y) {
        for (VertexId x = 0; x < n; ++x) {
            if (x == y) continue;
            if (!g.neighbors(y).is_subset_of(g.neighbors(x))) continue;
            Bitset closed_x = g.neighbors(x);
            closed_x.set(x);
            Bitset want = all;
            want.reset(y);
            if (!(closed_x == want)) {
                rep.open_domination_shape.passed = false;
                rep.open_domination_shape.witness = "N(" + std::to_string(y) + ") in N(" + std::to_string(x) +
                                                    ") but N[" + std::to_string(x) + "] != V - {" +
                                                    std::to_string(y) + "}";
                break;
            }
        }
    }
    for (VertexId y = 0; y < n && rep.closed_domination_universal.passed; ++y) {
        for (VertexId x = 0; x < n; ++x) {
            if (x == y) continue;
            Bitset cy = g.neighbors(y);
            cy.set(y);
            Bitset cx = g.neighbors(x);
            cx.set(x);
            if (!cy.is_subset_of(cx)) continue;
            if (g.degree(x) != n - 1) {
                rep.closed_domination_universal.passed = false;
                rep.closed_domination_universal.witness = "N[" + std::to_string(y) + "] in N[" +
                                                          std::to_string(x) + "] but " + std::to_string(x) +
                                                          " is not universal";
                break;
            }
        }
    }
    return rep;
}

// An induced cycle containing all of a, b, c, or nullopt after exhaustive
// backtracking anchored at a. Grows paths a=p_0,p_1,... where only p_1 and
// the eventual closing vertex may touch a.
inline std::optional<std::vector<VertexId>> induced_cycle_through(const Graph& g, VertexId a, VertexId b,
                                                                  VertexId c) {
    if (a == b || a == c || b == c)
        throw std::invalid_argument("induced_cycle_through: vertices must be distinct");
    g.check_vertex(a);
    g.check_vertex(b);
    g.check_vertex(c);
    const int n = g.vertex_count();
    std::vector<VertexId> path{a};
    Bitset on_path(n);
    on_path.set(a);
    std::optional<std::vector<VertexId>> result;

    auto rec = [&](auto&& self) -> bool {
        const VertexId tip = path.back();
        const int len = static_cast<int>(path.size());
        if (len >= 3 && g.adjacent(tip, a)) {
            if (on_path.test(b) && on_path.test(c)) {
                result = path;
                return true;
            }
            return false;  // must close here, but b or c is missing
        }
        for (int w = g.neighbors(tip).next(0); w != -1; w = g.neighbors(tip).next(w + 1)) {
            if (on_path.test(w)) continue;
            bool chord = false;  // w may touch only the tip (and a, as future closer)
            for (int i = 1; i + 1 < len; ++i)
                if (g.adjacent(w, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            // b and c must stay placeable: once a vertex other than a is
            // buried behind the tip it can no longer gain neighbors.
            bool dead = false;
            for (VertexId need : {b, c}) {
                if (need == w || on_path.test(need)) continue;
                for (int i = 1; i < len && !dead; ++i)
                    if (g.adjacent(need, path[i])) dead = true;
            }
            if (dead) continue;
            path.push_back(w);
            on_path.set(w);
            if (self(self)) return true;
            path.pop_back();
            on_path.reset(w);
        }
        return false;
    };
    rec(rec);
    return result;
}

struct ReductionStep {
    enum class Kind { universal, twin_pair };
    Kind kind;
    std::vector<VertexId> removed;  // original vertex ids
};

struct ReductionResult {
    Graph core;
    std::vector<ReductionStep> log;
    std::vector<VertexId> core_to_original;
};

// Repeatedly delete universal vertices and open-twin pairs {u,v} where u is
// universal in G - v. Stops at order 2 (so K_n - e bottoms out at 2K_1) and
// never deletes the last vertex.
inline ReductionResult reduce_by_universals_and_twins(const Graph& g) {
    std::vector<VertexId> orig(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) orig[i] = i;
    Graph cur = g;
    std::vector<ReductionStep> log;

    while (true) {
        const int n = cur.vertex_count();
        int universal = -1;
        if (n >= 2) {
            for (VertexId v = 0; v < n && universal == -1; ++v)
                if (cur.degree(v) == n - 1) universal = v;
        }
        if (universal != -1) {
            log.push_back({ReductionStep::Kind::universal, {orig[universal]}});
            std::vector<VertexId> keep;
            for (VertexId v = 0; v < n; ++v)
                if (v != universal) keep.push_back(v);
            cur = induced_subgraph(cur, keep);
            std::vector<VertexId> norig;
            for (VertexId v : keep) norig.push_back(orig[v]);
            orig = std::move(norig);
            continue;
        }
        if (n >= 3) {
            int tu = -1, tv = -1;
            for (VertexId u = 0; u < n && tu == -1; ++u)
                for (VertexId v = u + 1; v < n; ++v) {
                    if (!(cur.neighbors(u) == cur.neighbors(v))) continue;
                    if (cur.degree(u) == n - 2) {  // u universal in G - v
                        tu = u;
                        tv = v;
                        break;
                    }
                }
            if (tu != -1) {
                log.push_back({ReductionStep::Kind::twin_pair, {orig[tu], orig[tv]}});
                std::vector<VertexId> keep;
                for (VertexId v = 0; v < n; ++v)
                    if (v != tu && v != tv) keep.push_back(v);
                cur = induced_subgraph(cur, keep);
                std::vector<VertexId> norig;
                for (VertexId v : keep) norig.push_back(orig[v]);
                orig = std::move(norig);
                continue;
            }
        }
        break;
    }
    return ReductionResult{std::move(cur), std::move(log), std::move(orig)};
}

}  // namespace mono
