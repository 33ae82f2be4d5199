#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mono/engine.hpp"
#include "mono/generators.hpp"
#include "mono/graph.hpp"
#include "mono/subsets.hpp"

namespace mono {

// ---------------------------------------------------------------------------
// Venn partition of the ground set by three r-subsets x, y, u.
// ---------------------------------------------------------------------------

struct VennPartition {
    std::vector<int> X, Y, U, A, B, C, D, Z;
    int t() const { return static_cast<int>(C.size() + D.size()); }  // |u cap x|
    int s() const { return static_cast<int>(B.size() + D.size()); }  // |u cap y|
};

inline VennPartition venn_partition(const SubsetVertex& x, const SubsetVertex& y, const SubsetVertex& u,
                                    int n) {
    if (x.ground_n != n || y.ground_n != n || u.ground_n != n)
        throw std::invalid_argument("venn_partition: mismatched ground sets");
    if (x == y || x == u || y == u)
        throw std::invalid_argument("venn_partition: x, y, u must be pairwise distinct");
    const auto& xe = x.elements;
    const auto& ye = y.elements;
    const auto& ue = u.elements;
    VennPartition p;
    p.X = set_difference(set_difference(xe, ye), ue);
    p.Y = set_difference(set_difference(ye, xe), ue);
    p.U = set_difference(set_difference(ue, xe), ye);
    p.A = set_difference(set_intersection(xe, ye), ue);
    p.B = set_difference(set_intersection(ye, ue), xe);
    p.C = set_difference(set_intersection(xe, ue), ye);
    p.D = set_intersection(set_intersection(xe, ye), ue);
    std::vector<int> ground(n);
    for (int i = 0; i < n; ++i) ground[i] = i + 1;
    p.Z = set_difference(set_difference(set_difference(ground, xe), ye), ue);
    return p;
}

// X_{<=k}: the first k entries of an ordered block; X_{>=k}: the last k.
inline std::vector<int> block_prefix(const std::vector<int>& xs, int k) {
    return {xs.begin(), xs.begin() + k};
}
inline std::vector<int> block_suffix(const std::vector<int>& xs, int k) {
    return {xs.end() - k, xs.end()};
}

namespace detail {

inline std::vector<int> merge_sorted(std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    std::sort(out.begin(), out.end());
    return out;
}

// Even-length alternating segment over explicit ordered blocks,
// |A| = |B| = m:  x_0 = A u C,  x_{2i-1} = A_{<=i-1} u B_{>=m-i} u D,
// x_{2i} = B_{<=i} u A_{>=m-i} u C,  ending at x_{2m} = B u C.
inline std::vector<std::vector<int>> even_segment(const std::vector<int>& A, const std::vector<int>& B,
                                                  const std::vector<int>& C, const std::vector<int>& D) {
    const int m = static_cast<int>(A.size());
    if (static_cast<int>(B.size()) != m)
        throw std::invalid_argument("even_segment: |A| != |B|");
    std::vector<std::vector<int>> out;
    out.push_back(merge_sorted({&A, &C}));
    for (int i = 1; i <= m; ++i) {
        auto ap = block_prefix(A, i - 1);
        auto bs = block_suffix(B, m - i);
        out.push_back(merge_sorted({&ap, &bs, &D}));
        auto bp = block_prefix(B, i);
        auto as = block_suffix(A, m - i);
        out.push_back(merge_sorted({&bp, &as, &C}));
    }
    return out;
}

// Odd-length alternating segment, |C| = |Dp| = t (the leading vertex
// a = A u C u Drest-complement is prepended by the caller):
// x_0 = Dp u B,  x_{2i-1} = Dp_{<=i-1} u C_{>=t-i} u A u Drest,
// x_{2i} = C_{<=i} u Dp_{>=t-i} u B,  ending at x_{2t} = C u B.
inline std::vector<std::vector<int>> odd_segment(const std::vector<int>& A, const std::vector<int>& B,
                                                 const std::vector<int>& C, const std::vector<int>& Dp,
                                                 const std::vector<int>& Drest) {
    const int t = static_cast<int>(C.size());
    if (static_cast<int>(Dp.size()) != t)
        throw std::invalid_argument("odd_segment: |D'| != |C|");
    std::vector<std::vector<int>> out;
    out.push_back(merge_sorted({&Dp, &B}));
    for (int i = 1; i <= t; ++i) {
        auto dp = block_prefix(Dp, i - 1);
        auto cs = block_suffix(C, t - i);
        out.push_back(merge_sorted({&dp, &cs, &A, &Drest}));
        auto cp = block_prefix(C, i);
        auto ds = block_suffix(Dp, t - i);
        out.push_back(merge_sorted({&cp, &ds, &B}));
    }
    return out;
}

inline std::vector<SubsetVertex> to_subset_vertices(const std::vector<std::vector<int>>& sets, int ground_n) {
    std::vector<SubsetVertex> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(SubsetVertex{s, ground_n});
    return out;
}

inline std::vector<int> without(const std::vector<int>& xs, int elem) {
    std::vector<int> out;
    out.reserve(xs.size());
    for (int e : xs)
        if (e != elem) out.push_back(e);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Canonical even- and odd-length induced paths in the odd graph K(2r+1, r).
// ---------------------------------------------------------------------------

// Induced a,b-path of length exactly 2(r-t) where t = |a cap b| >= 1.
inline std::vector<SubsetVertex> even_path(const SubsetVertex& a, const SubsetVertex& b, int n) {
    const int r = a.r();
    if (b.r() != r || a.ground_n != n || b.ground_n != n)
        throw std::invalid_argument("even_path: a, b must be r-subsets over ground [n]");
    if (n != 2 * r + 1) throw std::invalid_argument("even_path: requires the odd graph, n = 2r+1");
    const int t = intersection_size(a.elements, b.elements);
    if (a.elements == b.elements) throw std::invalid_argument("even_path: a and b coincide");
    if (t < 1) throw std::invalid_argument("even_path: requires t = |a cap b| >= 1 (use the edge when t = 0)");
    const auto C = set_intersection(a.elements, b.elements);
    const auto A = set_difference(a.elements, b.elements);
    const auto B = set_difference(b.elements, a.elements);
    std::vector<int> ground(n);
    for (int i = 0; i < n; ++i) ground[i] = i + 1;
    const auto D = set_difference(set_difference(ground, a.elements), b.elements);
    return detail::to_subset_vertices(detail::even_segment(A, B, C, D), n);
}

// Induced a,b-path of length exactly 2t+1 where t = |a cap b|; D' defaults to
// the t smallest elements of D = [n] - (a u b). Any t-subset of D works.
inline std::vector<SubsetVertex> odd_path(const SubsetVertex& a, const SubsetVertex& b, int n,
                                          const std::optional<std::vector<int>>& dprime = std::nullopt) {
    const int r = a.r();
    if (b.r() != r || a.ground_n != n || b.ground_n != n)
        throw std::invalid_argument("odd_path: a, b must be r-subsets over ground [n]");
    if (n != 2 * r + 1) throw std::invalid_argument("odd_path: requires the odd graph, n = 2r+1");
    if (a.elements == b.elements) throw std::invalid_argument("odd_path: a and b coincide");
    const int t = intersection_size(a.elements, b.elements);
    const auto C = set_intersection(a.elements, b.elements);
    const auto A = set_difference(a.elements, b.elements);
    const auto B = set_difference(b.elements, a.elements);
    std::vector<int> ground(n);
    for (int i = 0; i < n; ++i) ground[i] = i + 1;
    const auto D = set_difference(set_difference(ground, a.elements), b.elements);
    std::vector<int> Dp;
    if (dprime) {
        Dp = *dprime;
        if (static_cast<int>(Dp.size()) != t) throw std::invalid_argument("odd_path: |D'| must equal t");
        if (!set_difference(Dp, D).empty()) throw std::invalid_argument("odd_path: D' must be a subset of D");
    } else {
        Dp = block_prefix(D, t);
    }
    const auto Drest = set_difference(D, Dp);
    auto seq = detail::odd_segment(A, B, C, Dp, Drest);
    std::vector<std::vector<int>> full;
    full.push_back(a.elements);
    full.insert(full.end(), seq.begin(), seq.end());
    return detail::to_subset_vertices(full, n);
}

// ---------------------------------------------------------------------------
// Five-case witness construction for odd Kneser graphs: an induced x,y-path
// of K(2r+1,r) through u, for every non-adjacent pair x,y and every u.
// ---------------------------------------------------------------------------

struct KneserWitnessSubsets {
    std::vector<SubsetVertex> path;
    int case_id = 0;  // 0: x,u,y shortcut; 1..5: proof cases
};

inline KneserWitnessSubsets kneser_witness_subsets(const SubsetVertex& x, const SubsetVertex& y,
                                                   const SubsetVertex& u, int r) {
    const int n = 2 * r + 1;
    if (r < 3) throw std::invalid_argument("kneser_witness_subsets: requires r >= 3");
    if (x.r() != r || y.r() != r || u.r() != r || x.ground_n != n || y.ground_n != n || u.ground_n != n)
        throw std::invalid_argument("kneser_witness_subsets: arguments must be r-subsets of [2r+1]");
    if (intersection_size(x.elements, y.elements) == 0)
        throw std::invalid_argument("kneser_witness_subsets: x and y must be non-adjacent");
    if (u == x || u == y) throw std::invalid_argument("kneser_witness_subsets: u must differ from x and y");

    const bool meets_x = intersection_size(u.elements, x.elements) > 0;
    const bool meets_y = intersection_size(u.elements, y.elements) > 0;
    if (!meets_x && !meets_y) return {{x, u, y}, 0};
    if (!meets_x) {
        KneserWitnessSubsets w = kneser_witness_subsets(y, x, u, r);
        std::reverse(w.path.begin(), w.path.end());
        return w;
    }

    const VennPartition p = venn_partition(x, y, u, n);
    const int t = p.t();
    const int s = p.s();
    auto pack = [&](std::vector<std::vector<int>> sets, int case_id) {
        return KneserWitnessSubsets{detail::to_subset_vertices(sets, n), case_id};
    };
    using detail::merge_sorted;

    if (s == 0) {
        // Case 1: y and u adjacent. X' = X then A; even segment with filler
        // role Y u Z, then y appended.
        std::vector<int> Xp = p.X;
        Xp.insert(Xp.end(), p.A.begin(), p.A.end());
        const auto YZ = merge_sorted({&p.Y, &p.Z});
        auto seq = detail::even_segment(Xp, p.U, p.C, YZ);
        seq.push_back(y.elements);
        return pack(std::move(seq), 1);
    }

    // Shared orderings for the two-sided cases.
    auto concat = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out = a;
        out.insert(out.end(), b.begin(), b.end());
        return out;
    };

    if (p.D.empty() && p.Z.empty()) {
        // Case 2: two odd segments punctured at y_1 / x_1.
        const auto XA = merge_sorted({&p.X, &p.A});
        const auto UB = merge_sorted({&p.U, &p.B});
        const auto YA = merge_sorted({&p.Y, &p.A});
        const auto UC = merge_sorted({&p.U, &p.C});
        const std::vector<int> y1{p.Y.front()};
        const std::vector<int> x1{p.X.front()};
        auto P = detail::odd_segment(XA, UB, p.C, detail::without(p.Y, p.Y.front()), y1);
        auto Q = detail::odd_segment(YA, UC, p.B, detail::without(p.X, p.X.front()), x1);
        std::vector<std::vector<int>> seq{x.elements};
        seq.insert(seq.end(), P.begin(), P.end());
        seq.insert(seq.end(), Q.rbegin() + 1, Q.rend());
        seq.push_back(y.elements);
        return pack(std::move(seq), 2);
    }

    if (p.D.empty() && p.Z.size() == 1) {
        // Case 3: two odd segments augmented by the single element of Z.
        const auto XA = merge_sorted({&p.X, &p.A});
        const auto UB = merge_sorted({&p.U, &p.B});
        const auto YA = merge_sorted({&p.Y, &p.A});
        const auto UC = merge_sorted({&p.U, &p.C});
        auto P = detail::odd_segment(XA, UB, p.C, p.Y, p.Z);
        auto Q = detail::odd_segment(YA, UC, p.B, p.X, p.Z);
        std::vector<std::vector<int>> seq{x.elements};
        seq.insert(seq.end(), P.begin(), P.end());
        seq.insert(seq.end(), Q.rbegin() + 1, Q.rend());
        seq.push_back(y.elements);
        return pack(std::move(seq), 3);
    }

    if (p.X.empty() && p.Y.empty()) {
        // Case 4: B' = B then D, C' = C then D, Z = {z_1,...,z_{t+1}};
        // the two sides avoid the distinguished z_t / z_{t+1}.
        const auto BU = merge_sorted({&p.B, &p.U});
        const auto CU = merge_sorted({&p.C, &p.U});
        const auto Bp = concat(p.B, p.D);
        const auto Cp = concat(p.C, p.D);
        const int zt = p.Z[t - 1];
        const int zt1 = p.Z[t];
        auto P = detail::odd_segment(p.A, BU, Cp, detail::without(p.Z, zt), {zt});
        auto Q = detail::odd_segment(p.A, CU, Bp, detail::without(p.Z, zt1), {zt1});
        std::vector<std::vector<int>> seq{x.elements};
        seq.insert(seq.end(), P.begin(), P.end());
        seq.insert(seq.end(), Q.rbegin() + 1, Q.rend());
        seq.push_back(y.elements);
        return pack(std::move(seq), 4);
    }

    // Case 5: two even segments with the A-first / U-first alignments
    // (x_i = y_i in A for i <= |A|, b_i = c_i in U for i <= |U|).
    const auto Xp = concat(p.A, p.X);
    const auto Yp = concat(p.A, p.Y);
    const auto Bp = concat(p.U, p.B);
    const auto Cp = concat(p.U, p.C);
    const auto CD = merge_sorted({&p.C, &p.D});
    const auto BD = merge_sorted({&p.B, &p.D});
    const auto YZ = merge_sorted({&p.Y, &p.Z});
    const auto XZ = merge_sorted({&p.X, &p.Z});
    auto P = detail::even_segment(Xp, Bp, CD, YZ);
    auto Q = detail::even_segment(Yp, Cp, BD, XZ);
    std::vector<std::vector<int>> seq = std::move(P);
    seq.insert(seq.end(), Q.rbegin() + 1, Q.rend());
    return pack(std::move(seq), 5);
}

// ---------------------------------------------------------------------------
// Johnson witness: induced x,y-path of J(n,r) through u as the concatenation
// of two shortest subpaths, length (r-t) + (r-s).
// ---------------------------------------------------------------------------

inline std::vector<SubsetVertex> johnson_witness_subsets(const SubsetVertex& x, const SubsetVertex& y,
                                                         const SubsetVertex& u, int n, int r) {
    if (r < 2 || 2 * r > n)
        throw std::invalid_argument("johnson_witness_subsets: requires 2 <= r <= n/2");
    if (x.r() != r || y.r() != r || u.r() != r || x.ground_n != n || y.ground_n != n || u.ground_n != n)
        throw std::invalid_argument("johnson_witness_subsets: arguments must be r-subsets of [n]");
    if (intersection_size(x.elements, y.elements) > r - 2)
        throw std::invalid_argument("johnson_witness_subsets: x and y must be non-adjacent in J(n,r)");
    if (u == x || u == y) throw std::invalid_argument("johnson_witness_subsets: u must differ from x and y");

    const VennPartition p = venn_partition(x, y, u, n);
    const int t = p.t();
    const int s = p.s();
    auto concat = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out = a;
        out.insert(out.end(), b.begin(), b.end());
        return out;
    };
    const auto Xp = concat(p.A, p.X);  // x_i = y_{i+|Y|} in A for i <= |A|
    const auto Yp = concat(p.Y, p.A);
    const auto Bp = concat(p.U, p.B);  // b_i = c_{i+|C|} in U for i <= |U|
    const auto Cp = concat(p.C, p.U);
    const auto CD = detail::merge_sorted({&p.C, &p.D});
    const auto BD = detail::merge_sorted({&p.B, &p.D});

    std::vector<std::vector<int>> seq;
    for (int i = 0; i <= r - t; ++i) {
        auto bp = block_prefix(Bp, i);
        auto xs = block_suffix(Xp, r - t - i);
        seq.push_back(detail::merge_sorted({&bp, &xs, &CD}));
    }
    std::vector<std::vector<int>> back;
    for (int j = 0; j <= r - s; ++j) {
        auto cs = block_suffix(Cp, j);
        auto yp = block_prefix(Yp, r - s - j);
        back.push_back(detail::merge_sorted({&cs, &yp, &BD}));
    }
    seq.insert(seq.end(), back.rbegin() + 1, back.rend());
    return detail::to_subset_vertices(seq, n);
}

// ---------------------------------------------------------------------------
// Graph-level builders: map the subset constructions onto a labeled graph,
// re-validate with is_induced_path, and fall back to engine search if a
// transcription bug ever slips through. Fallbacks are reported, and the test
// suites treat any fallback on the swept families as a failure.
// ---------------------------------------------------------------------------

struct WitnessPathResult {
    InducedPath path;
    int case_id = 0;
    bool used_fallback = false;
};

namespace detail {

inline VertexId require_vertex(const Graph& g, const SubsetVertex& s) {
    auto v = g.vertex_of(s.elements);
    if (!v) throw std::invalid_argument("vertex " + subset_to_string(s.elements) + " not present in graph");
    return *v;
}

inline InducedPath map_to_ids(const Graph& g, const std::vector<SubsetVertex>& subsets) {
    InducedPath p;
    p.vertices.reserve(subsets.size());
    for (const auto& s : subsets) p.vertices.push_back(require_vertex(g, s));
    return p;
}

inline WitnessPathResult validate_or_fallback(const Graph& g, InducedPath candidate, int case_id,
                                              VertexId x, VertexId y, VertexId u, long long budget) {
    const bool ok = !candidate.vertices.empty() && candidate.vertices.front() == x &&
                    candidate.vertices.back() == y && candidate.contains(u) &&
                    is_induced_path(g, candidate);
    if (ok) return {std::move(candidate), case_id, false};
    PathSearch ps = find_induced_path_through(g, x, y, u, budget);
    if (ps.outcome != SearchOutcome::found)
        throw std::runtime_error("witness construction invalid and fallback search found no path (case " +
                                 std::to_string(case_id) + ")");
    return {std::move(ps.path), case_id, true};
}

}  // namespace detail

// g must be a labeled K(2r+1, r).
inline WitnessPathResult kneser_witness_path(const Graph& g, VertexId x, VertexId y, VertexId u,
                                             long long budget = kDefaultStepBudget) {
    if (!g.has_subset_labels()) throw std::invalid_argument("kneser_witness_path: graph lacks subset labels");
    const int r = g.subset_r();
    if (g.ground_n() != 2 * r + 1)
        throw std::invalid_argument("kneser_witness_path: graph is not an odd Kneser graph K(2r+1,r)");
    if (g.adjacent(x, y)) throw std::invalid_argument("kneser_witness_path: x and y must be non-adjacent");
    KneserWitnessSubsets w = kneser_witness_subsets(g.label(x), g.label(y), g.label(u), r);
    return detail::validate_or_fallback(g, detail::map_to_ids(g, w.path), w.case_id, x, y, u, budget);
}

// g must be a labeled J(n, r).
inline WitnessPathResult johnson_witness_path(const Graph& g, VertexId x, VertexId y, VertexId u,
                                              long long budget = kDefaultStepBudget) {
    if (!g.has_subset_labels()) throw std::invalid_argument("johnson_witness_path: graph lacks subset labels");
    const int r = g.subset_r();
    const int n = g.ground_n();
    if (g.adjacent(x, y)) throw std::invalid_argument("johnson_witness_path: x and y must be non-adjacent");
    auto subsets = johnson_witness_subsets(g.label(x), g.label(y), g.label(u), n, r);
    return detail::validate_or_fallback(g, detail::map_to_ids(g, subsets), 0, x, y, u, budget);
}

// ---------------------------------------------------------------------------
// Monotonicity lift: a monophonic set S of K(n,r) stays monophonic in
// K(n+1,r); produces the witness path for a vertex u containing n+1.
// ---------------------------------------------------------------------------

// `lo` wraps K(n,r), `hi` is K(n+1,r); S lives in K(n,r); u is an r-subset of
// [n+1] containing n+1. The result is an induced path of `hi` between two
// members of S containing u.
inline InducedPath lift_witness(const MonophonicEngine& lo, const Graph& hi, const std::vector<SubsetVertex>& S,
                                const SubsetVertex& u) {
    const Graph& lo_g = lo.graph();
    if (!lo_g.has_subset_labels() || !hi.has_subset_labels())
        throw std::invalid_argument("lift_witness: graphs must carry subset labels");
    const int r = lo_g.subset_r();
    const int n = lo_g.ground_n();
    if (n < 2 * r) throw std::invalid_argument("lift_witness: requires n >= 2r");
    if (hi.ground_n() != n + 1 || hi.subset_r() != r)
        throw std::invalid_argument("lift_witness: second graph must be K(n+1,r)");
    if (u.ground_n != n + 1 || u.r() != r ||
        std::find(u.elements.begin(), u.elements.end(), n + 1) == u.elements.end())
        throw std::invalid_argument("lift_witness: u must be an r-subset of [n+1] containing n+1");

    std::vector<VertexId> s_lo;
    for (const auto& sv : S) s_lo.push_back(detail::require_vertex(lo_g, SubsetVertex{sv.elements, n}));
    std::sort(s_lo.begin(), s_lo.end());
    MonophonicVerdict verdict = lo.is_monophonic_set(s_lo);
    if (!verdict.holds)
        throw std::invalid_argument("lift_witness: S is not a monophonic set of K(" + std::to_string(n) +
                                    "," + std::to_string(r) + ")");

    const VertexId u_hi = detail::require_vertex(hi, u);
    auto hi_id = [&](const std::vector<int>& elems) { return detail::require_vertex(hi, SubsetVertex{elems, n + 1}); };

    const auto core = detail::without(u.elements, n + 1);  // r-1 elements inside [n]
    std::vector<int> iprime;  // [n] - u
    for (int e = 1; e <= n; ++e)
        if (std::find(core.begin(), core.end(), e) == core.end()) iprime.push_back(e);

    if (n == 2 * r) {
        // S = V(K(2r,r)); x, y are two overlapping halves of I', both in S.
        const auto xs = block_prefix(iprime, r);
        const auto ys = std::vector<int>(iprime.begin() + 1, iprime.end());
        return InducedPath{{hi_id(xs), u_hi, hi_id(ys)}};
    }

    Bitset in_s(lo_g.vertex_count());
    for (VertexId v : s_lo) in_s.set(v);

    for (int xt : iprime) {
        auto up = set_union(core, {xt});
        const VertexId up_lo = detail::require_vertex(lo_g, SubsetVertex{up, n});
        if (in_s.test(up_lo)) continue;
        // Branch (a): splice u into a witness path through u' and keep only
        // the outermost neighbors of u.
        for (std::size_t i = 0; i < s_lo.size(); ++i) {
            for (std::size_t j = i + 1; j < s_lo.size(); ++j) {
                PathSearch ps = lo.induced_path_through(s_lo[i], s_lo[j], up_lo);
                if (ps.outcome != SearchOutcome::found) continue;
                const auto& pv = ps.path.vertices;
                int ell = -1;
                for (int k = 0; k < static_cast<int>(pv.size()); ++k)
                    if (pv[k] == up_lo) ell = k;
                auto u_adj = [&](VertexId w_lo) {
                    return intersection_size(lo_g.label(w_lo).elements, u.elements) == 0;
                };
                int lo_cut = -1, hi_cut = -1;
                for (int k = 0; k < ell; ++k)
                    if (u_adj(pv[k])) {
                        lo_cut = k;
                        break;
                    }
                for (int k = static_cast<int>(pv.size()) - 1; k > ell; --k)
                    if (u_adj(pv[k])) {
                        hi_cut = k;
                        break;
                    }
                InducedPath out;
                for (int k = 0; k <= lo_cut; ++k) out.vertices.push_back(hi_id(lo_g.label(pv[k]).elements));
                out.vertices.push_back(u_hi);
                for (int k = hi_cut; k < static_cast<int>(pv.size()); ++k)
                    out.vertices.push_back(hi_id(lo_g.label(pv[k]).elements));
                return out;
            }
        }
        throw std::runtime_error("lift_witness: no witness pair found although S is monophonic");
    }

    // Branch (b): every (u - {n+1}) + {x_t} lies in S; use the explicit
    // five-vertex path from the proof.
    const int i1 = iprime[0];
    const int j1 = iprime[1];
    std::vector<int> ihat;
    for (int e : iprime)
        if (e != i1 && e != j1) ihat.push_back(e);
    if (static_cast<int>(ihat.size()) < r - 1)
        throw std::runtime_error("lift_witness: ground set too small for the twin branch");
    const auto J = block_prefix(ihat, r - 1);
    const auto a = set_union(core, {i1});
    const auto b = set_union(core, {j1});
    return InducedPath{{hi_id(a), hi_id(set_union({j1}, J)), u_hi, hi_id(set_union({i1}, J)), hi_id(b)}};
}

// ---------------------------------------------------------------------------
// Disjoint path pair: an induced x,y-path and an induced y,z-path whose
// only common vertex is y. Valid in strongly 2-monophonic graphs other than
// P_3, and in complete graphs (which satisfy the same path property).
// ---------------------------------------------------------------------------

namespace detail {

inline bool graph_is_complete(const Graph& g) {
    const long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

inline bool graph_is_p3(const Graph& g) {
    return g.vertex_count() == 3 && g.edge_count() == 2 && component_count(g) == 1;
}

inline void require_disjoint_pair_hypothesis(const MonophonicEngine& eng, int jobs = 1) {
    const Graph& g = eng.graph();
    if (graph_is_complete(g)) return;
    if (graph_is_p3(g)) throw std::invalid_argument("disjoint_path_pair: graph is P_3");
    if (!eng.is_strongly_2_monophonic(jobs).holds)
        throw std::invalid_argument("disjoint_path_pair: graph is not strongly 2-monophonic");
}

}  // namespace detail

inline std::pair<InducedPath, InducedPath> disjoint_path_pair(const MonophonicEngine& eng, VertexId x,
                                                              VertexId y, VertexId z) {
    const Graph& g = eng.graph();
    if (x == y || y == z || x == z)
        throw std::invalid_argument("disjoint_path_pair: vertices must be distinct");
    detail::require_disjoint_pair_hypothesis(eng);

    if (!g.adjacent(x, z)) {
        PathSearch ps = eng.induced_path_through(x, z, y);
        if (ps.outcome != SearchOutcome::found)
            throw std::runtime_error("disjoint_path_pair: hypothesis violated, no induced x,z-path through y");
        const auto& pv = ps.path.vertices;
        int j = 0;
        while (pv[j] != y) ++j;
        InducedPath p{{pv.begin(), pv.begin() + j + 1}};
        InducedPath q{{pv.begin() + j, pv.end()}};
        return {std::move(p), std::move(q)};
    }
    if (g.adjacent(x, y) && g.adjacent(y, z)) {
        return {InducedPath{{x, y}}, InducedPath{{y, z}}};
    }
    if (g.adjacent(y, z)) {  // then xy is a non-edge: swap the roles of x and z
        auto [p, q] = disjoint_path_pair(eng, z, y, x);
        std::reverse(p.vertices.begin(), p.vertices.end());
        std::reverse(q.vertices.begin(), q.vertices.end());
        return {std::move(q), std::move(p)};
    }
    // yz is a non-edge. Pick x' in N(x) - N[z] (exists: z is not universal).
    int xprime = -1;
    for (int v = g.neighbors(x).next(0); v != -1; v = g.neighbors(x).next(v + 1)) {
        if (v == z || g.adjacent(v, z)) continue;
        if (v == y) {  // prefer y itself when eligible
            xprime = y;
            break;
        }
        if (xprime == -1) xprime = v;
    }
    if (xprime == -1)
        throw std::runtime_error("disjoint_path_pair: hypothesis violated, N(x) inside N[z]");
    if (xprime == y) {
        // x is not a cut vertex, so some induced y,z-path avoids x.
        std::vector<VertexId> keep;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (v != x) keep.push_back(v);
        Graph rest = induced_subgraph(g, keep);
        auto remap = [&](VertexId v) { return v < x ? v : v - 1; };
        auto sp = shortest_path(rest, remap(y), remap(z));
        if (!sp) throw std::runtime_error("disjoint_path_pair: hypothesis violated, x is a cut vertex");
        InducedPath q;
        for (VertexId v : sp->vertices) q.vertices.push_back(v < x ? v : v + 1);
        return {InducedPath{{x, y}}, std::move(q)};
    }
    PathSearch ps = eng.induced_path_through(xprime, z, y);
    if (ps.outcome != SearchOutcome::found)
        throw std::runtime_error("disjoint_path_pair: hypothesis violated, no induced x',z-path through y");
    const auto& pv = ps.path.vertices;
    int j = 0;
    while (pv[j] != y) ++j;
    int t = -1;
    for (int i = 0; i <= j; ++i)
        if (g.adjacent(pv[i], x)) t = i;  // max index <= j adjacent to x
    InducedPath p;
    p.vertices.push_back(x);
    for (int i = t; i <= j; ++i) p.vertices.push_back(pv[i]);
    InducedPath q{{pv.begin() + j, pv.end()}};
    return {std::move(p), std::move(q)};
}

// ---------------------------------------------------------------------------
// Product witness: induced (x,a),(y,b)-path of G box H through (z,c).
// Factors must be strongly 2-monophonic and distinct from P_3, or complete
// (complete factors satisfy the disjoint-pair property directly).
// ---------------------------------------------------------------------------

struct ProductVertex {
    VertexId g = 0;
    VertexId h = 0;
    bool operator==(const ProductVertex& o) const { return g == o.g && h == o.h; }
};

namespace detail {

// Induced x,y-path through z, where z == x or z == y degrades to a shortest path.
inline InducedPath factor_path_through(const MonophonicEngine& eng, VertexId x, VertexId y, VertexId z) {
    if (z == x || z == y) {
        auto sp = shortest_path(eng.graph(), x, y);
        if (!sp) throw std::runtime_error("product_witness_path: factor is disconnected");
        return *sp;
    }
    PathSearch ps = eng.induced_path_through(x, y, z);
    if (ps.outcome != SearchOutcome::found)
        throw std::runtime_error("product_witness_path: factor witness path not found");
    return ps.path;
}

inline InducedPath factor_shortest(const Graph& g, VertexId x, VertexId y) {
    auto sp = shortest_path(g, x, y);
    if (!sp) throw std::runtime_error("product_witness_path: factor is disconnected");
    return *sp;
}

}  // namespace detail

// Coordinate-level construction; ids in G box H follow (g,h) -> g*n(H)+h.
inline std::vector<ProductVertex> product_witness_coords(const MonophonicEngine& ge,
                                                         const MonophonicEngine& he, ProductVertex src,
                                                         ProductVertex dst, ProductVertex via) {
    const Graph& G = ge.graph();
    const Graph& H = he.graph();
    G.check_vertex(src.g);
    G.check_vertex(dst.g);
    G.check_vertex(via.g);
    H.check_vertex(src.h);
    H.check_vertex(dst.h);
    H.check_vertex(via.h);
    for (const auto* eng : {&ge, &he}) {
        const Graph& f = eng->graph();
        if (detail::graph_is_complete(f)) continue;
        if (detail::graph_is_p3(f))
            throw std::invalid_argument("product_witness_path: factor is P_3");
        if (!eng->is_strongly_2_monophonic().holds)
            throw std::invalid_argument("product_witness_path: factor is not strongly 2-monophonic");
    }
    const auto [x, a] = std::pair(src.g, src.h);
    const auto [y, b] = std::pair(dst.g, dst.h);
    const auto [z, c] = std::pair(via.g, via.h);
    const bool src_dst_adjacent = (x == y && H.adjacent(a, b)) || (a == b && x != y && G.adjacent(x, y));
    if (src == dst || src_dst_adjacent)
        throw std::invalid_argument("product_witness_path: src and dst must be distinct non-adjacent vertices");
    if (via == src || via == dst)
        throw std::invalid_argument("product_witness_path: via must differ from src and dst");

    std::vector<ProductVertex> out;
    auto push_g_leg = [&](const InducedPath& p, VertexId h, bool skip_first) {
        for (std::size_t i = skip_first ? 1 : 0; i < p.vertices.size(); ++i)
            out.push_back({p.vertices[i], h});
    };
    auto push_h_leg = [&](const InducedPath& p, VertexId gv, bool skip_first) {
        for (std::size_t i = skip_first ? 1 : 0; i < p.vertices.size(); ++i)
            out.push_back({gv, p.vertices[i]});
    };

    if (x == y) {  // same G-coordinate: ab is a non-edge of H
        InducedPath w = detail::factor_path_through(he, a, b, (z == x) ? c : ((c == a || c == b) ? a : c));
        if (z == x) {
            push_h_leg(w, x, false);
            return out;
        }
        InducedPath r = detail::factor_shortest(G, x, z);
        push_g_leg(r, a, false);
        push_h_leg(w, z, true);
        InducedPath rr = r;
        std::reverse(rr.vertices.begin(), rr.vertices.end());
        push_g_leg(rr, b, true);
        return out;
    }
    if (a == b) {  // same H-coordinate: xy is a non-edge of G
        InducedPath w = detail::factor_path_through(ge, x, y, (c == a) ? z : ((z == x || z == y) ? x : z));
        if (c == a) {
            push_g_leg(w, a, false);
            return out;
        }
        InducedPath r = detail::factor_shortest(H, a, c);
        push_h_leg(r, x, false);
        push_g_leg(w, c, true);
        InducedPath rr = r;
        std::reverse(rr.vertices.begin(), rr.vertices.end());
        push_h_leg(rr, y, true);
        return out;
    }

    // x != y and a != b (then src and dst are automatically non-adjacent).
    if (z == x && c == b) {
        push_h_leg(detail::factor_shortest(H, a, b), x, false);
        push_g_leg(detail::factor_shortest(G, x, y), b, true);
        return out;
    }
    if (z == y && c == a) {
        push_g_leg(detail::factor_shortest(G, x, y), a, false);
        push_h_leg(detail::factor_shortest(H, a, b), y, true);
        return out;
    }
    if (z == x) {  // c outside {a,b}
        auto [q1, q2] = disjoint_path_pair(he, a, c, b);
        push_h_leg(q1, x, false);
        push_g_leg(detail::factor_shortest(G, x, y), c, true);
        push_h_leg(q2, y, true);
        return out;
    }
    if (z == y) {  // mirror of the previous case
        auto [q1, q2] = disjoint_path_pair(he, b, c, a);
        push_h_leg(q1, y, false);
        push_g_leg(detail::factor_shortest(G, y, x), c, true);
        push_h_leg(q2, x, true);
        std::reverse(out.begin(), out.end());
        return out;
    }
    if (c == a) {  // z outside {x,y}
        auto [p1, p2] = disjoint_path_pair(ge, x, z, y);
        push_g_leg(p1, a, false);
        push_h_leg(detail::factor_shortest(H, a, b), z, true);
        push_g_leg(p2, b, true);
        return out;
    }
    if (c == b) {  // mirror
        auto [p1, p2] = disjoint_path_pair(ge, y, z, x);
        push_g_leg(p1, b, false);
        push_h_leg(detail::factor_shortest(H, b, a), z, true);
        push_g_leg(p2, a, true);
        std::reverse(out.begin(), out.end());
        return out;
    }
    // The staircase of the general case: disjoint pairs in both factors.
    auto [p1, p2] = disjoint_path_pair(ge, x, z, y);
    auto [q1, q2] = disjoint_path_pair(he, a, c, b);
    push_g_leg(p1, a, false);
    push_h_leg(q1, z, true);
    push_g_leg(p2, c, true);
    push_h_leg(q2, y, true);
    return out;
}

// `product` must be cartesian_product(ge.graph(), he.graph()).
inline WitnessPathResult product_witness_path(const Graph& product, const MonophonicEngine& ge,
                                              const MonophonicEngine& he, ProductVertex src, ProductVertex dst,
                                              ProductVertex via, long long budget = kDefaultStepBudget) {
    const int nh = he.graph().vertex_count();
    if (product.vertex_count() != ge.graph().vertex_count() * nh)
        throw std::invalid_argument("product_witness_path: product graph does not match the factors");
    auto coords = product_witness_coords(ge, he, src, dst, via);
    InducedPath candidate;
    candidate.vertices.reserve(coords.size());
    for (const auto& pv : coords) candidate.vertices.push_back(pv.g * nh + pv.h);
    return detail::validate_or_fallback(product, std::move(candidate), 0, src.g * nh + src.h,
                                        dst.g * nh + dst.h, via.g * nh + via.h, budget);
}

}  // namespace mono
