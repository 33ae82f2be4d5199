#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "mono/witness_paths.hpp"

using namespace mono;

namespace {

SubsetVertex sv(std::vector<int> elems, int n) { return SubsetVertex{std::move(elems), n}; }

std::vector<std::vector<int>> elems_of(const std::vector<SubsetVertex>& path) {
    std::vector<std::vector<int>> out;
    for (const auto& s : path) out.push_back(s.elements);
    return out;
}

InducedPath on_graph(const Graph& g, const std::vector<SubsetVertex>& subsets) {
    InducedPath p;
    for (const auto& s : subsets) {
        auto v = g.vertex_of(s.elements);
        REQUIRE(v.has_value());
        p.vertices.push_back(*v);
    }
    return p;
}

Graph complete(int n) { return basic_graph(BasicKind::complete, n); }
Graph path_graph(int n) { return basic_graph(BasicKind::path, n); }
Graph cycle(int n) { return basic_graph(BasicKind::cycle, n); }

}  // namespace

TEST_CASE("venn_partition") {
    auto p = venn_partition(sv({1, 2, 3}, 7), sv({1, 4, 5}, 7), sv({2, 4, 6}, 7), 7);
    CHECK(p.X == std::vector<int>{3});
    CHECK(p.Y == std::vector<int>{5});
    CHECK(p.U == std::vector<int>{6});
    CHECK(p.A == std::vector<int>{1});
    CHECK(p.B == std::vector<int>{4});
    CHECK(p.C == std::vector<int>{2});
    CHECK(p.D.empty());
    CHECK(p.Z == std::vector<int>{7});
    CHECK(p.t() == 1);
    CHECK(p.s() == 1);

    auto q = venn_partition(sv({1, 2, 3}, 9), sv({4, 5, 6}, 9), sv({7, 8, 9}, 9), 9);
    CHECK(q.A.empty());
    CHECK(q.B.empty());
    CHECK(q.C.empty());
    CHECK(q.D.empty());
    CHECK(q.Z.empty());

    CHECK_THROWS_AS(venn_partition(sv({1, 2, 3}, 7), sv({1, 2, 3}, 7), sv({2, 4, 6}, 7), 7),
                    std::invalid_argument);
    CHECK_THROWS_AS(venn_partition(sv({1, 2, 3}, 8), sv({1, 4, 5}, 7), sv({2, 4, 6}, 7), 7),
                    std::invalid_argument);
}

TEST_CASE("cardinality identities on random triples of K(7,3)") {
    std::mt19937 rng(1234);
    Graph g = kneser(7, 3);
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
    for (int it = 0; it < 1000; ++it) {
        VertexId a = pick(rng), b = pick(rng), c = pick(rng);
        if (a == b || a == c || b == c) continue;
        auto p = venn_partition(g.label(a), g.label(b), g.label(c), 7);
        const int Z = static_cast<int>(p.Z.size());
        CHECK(Z == 1 + static_cast<int>(p.A.size() + p.D.size()) - static_cast<int>(p.U.size()));
        CHECK(Z == 1 + p.t() - static_cast<int>(p.Y.size()));
        CHECK(Z == 1 + p.s() - static_cast<int>(p.X.size()));
    }
}

TEST_CASE("even_path instances") {
    auto p = even_path(sv({1, 2, 3}, 7), sv({1, 4, 5}, 7), 7);
    CHECK(elems_of(p) == std::vector<std::vector<int>>{
                             {1, 2, 3}, {5, 6, 7}, {1, 3, 4}, {2, 6, 7}, {1, 4, 5}});

    auto q = even_path(sv({1, 2, 3}, 7), sv({1, 2, 4}, 7), 7);
    CHECK(elems_of(q) == std::vector<std::vector<int>>{{1, 2, 3}, {5, 6, 7}, {1, 2, 4}});

    CHECK_THROWS_AS(even_path(sv({1, 2, 3}, 7), sv({4, 5, 6}, 7), 7), std::invalid_argument);  // t = 0
    CHECK_THROWS_AS(even_path(sv({1, 2}, 6), sv({1, 3}, 6), 6), std::invalid_argument);        // n != 2r+1
}

TEST_CASE("odd_path instances") {
    auto p = odd_path(sv({1, 2, 3}, 7), sv({1, 2, 4}, 7), 7);
    CHECK(elems_of(p) == std::vector<std::vector<int>>{
                             {1, 2, 3}, {4, 5, 6}, {2, 3, 7}, {1, 4, 6}, {3, 5, 7}, {1, 2, 4}});

    auto edge = odd_path(sv({1, 2, 3}, 7), sv({4, 5, 6}, 7), 7);  // t = 0
    CHECK(edge.size() == 2);
    CHECK(edge.back().elements == std::vector<int>{4, 5, 6});

    CHECK_THROWS_AS(odd_path(sv({1, 2, 3}, 7), sv({1, 2, 4}, 7), 7, std::vector<int>{5}),
                    std::invalid_argument);  // |D'| != t
    CHECK_THROWS_AS(odd_path(sv({1, 2, 3}, 7), sv({1, 2, 4}, 7), 7, std::vector<int>{1, 5}),
                    std::invalid_argument);  // D' not inside D
}

TEST_CASE("length laws and distance consistency on all pairs of K(7,3)") {
    Graph g = kneser(7, 3);
    const int r = 3;
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
        for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
            const int t = intersection_size(g.label(a).elements, g.label(b).elements);
            const auto odd = on_graph(g, odd_path(g.label(a), g.label(b), 7));
            REQUIRE(odd.length() == 2 * t + 1);
            REQUIRE(is_induced_path(g, odd));
            int shortest = odd.length();
            if (t >= 1) {
                const auto even = on_graph(g, even_path(g.label(a), g.label(b), 7));
                REQUIRE(even.length() == 2 * (r - t));
                REQUIRE(is_induced_path(g, even));
                shortest = std::min(shortest, even.length());
            }
            REQUIRE(distance(g, a, b) == shortest);  // d(a,b) = min{2(r-t), 2t+1}
        }
    }
}

TEST_CASE("kneser witness: shortcut and normalization") {
    Graph g = kneser(7, 3);
    auto x = *g.vertex_of({1, 2, 3});
    auto y = *g.vertex_of({1, 2, 4});
    auto u = *g.vertex_of({5, 6, 7});
    auto w = kneser_witness_path(g, x, y, u);
    CHECK(w.case_id == 0);
    CHECK(w.path.vertices == std::vector<VertexId>{x, u, y});
    CHECK_FALSE(w.used_fallback);

    // u adjacent to x: the roles of x and y swap before dispatch
    auto x2 = *g.vertex_of({1, 2, 3});
    auto y2 = *g.vertex_of({1, 4, 5});
    auto u2 = *g.vertex_of({4, 6, 7});
    auto w2 = kneser_witness_path(g, x2, y2, u2);
    CHECK_FALSE(w2.used_fallback);
    CHECK(w2.path.vertices.front() == x2);
    CHECK(w2.path.vertices.back() == y2);
    CHECK(w2.path.contains(u2));
    CHECK(is_induced_path(g, w2.path));

    CHECK_THROWS_AS(kneser_witness_path(g, x, *g.vertex_of({4, 5, 6}), u), std::invalid_argument);
    CHECK_THROWS_AS(kneser_witness_subsets(sv({1, 2}, 5), sv({1, 3}, 5), sv({2, 4}, 5), 2),
                    std::invalid_argument);  // r < 3 needs three-vertex sets, not pairs
}

TEST_CASE("kneser witness sweeps K(7,3) with zero fallbacks") {
    Graph g = kneser(7, 3);
    std::set<int> cases_seen;
    long long triples = 0;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        for (VertexId y = x + 1; y < g.vertex_count(); ++y) {
            if (g.adjacent(x, y)) continue;
            for (VertexId u = 0; u < g.vertex_count(); ++u) {
                if (u == x || u == y) continue;
                auto w = kneser_witness_path(g, x, y, u);
                REQUIRE_FALSE(w.used_fallback);
                REQUIRE(w.path.vertices.front() == x);
                REQUIRE(w.path.vertices.back() == y);
                REQUIRE(w.path.contains(u));
                cases_seen.insert(w.case_id);
                ++triples;
            }
        }
    }
    CHECK(triples == 17325);
    // case 2 requires r >= 4; all other cases appear at r = 3
    CHECK(cases_seen == std::set<int>{0, 1, 3, 4, 5});
}

TEST_CASE("kneser witness case 2 appears at r = 4") {
    Graph g = kneser(9, 4);
    auto x = *g.vertex_of({1, 2, 7, 9});
    auto y = *g.vertex_of({3, 4, 7, 8});
    auto u = *g.vertex_of({5, 6, 8, 9});
    auto w = kneser_witness_path(g, x, y, u);
    CHECK(w.case_id == 2);
    CHECK_FALSE(w.used_fallback);
    CHECK(w.path.length() == 6);  // 2(t+s+1) with t = s = 1
}

TEST_CASE("johnson witness paths") {
    Graph j42 = johnson(4, 2);
    auto x = *j42.vertex_of({1, 2});
    auto y = *j42.vertex_of({3, 4});
    auto u = *j42.vertex_of({1, 3});
    auto w = johnson_witness_path(j42, x, y, u);
    CHECK(w.path.vertices == std::vector<VertexId>{x, u, y});
    CHECK_FALSE(w.used_fallback);

    Graph j63 = johnson(6, 3);
    auto p = johnson_witness_subsets(sv({1, 2, 3}, 6), sv({1, 4, 5}, 6), sv({2, 4, 6}, 6), 6, 3);
    CHECK(elems_of(p) == std::vector<std::vector<int>>{
                             {1, 2, 3}, {2, 3, 6}, {2, 4, 6}, {4, 5, 6}, {1, 4, 5}});

    // each half is a shortest subpath: u sits at index r - t from x
    Graph j73 = johnson(7, 3);
    const int r = 3;
    for (VertexId a = 0; a < j73.vertex_count(); ++a)
        for (VertexId b = a + 1; b < j73.vertex_count(); ++b) {
            if (j73.adjacent(a, b)) continue;
            VertexId c = (a + 7) % j73.vertex_count();
            if (c == a || c == b) continue;
            auto wr = johnson_witness_path(j73, a, b, c);
            REQUIRE_FALSE(wr.used_fallback);
            const int t = intersection_size(j73.label(a).elements, j73.label(c).elements);
            const int s = intersection_size(j73.label(b).elements, j73.label(c).elements);
            REQUIRE(wr.path.length() == (r - t) + (r - s));
            REQUIRE(wr.path.vertices[r - t] == c);
        }

    CHECK_THROWS_AS(johnson_witness_subsets(sv({1, 2}, 4), sv({1, 3}, 4), sv({1, 4}, 4), 4, 2),
                    std::invalid_argument);  // adjacent endpoints
}

TEST_CASE("johnson witness sweeps J(5,2) with zero fallbacks") {
    Graph g = johnson(5, 2);
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        for (VertexId y = x + 1; y < g.vertex_count(); ++y) {
            if (g.adjacent(x, y)) continue;
            for (VertexId u = 0; u < g.vertex_count(); ++u) {
                if (u == x || u == y) continue;
                auto w = johnson_witness_path(g, x, y, u);
                REQUIRE_FALSE(w.used_fallback);
            }
        }
}

TEST_CASE("lift_witness") {
    Graph k52 = kneser(5, 2);
    MonophonicEngine lo(k52);
    Graph k62 = kneser(6, 2);
    std::vector<SubsetVertex> S{sv({1, 2}, 5), sv({1, 3}, 5), sv({2, 3}, 5)};

    auto in_S = [&](const Graph& g, VertexId v) {
        for (const auto& s : S)
            if (g.label(v).elements == s.elements) return true;
        return false;
    };

    // every new vertex of K(6,2) gets a validated lifted witness
    for (VertexId v = 0; v < k62.vertex_count(); ++v) {
        const auto& lab = k62.label(v);
        if (std::find(lab.elements.begin(), lab.elements.end(), 6) == lab.elements.end()) continue;
        InducedPath p = lift_witness(lo, k62, S, lab);
        CHECK(is_induced_path(k62, p));
        CHECK(p.contains(v));
        CHECK(in_S(k62, p.vertices.front()));
        CHECK(in_S(k62, p.vertices.back()));
    }

    // n = 2r branch: S = V(K(4,2)), u = {1,5}
    Graph k42 = kneser(4, 2);
    MonophonicEngine lo4(k42);
    Graph k52b = kneser(5, 2);
    std::vector<SubsetVertex> all;
    for (VertexId v = 0; v < k42.vertex_count(); ++v) all.push_back(k42.label(v));
    InducedPath p = lift_witness(lo4, k52b, all, sv({1, 5}, 5));
    REQUIRE(p.vertices.size() == 3);
    CHECK(k52b.label(p.vertices[0]).elements == std::vector<int>{2, 3});
    CHECK(k52b.label(p.vertices[1]).elements == std::vector<int>{1, 5});
    CHECK(k52b.label(p.vertices[2]).elements == std::vector<int>{3, 4});

    // non-monophonic S is rejected up front
    std::vector<SubsetVertex> badS{sv({1, 2}, 5), sv({1, 3}, 5)};
    CHECK_THROWS_AS(lift_witness(lo, k62, badS, sv({4, 6}, 6)), std::invalid_argument);
}

TEST_CASE("lift chain: S stays monophonic in K(6,2) and K(7,2)") {
    std::vector<std::vector<int>> base{{1, 2}, {1, 3}, {2, 3}};
    for (int n : {6, 7}) {
        Graph g = kneser(n, 2);
        MonophonicEngine eng(g);
        std::vector<VertexId> ids;
        for (const auto& e : base) ids.push_back(*g.vertex_of(e));
        CHECK(eng.is_monophonic_set(ids).holds);
    }
}

TEST_CASE("disjoint_path_pair") {
    Graph c5 = cycle(5);
    MonophonicEngine ec5(c5);
    auto [p, q] = disjoint_path_pair(ec5, 0, 2, 4);
    CHECK(p.vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(q.vertices == std::vector<VertexId>{2, 3, 4});

    Graph k4e = basic_graph(BasicKind::complete_minus_matching, 4, 1);
    MonophonicEngine ek4e(k4e);
    auto [p2, q2] = disjoint_path_pair(ek4e, 0, 2, 1);  // {0,1} is the non-edge
    CHECK(p2.vertices == std::vector<VertexId>{0, 2});
    CHECK(q2.vertices == std::vector<VertexId>{2, 1});

    // exhaustive on Q_3 and K_4: only y is shared, both parts induced
    for (const Graph& g : {hamming({2, 2, 2}), complete(4)}) {
        MonophonicEngine eng(g);
        for (VertexId x = 0; x < g.vertex_count(); ++x)
            for (VertexId y = 0; y < g.vertex_count(); ++y)
                for (VertexId z = 0; z < g.vertex_count(); ++z) {
                    if (x == y || y == z || x == z) continue;
                    auto [pp, qq] = disjoint_path_pair(eng, x, y, z);
                    REQUIRE(pp.vertices.front() == x);
                    REQUIRE(pp.vertices.back() == y);
                    REQUIRE(qq.vertices.front() == y);
                    REQUIRE(qq.vertices.back() == z);
                    REQUIRE(is_induced_path(g, pp));
                    REQUIRE(is_induced_path(g, qq));
                    std::set<VertexId> shared;
                    std::set<VertexId> pset(pp.vertices.begin(), pp.vertices.end());
                    for (VertexId v : qq.vertices)
                        if (pset.count(v)) shared.insert(v);
                    REQUIRE(shared == std::set<VertexId>{y});
                }
    }

    MonophonicEngine ep3(path_graph(3));
    CHECK_THROWS_WITH(disjoint_path_pair(ep3, 0, 1, 2), Catch::Matchers::ContainsSubstring("P_3"));
    Graph pet = kneser(5, 2);
    MonophonicEngine epet(pet);
    CHECK_THROWS_WITH(disjoint_path_pair(epet, 0, 1, 2),
                      Catch::Matchers::ContainsSubstring("not strongly 2-monophonic"));
}

TEST_CASE("product witness paths") {
    Graph q2 = hamming({2, 2});
    Graph k2 = complete(2);
    Graph q3 = cartesian_product(q2, k2);
    MonophonicEngine ge(q2), he(k2);

    // antipodal src/dst in Q_3 through a middle vertex
    auto w = product_witness_path(q3, ge, he, {0, 0}, {3, 1}, {1, 1});
    CHECK_FALSE(w.used_fallback);
    CHECK(w.path.contains(1 * 2 + 1));

    // same-layer via: the factor witness path stays inside the layer
    auto w2 = product_witness_path(q3, ge, he, {0, 0}, {3, 0}, {1, 0});
    CHECK_FALSE(w2.used_fallback);
    for (VertexId v : w2.path.vertices) CHECK(v % 2 == 0);  // H-coordinate fixed at 0

    // via = (x,b): shortest L-shaped staircase
    auto w3 = product_witness_path(q3, ge, he, {0, 0}, {3, 1}, {0, 1});
    CHECK_FALSE(w3.used_fallback);
    CHECK(w3.path.length() == *distance(q2, 0, 3) + 1);

    // precondition violations name the failing hypothesis
    Graph p3 = path_graph(3);
    Graph p3k2 = cartesian_product(p3, k2);
    MonophonicEngine pe(p3), ke(k2);
    CHECK_THROWS_WITH(product_witness_path(p3k2, pe, ke, {0, 0}, {2, 1}, {1, 0}),
                      Catch::Matchers::ContainsSubstring("P_3"));
    Graph p4 = path_graph(4);
    Graph p4k2 = cartesian_product(p4, k2);
    MonophonicEngine p4e(p4);
    CHECK_THROWS_WITH(product_witness_path(p4k2, p4e, ke, {0, 0}, {3, 1}, {1, 0}),
                      Catch::Matchers::ContainsSubstring("not strongly 2-monophonic"));
}

TEST_CASE("product witness sweep on K_3 box K_3") {
    Graph k3 = complete(3);
    Graph prod = cartesian_product(k3, k3);
    MonophonicEngine ge(k3), he(k3);
    const int nh = 3;
    for (VertexId s = 0; s < prod.vertex_count(); ++s)
        for (VertexId d = s + 1; d < prod.vertex_count(); ++d) {
            if (prod.adjacent(s, d)) continue;
            for (VertexId v = 0; v < prod.vertex_count(); ++v) {
                if (v == s || v == d) continue;
                auto w = product_witness_path(prod, ge, he, {s / nh, s % nh}, {d / nh, d % nh},
                                              {v / nh, v % nh});
                REQUIRE_FALSE(w.used_fallback);
                REQUIRE(w.path.vertices.front() == s);
                REQUIRE(w.path.vertices.back() == d);
                REQUIRE(w.path.contains(v));
                REQUIRE(is_induced_path(prod, w.path));
            }
        }
}

TEST_CASE("builders and is_induced_path agree across modules") {
    // every builder output must satisfy the graph-core predicate
    Graph g = kneser(7, 3);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
    for (int it = 0; it < 300; ++it) {
        VertexId x = pick(rng), y = pick(rng), u = pick(rng);
        if (x == y || u == x || u == y || g.adjacent(x, y)) continue;
        auto w = kneser_witness_path(g, x, y, u);
        REQUIRE(is_induced_path(g, w.path));
    }
}

TEST_CASE("builder-vs-BFS distance law on every pair of K(9,4)") {
    Graph g = kneser(9, 4);
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
            const int t = intersection_size(g.label(a).elements, g.label(b).elements);
            int best = 2 * t + 1;
            REQUIRE(on_graph(g, odd_path(g.label(a), g.label(b), 9)).length() == 2 * t + 1);
            if (t >= 1) {
                REQUIRE(on_graph(g, even_path(g.label(a), g.label(b), 9)).length() == 2 * (4 - t));
                best = std::min(best, 2 * (4 - t));
            }
            REQUIRE(distance(g, a, b) == best);
        }
}

TEST_CASE("product witness sweep on Q_4 = Q_3 box K_2") {
    Graph q3 = hamming({2, 2, 2});
    Graph k2 = complete(2);
    Graph q4 = cartesian_product(q3, k2);
    MonophonicEngine ge(q3), he(k2);
    const int nh = 2;
    for (VertexId s = 0; s < q4.vertex_count(); ++s)
        for (VertexId d = s + 1; d < q4.vertex_count(); ++d) {
            if (q4.adjacent(s, d)) continue;
            for (VertexId v = 0; v < q4.vertex_count(); ++v) {
                if (v == s || v == d) continue;
                auto w = product_witness_path(q4, ge, he, {s / nh, s % nh}, {d / nh, d % nh},
                                              {v / nh, v % nh});
                REQUIRE_FALSE(w.used_fallback);
                REQUIRE(w.path.vertices.front() == s);
                REQUIRE(w.path.vertices.back() == d);
                REQUIRE(w.path.contains(v));
                REQUIRE(is_induced_path(q4, w.path));
            }
        }
}
