#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mono/engine.hpp"
#include "mono/generators.hpp"

using namespace mono;

namespace {

Graph path_graph(int n) { return basic_graph(BasicKind::path, n); }
Graph complete(int n) { return basic_graph(BasicKind::complete, n); }

}  // namespace

TEST_CASE("induced_path_through: certified none on the Petersen pair") {
    // {2,3} lies on no induced {1,2},{1,3}-path in K(n,2)
    Graph g = kneser(5, 2);
    auto x = *g.vertex_of({1, 2});
    auto y = *g.vertex_of({1, 3});
    auto w = *g.vertex_of({2, 3});
    PathSearch ps = find_induced_path_through(g, x, y, w);
    CHECK(ps.outcome == SearchOutcome::none);
}

TEST_CASE("induced_path_through: common neighbor and cycle arc") {
    Graph c4 = basic_graph(BasicKind::cycle, 4);
    PathSearch ps = find_induced_path_through(c4, 0, 2, 1);
    REQUIRE(ps.outcome == SearchOutcome::found);
    CHECK(ps.path.vertices == std::vector<VertexId>{0, 1, 2});

    Graph c5 = basic_graph(BasicKind::cycle, 5);
    PathSearch arc = find_induced_path_through(c5, 0, 2, 4);  // 1-based: x=1, y=3, u=5
    REQUIRE(arc.outcome == SearchOutcome::found);
    CHECK(arc.path.vertices == std::vector<VertexId>{0, 4, 3, 2});
}

TEST_CASE("induced_path_through argument checks and budget") {
    Graph c5 = basic_graph(BasicKind::cycle, 5);
    CHECK_THROWS_AS(find_induced_path_through(c5, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(find_induced_path_through(c5, 0, 2, 0), std::invalid_argument);
    PathSearch ps = find_induced_path_through(c5, 0, 2, 4, /*budget=*/0);
    CHECK(ps.outcome == SearchOutcome::budget_exceeded);
}

TEST_CASE("monophonic_interval") {
    Graph c5 = basic_graph(BasicKind::cycle, 5);
    MonophonicEngine eng(c5);

    const auto& adj = eng.monophonic_interval(0, 1);  // adjacent pair
    CHECK(adj.members.count() == 2);

    const auto& far = eng.monophonic_interval(0, 2);  // both arcs induced
    CHECK(far.members.count() == 5);

    CHECK_THROWS_AS(eng.monophonic_interval(1, 1), std::invalid_argument);
}

TEST_CASE("monophonic_interval on K(5,2): only {2,3} is excluded") {
    Graph g = kneser(5, 2);
    MonophonicEngine eng(g);
    auto x = *g.vertex_of({1, 2});
    auto y = *g.vertex_of({1, 3});
    const auto& iv = eng.monophonic_interval(x, y);
    CHECK(iv.members.count() == 9);
    CHECK_FALSE(iv.members.test(*g.vertex_of({2, 3})));

    // cross-check against the naive enumerator
    Bitset naive = naive_interval_members(g, x, y);
    naive.set(x);
    naive.set(y);
    CHECK(naive == iv.members);

    // every witness is an induced x,y-path containing its key
    for (const auto& [v, path] : iv.witness) {
        CHECK((path.vertices.front() == iv.x || path.vertices.front() == iv.y));
        CHECK((path.vertices.back() == iv.x || path.vertices.back() == iv.y));
        CHECK(path.contains(v));
        CHECK(is_induced_path(g, path));
    }
    // memoized: same object on the symmetric query
    CHECK(&eng.monophonic_interval(y, x) == &iv);
}

TEST_CASE("is_monophonic_set") {
    Graph p6 = path_graph(6);
    MonophonicEngine eng(p6);
    CHECK(eng.is_monophonic_set({0, 5}).holds);

    Graph g = kneser(5, 2);
    MonophonicEngine ke(g);
    auto v12 = *g.vertex_of({1, 2});
    auto v13 = *g.vertex_of({1, 3});
    auto v23 = *g.vertex_of({2, 3});
    CHECK(ke.is_monophonic_set({v12, v13, v23}).holds);
    MonophonicVerdict pairv = ke.is_monophonic_set({v12, v13});
    CHECK_FALSE(pairv.holds);
    CHECK(pairv.uncovered == v23);

    CHECK_THROWS_AS(eng.is_monophonic_set({}), std::invalid_argument);
}

TEST_CASE("monophonic_number") {
    MonophonicEngine k52(kneser(5, 2));
    Graph g52 = kneser(5, 2);
    MonophonicEngine e52(g52);
    auto r = e52.monophonic_number(6);
    CHECK_FALSE(r.budget_exceeded);
    CHECK(r.value == 3);
    // the optimal set found first is the paper's {{1,2},{1,3},{2,3}}
    CHECK(r.set == std::vector<VertexId>{0, 1, 2});

    Graph g42 = kneser(4, 2);
    MonophonicEngine e42(g42);
    CHECK(e42.monophonic_number(6).value == 6);  // m(K(2r,r)) = C(2r,r)

    Graph k4 = complete(4);
    MonophonicEngine e4(k4);
    CHECK(e4.monophonic_number(4).value == 4);  // m(K_n) = n

    Graph two_k1 = basic_graph(BasicKind::complete_minus_matching, 2, 1);
    MonophonicEngine e2(two_k1);
    CHECK(e2.monophonic_number(2).value == 2);  // disconnected convention

    Graph k1 = complete(1);
    MonophonicEngine e1(k1);
    CHECK(e1.monophonic_number(1).value == 1);

    auto capped = e42.monophonic_number(3);
    CHECK(capped.budget_exceeded);

    CHECK_THROWS_AS(e1.monophonic_number(0), std::invalid_argument);
}

TEST_CASE("monophonic sets contain every simplicial vertex") {
    for (const Graph& g : {path_graph(4), basic_graph(BasicKind::complete_minus_matching, 5, 1),
                           path_graph(7), complete(3)}) {
        MonophonicEngine eng(g);
        auto r = eng.monophonic_number(g.vertex_count());
        REQUIRE_FALSE(r.budget_exceeded);
        Bitset in_set(g.vertex_count());
        for (VertexId v : r.set) in_set.set(v);
        for (VertexId v : simplicial_vertices(g)) CHECK(in_set.test(v));
    }
}

TEST_CASE("strongly 2-monophonic verdicts") {
    Graph k4e = basic_graph(BasicKind::complete_minus_matching, 4, 1);
    CHECK(MonophonicEngine(k4e).is_strongly_2_monophonic().holds);

    Graph q3 = hamming({2, 2, 2});
    CHECK(MonophonicEngine(q3).is_strongly_2_monophonic().holds);

    Graph p3k2 = cartesian_product(path_graph(3), complete(2));
    auto v = MonophonicEngine(p3k2).is_strongly_2_monophonic();
    CHECK_FALSE(v.holds);
    REQUIRE(v.counterexample.has_value());
    CHECK(*v.counterexample == std::array<VertexId, 3>{0, 3, 4});  // lexicographic minimum

    Graph p3p3 = cartesian_product(path_graph(3), path_graph(3));
    auto v2 = MonophonicEngine(p3p3).is_strongly_2_monophonic();
    CHECK_FALSE(v2.holds);
    CHECK(*v2.counterexample == std::array<VertexId, 3>{0, 4, 2});

    // order <= 3 special cases and complete graphs
    CHECK(MonophonicEngine(basic_graph(BasicKind::complete_minus_matching, 2, 1)).is_strongly_2_monophonic().holds);
    CHECK(MonophonicEngine(complete(2)).is_strongly_2_monophonic().holds);
    CHECK(MonophonicEngine(path_graph(3)).is_strongly_2_monophonic().holds);
    CHECK_FALSE(MonophonicEngine(complete(1)).is_strongly_2_monophonic().holds);
    CHECK_FALSE(MonophonicEngine(complete(4)).is_strongly_2_monophonic().holds);
    Graph k1k2(3, {{1, 2}});
    CHECK_FALSE(MonophonicEngine(k1k2).is_strongly_2_monophonic().holds);
}

TEST_CASE("parallel s2m sweep is deterministic") {
    Graph p3p3 = cartesian_product(path_graph(3), path_graph(3));
    for (int jobs : {1, 2, 4}) {
        MonophonicEngine eng(p3p3);
        auto v = eng.is_strongly_2_monophonic(jobs);
        CHECK_FALSE(v.holds);
        CHECK(*v.counterexample == std::array<VertexId, 3>{0, 4, 2});
    }
}

TEST_CASE("m-convexity") {
    Graph p4 = path_graph(4);
    MonophonicEngine eng(p4);
    CHECK(eng.is_m_convex({0, 1, 2}));  // J(v1,v3) = {v1,v2,v3}
    CHECK(eng.is_m_convex({1}));
    CHECK(eng.is_m_convex({}));

    Graph c5 = basic_graph(BasicKind::cycle, 5);
    MonophonicEngine ce(c5);
    CHECK_FALSE(ce.is_m_convex({0, 2}));  // interval is the whole cycle
    CHECK(ce.is_m_convex({0, 1}));        // cliques are m-convex

    Graph pet = kneser(5, 2);
    MonophonicEngine pe(pet);
    CHECK(pe.is_m_convex({0, *pet.vertex_of({3, 4})}));  // an edge of the Petersen graph
}

TEST_CASE("convexity_number") {
    CHECK(MonophonicEngine(complete(4)).convexity_number() == 3);  // K_n -> n-1
    CHECK(MonophonicEngine(basic_graph(BasicKind::complete_minus_matching, 4, 1)).convexity_number() == 3);
    CHECK(MonophonicEngine(path_graph(4)).convexity_number() == 3);
    Graph c5k2 = cartesian_product(basic_graph(BasicKind::cycle, 5), complete(2));
    CHECK(MonophonicEngine(c5k2).convexity_number() == 2);
    CHECK_THROWS_AS(MonophonicEngine(complete(1)).convexity_number(), std::invalid_argument);
}

TEST_CASE("pruned search agrees with naive enumeration on small graphs") {
    // all labeled graphs on 4 vertices
    for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int b = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j, ++b)
                if (mask >> b & 1) edges.emplace_back(i, j);
        Graph g(4, edges);
        MonophonicEngine eng(g);
        for (VertexId x = 0; x < 4; ++x)
            for (VertexId y = x + 1; y < 4; ++y) {
                Bitset naive = naive_interval_members(g, x, y);
                naive.set(x);
                naive.set(y);
                REQUIRE(naive == eng.monophonic_interval(x, y).members);
            }
    }
    // seeded random 6-vertex graphs
    std::mt19937 rng(99);
    std::bernoulli_distribution coin(0.5);
    for (int it = 0; it < 25; ++it) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        Graph g(6, edges);
        MonophonicEngine eng(g);
        for (VertexId x = 0; x < 6; ++x)
            for (VertexId y = x + 1; y < 6; ++y) {
                Bitset naive = naive_interval_members(g, x, y);
                naive.set(x);
                naive.set(y);
                REQUIRE(naive == eng.monophonic_interval(x, y).members);
            }
    }
}

TEST_CASE("interval symmetry and witness validity across all pairs of a family") {
    Graph g = johnson(5, 2);
    MonophonicEngine eng(g);
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        for (VertexId y = x + 1; y < g.vertex_count(); ++y) {
            const auto& a = eng.monophonic_interval(x, y);
            const auto& b = eng.monophonic_interval(y, x);
            CHECK(a.members == b.members);
            for (const auto& [v, path] : a.witness) {
                REQUIRE(is_induced_path(g, path));
                REQUIRE(path.contains(v));
                REQUIRE((path.vertices.front() == a.x || path.vertices.front() == a.y));
                REQUIRE((path.vertices.back() == a.x || path.vertices.back() == a.y));
            }
        }
}

TEST_CASE("only 2K_1, K_2 and P_3 are strongly 2-monophonic at order <= 3") {
    for (int n = 1; n <= 3; ++n) {
        const int npairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << npairs); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int b = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++b)
                    if (mask >> b & 1) edges.emplace_back(i, j);
            Graph g(n, edges);
            MonophonicEngine eng(g);
            const bool is_2k1 = (n == 2 && edges.empty());
            const bool is_k2 = (n == 2 && edges.size() == 1);
            const bool is_p3 = (n == 3 && edges.size() == 2);
            CHECK(eng.is_strongly_2_monophonic().holds == (is_2k1 || is_k2 || is_p3));
        }
    }
}

TEST_CASE("in strongly 2-monophonic graphs every proper m-convex set is a clique") {
    for (const Graph& g : {hamming({2, 2, 2}), basic_graph(BasicKind::complete_minus_matching, 4, 1),
                           hamming({3, 2})}) {
        MonophonicEngine eng(g);
        REQUIRE(eng.is_strongly_2_monophonic().holds);
        const int n = g.vertex_count();
        REQUIRE(n <= 20);
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {  // proper nonempty subsets
            std::vector<VertexId> s;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) s.push_back(v);
            if (!eng.is_m_convex(s)) continue;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) REQUIRE(g.adjacent(s[i], s[j]));
        }
    }
}
