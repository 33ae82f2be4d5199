#pragma once

#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "mono/graph.hpp"
#include "mono/structure.hpp"

namespace mono {

// Extension steps allowed per induced-path search before giving up. None of
// the graphs this tool targets come near this; it exists so adversarial
// input cannot hang the CLI.
inline constexpr long long kDefaultStepBudget = 100'000'000;

enum class SearchOutcome { found, none, budget_exceeded };

struct PathSearch {
    SearchOutcome outcome = SearchOutcome::none;
    InducedPath path;  // meaningful iff outcome == found
};

namespace detail {

struct ThroughSearch {
    const Graph& g;
    VertexId y, u;
    long long steps_left;
    std::vector<VertexId> path;
    Bitset on_path;
    std::vector<Bitset> blocked_stack;  // blocked = on_path + N(interior vertices)
    bool over_budget = false;

    ThroughSearch(const Graph& g_, VertexId x, VertexId y_, VertexId u_, long long budget)
        : g(g_), y(y_), u(u_), steps_left(budget), on_path(g_.vertex_count()) {
        path.reserve(g.vertex_count() + 1);
        blocked_stack.reserve(g.vertex_count() + 2);  // depth-bounded: references into it stay valid
        path.push_back(x);
        on_path.set(x);
        Bitset b(g.vertex_count());
        b.set(x);
        blocked_stack.push_back(std::move(b));
    }

    // Depth-first extension maintaining the induced invariant: the next
    // vertex is adjacent to the tip and non-adjacent to everything earlier.
    // Branches that strand u or y are cut: once a vertex other than the tip
    // is adjacent to u (resp. y), u (resp. y) can never join the path.
    bool run() {
        const VertexId tip = path.back();
        const Bitset& blocked = blocked_stack.back();
        const bool u_placed = on_path.test(u);
        if (!u_placed && blocked.test(u)) return false;
        if (blocked.test(y)) return false;
        const bool u_tied = !u_placed && g.adjacent(u, tip);
        const bool y_tied = g.adjacent(y, tip);

        Bitset cands = g.neighbors(tip);
        cands.subtract(blocked);
        for (int w = cands.next(0); w != -1; w = cands.next(w + 1)) {
            if (--steps_left < 0) {
                over_budget = true;
                return false;
            }
            if (w == y) {
                if (!u_placed) continue;
                path.push_back(y);
                return true;
            }
            if (y_tied) continue;
            if (u_tied && w != u) continue;
            path.push_back(w);
            on_path.set(w);
            Bitset nb = blocked;
            nb |= g.neighbors(tip);
            nb.set(w);
            blocked_stack.push_back(std::move(nb));
            if (run()) return true;
            blocked_stack.pop_back();
            on_path.reset(w);
            path.pop_back();
        }
        return false;
    }
};

}  // namespace detail

// An induced x,y-path containing u, or a certified "none" after exhaustive
// pruned backtracking (or budget_exceeded once the step budget runs out).
inline PathSearch find_induced_path_through(const Graph& g, VertexId x, VertexId y, VertexId u,
                                            long long budget = kDefaultStepBudget) {
    g.check_vertex(x);
    g.check_vertex(y);
    g.check_vertex(u);
    if (x == y) throw std::invalid_argument("induced_path_through: x and y coincide");
    if (u == x || u == y) throw std::invalid_argument("induced_path_through: u must differ from x and y");
    detail::ThroughSearch s(g, x, y, u, budget);
    PathSearch out;
    if (s.run()) {
        out.outcome = SearchOutcome::found;
        out.path.vertices = std::move(s.path);
    } else {
        out.outcome = s.over_budget ? SearchOutcome::budget_exceeded : SearchOutcome::none;
    }
    return out;
}

// Reference enumerator for the pruned search: walks every simple x,y-path
// and filters with is_induced_path. Exponential; test-scale graphs only.
inline Bitset naive_interval_members(const Graph& g, VertexId x, VertexId y) {
    const int n = g.vertex_count();
    Bitset members(n);
    std::vector<VertexId> path{x};
    Bitset on_path(n);
    on_path.set(x);
    auto rec = [&](auto&& self) -> void {
        const VertexId tip = path.back();
        if (tip == y) {
            if (is_induced_path(g, std::span<const VertexId>(path)))
                for (VertexId v : path) members.set(v);
            return;
        }
        for (int w = g.neighbors(tip).next(0); w != -1; w = g.neighbors(tip).next(w + 1)) {
            if (on_path.test(w)) continue;
            path.push_back(w);
            on_path.set(w);
            self(self);
            on_path.reset(w);
            path.pop_back();
        }
    };
    rec(rec);
    return members;
}

struct IntervalResult {
    VertexId x = 0, y = 0;
    Bitset members;
    std::map<VertexId, InducedPath> witness;  // one induced x,y-path per member
    bool budget_hit = false;
};

struct MonophonicVerdict {
    std::vector<VertexId> set;
    bool holds = false;
    std::optional<VertexId> uncovered;
    bool budget_hit = false;
};

struct MonophonicNumber {
    bool budget_exceeded = false;  // no set certified within max_k (or step budget hit)
    int value = 0;
    std::vector<VertexId> set;
};

struct S2mVerdict {
    bool holds = false;
    std::optional<std::array<VertexId, 3>> counterexample;  // lexicographically smallest (x,y,u)
    bool budget_hit = false;
};

// Exact monophonic machinery over one immutable graph. Interval results are
// memoized per unordered pair; the memo is safe for concurrent insert-or-read.
class MonophonicEngine {
public:
    explicit MonophonicEngine(Graph g, long long step_budget = kDefaultStepBudget)
        : g_(std::move(g)), budget_(step_budget) {}

    const Graph& graph() const { return g_; }
    long long step_budget() const { return budget_; }

    PathSearch induced_path_through(VertexId x, VertexId y, VertexId u) const {
        return find_induced_path_through(g_, x, y, u, budget_);
    }

    const IntervalResult& monophonic_interval(VertexId x, VertexId y) const {
        if (x == y) throw std::invalid_argument("monophonic_interval: x and y coincide");
        g_.check_vertex(x);
        g_.check_vertex(y);
        const auto key = std::minmax(x, y);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = intervals_.find(key);
            if (it != intervals_.end()) return it->second;
        }
        IntervalResult r = compute_interval(key.first, key.second);
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, fresh] = intervals_.try_emplace(key, std::move(r));
        (void)fresh;
        return it->second;
    }

    MonophonicVerdict is_monophonic_set(const std::vector<VertexId>& s) const {
        if (s.empty()) throw std::invalid_argument("is_monophonic_set: empty set");
        for (VertexId v : s) g_.check_vertex(v);
        const int n = g_.vertex_count();
        MonophonicVerdict verdict;
        verdict.set = s;
        Bitset covered(n);
        for (VertexId v : s) covered.set(v);
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (s[i] == s[j]) continue;
                const IntervalResult& iv = monophonic_interval(s[i], s[j]);
                covered |= iv.members;
                verdict.budget_hit = verdict.budget_hit || iv.budget_hit;
            }
        }
        for (VertexId v = 0; v < n; ++v) {
            if (!covered.test(v)) {
                verdict.holds = false;
                verdict.uncovered = v;
                return verdict;
            }
        }
        verdict.holds = true;
        return verdict;
    }

    // Smallest k <= max_k admitting a monophonic set, with one optimal set.
    // Simplicial vertices lie in every monophonic set, so they are forced
    // into each candidate before the remaining subsets are enumerated.
    MonophonicNumber monophonic_number(int max_k) const {
        const int n = g_.vertex_count();
        if (n < 1) throw std::invalid_argument("monophonic_number: empty graph");
        if (max_k < 1) throw std::invalid_argument("monophonic_number: max_k must be >= 1");
        const std::vector<VertexId> forced = simplicial_vertices(g_);
        Bitset forced_bits(n);
        for (VertexId v : forced) forced_bits.set(v);
        std::vector<VertexId> rest;
        for (VertexId v = 0; v < n; ++v)
            if (!forced_bits.test(v)) rest.push_back(v);

        MonophonicNumber result;
        for (int k = std::max(1, static_cast<int>(forced.size())); k <= max_k; ++k) {
            const int extra = k - static_cast<int>(forced.size());
            if (extra < 0 || extra > static_cast<int>(rest.size())) continue;
            std::vector<int> idx(extra);
            for (int i = 0; i < extra; ++i) idx[i] = i;
            while (true) {
                std::vector<VertexId> s = forced;
                for (int i : idx) s.push_back(rest[i]);
                std::sort(s.begin(), s.end());
                MonophonicVerdict v = is_monophonic_set(s);
                if (v.holds) {
                    result.value = k;
                    result.set = std::move(s);
                    return result;
                }
                // next combination
                int i = extra - 1;
                while (i >= 0 && idx[i] == static_cast<int>(rest.size()) - extra + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < extra; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        result.budget_exceeded = true;
        return result;
    }

    // Every pair of non-adjacent vertices must be a monophonic set. Graphs
    // without a non-adjacent pair qualify only at order 2 (K_2); complete
    // graphs K_n with n >= 3 have m(K_n) = n > 2. The sweep parallelizes
    // over pairs; the counterexample is the lexicographic minimum (x,y,u).
    S2mVerdict is_strongly_2_monophonic(int jobs = 1) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (s2m_cache_) return *s2m_cache_;
        }
        S2mVerdict verdict = compute_s2m(jobs);
        std::lock_guard<std::mutex> lock(mu_);
        if (!s2m_cache_) s2m_cache_ = verdict;
        return *s2m_cache_;
    }

    bool is_m_convex(const std::vector<VertexId>& s) const {
        if (s.size() <= 1) return true;
        Bitset bits(g_.vertex_count());
        for (VertexId v : s) {
            g_.check_vertex(v);
            bits.set(v);
        }
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (s[i] == s[j]) continue;
                if (!monophonic_interval(s[i], s[j]).members.is_subset_of(bits)) return false;
            }
        return true;
    }

    // Maximum proper m-convex set size: descending-size subset search above
    // the clique-number floor (a maximum clique is itself m-convex).
    int convexity_number() const {
        const int n = g_.vertex_count();
        if (n < 2) throw std::invalid_argument("convexity_number: need at least 2 vertices");
        const int omega = clique_number(g_);
        for (int size = n - 1; size > omega; --size) {
            std::vector<int> idx(size);
            for (int i = 0; i < size; ++i) idx[i] = i;
            while (true) {
                Bitset bits(n);
                for (int v : idx) bits.set(v);
                bool convex = true;
                for (int i = 0; i < size && convex; ++i)
                    for (int j = i + 1; j < size; ++j)
                        if (!monophonic_interval(idx[i], idx[j]).members.is_subset_of(bits)) {
                            convex = false;
                            break;
                        }
                if (convex) return size;
                int i = size - 1;
                while (i >= 0 && idx[i] == n - size + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        return omega == n ? n - 1 : omega;  // complete graphs: every proper subset is m-convex
    }

private:
    IntervalResult compute_interval(VertexId x, VertexId y) const {
        const int n = g_.vertex_count();
        IntervalResult r;
        r.x = x;
        r.y = y;
        r.members = Bitset(n);
        r.members.set(x);
        r.members.set(y);
        if (g_.adjacent(x, y)) {
            InducedPath edge{{x, y}};
            r.witness[x] = edge;
            r.witness[y] = edge;
            return r;  // longer x,y-walks all carry the chord xy
        }
        if (auto sp = shortest_path(g_, x, y)) {
            r.witness[x] = *sp;
            r.witness[y] = *sp;
        } else {
            return r;  // different components: no x,y-path at all
        }
        for (VertexId u = 0; u < n; ++u) {
            if (u == x || u == y) continue;
            PathSearch ps = find_induced_path_through(g_, x, y, u, budget_);
            if (ps.outcome == SearchOutcome::found) {
                r.members.set(u);
                r.witness[u] = std::move(ps.path);
            } else if (ps.outcome == SearchOutcome::budget_exceeded) {
                r.budget_hit = true;
            }
        }
        return r;
    }

    S2mVerdict compute_s2m(int jobs) const {
        const int n = g_.vertex_count();
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (VertexId x = 0; x < n; ++x)
            for (VertexId y = x + 1; y < n; ++y)
                if (!g_.adjacent(x, y)) pairs.emplace_back(x, y);

        S2mVerdict verdict;
        if (pairs.empty()) {
            verdict.holds = (n == 2);
            return verdict;
        }

        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best_idx{pairs.size()};
        std::atomic<bool> budget_flag{false};
        std::mutex best_mu;
        std::optional<std::array<VertexId, 3>> best;

        auto worker = [&]() {
            for (std::size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1)) {
                if (i > best_idx.load(std::memory_order_relaxed)) return;
                const auto [x, y] = pairs[i];
                const IntervalResult& iv = monophonic_interval(x, y);
                if (iv.budget_hit) {
                    budget_flag.store(true);
                    continue;  // nothing certified for this pair
                }
                for (VertexId u = 0; u < n; ++u) {
                    if (!iv.members.test(u)) {
                        std::lock_guard<std::mutex> lock(best_mu);
                        if (i < best_idx.load()) {
                            best_idx.store(i);
                            best = std::array<VertexId, 3>{x, y, u};
                        }
                        break;
                    }
                }
            }
        };

        jobs = std::max(1, jobs);
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> threads;
            for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
            worker();
            for (auto& t : threads) t.join();
        }

        if (best) {
            verdict.holds = false;
            verdict.counterexample = best;
        } else {
            verdict.holds = true;
            verdict.budget_hit = budget_flag.load();
        }
        return verdict;
    }

    const Graph g_;
    long long budget_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<VertexId, VertexId>, IntervalResult> intervals_;
    mutable std::optional<S2mVerdict> s2m_cache_;
};

}  // namespace mono
