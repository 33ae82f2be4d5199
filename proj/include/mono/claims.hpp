#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mono/engine.hpp"
#include "mono/generators.hpp"
#include "mono/graph_io.hpp"
#include "mono/structure.hpp"
#include "mono/version.hpp"
#include "mono/witness_paths.hpp"

namespace mono {

using Json = nlohmann::ordered_json;

enum class Verdict { holds, fails, budget_exceeded };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "budget-exceeded";
    }
}

struct ClaimSpec {
    std::string id;
    std::string statement;
    Json graph;   // generator spec or {"file": path}; may be null for graph-free ops
    std::string op;
    Json args;
    Json expect;
};

struct ClaimResult {
    std::string claim_id;
    std::string statement;
    Verdict verdict = Verdict::fails;
    Json value;    // what was computed
    Json witness;  // certificate or counterexample; always present on fails
    long long runtime_ms = 0;
};

struct ReportDocument {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::string graph_note;
    std::vector<ClaimResult> claims;
    int holds = 0, fails = 0, budget = 0;
};

// --------------------------------------------------------------------------
// Result cache: one append-friendly JSONL file keyed by
// (graph hash, operation, canonical argument dump).
// --------------------------------------------------------------------------

class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : file_(std::move(dir)) {
        std::filesystem::create_directories(file_);
        file_ /= "results.jsonl";
        std::ifstream in(file_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                Json row = Json::parse(line);
                entries_[row.at("key").get<std::string>()] = row.at("result");
            } catch (...) {
                // ignore torn trailing lines from interrupted runs
            }
        }
    }

    std::optional<Json> lookup(const std::string& key) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void store(const std::string& key, const Json& result) {
        std::lock_guard<std::mutex> lock(mu_);
        if (entries_.count(key)) return;
        entries_[key] = result;
        std::ofstream out(file_, std::ios::app);
        Json row;
        row["key"] = key;
        row["result"] = result;
        out << row.dump() << '\n';
    }

    const std::filesystem::path& file() const { return file_; }

private:
    std::filesystem::path file_;
    mutable std::mutex mu_;
    std::map<std::string, Json> entries_;
};

struct RunOptions {
    int jobs = 1;
    long long budget = kDefaultStepBudget;
    ResultCache* cache = nullptr;
    std::filesystem::path base_dir = ".";
};

// --------------------------------------------------------------------------
// Graph specs
// --------------------------------------------------------------------------

inline Graph build_graph_spec(const Json& spec, const RunOptions& opt) {
    if (spec.contains("file")) {
        const auto path = opt.base_dir / spec.at("file").get<std::string>();
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open graph file " + path.string());
        return parse_graph(in);
    }
    const std::string family = spec.at("family").get<std::string>();
    if (family == "kneser") return kneser(spec.at("n").get<int>(), spec.at("r").get<int>());
    if (family == "johnson") return johnson(spec.at("n").get<int>(), spec.at("r").get<int>());
    if (family == "gjohnson")
        return generalized_johnson(spec.at("n").get<int>(), spec.at("r").get<int>(), spec.at("i").get<int>());
    if (family == "hamming") return hamming(spec.at("dims").get<std::vector<int>>());
    if (family == "complete") return basic_graph(BasicKind::complete, spec.at("n").get<int>());
    if (family == "path") return basic_graph(BasicKind::path, spec.at("n").get<int>());
    if (family == "cycle") return basic_graph(BasicKind::cycle, spec.at("n").get<int>());
    if (family == "complete_minus_matching")
        return basic_graph(BasicKind::complete_minus_matching, spec.at("n").get<int>(),
                           spec.value("m", 0));
    if (family == "product") {
        const auto& factors = spec.at("factors");
        if (!factors.is_array() || factors.size() < 2)
            throw std::invalid_argument("product spec needs at least two factors");
        Graph g = build_graph_spec(factors[0], opt);
        for (std::size_t i = 1; i < factors.size(); ++i)
            g = cartesian_product(g, build_graph_spec(factors[i], opt));
        return g;
    }
    throw std::invalid_argument("unknown graph family: " + family);
}

inline std::string describe_graph_spec(const Json& spec) {
    if (spec.is_null()) return "-";
    if (spec.contains("file")) return "file:" + spec.at("file").get<std::string>();
    const std::string family = spec.at("family").get<std::string>();
    std::ostringstream os;
    os << family;
    if (spec.contains("n")) os << "(" << spec.at("n").get<int>();
    if (spec.contains("r")) os << "," << spec.at("r").get<int>();
    if (spec.contains("i")) os << "," << spec.at("i").get<int>();
    if (spec.contains("m")) os << ";m=" << spec.at("m").get<int>();
    if (spec.contains("n")) os << ")";
    if (spec.contains("dims")) {
        os << "[";
        const auto dims = spec.at("dims").get<std::vector<int>>();
        for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
        os << "]";
    }
    if (family == "product") {
        os << "(";
        const auto& factors = spec.at("factors");
        for (std::size_t i = 0; i < factors.size(); ++i)
            os << (i ? " x " : "") << describe_graph_spec(factors[i]);
        os << ")";
    }
    return os.str();
}

// --------------------------------------------------------------------------
// Op helpers
// --------------------------------------------------------------------------

namespace detail {

inline VertexId resolve_vertex(const Graph& g, const Json& v) {
    if (v.is_number_integer()) {
        VertexId id = v.get<int>();
        g.check_vertex(id);
        return id;
    }
    if (v.is_array()) {
        auto elems = v.get<std::vector<int>>();
        auto id = g.vertex_of(elems);
        if (!id) throw std::invalid_argument("no vertex labeled " + subset_to_string(elems));
        return *id;
    }
    throw std::invalid_argument("vertex spec must be an id or an element array");
}

inline Json vertex_json(const Graph& g, VertexId v) {
    if (g.has_subset_labels()) return subset_to_string(g.label(v).elements);
    return v;
}

inline Json path_json(const Graph& g, const InducedPath& p) {
    Json arr = Json::array();
    for (VertexId v : p.vertices) arr.push_back(vertex_json(g, v));
    return arr;
}

inline Json triple_json(const Graph& g, VertexId x, VertexId y, VertexId u) {
    Json j;
    j["x"] = vertex_json(g, x);
    j["y"] = vertex_json(g, y);
    j["u"] = vertex_json(g, u);
    return j;
}

template <typename Fn>
inline void parallel_indices(std::size_t count, int jobs, Fn&& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> threads;
    for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
}

}  // namespace detail

// --------------------------------------------------------------------------
// Claim execution
// --------------------------------------------------------------------------

namespace ops {

struct Outcome {
    Verdict verdict = Verdict::fails;
    Json value;
    Json witness;
};

inline Outcome count_op(const Graph& g, const Json& expect) {
    Outcome out;
    out.value = Json{{"n", g.vertex_count()}, {"m", g.edge_count()}};
    const bool ok = g.vertex_count() == expect.at("n").get<int>() &&
                    g.edge_count() == expect.at("m").get<long long>();
    out.verdict = ok ? Verdict::holds : Verdict::fails;
    if (!ok) out.witness = out.value;
    return out;
}

inline Outcome monophonic_number_op(const Graph& g, const Json& args, const Json& expect,
                                    const RunOptions& opt) {
    MonophonicEngine eng(g, opt.budget);
    const int max_k = args.value("max_k", g.vertex_count());
    MonophonicNumber r = eng.monophonic_number(max_k);
    Outcome out;
    if (r.budget_exceeded) {
        out.verdict = Verdict::budget_exceeded;
        out.value = "budget-exceeded";
        out.witness = Json{{"max_k", max_k}};
        return out;
    }
    out.value = r.value;
    Json set = Json::array();
    for (VertexId v : r.set) set.push_back(detail::vertex_json(g, v));
    const bool ok = r.value == expect.get<int>();
    out.verdict = ok ? Verdict::holds : Verdict::fails;
    out.witness = Json{{"optimal_set", set}};
    if (!ok) out.witness["expected"] = expect;
    if (g.vertex_count() >= 2 && component_count(g) > 1)
        out.witness["note"] = "disconnected graph: intervals computed per component";
    return out;
}

inline Outcome interval_membership_op(const Graph& g, const Json& args, const Json& expect,
                                      const RunOptions& opt) {
    MonophonicEngine eng(g, opt.budget);
    const VertexId x = detail::resolve_vertex(g, args.at("x"));
    const VertexId y = detail::resolve_vertex(g, args.at("y"));
    const VertexId u = detail::resolve_vertex(g, args.at("vertex"));
    const IntervalResult& iv = eng.monophonic_interval(x, y);
    Outcome out;
    if (iv.budget_hit && !iv.members.test(u)) {
        out.verdict = Verdict::budget_exceeded;
        out.value = "budget-exceeded";
        return out;
    }
    const bool member = iv.members.test(u);
    out.value = Json{{"member", member}, {"interval_size", iv.members.count()}};
    const bool ok = member == expect.at("member").get<bool>();
    out.verdict = ok ? Verdict::holds : Verdict::fails;
    if (member) out.witness = Json{{"path", detail::path_json(g, iv.witness.at(u))}};
    else out.witness = detail::triple_json(g, x, y, u);
    return out;
}

// Engine verdict on strong 2-monophonicity, with the necessary-condition
// soundness cross-check folded in: a failed condition with a true engine
// verdict is reported as a claim failure in its own right.
inline Outcome s2m_op(const Graph& g, const Json& expect, const RunOptions& opt) {
    MonophonicEngine eng(g, opt.budget);
    S2mVerdict v = eng.is_strongly_2_monophonic(opt.jobs);
    Outcome out;
    if (v.budget_hit) {
        out.verdict = Verdict::budget_exceeded;
        out.value = "budget-exceeded";
        return out;
    }
    NecessaryConditionsReport rep = necessary_conditions_report(g);
    out.value = Json{{"s2m", v.holds}, {"necessary_conditions_passed", rep.all_passed()}};
    if (!rep.all_passed() && v.holds) {
        out.verdict = Verdict::fails;
        out.witness = Json{{"soundness_violation", "necessary condition failed on a strongly 2-monophonic graph"}};
        return out;
    }
    const bool ok = v.holds == expect.get<bool>();
    out.verdict = ok ? Verdict::holds : Verdict::fails;
    if (v.counterexample) {
        const auto& t = *v.counterexample;
        out.witness = detail::triple_json(g, t[0], t[1], t[2]);
    }
    return out;
}

inline Outcome kneser_sweep_op(const Graph& g, const RunOptions& opt) {
    MonophonicEngine eng(g, opt.budget);
    S2mVerdict v = eng.is_strongly_2_monophonic(opt.jobs);
    Outcome out;
    if (!v.holds) {
        out.verdict = v.budget_hit ? Verdict::budget_exceeded : Verdict::fails;
        if (v.counterexample) {
            const auto& t = *v.counterexample;
            out.witness = detail::triple_json(g, t[0], t[1], t[2]);
        }
        return out;
    }
    const int n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId x = 0; x < n; ++x)
        for (VertexId y = x + 1; y < n; ++y)
            if (!g.adjacent(x, y)) pairs.emplace_back(x, y);
    std::atomic<long long> triples{0};
    std::atomic<long long> fallbacks{0};
    std::mutex bad_mu;
    Json bad;
    detail::parallel_indices(pairs.size(), opt.jobs, [&](std::size_t i) {
        const auto [x, y] = pairs[i];
        for (VertexId u = 0; u < n; ++u) {
            if (u == x || u == y) continue;
            WitnessPathResult w = kneser_witness_path(g, x, y, u, opt.budget);
            ++triples;
            if (w.used_fallback) {
                ++fallbacks;
                std::lock_guard<std::mutex> lock(bad_mu);
                if (bad.is_null()) {
                    bad = detail::triple_json(g, x, y, u);
                    bad["case"] = w.case_id;
                }
            }
        }
    });
    out.value = Json{{"s2m", true}, {"triples", triples.load()}, {"fallbacks", fallbacks.load()}};
    out.verdict = fallbacks.load() == 0 ? Verdict::holds : Verdict::fails;
    out.witness = bad;
    return out;
}

inline Outcome kneser_random_op(const Graph& g, const Json& args, const RunOptions& opt) {
    const long long count = args.at("count").get<long long>();
    const std::uint64_t seed = args.value("seed", 20240601u);
    std::mt19937_64 rng(seed);
    const int n = g.vertex_count();
    std::uniform_int_distribution<int> pick(0, n - 1);
    long long fallbacks = 0;
    Json bad;
    for (long long it = 0; it < count; ++it) {
        VertexId x = pick(rng);
        VertexId y = pick(rng);
        while (y == x || g.adjacent(x, y)) y = pick(rng);
        VertexId u = pick(rng);
        while (u == x || u == y) u = pick(rng);
        WitnessPathResult w = kneser_witness_path(g, x, y, u, opt.budget);
        if (w.used_fallback) {
            ++fallbacks;
            if (bad.is_null()) bad = detail::triple_json(g, x, y, u);
        }
    }
    Outcome out;
    out.value = Json{{"triples", count}, {"fallbacks", fallbacks}};
    out.verdict = fallbacks == 0 ? Verdict::holds : Verdict::fails;
    out.witness = bad;
    return out;
}

inline Outcome distance_law_op(const Graph& g, const RunOptions& opt) {
    if (!g.has_subset_labels()) throw std::invalid_argument("distance_law: graph lacks subset labels");
    const int r = g.subset_r();
    const int n = g.vertex_count();
    std::atomic<bool> ok{true};
    std::mutex bad_mu;
    Json bad;
    detail::parallel_indices(n, opt.jobs, [&](std::size_t xi) {
        const VertexId x = static_cast<VertexId>(xi);
        // single-source BFS against the closed-form distance
        std::vector<int> dist(n, -1);
        dist[x] = 0;
        std::vector<VertexId> frontier{x};
        while (!frontier.empty()) {
            std::vector<VertexId> next;
            for (VertexId v : frontier)
                for (int w = g.neighbors(v).next(0); w != -1; w = g.neighbors(v).next(w + 1))
                    if (dist[w] == -1) {
                        dist[w] = dist[v] + 1;
                        next.push_back(w);
                    }
            frontier = std::move(next);
        }
        for (VertexId y = x + 1; y < n; ++y) {
            const int t = intersection_size(g.label(x).elements, g.label(y).elements);
            const int want = std::min(2 * (r - t), 2 * t + 1);
            if (dist[y] != want) {
                ok.store(false);
                std::lock_guard<std::mutex> lock(bad_mu);
                if (bad.is_null())
                    bad = Json{{"x", detail::vertex_json(g, x)},
                               {"y", detail::vertex_json(g, y)},
                               {"bfs", dist[y]},
                               {"formula", want}};
            }
        }
    });
    Outcome out;
    out.value = Json{{"pairs", static_cast<long long>(n) * (n - 1) / 2}};
    out.verdict = ok.load() ? Verdict::holds : Verdict::fails;
    out.witness = bad;
    return out;
}

inline Outcome lemma_path_lengths_op(const Graph& g, const RunOptions&) {
    if (!g.has_subset_labels()) throw std::invalid_argument("lemma_path_lengths: graph lacks subset labels");
    const int r = g.subset_r();
    const int nn = g.ground_n();
    const int n = g.vertex_count();
    long long even_checked = 0, odd_checked = 0;
    Json bad;
    for (VertexId a = 0; a < n && bad.is_null(); ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            const auto& la = g.label(a);
            const auto& lb = g.label(b);
            const int t = intersection_size(la.elements, lb.elements);
            if (t >= 1) {
                auto sub = even_path(la, lb, nn);
                InducedPath p = detail::map_to_ids(g, sub);
                ++even_checked;
                if (p.length() != 2 * (r - t) || !is_induced_path(g, p)) {
                    bad = Json{{"kind", "even"}, {"a", detail::vertex_json(g, a)}, {"b", detail::vertex_json(g, b)}};
                    break;
                }
            }
            auto sub = odd_path(la, lb, nn);
            InducedPath p = detail::map_to_ids(g, sub);
            ++odd_checked;
            if (p.length() != 2 * t + 1 || !is_induced_path(g, p)) {
                bad = Json{{"kind", "odd"}, {"a", detail::vertex_json(g, a)}, {"b", detail::vertex_json(g, b)}};
                break;
            }
        }
    }
    Outcome out;
    out.value = Json{{"even_paths", even_checked}, {"odd_paths", odd_checked}};
    out.verdict = bad.is_null() ? Verdict::holds : Verdict::fails;
    out.witness = bad;
    return out;
}

inline Outcome johnson_sweep_op(const Graph& g, const Json& args, const RunOptions& opt) {
    if (!g.has_subset_labels()) throw std::invalid_argument("johnson_witness_sweep: graph lacks subset labels");
    const int n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId x = 0; x < n; ++x)
        for (VertexId y = x + 1; y < n; ++y)
            if (!g.adjacent(x, y)) pairs.emplace_back(x, y);
    std::atomic<long long> triples{0};
    std::atomic<long long> fallbacks{0};
    std::mutex bad_mu;
    Json bad;
    detail::parallel_indices(pairs.size(), opt.jobs, [&](std::size_t i) {
        const auto [x, y] = pairs[i];
        for (VertexId u = 0; u < n; ++u) {
            if (u == x || u == y) continue;
            WitnessPathResult w = johnson_witness_path(g, x, y, u, opt.budget);
            ++triples;
            if (w.used_fallback) {
                ++fallbacks;
                std::lock_guard<std::mutex> lock(bad_mu);
                if (bad.is_null()) bad = detail::triple_json(g, x, y, u);
            }
        }
    });
    Outcome out;
    out.value = Json{{"triples", triples.load()}, {"fallbacks", fallbacks.load()}};
    bool ok = fallbacks.load() == 0;
    if (args.value("engine_crosscheck", false)) {
        MonophonicEngine eng(g, opt.budget);
        S2mVerdict v = eng.is_strongly_2_monophonic(opt.jobs);
        out.value["engine_s2m"] = v.holds;
        ok = ok && v.holds;
        if (!v.holds && v.counterexample) {
            const auto& t = *v.counterexample;
            bad = detail::triple_json(g, t[0], t[1], t[2]);
        }
    }
    out.verdict = ok ? Verdict::holds : Verdict::fails;
    out.witness = bad;
    return out;
}

inline Outcome lift_chain_op(const Json& args, const RunOptions& opt) {
    const int n0 = args.at("n").get<int>();
    const int r = args.at("r").get<int>();
    const int steps = args.at("steps").get<int>();
    std::vector<SubsetVertex> base;
    for (const auto& e : args.at("set")) base.push_back(SubsetVertex{e.get<std::vector<int>>(), n0});

    Graph cur = kneser(n0, r);
    Outcome out;
    long long verified = 0;
    for (int step = 0; step < steps; ++step) {
        const int n = n0 + step;
        MonophonicEngine lo(cur, opt.budget);
        Graph next = kneser(n + 1, r);
        // every vertex of K(n+1,r) containing the new element gets a lifted witness
        for (VertexId v = 0; v < next.vertex_count(); ++v) {
            const auto& lab = next.label(v);
            if (std::find(lab.elements.begin(), lab.elements.end(), n + 1) == lab.elements.end()) continue;
            InducedPath p = lift_witness(lo, next, base, lab);
            std::vector<int> ends_ok(2, 0);
            for (const auto& s : base) {
                if (next.label(p.vertices.front()).elements == s.elements) ends_ok[0] = 1;
                if (next.label(p.vertices.back()).elements == s.elements) ends_ok[1] = 1;
            }
            if (!is_induced_path(next, p) || !p.contains(v) || !ends_ok[0] || !ends_ok[1]) {
                out.verdict = Verdict::fails;
                out.witness = Json{{"step", step + 1}, {"vertex", detail::vertex_json(next, v)}};
                return out;
            }
            ++verified;
        }
        // engine cross-check on the lifted graph
        MonophonicEngine hi(next, opt.budget);
        std::vector<VertexId> ids;
        for (const auto& s : base) ids.push_back(*next.vertex_of(s.elements));
        std::sort(ids.begin(), ids.end());
        MonophonicVerdict mv = hi.is_monophonic_set(ids);
        if (!mv.holds) {
            out.verdict = Verdict::fails;
            out.witness = Json{{"step", step + 1},
                               {"uncovered", mv.uncovered ? detail::vertex_json(next, *mv.uncovered) : Json()}};
            return out;
        }
        cur = std::move(next);
    }
    out.verdict = Verdict::holds;
    out.value = Json{{"lifted_vertices", verified}, {"steps", steps}};
    return out;
}

inline Outcome product_sweep_op(const Json& graph_spec, const Json& args, const RunOptions& opt) {
    if (!graph_spec.contains("family") || graph_spec.at("family") != "product" ||
        graph_spec.at("factors").size() != 2)
        throw std::invalid_argument("product_witness_sweep: graph must be a product of two factors");
    Graph gf = build_graph_spec(graph_spec.at("factors")[0], opt);
    Graph hf = build_graph_spec(graph_spec.at("factors")[1], opt);
    Graph prod = cartesian_product(gf, hf);
    MonophonicEngine ge(gf, opt.budget);
    MonophonicEngine he(hf, opt.budget);
    const int ngf = gf.vertex_count();
    const int nhf = hf.vertex_count();
    const int n = prod.vertex_count();
    long long triples = 0, fallbacks = 0;
    Json bad;
    for (VertexId s = 0; s < n && bad.is_null(); ++s) {
        for (VertexId d = s + 1; d < n; ++d) {
            if (prod.adjacent(s, d)) continue;
            for (VertexId v = 0; v < n; ++v) {
                if (v == s || v == d) continue;
                ProductVertex src{s / nhf, s % nhf}, dst{d / nhf, d % nhf}, via{v / nhf, v % nhf};
                WitnessPathResult w = product_witness_path(prod, ge, he, src, dst, via, opt.budget);
                ++triples;
                if (w.used_fallback) ++fallbacks;
                const bool valid = w.path.vertices.front() == s && w.path.vertices.back() == d &&
                                   w.path.contains(v) && is_induced_path(prod, w.path);
                if (!valid) {
                    bad = detail::triple_json(prod, s, d, v);
                    break;
                }
            }
            if (!bad.is_null()) break;
        }
    }
    Outcome out;
    out.value = Json{{"factors", Json::array({ngf, nhf})}, {"triples", triples}, {"fallbacks", fallbacks}};
    bool ok = bad.is_null();
    if (args.contains("max_fallbacks")) ok = ok && fallbacks <= args.at("max_fallbacks").get<long long>();
    out.verdict = ok ? Verdict::holds : Verdict::fails;
    out.witness = bad;
    return out;
}

inline Outcome induced_cycle_op(const Graph& g, const Json& args, const Json& expect, const RunOptions&) {
    const VertexId a = detail::resolve_vertex(g, args.at("a"));
    const VertexId b = detail::resolve_vertex(g, args.at("b"));
    const VertexId c = detail::resolve_vertex(g, args.at("c"));
    auto cyc = induced_cycle_through(g, a, b, c);
    Outcome out;
    out.value = cyc ? "exists" : "none";
    const std::string want = expect.get<std::string>();
    out.verdict = (out.value == want) ? Verdict::holds : Verdict::fails;
    if (cyc) {
        Json arr = Json::array();
        for (VertexId v : *cyc) arr.push_back(detail::vertex_json(g, v));
        out.witness = Json{{"cycle", arr}};
    } else {
        out.witness = Json{{"a", detail::vertex_json(g, a)},
                           {"b", detail::vertex_json(g, b)},
                           {"c", detail::vertex_json(g, c)}};
    }
    return out;
}

// Exhaustive labeled sweep on `vertices` vertices: for connected chordal
// instances the engine verdict must coincide with "complete minus one edge",
// and on every instance a failed necessary condition must imply a false
// engine verdict.
inline Outcome chordal_classification_op(const Json& args, const RunOptions& opt) {
    const int nv = args.value("vertices", 5);
    const int npairs = nv * (nv - 1) / 2;
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) all_pairs.emplace_back(i, j);
    const std::uint32_t total = 1u << npairs;
    std::atomic<long long> connected_chordal{0}, s2m_count{0};
    std::mutex bad_mu;
    Json bad;
    detail::parallel_indices(total, opt.jobs, [&](std::size_t mask) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < npairs; ++b)
            if (mask >> b & 1) edges.push_back(all_pairs[b]);
        Graph g(nv, edges);
        MonophonicEngine eng(g, opt.budget);
        const bool s2m = eng.is_strongly_2_monophonic().holds;
        NecessaryConditionsReport rep = necessary_conditions_report(g);
        if (!rep.all_passed() && s2m) {
            std::lock_guard<std::mutex> lock(bad_mu);
            if (bad.is_null()) bad = Json{{"mask", mask}, {"violation", "necessary-condition soundness"}};
            return;
        }
        if (component_count(g) != 1 || !is_chordal(g)) return;
        ++connected_chordal;
        if (s2m) ++s2m_count;
        const bool is_kn_minus_e = (static_cast<int>(edges.size()) == npairs - 1);
        if (s2m != is_kn_minus_e) {
            std::lock_guard<std::mutex> lock(bad_mu);
            if (bad.is_null())
                bad = Json{{"mask", mask}, {"s2m", s2m}, {"complete_minus_one_edge", is_kn_minus_e}};
        }
    });
    Outcome out;
    out.value = Json{{"graphs", total},
                     {"connected_chordal", connected_chordal.load()},
                     {"s2m", s2m_count.load()}};
    out.verdict = bad.is_null() ? Verdict::holds : Verdict::fails;
    out.witness = bad;
    return out;
}

// Pruned search vs. naive all-simple-paths enumeration, on all labeled graphs
// with `exhaustive_vertices` vertices plus random graphs of sizes min_n..max_n.
inline Outcome oracle_equivalence_op(const Json& args, const RunOptions& opt) {
    const int nv = args.value("exhaustive_vertices", 5);
    const int rnd_count = args.value("random_graphs", 200);
    const int min_n = args.value("min_n", 6);
    const int max_n = args.value("max_n", 8);
    const std::uint64_t seed = args.value("seed", 987654321u);

    std::atomic<long long> graphs{0}, pairs_checked{0};
    std::mutex bad_mu;
    Json bad;

    auto check_graph = [&](const Graph& g, const std::string& tag) {
        MonophonicEngine eng(g, opt.budget);
        ++graphs;
        for (VertexId x = 0; x < g.vertex_count(); ++x)
            for (VertexId y = x + 1; y < g.vertex_count(); ++y) {
                Bitset naive = naive_interval_members(g, x, y);
                naive.set(x);
                naive.set(y);  // endpoints are interval members by definition
                const IntervalResult& iv = eng.monophonic_interval(x, y);
                ++pairs_checked;
                if (!(naive == iv.members)) {
                    std::lock_guard<std::mutex> lock(bad_mu);
                    if (bad.is_null()) bad = Json{{"graph", tag}, {"x", x}, {"y", y}};
                    return;
                }
            }
    };

    const int npairs = nv * (nv - 1) / 2;
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) all_pairs.emplace_back(i, j);
    detail::parallel_indices(std::size_t{1} << npairs, opt.jobs, [&](std::size_t mask) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < npairs; ++b)
            if (mask >> b & 1) edges.push_back(all_pairs[b]);
        check_graph(Graph(nv, edges), "exhaustive mask " + std::to_string(mask));
    });

    // Deterministic random corpus: sizes cycle through min_n..max_n and edge
    // probabilities through {0.3, 0.5, 0.7}.
    std::mt19937_64 rng(seed);
    std::vector<Graph> random_graphs;
    for (int i = 0; i < rnd_count; ++i) {
        const int n = min_n + i % (max_n - min_n + 1);
        const double p = 0.3 + 0.2 * (i % 3);
        std::vector<std::pair<int, int>> edges;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng) < p) edges.emplace_back(a, b);
        random_graphs.push_back(Graph(n, edges));
    }
    detail::parallel_indices(random_graphs.size(), opt.jobs, [&](std::size_t i) {
        check_graph(random_graphs[i], "random " + std::to_string(i));
    });

    Outcome out;
    out.value = Json{{"graphs", graphs.load()}, {"pairs", pairs_checked.load()}};
    out.verdict = bad.is_null() ? Verdict::holds : Verdict::fails;
    out.witness = bad;
    return out;
}

inline Outcome convexity_clique_op(const Graph& g, const RunOptions& opt) {
    MonophonicEngine eng(g, opt.budget);
    Outcome out;
    S2mVerdict v = eng.is_strongly_2_monophonic(opt.jobs);
    if (!v.holds) {
        out.verdict = Verdict::fails;
        out.witness = Json{{"precondition", "graph is not strongly 2-monophonic"}};
        return out;
    }
    const int cm = eng.convexity_number();
    const int omega = clique_number(g);
    out.value = Json{{"convexity_number", cm}, {"clique_number", omega}};
    out.verdict = (cm == omega) ? Verdict::holds : Verdict::fails;
    if (cm != omega) out.witness = out.value;
    return out;
}

inline Outcome reduction_invariance_op(const Graph& g, const RunOptions& opt) {
    ReductionResult red = reduce_by_universals_and_twins(g);
    MonophonicEngine before(g, opt.budget);
    MonophonicEngine after(red.core, opt.budget);
    const bool a = before.is_strongly_2_monophonic(opt.jobs).holds;
    const bool b = after.is_strongly_2_monophonic(opt.jobs).holds;
    Outcome out;
    out.value = Json{{"s2m", a}, {"core_s2m", b}, {"core_n", red.core.vertex_count()},
                     {"removals", red.log.size()}};
    out.verdict = (a == b) ? Verdict::holds : Verdict::fails;
    if (a != b) out.witness = out.value;
    return out;
}

}  // namespace ops

inline ClaimResult execute_claim(const ClaimSpec& spec, const RunOptions& opt) {
    ClaimResult result;
    result.claim_id = spec.id;
    result.statement = spec.statement;

    const std::string cache_key = [&]() -> std::string {
        std::uint64_t gh = 0;
        if (!spec.graph.is_null()) gh = build_graph_spec(spec.graph, opt).content_hash();
        std::ostringstream os;
        os << std::hex << gh << '|' << spec.op << '|' << spec.args.dump() << '|' << spec.expect.dump();
        return os.str();
    }();
    if (opt.cache) {
        if (auto hit = opt.cache->lookup(cache_key)) {
            result.verdict = static_cast<Verdict>(hit->at("verdict").get<int>());
            result.value = hit->value("value", Json());
            result.witness = hit->value("witness", Json());
            result.runtime_ms = 0;
            return result;
        }
    }

    const auto start = std::chrono::steady_clock::now();
    ops::Outcome out;
    try {
        const auto& op = spec.op;
        if (op == "lift_chain") {
            out = ops::lift_chain_op(spec.args, opt);
        } else if (op == "product_witness_sweep") {
            out = ops::product_sweep_op(spec.graph, spec.args, opt);
        } else if (op == "chordal_classification") {
            out = ops::chordal_classification_op(spec.args, opt);
        } else if (op == "oracle_equivalence") {
            out = ops::oracle_equivalence_op(spec.args, opt);
        } else {
            Graph g = build_graph_spec(spec.graph, opt);
            if (op == "count") out = ops::count_op(g, spec.expect);
            else if (op == "monophonic_number") out = ops::monophonic_number_op(g, spec.args, spec.expect, opt);
            else if (op == "interval_membership") out = ops::interval_membership_op(g, spec.args, spec.expect, opt);
            else if (op == "s2m") out = ops::s2m_op(g, spec.expect, opt);
            else if (op == "s2m_and_witness_sweep") out = ops::kneser_sweep_op(g, opt);
            else if (op == "kneser_witness_random") out = ops::kneser_random_op(g, spec.args, opt);
            else if (op == "distance_law") out = ops::distance_law_op(g, opt);
            else if (op == "lemma_path_lengths") out = ops::lemma_path_lengths_op(g, opt);
            else if (op == "johnson_witness_sweep") out = ops::johnson_sweep_op(g, spec.args, opt);
            else if (op == "induced_cycle_through") out = ops::induced_cycle_op(g, spec.args, spec.expect, opt);
            else if (op == "convexity_equals_clique") out = ops::convexity_clique_op(g, opt);
            else if (op == "reduction_invariance") out = ops::reduction_invariance_op(g, opt);
            else throw std::invalid_argument("unknown operation: " + op);
        }
    } catch (const std::invalid_argument&) {
        throw;  // configuration problems abort the run
    } catch (const std::exception& e) {
        out.verdict = Verdict::fails;
        out.witness = Json{{"error", e.what()}};
    }
    const auto end = std::chrono::steady_clock::now();

    result.verdict = out.verdict;
    result.value = out.value;
    result.witness = out.witness;
    if (result.verdict == Verdict::fails && result.witness.is_null())
        result.witness = Json{{"expected", spec.expect}, {"value", result.value}};
    result.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();

    if (opt.cache) {
        Json row;
        row["verdict"] = static_cast<int>(result.verdict);
        row["value"] = result.value;
        row["witness"] = result.witness;
        opt.cache->store(cache_key, row);
    }
    return result;
}

inline std::vector<ClaimSpec> parse_manifest(const Json& doc) {
    std::vector<ClaimSpec> out;
    std::map<std::string, int> seen;
    for (const auto& c : doc.at("claims")) {
        ClaimSpec spec;
        spec.id = c.at("id").get<std::string>();
        if (++seen[spec.id] > 1) throw std::invalid_argument("duplicate claim id: " + spec.id);
        spec.statement = c.value("statement", spec.id);
        spec.graph = c.value("graph", Json());
        spec.op = c.at("op").get<std::string>();
        spec.args = c.value("args", Json::object());
        spec.expect = c.value("expect", Json());
        out.push_back(std::move(spec));
    }
    return out;
}

inline ReportDocument run_manifest(const std::vector<ClaimSpec>& claims, const RunOptions& opt) {
    ReportDocument doc;
    doc.claims.resize(claims.size());
    detail::parallel_indices(claims.size(), opt.jobs, [&](std::size_t i) {
        RunOptions inner = opt;  // inner sweeps keep their own parallelism
        doc.claims[i] = execute_claim(claims[i], inner);
    });
    for (const auto& r : doc.claims) {
        if (r.verdict == Verdict::holds) ++doc.holds;
        else if (r.verdict == Verdict::fails) ++doc.fails;
        else ++doc.budget;
    }
    return doc;
}

inline Json report_to_json(const ReportDocument& doc) {
    Json j;
    j["tool"] = doc.tool;
    j["version"] = doc.version;
    Json arr = Json::array();
    for (const auto& r : doc.claims) {
        Json c;
        c["id"] = r.claim_id;
        c["statement"] = r.statement;
        c["verdict"] = verdict_name(r.verdict);
        c["value"] = r.value;
        c["witness"] = r.witness;
        c["runtime_ms"] = r.runtime_ms;
        arr.push_back(std::move(c));
    }
    j["claims"] = std::move(arr);
    j["summary"] = Json{{"holds", doc.holds}, {"fails", doc.fails}, {"budget_exceeded", doc.budget}};
    return j;
}

inline std::string report_to_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << doc.tool << " " << doc.version << " claim report\n";
    for (const auto& r : doc.claims) {
        os << "[" << verdict_name(r.verdict) << "] " << r.claim_id << "  " << r.statement;
        if (!r.value.is_null()) os << "  => " << r.value.dump();
        if (r.verdict != Verdict::holds && !r.witness.is_null()) os << "  witness: " << r.witness.dump();
        os << "  (" << r.runtime_ms << " ms)\n";
    }
    os << "summary: " << doc.holds << " holds, " << doc.fails << " fails, " << doc.budget
       << " budget-exceeded\n";
    return os.str();
}

}  // namespace mono
