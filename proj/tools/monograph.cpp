// Command-line surface for the monophonic-convexity toolkit: family
// generators, exact interval/number/s2m queries, constructive witness paths,
// structural analysis, and the claim-manifest runner.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mono/claims.hpp"
#include "mono/engine.hpp"
#include "mono/generators.hpp"
#include "mono/graph_io.hpp"
#include "mono/structure.hpp"
#include "mono/version.hpp"
#include "mono/witness_paths.hpp"

namespace {

struct GraphOptions {
    std::string family;
    int n = 0, r = 0, i = 0, m = 0;
    std::vector<int> dims;
    std::string file;
};

void add_graph_options(CLI::App* cmd, GraphOptions& o) {
    cmd->add_option("--family", o.family,
                    "graph family: kneser|johnson|gjohnson|hamming|complete|path|cycle|complete-minus-matching");
    cmd->add_option("--n", o.n, "ground set size / vertex count");
    cmd->add_option("--r", o.r, "subset size");
    cmd->add_option("--i", o.i, "intersection size for gjohnson");
    cmd->add_option("--m", o.m, "matching size for complete-minus-matching");
    cmd->add_option("--dims", o.dims, "Hamming dimensions, e.g. --dims 3 2")->delimiter(',');
    cmd->add_option("--file", o.file, "read the graph from a file in the text format");
}

mono::Graph build_graph(const GraphOptions& o) {
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw std::invalid_argument("cannot open " + o.file);
        return mono::parse_graph(in);
    }
    if (o.family == "kneser") return mono::kneser(o.n, o.r);
    if (o.family == "johnson") return mono::johnson(o.n, o.r);
    if (o.family == "gjohnson") return mono::generalized_johnson(o.n, o.r, o.i);
    if (o.family == "hamming") return mono::hamming(o.dims);
    if (o.family.empty()) throw std::invalid_argument("need --family or --file");
    return mono::basic_graph(mono::basic_kind_from_string(o.family), o.n, o.m);
}

std::vector<int> parse_subset(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

mono::VertexId resolve(const mono::Graph& g, const std::string& arg) {
    if (arg.find(',') == std::string::npos && g.vertex_of(parse_subset(arg)) == std::nullopt) {
        int id = std::stoi(arg);
        g.check_vertex(id);
        return id;
    }
    auto id = g.vertex_of(parse_subset(arg));
    if (!id) throw std::invalid_argument("no vertex labeled {" + arg + "}");
    return *id;
}

std::string vertex_str(const mono::Graph& g, mono::VertexId v) {
    if (g.has_subset_labels()) return mono::subset_to_string(g.label(v).elements);
    return std::to_string(v);
}

std::string path_str(const mono::Graph& g, const mono::InducedPath& p) {
    std::string s;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) s += " - ";
        s += vertex_str(g, p.vertices[i]);
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(mono::kToolName) + " " + mono::kToolVersion +
                 " - monophonic convexity toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    long long budget = mono::kDefaultStepBudget;
    int jobs = 1;
    app.add_option("--format", format, "output format: text|machine")->capture_default_str();
    app.add_option("--budget", budget, "search step budget per induced-path query")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for sweeps")->capture_default_str();

    // generate
    GraphOptions gen_opts;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "emit a graph in the text format");
    gen->fallthrough();
    add_graph_options(gen, gen_opts);
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // interval
    GraphOptions iv_opts;
    std::string iv_x, iv_y;
    auto* iv = app.add_subcommand("interval", "monophonic interval J(x,y) with witness paths");
    iv->fallthrough();
    add_graph_options(iv, iv_opts);
    iv->add_option("--x", iv_x, "first endpoint (id or comma-separated subset)")->required();
    iv->add_option("--y", iv_y, "second endpoint")->required();

    // mono-number
    GraphOptions mn_opts;
    int mn_maxk = 0;
    auto* mn = app.add_subcommand("mono-number", "exact monophonic number by ascending search");
    mn->fallthrough();
    add_graph_options(mn, mn_opts);
    mn->add_option("--max-k", mn_maxk, "largest set size to try (default n)");

    // s2m-check
    GraphOptions s2_opts;
    auto* s2 = app.add_subcommand("s2m-check", "is every non-adjacent pair a monophonic set?");
    s2->fallthrough();
    add_graph_options(s2, s2_opts);

    // path kneser|johnson|product
    auto* path_cmd = app.add_subcommand("path", "run a constructive witness-path builder");
    path_cmd->fallthrough();
    path_cmd->require_subcommand(1);
    int pk_r = 3;
    std::string pk_x, pk_y, pk_via;
    auto* pk = path_cmd->add_subcommand("kneser", "induced x,y-path through via in K(2r+1,r)");
    pk->fallthrough();
    pk->add_option("--r", pk_r, "subset size (ground set is [2r+1])")->required();
    pk->add_option("--x", pk_x)->required();
    pk->add_option("--y", pk_y)->required();
    pk->add_option("--via", pk_via)->required();

    int pj_n = 0, pj_r = 0;
    std::string pj_x, pj_y, pj_via;
    auto* pj = path_cmd->add_subcommand("johnson", "induced x,y-path through via in J(n,r)");
    pj->fallthrough();
    pj->add_option("--n", pj_n)->required();
    pj->add_option("--r", pj_r)->required();
    pj->add_option("--x", pj_x)->required();
    pj->add_option("--y", pj_y)->required();
    pj->add_option("--via", pj_via)->required();

    std::vector<int> pp_dims;
    std::string pp_gfile, pp_hfile;
    int pp_src = -1, pp_dst = -1, pp_via = -1;
    auto* pp = path_cmd->add_subcommand("product", "induced src,dst-path through via in G box H");
    pp->fallthrough();
    pp->add_option("--dims", pp_dims, "Hamming split: G = hamming(front), H = K_last")->delimiter(',');
    pp->add_option("--file", pp_gfile, "factor G from file");
    pp->add_option("--file2", pp_hfile, "factor H from file");
    pp->add_option("--src", pp_src, "product vertex id g*n(H)+h")->required();
    pp->add_option("--dst", pp_dst)->required();
    pp->add_option("--via", pp_via)->required();

    // analyze
    GraphOptions an_opts;
    auto* an = app.add_subcommand("analyze", "structural report: simplicial/chordal/cuts/domination/reduction");
    an->fallthrough();
    add_graph_options(an, an_opts);

    // verify-claims
    std::string vc_manifest, vc_cache_dir;
    auto* vc = app.add_subcommand("verify-claims", "run a claim manifest and report verdicts");
    vc->fallthrough();
    vc->add_option("--manifest", vc_manifest, "manifest JSON file")->required();
    vc->add_option("--cache-dir", vc_cache_dir, "result cache directory (or MONOGRAPH_CACHE_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool machine = (format == "machine");
    try {
        if (*gen) {
            mono::Graph g = build_graph(gen_opts);
            if (gen_out.empty()) {
                mono::write_graph(std::cout, g);
            } else {
                std::ofstream out(gen_out);
                mono::write_graph(out, g);
            }
            return 0;
        }
        if (*iv) {
            mono::Graph g = build_graph(iv_opts);
            mono::MonophonicEngine eng(g, budget);
            auto x = resolve(g, iv_x), y = resolve(g, iv_y);
            const auto& r = eng.monophonic_interval(x, y);
            if (machine) {
                mono::Json j;
                j["x"] = vertex_str(g, x);
                j["y"] = vertex_str(g, y);
                mono::Json mem = mono::Json::array();
                for (int v = r.members.next(0); v != -1; v = r.members.next(v + 1))
                    mem.push_back(vertex_str(g, v));
                j["members"] = mem;
                j["size"] = r.members.count();
                j["budget_hit"] = r.budget_hit;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "J(" << vertex_str(g, x) << ", " << vertex_str(g, y) << ") has "
                          << r.members.count() << " of " << g.vertex_count() << " vertices\n";
                for (int v = r.members.next(0); v != -1; v = r.members.next(v + 1)) {
                    std::cout << "  " << vertex_str(g, v);
                    auto it = r.witness.find(v);
                    if (it != r.witness.end()) std::cout << "  via  " << path_str(g, it->second);
                    std::cout << '\n';
                }
                if (r.budget_hit) std::cout << "  (budget exceeded: membership list may be incomplete)\n";
            }
            return 0;
        }
        if (*mn) {
            mono::Graph g = build_graph(mn_opts);
            mono::MonophonicEngine eng(g, budget);
            const int maxk = mn_maxk > 0 ? mn_maxk : g.vertex_count();
            auto r = eng.monophonic_number(maxk);
            const bool disconnected = g.vertex_count() >= 2 && mono::component_count(g) > 1;
            if (machine) {
                mono::Json j;
                j["budget_exceeded"] = r.budget_exceeded;
                if (!r.budget_exceeded) {
                    j["m"] = r.value;
                    mono::Json set = mono::Json::array();
                    for (auto v : r.set) set.push_back(vertex_str(g, v));
                    j["set"] = set;
                }
                if (disconnected) j["note"] = "disconnected graph: intervals computed per component";
                std::cout << j.dump(2) << '\n';
            } else if (r.budget_exceeded) {
                std::cout << "budget-exceeded (no monophonic set of size <= " << maxk << " certified)\n";
            } else {
                std::cout << r.value << '\n';
                std::cout << "optimal set:";
                for (auto v : r.set) std::cout << ' ' << vertex_str(g, v);
                std::cout << '\n';
                if (disconnected)
                    std::cout << "note: disconnected graph; intervals computed per component\n";
            }
            return 0;
        }
        if (*s2) {
            mono::Graph g = build_graph(s2_opts);
            mono::MonophonicEngine eng(g, budget);
            auto v = eng.is_strongly_2_monophonic(jobs);
            if (machine) {
                mono::Json j;
                j["strongly_2_monophonic"] = v.holds;
                j["budget_hit"] = v.budget_hit;
                if (v.counterexample) {
                    const auto& t = *v.counterexample;
                    j["counterexample"] = mono::Json{{"x", vertex_str(g, t[0])},
                                                     {"y", vertex_str(g, t[1])},
                                                     {"u", vertex_str(g, t[2])}};
                }
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << (v.holds ? "true" : "false") << '\n';
                if (v.counterexample) {
                    const auto& t = *v.counterexample;
                    std::cout << "counterexample: u=" << vertex_str(g, t[2]) << " not in J("
                              << vertex_str(g, t[0]) << ", " << vertex_str(g, t[1]) << ")\n";
                }
                if (v.budget_hit) std::cout << "(budget exceeded: verdict incomplete)\n";
            }
            return 0;
        }
        if (*pk || *pj) {
            mono::Graph g = *pk ? mono::kneser(2 * pk_r + 1, pk_r) : mono::johnson(pj_n, pj_r);
            const std::string sx = *pk ? pk_x : pj_x;
            const std::string sy = *pk ? pk_y : pj_y;
            const std::string sv = *pk ? pk_via : pj_via;
            auto x = resolve(g, sx), y = resolve(g, sy), u = resolve(g, sv);
            mono::WitnessPathResult w = *pk ? mono::kneser_witness_path(g, x, y, u, budget)
                                            : mono::johnson_witness_path(g, x, y, u, budget);
            if (machine) {
                mono::Json j;
                mono::Json pathj = mono::Json::array();
                for (auto v : w.path.vertices) pathj.push_back(vertex_str(g, v));
                j["path"] = pathj;
                j["length"] = w.path.length();
                if (*pk) j["case"] = w.case_id;
                j["used_fallback"] = w.used_fallback;
                j["validated"] = true;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << path_str(g, w.path) << '\n';
                std::cout << "length " << w.path.length();
                if (*pk) std::cout << ", case " << w.case_id;
                if (w.used_fallback) std::cout << ", via engine fallback";
                std::cout << ", validated induced\n";
            }
            return 0;
        }
        if (*pp) {
            mono::Graph gf = [&]() {
                if (!pp_gfile.empty()) {
                    std::ifstream in(pp_gfile);
                    if (!in) throw std::invalid_argument("cannot open " + pp_gfile);
                    return mono::parse_graph(in);
                }
                if (pp_dims.size() < 2) throw std::invalid_argument("path product: need --dims or --file/--file2");
                return mono::hamming({pp_dims.begin(), pp_dims.end() - 1});
            }();
            mono::Graph hf = [&]() {
                if (!pp_hfile.empty()) {
                    std::ifstream in(pp_hfile);
                    if (!in) throw std::invalid_argument("cannot open " + pp_hfile);
                    return mono::parse_graph(in);
                }
                return mono::basic_graph(mono::BasicKind::complete, pp_dims.back());
            }();
            mono::Graph prod = mono::cartesian_product(gf, hf);
            prod.check_vertex(pp_src);
            prod.check_vertex(pp_dst);
            prod.check_vertex(pp_via);
            mono::MonophonicEngine ge(gf, budget), he(hf, budget);
            const int nh = hf.vertex_count();
            auto split = [&](int id) { return mono::ProductVertex{id / nh, id % nh}; };
            auto w = mono::product_witness_path(prod, ge, he, split(pp_src), split(pp_dst), split(pp_via),
                                                budget);
            if (machine) {
                mono::Json j;
                j["path"] = w.path.vertices;
                j["length"] = w.path.length();
                j["used_fallback"] = w.used_fallback;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << path_str(prod, w.path) << "\nlength " << w.path.length()
                          << (w.used_fallback ? ", via engine fallback" : "") << ", validated induced\n";
            }
            return 0;
        }
        if (*an) {
            mono::Graph g = build_graph(an_opts);
            auto simp = mono::simplicial_vertices(g);
            auto dom = mono::domination_report(g);
            auto dis = mono::is_dismantlable(g);
            auto rep = mono::necessary_conditions_report(g);
            auto red = mono::reduce_by_universals_and_twins(g);
            const bool connected = g.vertex_count() > 0 && mono::component_count(g) == 1;
            if (machine) {
                mono::Json j;
                j["n"] = g.vertex_count();
                j["m"] = g.edge_count();
                j["connected"] = connected;
                j["simplicial"] = simp;
                j["chordal"] = mono::is_chordal(g);
                j["clique_number"] = mono::clique_number(g);
                j["universal"] = dom.universal;
                mono::Json twins = mono::Json::array();
                for (auto [a, b] : dom.open_twins) twins.push_back(mono::Json::array({a, b}));
                j["open_twins"] = twins;
                j["dismantlable"] = dis.dismantlable;
                if (connected) {
                    auto cuts = mono::cut_analysis(g);
                    j["cut_vertices"] = cuts.cut_vertices;
                    j["closed_neighborhood_cuts"] = cuts.closed_neighborhood_cuts;
                }
                j["necessary_conditions_passed"] = rep.all_passed();
                j["reduction_core_n"] = red.core.vertex_count();
                j["reduction_removals"] = red.log.size();
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
                          << (connected ? " connected" : " disconnected") << '\n';
                std::cout << "chordal: " << (mono::is_chordal(g) ? "yes" : "no")
                          << ", clique number: " << mono::clique_number(g)
                          << ", dismantlable: " << (dis.dismantlable ? "yes" : "no") << '\n';
                std::cout << "simplicial vertices:";
                for (auto v : simp) std::cout << ' ' << vertex_str(g, v);
                std::cout << "\nuniversal vertices:";
                for (auto v : dom.universal) std::cout << ' ' << vertex_str(g, v);
                std::cout << "\nopen twins:";
                for (auto [a, b] : dom.open_twins) std::cout << " {" << a << "," << b << "}";
                std::cout << '\n';
                if (connected) {
                    auto cuts = mono::cut_analysis(g);
                    std::cout << "cut vertices:";
                    for (auto v : cuts.cut_vertices) std::cout << ' ' << v;
                    std::cout << "\nclosed-neighborhood cut sets at:";
                    for (auto v : cuts.closed_neighborhood_cuts) std::cout << ' ' << v;
                    std::cout << '\n';
                }
                auto show = [](const char* name, const mono::ConditionVerdict& c) {
                    std::cout << "  " << name << ": " << (c.passed ? "pass" : ("FAIL (" + c.witness + ")"))
                              << '\n';
                };
                std::cout << "necessary conditions for strong 2-monophonicity:\n";
                show("no cut vertex (P_3 exempt)", rep.no_cut_vertex);
                show("no closed neighborhood cut", rep.no_closed_neighborhood_cut);
                show("open domination shape", rep.open_domination_shape);
                show("closed domination universal", rep.closed_domination_universal);
                std::cout << "reduction: core n=" << red.core.vertex_count() << " after " << red.log.size()
                          << " removals\n";
            }
            return 0;
        }
        if (*vc) {
            std::ifstream in(vc_manifest);
            if (!in) throw std::invalid_argument("cannot open manifest " + vc_manifest);
            mono::Json doc = mono::Json::parse(in);
            auto claims = mono::parse_manifest(doc);
            mono::RunOptions opt;
            opt.jobs = jobs;
            opt.budget = budget;
            opt.base_dir = std::filesystem::path(vc_manifest).parent_path();
            std::optional<mono::ResultCache> cache;
            std::string cache_dir = vc_cache_dir;
            if (cache_dir.empty()) {
                if (const char* env = std::getenv("MONOGRAPH_CACHE_DIR")) cache_dir = env;
            }
            if (!cache_dir.empty()) {
                cache.emplace(cache_dir);
                opt.cache = &*cache;
            }
            auto report = mono::run_manifest(claims, opt);
            if (machine) std::cout << mono::report_to_json(report).dump(2) << '\n';
            else std::cout << mono::report_to_text(report);
            return (report.fails == 0 && report.budget == 0) ? 0 : 1;
        }
    } catch (const mono::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
