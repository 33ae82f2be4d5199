#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mono/graph.hpp"

namespace mono {

// Text format: line 1 "n m", then m lines "u v" (0-based), then optional
// label lines "# v : e1,e2,...,er" (one per vertex). Single spaces, one
// record per line.

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

namespace detail {

inline bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoi(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::string& dst) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            dst = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw ParseError(1, "missing header line 'n m'");
    auto toks = detail::split_ws(header);
    int n = 0, m = 0;
    if (toks.size() != 2 || !detail::parse_int(toks[0], n) || !detail::parse_int(toks[1], m))
        throw ParseError(lineno, "header must be 'n m'");
    if (n < 0 || m < 0) throw ParseError(lineno, "header values must be non-negative");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int e = 0; e < m; ++e) {
        std::string el;
        if (!next_line(el)) throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edge lines");
        auto et = detail::split_ws(el);
        int u = 0, v = 0;
        if (et.size() != 2 || !detail::parse_int(et[0], u) || !detail::parse_int(et[1], v))
            throw ParseError(lineno, "edge line must be 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "self-loop not allowed");
        edges.emplace_back(u, v);
    }
    Graph g(n, edges);  // asymmetric duplicates folded by construction

    // optional label lines
    std::vector<std::vector<int>> labels;
    std::string ll;
    bool have_labels = false;
    while (next_line(ll)) {
        if (ll.empty()) continue;
        if (ll[0] != '#') throw ParseError(lineno, "unexpected trailing content (expected label line '# v : ...')");
        auto lt = detail::split_ws(ll.substr(1));
        if (lt.size() != 3 || lt[1] != ":")
            throw ParseError(lineno, "label line must be '# v : e1,e2,...'");
        int v = 0;
        if (!detail::parse_int(lt[0], v) || v < 0 || v >= n) throw ParseError(lineno, "label vertex id out of range");
        if (!have_labels) {
            labels.assign(n, {});
            have_labels = true;
        }
        if (!labels[v].empty()) throw ParseError(lineno, "duplicate label for vertex " + std::to_string(v));
        std::vector<int> elems;
        std::string cur;
        std::istringstream es(lt[2]);
        while (std::getline(es, cur, ',')) {
            int e = 0;
            if (!detail::parse_int(cur, e) || e < 1) throw ParseError(lineno, "bad label element '" + cur + "'");
            elems.push_back(e);
        }
        if (elems.empty()) throw ParseError(lineno, "empty label");
        for (std::size_t i = 1; i < elems.size(); ++i)
            if (elems[i] <= elems[i - 1]) throw ParseError(lineno, "label elements must be strictly ascending");
        labels[v] = std::move(elems);
    }

    if (have_labels) {
        int ground = 0;
        for (int v = 0; v < n; ++v) {
            if (labels[v].empty()) throw ParseError(lineno, "missing label for vertex " + std::to_string(v));
            ground = std::max(ground, labels[v].back());
        }
        std::vector<SubsetVertex> sv;
        sv.reserve(n);
        for (int v = 0; v < n; ++v) sv.push_back(SubsetVertex{labels[v], ground});
        try {
            g.attach_subset_labels(std::move(sv));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
        // Labeled graphs must follow a single intersection rule |A cap B| = i.
        if (g.edge_count() > 0) {
            int rule = -1;
            for (int u = 0; u < n && rule < 0; ++u) {
                int w = g.neighbors(u).next(u + 1);
                if (w != -1) rule = intersection_size(g.label(u).elements, g.label(w).elements);
            }
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    const bool want = intersection_size(g.label(u).elements, g.label(v).elements) == rule;
                    if (want != g.adjacent(u, v))
                        throw ParseError(lineno, "labels do not match the family's intersection rule at (" +
                                                     std::to_string(u) + "," + std::to_string(v) + ")");
                }
        }
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = g.neighbors(u).next(u + 1); v != -1; v = g.neighbors(u).next(v + 1))
            out << u << ' ' << v << '\n';
    if (g.has_subset_labels()) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            out << "# " << v << " : ";
            const auto& elems = g.label(v).elements;
            for (std::size_t i = 0; i < elems.size(); ++i) {
                if (i) out << ',';
                out << elems[i];
            }
            out << '\n';
        }
    }
}

inline std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

inline Graph parse_graph_string(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

}  // namespace mono
