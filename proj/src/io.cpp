#include "ptd/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace ptd {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw FormatError("line " + std::to_string(line) + ": " + msg);
}

bool skip(const std::string& s) {
    auto p = s.find_first_not_of(" \t\r");
    return p == std::string::npos || s[p] == 'c';
}

int vertex(long long v, int n, int line) {
    if (v < 1 || v > n) fail(line, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return (int)v - 1;
}

std::ifstream open(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw FormatError("cannot open " + path);
    return f;
}

}  // namespace

Graph read_gr(std::istream& in) {
    Graph g;
    std::string s;
    int line = 0;
    long long m = -1;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, s)) {
        ++line;
        if (skip(s)) {
            auto p = s.find('c');
            if (p != std::string::npos && s.find_first_not_of(" \t\r") == p) {
                auto t = s.substr(p + 1);
                auto a = t.find_first_not_of(' ');
                g.comments.push_back(a == std::string::npos ? "" : t.substr(a));
            }
            continue;
        }
        std::istringstream ls(s);
        if (m < 0) {
            std::string p, tw;
            long long n;
            if (!(ls >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 || m < 0)
                fail(line, "expected header 'p tw <n> <m>'");
            g.n = (int)n;
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) fail(line, "expected an edge '<u> <v>'");
        std::string rest;
        if (ls >> rest) fail(line, "trailing data after edge");
        int a = vertex(u, g.n, line), b = vertex(v, g.n, line);
        if (a == b) fail(line, "not simple: self-loop at " + std::to_string(u));
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            fail(line, "not simple: parallel edge " + std::to_string(u) + " " + std::to_string(v));
        g.edges.push_back({a, b});
    }
    if (m < 0) throw FormatError("missing header 'p tw <n> <m>'");
    if ((long long)g.edges.size() != m)
        throw FormatError("header announces " + std::to_string(m) + " edges, found " +
                          std::to_string(g.edges.size()));
    return g;
}

void write_gr(std::ostream& out, const Graph& g) {
    for (const auto& c : g.comments) out << "c " << c << '\n';
    out << "p tw " << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u + 1 << ' ' << v + 1 << '\n';
}

Graph graph_of(const EmbeddedGraph& g) {
    Graph r;
    r.n = g.n;
    r.edges = g.edge_list();
    return r;
}

TdFile read_td(std::istream& in) {
    TdFile t;
    std::string s;
    int line = 0;
    long long nb = -1, w1 = 0;
    std::vector<char> have;
    while (std::getline(in, s)) {
        ++line;
        if (skip(s)) continue;
        std::istringstream ls(s);
        if (nb < 0) {
            std::string a, b;
            long long n;
            if (!(ls >> a >> b >> nb >> w1 >> n) || a != "s" || b != "td" || nb < 0 || n < 0)
                fail(line, "expected header 's td <bags> <width+1> <n>'");
            t.n = (int)n;
            t.td.bags.assign(nb, {});
            have.assign(nb, 0);
            continue;
        }
        std::string tok;
        ls >> tok;
        if (tok == "b") {
            long long i;
            if (!(ls >> i)) fail(line, "expected 'b <i> <v...>'");
            int id = vertex(i, (int)nb, line);
            if (have[id]) fail(line, "bag " + std::to_string(i) + " listed twice");
            have[id] = 1;
            long long v;
            while (ls >> v) t.td.bags[id].push_back(vertex(v, t.n, line));
            if (!ls.eof()) fail(line, "bad vertex in bag " + std::to_string(i));
            auto& bag = t.td.bags[id];
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            continue;
        }
        std::istringstream es(s);
        long long i, j;
        std::string rest;
        if (!(es >> i >> j) || (es >> rest)) fail(line, "expected a tree edge '<i> <j>'");
        t.td.edges.push_back({vertex(i, (int)nb, line), vertex(j, (int)nb, line)});
    }
    if (nb < 0) throw FormatError("missing header 's td <bags> <width+1> <n>'");
    for (long long i = 0; i < nb; ++i)
        if (!have[i]) throw FormatError("bag " + std::to_string(i + 1) + " missing");
    if (t.td.max_bag() != w1 && nb > 0)
        throw FormatError("header announces bag size " + std::to_string(w1) + ", largest bag has " +
                          std::to_string(t.td.max_bag()));
    return t;
}

void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
    out << "s td " << td.bags.size() << ' ' << (td.bags.empty() ? 0 : td.max_bag()) << ' ' << n << '\n';
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
}

Embedding read_emb(std::istream& in, int n) {
    Embedding e;
    e.rot.assign(n, {});
    std::vector<char> have(n, 0);
    std::string s;
    int line = 0;
    while (std::getline(in, s)) {
        ++line;
        if (skip(s)) continue;
        auto colon = s.find(':');
        if (colon == std::string::npos) fail(line, "expected 'r <v>: ...' or 'outer: ...'");
        std::istringstream head(s.substr(0, colon)), body(s.substr(colon + 1));
        std::string kw;
        head >> kw;
        std::vector<int> list;
        long long v;
        while (body >> v) list.push_back(vertex(v, n, line));
        if (!body.eof()) fail(line, "bad vertex id");
        if (kw == "outer") {
            e.outer.push_back(std::move(list));
        } else if (kw == "r") {
            long long x;
            if (!(head >> x)) fail(line, "expected 'r <v>:'");
            int id = vertex(x, n, line);
            if (have[id]) fail(line, "rotation of " + std::to_string(x) + " given twice");
            have[id] = 1;
            e.rot[id] = std::move(list);
        } else {
            fail(line, "unknown line '" + kw + "'");
        }
    }
    return e;
}

void write_emb(std::ostream& out, const EmbeddedGraph& g) {
    for (int v = 0; v < g.n; ++v) {
        out << "r " << v + 1 << ':';
        for (int u : g.rot[v]) out << ' ' << u + 1;
        out << '\n';
    }
    for (const auto& w : outer_walks(g)) {
        out << "outer:";
        for (int v : w) out << ' ' << v + 1;
        out << '\n';
    }
}

Embedding embedding_of(const EmbeddedGraph& g) {
    Embedding e;
    e.rot = g.rot;
    e.outer = outer_walks(g);
    return e;
}

EmbeddedGraph embed(const Graph& gr, const Embedding& emb) {
    if ((int)emb.rot.size() != gr.n) throw FormatError("embedding has the wrong vertex count");
    std::vector<std::vector<int>> adj(gr.n);
    for (auto [u, v] : gr.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int v = 0; v < gr.n; ++v) {
        auto a = adj[v], r = emb.rot[v];
        std::sort(a.begin(), a.end());
        std::sort(r.begin(), r.end());
        if (a != r)
            throw FormatError("rotation of vertex " + std::to_string(v + 1) +
                              " does not list exactly its neighbours");
    }
    try {
        auto g = make_embedded_walks(emb.rot, emb.outer);
        auto r2 = validate_embedding(g);
        if (!r2.ok())
            throw FormatError("invalid embedding: " + (r2.errors.empty() ? std::string("Euler formula fails") : r2.errors[0]));
        return g;
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid embedding: ") + e.what());
    }
}

Graph load_gr(const std::string& path) {
    auto f = open(path);
    return read_gr(f);
}

TdFile load_td(const std::string& path) {
    auto f = open(path);
    return read_td(f);
}

Embedding load_emb(const std::string& path, int n) {
    auto f = open(path);
    return read_emb(f, n);
}

}  // namespace ptd
