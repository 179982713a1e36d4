#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ptd/decompose.hpp"
#include "ptd/gen.hpp"
#include "ptd/io.hpp"
#include "ptd/verify.hpp"

using namespace ptd;

namespace {

constexpr int kOk = 0;
constexpr int kFormat = 1;
constexpr int kTooSmall = 2;

const char* kProvenance = "ptd-gen";

// The generator writes its call into a comment so the embedding can be
// rebuilt when no .emb file is given.
std::optional<EmbeddedGraph> regenerate(const Graph& gr) {
    for (const auto& c : gr.comments) {
        std::istringstream in(c);
        std::string tag, kind;
        if (!(in >> tag >> kind) || tag != kProvenance) continue;
        EmbeddedGraph g;
        if (kind == "grid") {
            int r, cc, t;
            if (!(in >> r >> cc >> t)) continue;
            g = gen_grid(r, cc, t != 0);
        } else if (kind == "tri") {
            int n;
            unsigned long long seed;
            if (!(in >> n >> seed)) continue;
            g = gen_triangulation(n, seed);
        } else if (kind == "chain") {
            int s, h;
            unsigned long long seed;
            if (!(in >> s >> h >> seed)) continue;
            g = gen_mountain_chain(s, h, seed);
        } else {
            continue;
        }
        auto a = graph_of(g).edges, b = gr.edges;
        for (auto& e : b)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (g.n == gr.n && a == b) return g;
        throw FormatError("graph does not match its generator comment '" + c + "'");
    }
    return std::nullopt;
}

EmbeddedGraph load_embedded(const std::string& graph, const std::string& emb) {
    auto gr = load_gr(graph);
    if (!emb.empty()) return embed(gr, load_emb(emb, gr.n));
    if (auto g = regenerate(gr)) return *g;
    throw FormatError("an embedding file is required for graphs not written by 'gen'");
}

template <class F>
void write_file(const std::string& path, F&& f) {
    if (path == "-") {
        f(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    f(out);
}

nlohmann::json stats_json(const DecomposeStats& s, int n, int m) {
    nlohmann::json j;
    j["n"] = n;
    j["m"] = m;
    j["width"] = s.width;
    j["k"] = s.k;
    j["recursion_depth"] = s.depth;
    j["level_calls"] = s.calls;
    j["attempts"] = s.attempts;
    j["blocks"] = s.blocks;
    j["coast_cycles"] = s.cycles;
    j["patched_bags"] = s.patched;
    j["timings"] = {{"triangulate", s.t.triangulate}, {"merge", s.t.merge},
                    {"mountain", s.t.mountain},       {"shortcuts", s.t.shortcuts},
                    {"coast", s.t.coast},             {"components", s.t.components},
                    {"stitch", s.t.stitch},           {"total", s.t.total}};
    if (!s.failure.empty()) j["failure"] = s.failure;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree decompositions of embedded planar graphs"};
    app.require_subcommand(1);

    auto* dec = app.add_subcommand("decompose", "decompose an embedded planar graph");
    std::string graph, emb, out, stats, kstr = "auto";
    int jobs = 1;
    bool no_compress = false;
    dec->add_option("--graph", graph, "graph in .gr format")->required();
    dec->add_option("--embedding", emb, "rotation system in .emb format");
    dec->add_option("--k", kstr, "auto, or a fixed k");
    dec->add_option("--out", out, "tree decomposition output (.td, - for stdout)")->required();
    dec->add_option("--stats", stats, "write run statistics as JSON (- for stdout)");
    dec->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    dec->add_flag("--no-compress", no_compress, "keep bags contained in a neighbour");

    auto* val = app.add_subcommand("validate", "check a tree decomposition");
    std::string vgraph, vtd;
    val->add_option("--graph", vgraph)->required();
    val->add_option("--td", vtd)->required();

    auto* gen = app.add_subcommand("gen", "write a generated instance");
    gen->require_subcommand(1);
    std::string ggr, gemb;
    int rows = 0, cols = 0, n = 0, summits = 0, height = 0;
    unsigned long long seed = 1;
    bool tri = false;
    auto* ggrid = gen->add_subcommand("grid", "r x c grid");
    ggrid->add_option("rows", rows)->required()->check(CLI::PositiveNumber);
    ggrid->add_option("cols", cols)->required()->check(CLI::PositiveNumber);
    ggrid->add_flag("--triangulate", tri, "add the SW-NE diagonal of every cell");
    auto* gtri = gen->add_subcommand("tri", "random stacked triangulation");
    gtri->add_option("n", n)->required()->check(CLI::Range(3, 100000000));
    gtri->add_option("--seed", seed);
    auto* gchain = gen->add_subcommand("chain", "chain of summits");
    gchain->add_option("summits", summits)->required()->check(CLI::PositiveNumber);
    gchain->add_option("height", height)->required()->check(CLI::Range(2, 100000));
    gchain->add_option("--seed", seed);
    for (auto* s : {ggrid, gtri, gchain}) {
        s->add_option("--gr", ggr, "graph output")->required();
        s->add_option("--emb", gemb, "embedding output");
    }

    auto* etw = app.add_subcommand("exact-tw", "exact treewidth for at most 15 vertices");
    std::string egraph;
    etw->add_option("--graph", egraph)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kFormat;
    }

    try {
        if (*dec) {
            auto g = load_embedded(graph, emb);
            int k = 0;
            if (kstr != "auto") {
                try {
                    size_t pos = 0;
                    k = std::stoi(kstr, &pos);
                    if (pos != kstr.size() || k < 0) throw std::invalid_argument(kstr);
                } catch (const std::exception&) {
                    throw FormatError("--k expects 'auto' or a non-negative integer");
                }
                if (k == 0 && g.num_edges() > 0) {
                    std::cerr << "k too small: graph has edges\n";
                    return kTooSmall;
                }
            }
            DecomposeConfig cfg;
            cfg.jobs = jobs;
            cfg.compress = !no_compress;
            auto r = decompose(g, k, cfg);
            if (!stats.empty())
                write_file(stats, [&](std::ostream& o) { o << stats_json(r.stats, g.n, g.num_edges()).dump(2) << '\n'; });
            if (!r.ok) {
                std::cerr << (r.stats.failure.empty() ? "k too small" : r.stats.failure) << '\n';
                return kTooSmall;
            }
            write_file(out, [&](std::ostream& o) { write_td(o, r.td, g.n); });
            return kOk;
        }
        if (*val) {
            auto gr = load_gr(vgraph);
            auto t = load_td(vtd);
            if (t.n != gr.n) throw FormatError("decomposition is for " + std::to_string(t.n) + " vertices, graph has " + std::to_string(gr.n));
            auto rep = validate_td(gr.n, gr.edges, t.td);
            if (!rep.ok()) {
                std::cout << "invalid";
                for (const auto& s : rep.issues) std::cout << "\n  " << s;
                std::cout << '\n';
                return kFormat;
            }
            std::cout << "valid width " << rep.width << '\n';
            return kOk;
        }
        if (*gen) {
            EmbeddedGraph g;
            std::string prov;
            if (*ggrid) {
                g = gen_grid(rows, cols, tri);
                prov = "grid " + std::to_string(rows) + " " + std::to_string(cols) + " " + (tri ? "1" : "0");
            } else if (*gtri) {
                g = gen_triangulation(n, seed);
                prov = "tri " + std::to_string(n) + " " + std::to_string(seed);
            } else {
                g = gen_mountain_chain(summits, height, seed);
                prov = "chain " + std::to_string(summits) + " " + std::to_string(height) + " " + std::to_string(seed);
            }
            auto gr = graph_of(g);
            gr.comments.push_back(std::string(kProvenance) + " " + prov);
            write_file(ggr, [&](std::ostream& o) { write_gr(o, gr); });
            if (!gemb.empty()) write_file(gemb, [&](std::ostream& o) { write_emb(o, g); });
            return kOk;
        }
        if (*etw) {
            auto gr = load_gr(egraph);
            if (gr.n > 15) throw FormatError("exact-tw handles at most 15 vertices");
            std::cout << exact_treewidth(gr.n, gr.edges) << '\n';
            return kOk;
        }
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return kFormat;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFormat;
    }
    return kOk;
}
