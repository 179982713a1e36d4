#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "ptd/decompose.hpp"
#include "ptd/gen.hpp"
#include "ptd/io.hpp"

using namespace ptd;

namespace {

std::vector<EmbeddedGraph> corpus() {
    std::vector<EmbeddedGraph> gs{gen_grid(1, 1, false), gen_grid(2, 2, false), gen_grid(3, 3, true),
                                  gen_grid(10, 7, true), gen_grid(6, 9, false), gen_mountain_chain(3, 3, 2),
                                  gen_rings({7, 5, 3}, true, 0.6, 4)};
    for (uint64_t s = 1; s <= 8; ++s) gs.push_back(gen_triangulation(3 + 37 * (int)s, s));
    for (uint64_t s = 1; s <= 4; ++s) gs.push_back(oracle::random_planar(50, s, 0.7));
    return gs;
}

Graph parse_gr(const std::string& s) {
    std::istringstream in(s);
    return read_gr(in);
}

TdFile parse_td(const std::string& s) {
    std::istringstream in(s);
    return read_td(in);
}

}  // namespace

TEST_CASE("generator sizes") {
    CHECK(gen_grid(1, 1, false).n == 1);
    auto c4 = gen_grid(2, 2, false);
    CHECK(c4.n == 4);
    CHECK(c4.num_edges() == 4);
    auto t = gen_grid(3, 3, true);
    CHECK(t.n == 9);
    CHECK(t.num_edges() == 16);
    auto k3 = gen_triangulation(3, 1);
    CHECK(k3.num_edges() == 3);
    auto k4 = gen_triangulation(4, 1);
    CHECK(k4.num_edges() == 6);
    auto r = validate_embedding(gen_triangulation(50, 1));
    CHECK(r.ok());
    CHECK(r.almost_triangulated);
    CHECK(gen_triangulation(50, 1).rot == gen_triangulation(50, 1).rot);
}

TEST_CASE("gr, td and emb round trips") {
    for (const auto& g : corpus()) {
        auto gr = graph_of(g);
        gr.comments = {"generated"};
        std::ostringstream a;
        write_gr(a, gr);
        auto back = parse_gr(a.str());
        CHECK(back.n == gr.n);
        CHECK(back.edges == gr.edges);
        CHECK(back.comments == gr.comments);
        std::ostringstream a2;
        write_gr(a2, back);
        CHECK(a2.str() == a.str());

        std::ostringstream e;
        write_emb(e, g);
        std::istringstream ein(e.str());
        auto emb = read_emb(ein, g.n);
        auto g2 = embed(back, emb);
        CHECK(g2.rot == g.rot);
        CHECK(g2.outer == g.outer);
        std::ostringstream e2;
        write_emb(e2, g2);
        CHECK(e2.str() == e.str());

        auto r = decompose(g);
        REQUIRE(r.ok);
        std::ostringstream t;
        write_td(t, r.td, g.n);
        auto tf = parse_td(t.str());
        CHECK(tf.n == g.n);
        CHECK(tf.td.bags == r.td.bags);
        CHECK(tf.td.edges == r.td.edges);
        std::ostringstream t2;
        write_td(t2, tf.td, tf.n);
        CHECK(t2.str() == t.str());
    }
}

TEST_CASE("format errors") {
    CHECK_THROWS_AS(parse_gr("1 2\n"), FormatError);
    CHECK_THROWS_AS(parse_gr("p tw 3 1\n1 1\n"), FormatError);
    CHECK_THROWS_AS(parse_gr("p tw 3 2\n1 2\n2 1\n"), FormatError);
    CHECK_THROWS_AS(parse_gr("p tw 3 2\n1 2\n"), FormatError);
    CHECK_THROWS_AS(parse_gr("p tw 3 1\n1 4\n"), FormatError);
    CHECK_THROWS_AS(parse_gr("p tw 3 1\n1 2 3\n"), FormatError);
    CHECK_NOTHROW(parse_gr("c hello\np tw 3 1\nc mid\n1 2\n"));
    CHECK_THROWS_AS(parse_td("s td 2 2 3\nb 1 1 2\n1 2\n"), FormatError);      // bag 2 missing
    CHECK_THROWS_AS(parse_td("s td 1 3 3\nb 1 1 2\n"), FormatError);           // width header
    CHECK_THROWS_AS(parse_td("s td 1 2 3\nb 1 1 5\n"), FormatError);           // vertex range
    CHECK_THROWS_AS(parse_td("s td 2 1 3\nb 1 1\nb 2 2\n1 3\n"), FormatError);  // edge range
    auto gr = parse_gr("p tw 3 3\n1 2\n2 3\n1 3\n");
    std::istringstream bad("r 1: 2 3\nr 2: 1\nr 3: 1 2\n");
    CHECK_THROWS_AS(embed(gr, read_emb(bad, 3)), FormatError);
    std::istringstream dup("r 1: 2 3\nr 1: 2 3\n");
    CHECK_THROWS_AS(read_emb(dup, 3), FormatError);
    std::istringstream ok("r 1: 2 3\nr 2: 3 1\nr 3: 1 2\nouter: 1 3 2\n");
    CHECK(embed(gr, read_emb(ok, 3)).num_edges() == 3);
}

TEST_CASE("decomposition output is deterministic") {
    for (auto g : {gen_grid(15, 15, true), gen_triangulation(1500, 9), gen_mountain_chain(4, 4, 3)}) {
        auto a = decompose(g);
        auto b = decompose(g);
        std::ostringstream x, y;
        write_td(x, a.td, g.n);
        write_td(y, b.td, g.n);
        CHECK(x.str() == y.str());
    }
}
