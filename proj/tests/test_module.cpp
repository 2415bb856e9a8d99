#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "uniserial/module.hpp"

using namespace uniserial;
using fixtures::parse_fixture;

namespace {

std::set<std::tuple<int, int, std::string>> extra_edges(const LayeredGraph& g, const Quiver& q) {
    std::set<std::tuple<int, int, std::string>> out;
    for (const LayeredGraphEdge& e : g.edges)
        if (!e.mast) out.insert({e.from, e.to, q.arrow(e.arrow).name});
    return out;
}

}  // namespace

TEST_CASE("explicit matrices of a loop-exit module") {
    Presentation pres = parse_fixture(fixtures::kLoopExit);
    VarietyResult v = variety_generators(pres, parse_path(pres.quiver, fixtures::kLoopExitMast));
    Vector k = fixtures::point(pres.field, {"5"});
    UniserialModule m = build_module(pres, v, k);
    CHECK(m.dimension() == 3);

    const Field& f = pres.field;
    Matrix alpha = m.action[pres.quiver.arrow_index("alpha")];
    Matrix beta = m.action[pres.quiver.arrow_index("beta")];
    // alpha sends b0 to b1 and kills b1; beta sends b0 to 5*b2 and b1 to b2
    Matrix expect_alpha = zero_matrix(f, 3, 3);
    expect_alpha[1][0] = f.one();
    Matrix expect_beta = zero_matrix(f, 3, 3);
    expect_beta[2][0] = f.from_long(5);
    expect_beta[2][1] = f.one();
    CHECK(alpha == expect_alpha);
    CHECK(beta == expect_beta);

    // the defining relation annihilates the module
    CHECK(matrix_is_zero(matrix_mul(alpha, alpha)));
}

TEST_CASE("path matrices compose arrow actions") {
    Presentation pres = parse_fixture(fixtures::kLoopShuttle);
    VarietyResult v =
        variety_generators(pres, parse_path(pres.quiver, fixtures::kLoopShuttleMast));
    Vector k = fixtures::point(pres.field, {"1", "2", "0", "0", "3"});
    UniserialModule m = build_module(pres, v, k);

    Matrix full = path_matrix(m, v.table.mast.p);
    // the full mast sends b0 to the socle basis vector and kills the rest
    for (size_t j = 0; j < m.dimension(); ++j)
        for (size_t r = 0; r < m.dimension(); ++r)
            CHECK(full[r][j] == ((r == 5 && j == 0) ? pres.field.one() : pres.field.zero()));
}

TEST_CASE("off-variety points are rejected") {
    Presentation pres = parse_fixture(fixtures::kLoopShuttle);
    VarietyResult v =
        variety_generators(pres, parse_path(pres.quiver, fixtures::kLoopShuttleMast));
    Vector bad = fixtures::point(pres.field, {"0", "0", "1", "0", "0"});
    CHECK_THROWS_AS(build_module(pres, v, bad), ParseError);
}

TEST_CASE("layered graphs of loop-shuttle modules") {
    Presentation pres = parse_fixture(fixtures::kLoopShuttle);
    VarietyResult v =
        variety_generators(pres, parse_path(pres.quiver, fixtures::kLoopShuttleMast));
    const Quiver& q = pres.quiver;
    using E = std::set<std::tuple<int, int, std::string>>;

    UniserialModule m1 =
        build_module(pres, v, fixtures::point(pres.field, {"1", "2", "0", "0", "3"}));
    CHECK(extra_edges(layered_graph(m1), q) == E{{1, 3, "beta"}, {4, 6, "beta"}});

    UniserialModule m2 =
        build_module(pres, v, fixtures::point(pres.field, {"0", "2", "0", "0", "3"}));
    CHECK(extra_edges(layered_graph(m2), q) == E{{1, 6, "beta"}, {4, 6, "beta"}});

    UniserialModule m3 =
        build_module(pres, v, fixtures::point(pres.field, {"0", "0", "0", "0", "0"}));
    CHECK(extra_edges(layered_graph(m3), q).empty());

    UniserialModule m4 =
        build_module(pres, v, fixtures::point(pres.field, {"1", "2", "0", "0", "0"}));
    CHECK(extra_edges(layered_graph(m4), q) == E{{1, 3, "beta"}});

    // layer vertices follow the mast
    LayeredGraph g = layered_graph(m1);
    std::vector<int> expect;
    for (int vtx : v.table.mast.vertices) expect.push_back(vtx);
    CHECK(g.layer_vertices == expect);
}

TEST_CASE("alternative top elements change the graph within the iso class") {
    Presentation pres = parse_fixture(fixtures::kLoopShuttle);
    VarietyResult v =
        variety_generators(pres, parse_path(pres.quiver, fixtures::kLoopShuttleMast));
    const Quiver& q = pres.quiver;
    using E = std::set<std::tuple<int, int, std::string>>;
    UniserialModule m =
        build_module(pres, v, fixtures::point(pres.field, {"1", "2", "0", "0", "3"}));

    Vector same = fixtures::point(pres.field, {"1", "0", "0", "0", "0", "0"});
    CHECK(extra_edges(layered_graph(m, same), q) == E{{1, 3, "beta"}, {4, 6, "beta"}});

    Vector shift1 = fixtures::point(pres.field, {"1", "-1", "0", "0", "0", "0"});
    CHECK(extra_edges(layered_graph(m, shift1), q) == E{{1, 6, "beta"}, {4, 6, "beta"}});

    Vector shift2 = fixtures::point(pres.field, {"1", "-1", "0", "0", "-2", "0"});
    CHECK(extra_edges(layered_graph(m, shift2), q) == E{{4, 6, "beta"}});

    // not a generator: zero leading coefficient
    Vector bad = fixtures::point(pres.field, {"0", "1", "0", "0", "0", "0"});
    CHECK_THROWS_AS(layered_graph(m, bad), ParseError);
}

TEST_CASE("layered graphs of the crossroads module") {
    Presentation pres = parse_fixture(fixtures::kCrossroads);
    VarietyResult v =
        variety_generators(pres, parse_path(pres.quiver, fixtures::kCrossroadsMast));
    const Quiver& q = pres.quiver;
    using E = std::set<std::tuple<int, int, std::string>>;

    UniserialModule a = build_module(pres, v, fixtures::point(pres.field, {"0", "0", "1"}));
    CHECK(extra_edges(layered_graph(a), q) == E{{4, 7, "epsilon"}});

    UniserialModule b = build_module(pres, v, fixtures::point(pres.field, {"1", "1", "1"}));
    CHECK(extra_edges(layered_graph(b), q) ==
          E{{2, 5, "beta"}, {2, 7, "epsilon"}, {4, 7, "epsilon"}});
}

TEST_CASE("graph renderings") {
    Presentation pres = parse_fixture(fixtures::kLoopShuttle);
    VarietyResult v =
        variety_generators(pres, parse_path(pres.quiver, fixtures::kLoopShuttleMast));
    UniserialModule m =
        build_module(pres, v, fixtures::point(pres.field, {"1", "2", "0", "0", "3"}));
    LayeredGraph g = layered_graph(m);

    std::string dot = graph_dot(g, pres.quiver);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("beta") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);

    std::string text = graph_text(g, pres.quiver);
    CHECK(text.find("layer 1: e(1)") != std::string::npos);
    CHECK(text.find("beta") != std::string::npos);
}

TEST_CASE("modules over a finite field") {
    Presentation pres = parse_fixture(fixtures::with_field(fixtures::kLoopShuttle, "GF(3)"));
    VarietyResult v =
        variety_generators(pres, parse_path(pres.quiver, fixtures::kLoopShuttleMast));
    Vector k = fixtures::point(pres.field, {"2", "1", "0", "0", "2"});
    UniserialModule m = build_module(pres, v, k);
    CHECK(m.dimension() == 6);
    for (const AlgebraElement& rel : pres.relations) {
        Matrix acc = zero_matrix(pres.field, m.dimension(), m.dimension());
        for (const auto& [path, c] : rel.terms())
            acc = matrix_add(acc, matrix_scaled(path_matrix(m, path), c));
        CHECK(matrix_is_zero(acc));
    }
}
