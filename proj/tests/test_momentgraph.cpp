#include <algorithm>
#include <set>

#include "doctest.h"
#include "z2cob/momentgraph.hpp"

using namespace z2cob;

namespace {

std::vector<SmallCover> some_covers(const char* name, std::size_t stride) {
    SimplePolytope p = builtin(name);
    auto cs = enumerate_colorings(p, 3);
    std::vector<SmallCover> out;
    for (std::size_t k = 0; k < cs.size(); k += stride) out.emplace_back(p, cs[k]);
    return out;
}

}  // namespace

TEST_CASE("simplex moment graph is K4 carrying the tangent monomials") {
    SmallCover rp3(builtin(Builtin::Simplex3), lambda0());
    MomentGraph g = moment_graph(rp3);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : g.edges()) pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    CHECK(pairs.size() == 6);
    auto report = check_axial_axioms(g);
    CHECK(report.ok());
    CHECK(report.all_single_edges);
    CHECK(euler_characteristic(g) == 2);
    CHECK(nests(g, 2).size() == 4);
    CHECK(nests(g, 0).size() == 4);
    CHECK(g.structure_problems().empty());
}

TEST_CASE("edge colors at a vertex are the factors of its monomial") {
    for (const char* name : {"simplex3", "prism3", "cube3"}) {
        for (const auto& c : some_covers(name, 29)) {
            MomentGraph g = moment_graph(c);
            for (int p = 0; p < g.vertex_count(); ++p) {
                std::vector<Character> colors;
                for (int e : g.incident(p)) colors.push_back(g.edges()[e].color);
                CHECK(monomial_from_chars(colors) == vertex_monomial(c, p));
            }
        }
    }
}

TEST_CASE("prism moment graph") {
    SimplePolytope prism = builtin(Builtin::Prism3);
    for (int i = 1; i <= 5; ++i) {
        MomentGraph g = moment_graph(SmallCover(prism, prism_lambda(i)));
        CHECK(g.vertex_count() == 6);
        CHECK(g.edge_count() == 9);
        CHECK(check_axial_axioms(g).ok());
        CHECK(euler_characteristic(g) == 2);
        CHECK(euler_characteristic(g, &prism) == 2);
    }
    MomentGraph g = moment_graph(SmallCover(prism, prism_lambda(1)));
    auto two = nests(g, 2);
    REQUIRE(two.size() == 5);
    int squares = 0, triangles = 0;
    for (const auto& n : two) {
        squares += n.vertices.size() == 4;
        triangles += n.vertices.size() == 3;
        CHECK(nest_span(n, g).size() == 2);
    }
    CHECK(squares == 3);
    CHECK(triangles == 2);
    CHECK(nests(g, 2, &prism).size() == 5);
    CHECK(all_nests(g, 2).size() == 5);

    auto f1 = prism.vertices_on_facet(0);
    auto it = std::find_if(two.begin(), two.end(), [&](const Nest& n) { return n.vertices == f1; });
    REQUIRE(it != two.end());
    auto e = eta(*it, g);
    REQUIRE(e.size() == 1);
    CHECK(e[0] == prism_lambda(1)[0]);

    Nest everything;
    for (int v = 0; v < 6; ++v) everything.vertices.push_back(v);
    for (int k = 0; k < 9; ++k) everything.edges.push_back(k);
    CHECK(eta(everything, g).empty());
    Nest point{{0}, {}};
    CHECK(eta(point, g).size() == 3);
}

TEST_CASE("cube moment graphs") {
    SimplePolytope cube = builtin(Builtin::Cube3);
    for (const auto& c : some_covers("cube3", 97)) {
        MomentGraph g = moment_graph(c);
        CHECK(2 * g.edge_count() == 3 * g.vertex_count());
        CHECK(check_axial_axioms(g).ok());
        CHECK(euler_characteristic(g) == 2);
        CHECK(nests(g, 2, &cube).size() == 6);
    }
}

TEST_CASE("axiom violations are reported") {
    // K4 where vertex 0 sees only a 2-dimensional span
    std::vector<GraphEdge> edges = {
        {0, 1, BitVec(3, 1)}, {0, 2, BitVec(3, 2)}, {0, 3, BitVec(3, 3)},
        {1, 2, BitVec(3, 4)}, {1, 3, BitVec(3, 5)}, {2, 3, BitVec(3, 6)},
    };
    MomentGraph bad(3, {"a", "b", "c", "d"}, edges);
    auto r = check_axial_axioms(bad);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.span_failures.empty());

    SmallCover rp3(builtin(Builtin::Simplex3), lambda0());
    MomentGraph good = moment_graph(rp3);
    auto es = good.edges();
    es[0].color = es[0].color + es[1].color;
    if (es[0].color.is_zero()) es[0].color = BitVec(3, 7);
    CHECK_FALSE(check_axial_axioms(MomentGraph(3, good.vertex_labels(), es)).ok());

    MomentGraph irregular(3, {"a", "b"}, {{0, 1, BitVec(3, 1)}});
    CHECK_FALSE(irregular.structure_problems().empty());
    CHECK_FALSE(check_axial_axioms(irregular).ok());
}

TEST_CASE("bounding prism covers still satisfy the axioms") {
    SimplePolytope prism = builtin(Builtin::Prism3);
    for (const auto& g : enumerate_gl(3)) {
        CHECK(check_axial_axioms(moment_graph(SmallCover(prism, compose(g, prism_lambda(4))))).ok());
        CHECK(check_axial_axioms(moment_graph(SmallCover(prism, compose(g, prism_lambda(5))))).ok());
    }
}

TEST_CASE("dot output names every vertex and edge") {
    MomentGraph g = moment_graph(SmallCover(builtin(Builtin::Prism3), prism_lambda(1)));
    std::string dot = to_dot(g);
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') >= 9 + 6);
    CHECK(dot.find("--") != std::string::npos);
}
