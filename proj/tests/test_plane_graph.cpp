#include <doctest.h>

#include <random>

#include "nplatonic/families.hpp"
#include "nplatonic/plane_graph.hpp"
#include "oracles.hpp"

using namespace nplatonic;

namespace {

const Rotations kK4 = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};

Errc build_error(const Rotations& r) {
    try {
        PlaneGraph::build(r);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("build accepted invalid input");
    return Errc::InvalidArgument;
}

}  // namespace

TEST_SUITE("planegraph") {

TEST_CASE("K4 counts") {
    const auto g = PlaneGraph::build(kK4);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 6);
    CHECK(g.num_faces() == 4);
    CHECK(trace_faces(g).num_faces() == 4);
}

TEST_CASE("build rejects bad rotations") {
    Rotations torus = kK4;
    std::reverse(torus[0].begin(), torus[0].end());
    // the face count of this rotation system, worked out independently
    CHECK(oracle::faces(torus).size() == 2);
    CHECK(build_error(torus) == Errc::NotPlanar);

    CHECK(build_error({{1, 1, 2}, {0, 2, 0}, {0, 1}}) == Errc::NotSimple);
    CHECK(build_error({{0}}) == Errc::NotSimple);
    CHECK(build_error({{1}, {0}, {3}, {2}}) == Errc::NotConnected);
    CHECK(build_error({{1, 2}, {2}, {0, 1}}) == Errc::AsymmetricInput);
}

TEST_CASE("face tracing") {
    const auto cube = trace_faces(platonic(Solid::Cube));
    CHECK(cube.num_faces() == 6);
    for (int s : cube.sizes()) CHECK(s == 4);

    const auto tri = PlaneGraph::build({{1, 2}, {2, 0}, {0, 1}});
    CHECK(trace_faces(tri).sizes() == std::vector<int>{3, 3});

    const Rotations k4e = {{1, 2}, {0, 3, 2}, {0, 1, 3}, {2, 1}};
    const auto g = PlaneGraph::build(k4e);
    auto sizes = trace_faces(g).sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{3, 3, 4});
    CHECK(oracle::face_sizes(k4e) == std::multiset<int>{3, 3, 4});
}

TEST_CASE("dart to face consistency") {
    for (int s = 0; s < 5; ++s) {
        const auto g = platonic(static_cast<Solid>(s));
        const auto fs = trace_faces(g);
        for (int f = 0; f < fs.num_faces(); ++f) {
            for (Dart d : fs.faces[f].walk) CHECK(fs.dart_to_face[d] == f);
        }
        // 2-connected: the two darts of an edge lie on different faces
        for (Dart d = 0; d < g.num_darts(); ++d) CHECK(fs.dart_to_face[d] != fs.dart_to_face[g.alpha(d)]);
    }
}

TEST_CASE("structure") {
    const auto cube = structure(platonic(Solid::Cube));
    CHECK(cube.connected);
    CHECK(cube.cut_vertices.empty());
    CHECK(cube.blocks.size() == 1);

    // two triangles joined by an edge
    const auto dumbbell = PlaneGraph::build({{1, 2}, {2, 0}, {0, 1, 3}, {4, 5, 2}, {5, 3}, {3, 4}});
    const auto s = structure(dumbbell);
    CHECK(s.cut_vertices == std::vector<Vertex>{2, 3});
    CHECK(s.bridges == std::vector<Edge>{{2, 3}});
    CHECK(s.blocks.size() == 3);

    // the cyclic chain of two K4-minus-edge blocks is 2-connected
    const auto chain = structure(edge_cycle(Solid::Tetrahedron, 2));
    CHECK(chain.cut_vertices.empty());
    CHECK(chain.bridges.empty());
    CHECK(chain.blocks.size() == 1);
}

TEST_CASE("canonical code invariance") {
    std::mt19937 rng(7);
    for (int s = 0; s < 5; ++s) {
        const auto g = platonic(static_cast<Solid>(s));
        const auto code = canonical_code(g);
        for (int trial = 0; trial < 5; ++trial) {
            const auto h = PlaneGraph::build(oracle::shuffle(g.rotations(), rng));
            CHECK(canonical_code(h) == code);
            CHECK(canonical_code(mirror(h)) == code);
        }
    }
    CHECK(canonical_code(prism(3)) != canonical_code(PlaneGraph::build(kK4)));
}

TEST_CASE("isomorphism against the brute-force oracle") {
    std::vector<PlaneGraph> pool;
    for (int n = 3; n <= 6; ++n) {
        pool.push_back(prism(n));
        pool.push_back(antiprism(n));
    }
    pool.push_back(edge_cycle(Solid::Tetrahedron, 2));
    pool.push_back(vertex_cycle(Solid::Octahedron, 2));
    pool.push_back(edge_cycle(Solid::Octahedron, 2));
    for (int s = 0; s < 5; ++s) pool.push_back(platonic(static_cast<Solid>(s)));
    std::mt19937 rng(11);
    for (const auto& g : pool) {
        for (const auto& h : pool) {
            const auto hs = PlaneGraph::build(oracle::shuffle(h.rotations(), rng));
            CHECK(are_isomorphic(g, hs) == oracle::embedding_isomorphic(g.rotations(), hs.rotations()));
        }
    }
    CHECK(are_isomorphic(prism(4), platonic(Solid::Cube)));
    CHECK(are_isomorphic(antiprism(3), platonic(Solid::Octahedron)));
    CHECK(are_isomorphic(barrel(5), platonic(Solid::Dodecahedron)));
}

TEST_CASE("find_isomorphism maps edges to edges") {
    std::mt19937 rng(3);
    const auto g = barrel(6);
    const auto h = PlaneGraph::build(oracle::shuffle(g.rotations(), rng));
    const auto map = find_isomorphism(g, h);
    REQUIRE(map);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (Vertex w : g.neighbors(v)) CHECK(h.adjacent((*map)[v], (*map)[w]));
    }
    CHECK_FALSE(find_isomorphism(prism(5), antiprism(5)));
}

TEST_CASE("abstract isomorphism") {
    // flipping one triangle of the dumbbell changes the rotation at vertex 2
    const auto p = prism(3);
    const auto d1 = PlaneGraph::build({{1, 2}, {2, 0}, {0, 1, 3}, {4, 5, 2}, {5, 3}, {3, 4}});
    const auto d2 = PlaneGraph::build({{1, 2}, {2, 0}, {1, 0, 3}, {4, 5, 2}, {5, 3}, {3, 4}});
    CHECK(are_isomorphic_abstract(d1, d2));
    CHECK_FALSE(are_isomorphic_abstract(p, PlaneGraph::build(kK4)));
    CHECK(are_isomorphic_abstract(platonic(Solid::Tetrahedron), PlaneGraph::build(kK4)));
    CHECK(are_isomorphic_abstract(prism(4), platonic(Solid::Cube)));
    try {
        are_isomorphic_abstract(barrel(5), barrel(5));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}

TEST_CASE("mirror") {
    const auto g = barrel(4);
    CHECK(mirror(mirror(g)) == g);
    auto a = trace_faces(g).sizes(), b = trace_faces(mirror(g)).sizes();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(are_isomorphic(mirror(PlaneGraph::build(kK4)), PlaneGraph::build(kK4)));
}

TEST_CASE("serialization") {
    const auto k4 = PlaneGraph::build(kK4);
    CHECK(serialize(k4) == "n 4\nv 0: 1 2 3\nv 1: 0 3 2\nv 2: 0 1 3\nv 3: 0 2 1\n");
    CHECK(parse(serialize(k4)) == k4);
    CHECK(serialize(parse(serialize(prism(5)))) == serialize(prism(5)));
    CHECK(parse("# comment\nn 2\nv 0: 1\nv 1: 0\n").num_edges() == 1);

    auto code_of = [](const char* text) {
        try {
            parse(text);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InvalidArgument;
    };
    CHECK(code_of("n 1\nv 0: 0\n") == Errc::NotSimple);
    CHECK(code_of("n 2\nv 0: 1\n") == Errc::SyntaxError);
    CHECK(code_of("v 0: 1\n") == Errc::SyntaxError);
    CHECK(code_of("n 2\nv 0: x\nv 1: 0\n") == Errc::SyntaxError);
}

TEST_CASE("Euler and handshake identities on family members") {
    for (const auto& e : catalog()) {
        for (int p = e.min_param; p < e.min_param + 3; ++p) {
            const auto g = generate(e.id, p);
            const auto rot = g.rotations();
            const int faces = static_cast<int>(oracle::faces(rot).size());
            CHECK(g.num_vertices() - g.num_edges() + faces == 2);
            int face_sum = 0;
            for (int s : oracle::face_sizes(rot)) face_sum += s;
            CHECK(face_sum == 2 * g.num_edges());
            CHECK(oracle::edge_count(rot) == g.num_edges());
        }
    }
}

}  // TEST_SUITE
