#include <doctest.h>

#include <map>

#include "nplatonic/classify.hpp"
#include "nplatonic/families.hpp"
#include "oracles.hpp"

using namespace nplatonic;

namespace {

int exceptional_distance(const PlaneGraph& g, const NPReport& r) {
    const auto fs = trace_faces(g);
    return face_distance(g, fs, r.exceptional[0].face, r.exceptional[1].face);
}

// Majority face size and exceptional sizes straight from the rotation lists.
std::pair<int, std::vector<int>> majority(const Rotations& rot) {
    std::map<int, int> count;
    const auto sizes = oracle::face_sizes(rot);
    for (int s : sizes) count[s]++;
    int d = 0;
    for (auto [s, c] : count) {
        if (2 * c > static_cast<int>(sizes.size())) d = s;
    }
    std::vector<int> rest;
    for (int s : sizes) {
        if (s != d) rest.push_back(s);
    }
    return {d, rest};
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("solids and simple families") {
    const auto ico = np_report(platonic(Solid::Icosahedron));
    REQUIRE(ico);
    CHECK(ico->k == 5);
    CHECK(ico->d == 3);
    CHECK(ico->t == 0);
    CHECK(ico->f == 20);

    const auto p5 = np_report(prism(5));
    REQUIRE(p5);
    CHECK(p5->type() == NPType{3, 4});
    CHECK(p5->exceptional_sizes() == std::vector<int>{5, 5});
    CHECK(p5->balanced);

    const auto a4 = np_report(antiprism(4));
    REQUIRE(a4);
    CHECK(a4->type() == NPType{4, 3});
    CHECK(a4->exceptional_sizes() == std::vector<int>{4, 4});
}

TEST_CASE("not nearly Platonic") {
    const auto k4e = PlaneGraph::build({{1, 2}, {0, 3, 2}, {0, 1, 3}, {2, 1}});
    auto c = classify_nearly_platonic(k4e);
    REQUIRE(std::holds_alternative<NotNP>(c));
    CHECK(std::get<NotNP>(c).reason == NotNPReason::NotRegular);

    const auto tri = PlaneGraph::build({{1, 2}, {2, 0}, {0, 1}});
    c = classify_nearly_platonic(tri);
    REQUIRE(std::holds_alternative<NotNP>(c));
    CHECK(std::get<NotNP>(c).reason == NotNPReason::DegreeTooSmall);
}

TEST_CASE("report agrees with independent face counts") {
    for (const auto& e : catalog()) {
        for (int p = e.min_param; p < e.min_param + 3; ++p) {
            const auto g = generate(e.id, p);
            const auto [d, rest] = majority(g.rotations());
            const auto r = np_report(g);
            REQUIRE(r);
            CHECK(r->d == d);
            CHECK(r->t == static_cast<int>(rest.size()));
            CHECK(r->exceptional_sizes() == rest);
            CHECK(r->f > 2 * r->t);
            const auto m = np_report(mirror(g));
            CHECK(m->type() == r->type());
            CHECK(m->t == r->t);
            CHECK(m->f == r->f);
            CHECK(m->balanced == r->balanced);
            CHECK(m->exceptional_sizes() == r->exceptional_sizes());
        }
    }
}

TEST_CASE("admissible types") {
    const auto t = admissible_2np_types();
    const std::vector<NPType> expected = {{3, 3}, {3, 4}, {3, 5}, {4, 3}, {5, 3}};
    CHECK(t == expected);
}

TEST_CASE("face distance") {
    const auto cube = platonic(Solid::Cube);
    const auto fs = trace_faces(cube);
    // faces sharing an edge share a vertex
    CHECK(face_distance(cube, fs, fs.dart_to_face[0], fs.dart_to_face[cube.alpha(0)]) == 0);

    CHECK(exceptional_distance(prism(5), *np_report(prism(5))) == 1);
    CHECK(exceptional_distance(barrel(6), *np_report(barrel(6))) == 3);
    CHECK(exceptional_distance(wide_cycle(4), *np_report(wide_cycle(4))) == 2);

    // BFS oracle over the raw rotation lists
    for (int n : {3, 4, 6, 7}) {
        const auto g = barrel(n);
        const auto r = *np_report(g);
        const auto fs2 = trace_faces(g);
        const auto a = fs2.boundary_vertices(g, r.exceptional[0].face);
        const auto b = fs2.boundary_vertices(g, r.exceptional[1].face);
        CHECK(exceptional_distance(g, r) == oracle::set_distance(g.rotations(), a, b));
    }
}

TEST_CASE("touching status") {
    auto status = [](const PlaneGraph& g) {
        const auto r = *np_report(g);
        return touching_status(g, trace_faces(g), r).kind;
    };
    CHECK(status(prism(5)) == Touching::Kind::NonTouching);
    CHECK(status(edge_cycle(Solid::Tetrahedron, 2)) == Touching::Kind::Touching);
    CHECK(status(vertex_cycle(Solid::Icosahedron, 3)) == Touching::Kind::Touching);

    const auto g = edge_cycle(Solid::Tetrahedron, 2);
    const auto r = *np_report(g);
    // the four endpoints of the two connecting edges
    CHECK(touching_status(g, trace_faces(g), r).shared.size() == 4);
}

TEST_CASE("saturation") {
    const auto cube = platonic(Solid::Cube);
    for (Vertex v = 0; v < 8; ++v) CHECK(is_saturated(cube, v, 3));

    int outer = -1;
    const auto block = solid_minus_edge(Solid::Cube, &outer);
    const auto sig = block_signature(block, outer);
    CHECK_FALSE(is_saturated(block, sig.x, 3));

    // prism(n): x_i = i, y_i = n + i; the path x2, x1, y1, y2
    const auto p = prism(5);
    CHECK(is_weakly_saturated(p, {2, 1, 6, 7}, 3, 4));
    CHECK_THROWS_AS(is_weakly_saturated(p, {2, 1, 6}, 3, 4), Error);
}

TEST_CASE("face neighbourhood") {
    for (int n : {4, 5, 6}) {
        const auto w = wide_cycle(n);
        const auto r = *np_report(w);
        const auto fs = trace_faces(w);
        CHECK(face_neighborhood(w, fs, r.exceptional[0].face).size() == static_cast<std::size_t>(2 * n));
    }
    const auto t = platonic(Solid::Tetrahedron);
    const auto nb = face_neighborhood(t, trace_faces(t), 0);
    CHECK(nb.size() == 1);

    const auto a = antiprism(5);
    const auto r = *np_report(a);
    const auto fs = trace_faces(a);
    auto inner = face_neighborhood(a, fs, r.exceptional[0].face);
    auto other = fs.boundary_vertices(a, r.exceptional[1].face);
    std::sort(inner.begin(), inner.end());
    std::sort(other.begin(), other.end());
    CHECK(inner == other);
}

TEST_CASE("block signatures") {
    int outer = -1;
    const auto k4e = solid_minus_edge(Solid::Tetrahedron, &outer);
    CHECK(block_signature(k4e, outer).to_string() == "(3;2,2|3,<2,2>)");
    const auto ico = solid_minus_edge(Solid::Icosahedron, &outer);
    CHECK(block_signature(ico, outer).to_string() == "(5;4,4|3,<2,2>)");
    const auto octa = vertex_split_block(Solid::Octahedron, &outer);
    const auto sig = block_signature(octa, outer);
    CHECK(sig.to_string() == "(4;2,2|3,<3,3>)");
    CHECK(sig.h() == 6);

    CHECK_THROWS_AS(block_signature(platonic(Solid::Cube), 0), Error);
}

TEST_CASE("identify family") {
    auto id = [](const PlaneGraph& g) { return identify_family(g, *np_report(g)); };
    CHECK(id(prism(7)) == instance(FamilyId::Prism, 7));
    CHECK(id(edge_cycle(Solid::Tetrahedron, 2)) == instance(FamilyId::TetrahedronEdgeCycle, 2));
    CHECK(id(wide_cycle(4)) == instance(FamilyId::IcosahedronWideCycle, 4));
}

}  // TEST_SUITE
