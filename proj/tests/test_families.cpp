#include <doctest.h>

#include <map>
#include <set>

#include "nplatonic/classify.hpp"
#include "nplatonic/families.hpp"
#include "nplatonic/surgery.hpp"
#include "oracles.hpp"

using namespace nplatonic;

TEST_SUITE("families") {

TEST_CASE("Platonic solids") {
    struct Row {
        Solid s;
        int v, e, f, k, d;
    };
    const Row rows[] = {{Solid::Tetrahedron, 4, 6, 4, 3, 3},
                        {Solid::Cube, 8, 12, 6, 3, 4},
                        {Solid::Octahedron, 6, 12, 8, 4, 3},
                        {Solid::Dodecahedron, 20, 30, 12, 3, 5},
                        {Solid::Icosahedron, 12, 30, 20, 5, 3}};
    for (const auto& r : rows) {
        const auto g = platonic(r.s);
        CHECK(g.num_vertices() == r.v);
        CHECK(g.num_edges() == r.e);
        CHECK(oracle::faces(g.rotations()).size() == static_cast<std::size_t>(r.f));
        const auto rep = np_report(g);
        REQUIRE(rep);
        CHECK(rep->t == 0);
        CHECK(rep->type() == NPType{r.k, r.d});
    }
    CHECK(are_isomorphic(dual(platonic(Solid::Cube)), platonic(Solid::Octahedron)));
    CHECK(are_isomorphic(dual(platonic(Solid::Tetrahedron)), platonic(Solid::Tetrahedron)));
}

TEST_CASE("catalog grouping") {
    const auto& c = catalog();
    REQUIRE(c.size() == 14);
    std::map<NPType, int> per_type;
    for (int i = 0; i < 14; ++i) {
        CHECK(static_cast<int>(c[i].id) == i);
        per_type[c[i].type]++;
        CHECK(family_from_name(family_name(c[i].id)) == c[i].id);
    }
    CHECK(per_type[{3, 3}] == 1);
    CHECK(per_type[{3, 4}] == 2);
    CHECK(per_type[{3, 5}] == 3);
    CHECK(per_type[{4, 3}] == 3);
    CHECK(per_type[{5, 3}] == 5);
    std::set<FamilyId> g35;
    for (const auto& e : c) {
        if (e.type == NPType{3, 5}) g35.insert(e.id);
    }
    CHECK(g35 == std::set<FamilyId>{FamilyId::DodecahedronEdgeCycle, FamilyId::Barrel,
                                    FamilyId::DodecahedronThickCycle});
}

TEST_CASE("ring families by hand") {
    const auto p6 = prism(6);
    CHECK(p6.num_vertices() == 12);
    CHECK(p6.num_edges() == 18);
    CHECK(oracle::face_sizes(p6.rotations()) == std::multiset<int>{4, 4, 4, 4, 4, 4, 6, 6});

    const auto b3 = barrel(3);
    CHECK(b3.num_vertices() == 12);
    CHECK(oracle::face_sizes(b3.rotations()) == std::multiset<int>{3, 3, 5, 5, 5, 5, 5, 5});

    // wide cycle adjacency as described: x_i-v_i, x_i-w_i, x_{i+1}-w_i,
    // w_i-y_i, v_i-y_{i-1}, v_i-y_i
    const int n = 5;
    const auto w = wide_cycle(n);
    auto x = [](int i) { return (i + n) % n; };
    auto v = [](int i) { return n + 2 * ((i + n) % n); };
    auto ww = [](int i) { return n + 2 * ((i + n) % n) + 1; };
    auto y = [](int i) { return 3 * n + (i + n) % n; };
    for (int i = 0; i < n; ++i) {
        CHECK(w.adjacent(x(i), v(i)));
        CHECK(w.adjacent(x(i), ww(i)));
        CHECK(w.adjacent(x(i + 1), ww(i)));
        CHECK(w.adjacent(ww(i), y(i)));
        CHECK(w.adjacent(v(i), y(i - 1)));
        CHECK(w.adjacent(v(i), y(i)));
    }
    CHECK(w.num_edges() == 10 * n);
}

TEST_CASE("order formulas and exceptional sizes") {
    for (const auto& e : catalog()) {
        for (int p = e.min_param; p < e.min_param + 4; ++p) {
            const auto g = generate(e.id, p);
            CHECK(g.num_vertices() == e.order(p));
            if (instance(e.id, p).degenerate) continue;
            const auto r = np_report(g);
            REQUIRE(r);
            CHECK(r->t == 2);
            CHECK(r->type() == e.type);
            CHECK(r->balanced);
        }
    }
    // face-sum accounting: 2|E| = (f - 2) d + 2 m
    for (int c = 2; c <= 4; ++c) {
        CHECK(np_report(edge_cycle(Solid::Tetrahedron, c))->exceptional_sizes() == std::vector<int>{3 * c, 3 * c});
        CHECK(np_report(edge_cycle(Solid::Cube, c))->exceptional_sizes() == std::vector<int>{4 * c, 4 * c});
        CHECK(np_report(edge_cycle(Solid::Dodecahedron, c))->exceptional_sizes() ==
              std::vector<int>{5 * c, 5 * c});
        CHECK(np_report(vertex_cycle(Solid::Octahedron, c))->exceptional_sizes() == std::vector<int>{3 * c, 3 * c});
        CHECK(np_report(vertex_cycle(Solid::Icosahedron, c))->exceptional_sizes() ==
              std::vector<int>{3 * c, 3 * c});
    }
    CHECK(vertex_cycle(Solid::Octahedron, 2).num_edges() == 24);
    CHECK(vertex_cycle(Solid::Icosahedron, 2).num_edges() == 60);
}

TEST_CASE("degenerate members are the base solids") {
    for (const auto& e : catalog()) {
        for (int p : e.degenerate_params) {
            CHECK(instance(e.id, p).degenerate);
            CHECK(are_isomorphic(generate(e.id, p), platonic(e.base)));
        }
    }
}

TEST_CASE("thick cycles") {
    const FamilyId ids[] = {FamilyId::DodecahedronThickCycle, FamilyId::IcosahedronFirstThickCycle,
                            FamilyId::IcosahedronSecondThickCycle};
    for (FamilyId id : ids) {
        for (int c = 2; c <= 4; ++c) {
            const auto g = thick_cycle(id, c);
            const auto r = *np_report(g);
            const auto fs = trace_faces(g);
            CHECK(touching_status(g, fs, r).kind == Touching::Kind::NonTouching);
            CHECK(face_distance(g, fs, r.exceptional[0].face, r.exceptional[1].face) == 1);
        }
    }
    for (int c = 2; c <= 4; ++c) {
        CHECK_FALSE(are_isomorphic(thick_cycle(FamilyId::IcosahedronFirstThickCycle, c),
                                   thick_cycle(FamilyId::IcosahedronSecondThickCycle, c)));
    }
}

TEST_CASE("icosahedral distance-1 covers fall into two classes") {
    // every slit between two triangles at distance 1 and every copy count
    // gives one of the two named families
    const auto g = platonic(Solid::Icosahedron);
    const auto fs = trace_faces(g);
    for (int c = 2; c <= 3; ++c) {
        std::set<CanonicalCode> codes;
        for (int f2 = 1; f2 < fs.num_faces(); ++f2) {
            if (face_distance(g, fs, 0, f2) != 1) continue;
            for (Vertex x : fs.boundary_vertices(g, 0)) {
                for (Vertex y : fs.boundary_vertices(g, f2)) {
                    if (!g.adjacent(x, y)) continue;
                    codes.insert(canonical_code(
                        glue_cyclic_copies(cut_edge(g, {std::min(x, y), std::max(x, y)}, 0, f2), c)));
                }
            }
        }
        const std::set<CanonicalCode> named = {
            canonical_code(thick_cycle(FamilyId::IcosahedronFirstThickCycle, c)),
            canonical_code(thick_cycle(FamilyId::IcosahedronSecondThickCycle, c))};
        CHECK(codes == named);
    }
}

TEST_CASE("identify round trip") {
    for (const auto& e : catalog()) {
        for (int p = e.min_param; p < e.min_param + 4; ++p) {
            if (instance(e.id, p).degenerate) continue;
            const auto g = generate(e.id, p);
            CHECK(identify_family(g, *np_report(g)) == instance(e.id, p));
        }
    }
}

TEST_CASE("parameter errors") {
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InvalidArgument;
    };
    CHECK(code([] { prism(2); }) == Errc::ParamTooSmall);
    CHECK(code([] { generate(FamilyId::Barrel, 2); }) == Errc::ParamTooSmall);
    CHECK(code([] { generate(FamilyId::CubeEdgeCycle, 0); }) == Errc::ParamTooSmall);
    CHECK(code([] { vertex_cycle(Solid::Cube, 2); }) == Errc::UnsupportedSolid);
}

}  // TEST_SUITE
