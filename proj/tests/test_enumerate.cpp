#include <doctest.h>

#include <map>
#include <set>

#include "nplatonic/enumerate.hpp"
#include "nplatonic/families.hpp"
#include "oracles.hpp"

using namespace nplatonic;

namespace {

std::set<CanonicalCode> codes_of(const std::vector<PlaneGraph>& gs) {
    std::set<CanonicalCode> s;
    for (const auto& g : gs) s.insert(canonical_code(g));
    return s;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("generator matches the oracle on small orders") {
    for (int n = 4; n <= 8; n += 2) CHECK(codes_of(enumerate_order(3, n)) == bruteforce_oracle(3, n));
    for (int n = 5; n <= 8; ++n) CHECK(codes_of(enumerate_order(4, n)) == bruteforce_oracle(4, n));
    CHECK(enumerate_order(5, 10).empty());
    CHECK(bruteforce_oracle(5, 10).empty());
}

TEST_CASE("output is sorted, distinct and regular") {
    EnumSpec spec;
    spec.k = 3;
    spec.max_vertices = 12;
    std::vector<PlaneGraph> all;
    enumerate_k_regular(spec, [&](const PlaneGraph& g) { all.push_back(g); });
    std::set<CanonicalCode> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].regular_degree() == 3);
        CHECK(seen.insert(canonical_code(all[i])).second);
        if (i > 0) {
            const bool ordered = all[i - 1].num_vertices() < all[i].num_vertices() ||
                                 (all[i - 1].num_vertices() == all[i].num_vertices() &&
                                  canonical_code(all[i - 1]) < canonical_code(all[i]));
            CHECK(ordered);
        }
    }
    // small counts pinned by the oracle
    std::map<int, int> per_order;
    for (const auto& g : all) per_order[g.num_vertices()]++;
    CHECK(per_order[4] == 1);
    CHECK(per_order[6] == 1);
    CHECK(per_order[8] == static_cast<int>(bruteforce_oracle(3, 8).size()));
}

TEST_CASE("the Platonic solids and small family members appear") {
    auto has = [](int k, int n, const PlaneGraph& g) {
        return codes_of(enumerate_order(k, n)).count(canonical_code(g)) == 1;
    };
    CHECK(has(3, 8, platonic(Solid::Cube)));
    CHECK(has(3, 8, edge_cycle(Solid::Tetrahedron, 2)));
    CHECK(has(3, 10, prism(5)));
    CHECK(has(4, 6, platonic(Solid::Octahedron)));
    CHECK(has(4, 10, antiprism(5)));
    CHECK(has(5, 12, platonic(Solid::Icosahedron)));
}

TEST_CASE("parallel runs agree with the serial one") {
    const auto serial = enumerate_order(3, 12, 1);
    const auto parallel = enumerate_order(3, 12, 3);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("face filter keeps exactly the matching graphs") {
    const auto all = enumerate_order(3, 12);
    std::set<CanonicalCode> expected;
    for (const auto& g : all) {
        int off = 0;
        for (int s : oracle::face_sizes(g.rotations())) off += s != 5;
        if (off <= 2) expected.insert(canonical_code(g));
    }
    CHECK(codes_of(enumerate_order(3, 12, 1, FaceFilter{5, 2})) == expected);
    CHECK(expected.count(canonical_code(barrel(3))) == 1);
}

TEST_CASE("strategies agree through the public entry point") {
    EnumSpec a;
    a.k = 4;
    a.max_vertices = 8;
    EnumSpec b = a;
    b.strategy = Strategy::BruteForceOracle;
    std::vector<CanonicalCode> ca, cb;
    enumerate_k_regular(a, [&](const PlaneGraph& g) { ca.push_back(canonical_code(g)); });
    enumerate_k_regular(b, [&](const PlaneGraph& g) { cb.push_back(canonical_code(g)); });
    CHECK(ca == cb);
}

TEST_CASE("oracle range") {
    CHECK(oracle_supports(3, 10));
    CHECK_FALSE(oracle_supports(3, 12));
    CHECK_THROWS_AS(bruteforce_oracle(4, 12), Error);
}

TEST_CASE("nearly Platonic filter") {
    const auto np2 = filter_nearly_platonic(enumerate_order(3, 10), 2);
    std::set<CanonicalCode> got;
    for (const auto& e : np2) {
        CHECK(e.report.t == 2);
        got.insert(canonical_code(e.graph));
    }
    CHECK(got == std::set<CanonicalCode>{canonical_code(prism(5))});
}

}  // TEST_SUITE
