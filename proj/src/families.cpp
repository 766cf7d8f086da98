#include "nplatonic/families.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nplatonic/surgery.hpp"

namespace nplatonic {

namespace {

constexpr std::string_view kFamilyNames[kFamilyCount] = {
    "tetrahedron-edge-cycle", "cube-edge-cycle",          "prism",
    "dodecahedron-edge-cycle", "barrel",                  "dodecahedron-thick-cycle",
    "octahedron-edge-cycle",  "octahedron-vertex-cycle",  "antiprism",
    "icosahedron-edge-cycle", "icosahedron-vertex-cycle", "icosahedron-wide-cycle",
    "icosahedron-first-thick-cycle", "icosahedron-second-thick-cycle",
};

constexpr std::string_view kSolidNames[5] = {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"};

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::ParamTooSmall, what);
}

int face_size_of(Solid s) {
    switch (s) {
        case Solid::Cube: return 4;
        case Solid::Dodecahedron: return 5;
        default: return 3;
    }
}

}  // namespace

std::string_view family_name(FamilyId id) { return kFamilyNames[static_cast<int>(id)]; }

std::optional<FamilyId> family_from_name(std::string_view name) {
    for (int i = 0; i < kFamilyCount; ++i) {
        if (kFamilyNames[i] == name) return static_cast<FamilyId>(i);
    }
    return std::nullopt;
}

std::string_view solid_name(Solid s) { return kSolidNames[static_cast<int>(s)]; }

std::optional<Solid> solid_from_name(std::string_view name) {
    for (int i = 0; i < 5; ++i) {
        if (kSolidNames[i] == name) return static_cast<Solid>(i);
    }
    return std::nullopt;
}

PlaneGraph from_faces(int num_vertices, const std::vector<std::vector<Vertex>>& faces) {
    std::vector<std::map<Vertex, Vertex>> next(num_vertices);
    for (const auto& f : faces) {
        const int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i) {
            const Vertex a = f[i], b = f[(i + 1) % len], c = f[(i + 2) % len];
            if (!next[b].emplace(a, c).second) {
                throw Error(Errc::InvalidArgument, "directed edge used by two faces");
            }
        }
    }
    Rotations rot(num_vertices);
    for (Vertex v = 0; v < num_vertices; ++v) {
        if (next[v].empty()) throw Error(Errc::NotConnected, "vertex on no face");
        const Vertex start = next[v].begin()->first;
        Vertex u = start;
        do {
            rot[v].push_back(u);
            u = next[v].at(u);
        } while (u != start);
        if (rot[v].size() != next[v].size()) throw Error(Errc::NotPlanar, "faces do not close up around a vertex");
    }
    return PlaneGraph::build(rot);
}

PlaneGraph dual(const PlaneGraph& g) {
    const FaceSet fs = trace_faces(g);
    Rotations rot(fs.num_faces());
    for (int f = 0; f < fs.num_faces(); ++f) {
        for (Dart d : fs.faces[f].walk) rot[f].push_back(fs.dart_to_face[g.alpha(d)]);
    }
    return PlaneGraph::build(rot);
}

PlaneGraph platonic(Solid s) {
    switch (s) {
        case Solid::Tetrahedron:
            return PlaneGraph::build({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
        case Solid::Octahedron: {
            std::vector<std::vector<Vertex>> faces;
            for (int i = 0; i < 4; ++i) {
                const int a = 1 + i, b = 1 + (i + 1) % 4;
                faces.push_back({0, a, b});
                faces.push_back({5, b, a});
            }
            return from_faces(6, faces);
        }
        case Solid::Icosahedron: {
            // top 0, upper ring 1..5, lower ring 6..10, bottom 11
            std::vector<std::vector<Vertex>> faces;
            for (int i = 0; i < 5; ++i) {
                const int u = 1 + i, u1 = 1 + (i + 1) % 5;
                const int l = 6 + i, l1 = 6 + (i + 1) % 5;
                faces.push_back({0, u, u1});
                faces.push_back({u1, u, l});
                faces.push_back({l, l1, u1});
                faces.push_back({11, l1, l});
            }
            return from_faces(12, faces);
        }
        case Solid::Cube: return dual(platonic(Solid::Octahedron));
        case Solid::Dodecahedron: return dual(platonic(Solid::Icosahedron));
    }
    throw Error(Errc::UnsupportedSolid, "unknown solid");
}

PlaneGraph prism(int n) {
    require(n >= 3, "prism needs n >= 3");
    std::vector<std::vector<Vertex>> faces;
    std::vector<Vertex> inner, outer;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        faces.push_back({i, j, n + j, n + i});
        inner.push_back(n + i);
        outer.push_back(n - 1 - i);
    }
    faces.push_back(inner);
    faces.push_back(outer);
    return from_faces(2 * n, faces);
}

PlaneGraph antiprism(int n) {
    require(n >= 3, "antiprism needs n >= 3");
    std::vector<std::vector<Vertex>> faces;
    std::vector<Vertex> inner, outer;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        faces.push_back({i, j, n + i});
        faces.push_back({n + j, n + i, j});
        inner.push_back(n + i);
        outer.push_back(n - 1 - i);
    }
    faces.push_back(inner);
    faces.push_back(outer);
    return from_faces(2 * n, faces);
}

PlaneGraph barrel(int n) {
    require(n >= 3, "barrel needs n >= 3");
    auto x = [n](int i) { return i % n; };
    auto m = [n](int j) { return n + j % (2 * n); };
    auto y = [n](int i) { return 3 * n + i % n; };
    std::vector<std::vector<Vertex>> faces;
    std::vector<Vertex> inner, outer;
    for (int i = 0; i < n; ++i) {
        faces.push_back({x(i), x(i + 1), m(2 * i + 2), m(2 * i + 1), m(2 * i)});
        faces.push_back({m(2 * i + 1), m(2 * i + 2), m(2 * i + 3), y(i + 1), y(i)});
        inner.push_back(y(i));
        outer.push_back(x(n - 1 - i));
    }
    faces.push_back(inner);
    faces.push_back(outer);
    return from_faces(4 * n, faces);
}

PlaneGraph wide_cycle(int n) {
    require(n >= 3, "wide cycle needs n >= 3");
    auto x = [n](int i) { return i % n; };
    auto v = [n](int i) { return n + 2 * (i % n); };
    auto w = [n](int i) { return n + 2 * (i % n) + 1; };
    auto y = [n](int i) { return 3 * n + i % n; };
    std::vector<std::vector<Vertex>> faces;
    std::vector<Vertex> inner, outer;
    for (int i = 0; i < n; ++i) {
        faces.push_back({x(i), x(i + 1), w(i)});
        faces.push_back({x(i), w(i), v(i)});
        faces.push_back({w(i), x(i + 1), v(i + 1)});
        faces.push_back({v(i), w(i), y(i)});
        faces.push_back({w(i), v(i + 1), y(i)});
        faces.push_back({v(i + 1), y(i + 1), y(i)});
        inner.push_back(y(i));
        outer.push_back(x(n - 1 - i));
    }
    faces.push_back(inner);
    faces.push_back(outer);
    return from_faces(4 * n, faces);
}

PlaneGraph edge_cycle(Solid s, int c) {
    require(c >= 1, "edge cycle needs c >= 1");
    const PlaneGraph base = platonic(s);
    const int n = base.num_vertices();
    const Vertex u = 0, v = base.neighbors(0)[0];
    Rotations rot(static_cast<std::size_t>(n) * c);
    for (int j = 0; j < c; ++j) {
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b : base.neighbors(a)) {
                int copy = j;
                if (a == u && b == v) copy = (j + c - 1) % c;
                if (a == v && b == u) copy = (j + 1) % c;
                rot[j * n + a].push_back(copy * n + b);
            }
        }
    }
    return PlaneGraph::build(rot);
}

namespace {

int split_arc(Solid s) {
    if (s == Solid::Octahedron) return 2;
    if (s == Solid::Icosahedron) return 3;
    throw Error(Errc::UnsupportedSolid, "vertex cycles exist for the octahedron and icosahedron only");
}

}  // namespace

PlaneGraph vertex_cycle(Solid s, int c) {
    const int arc = split_arc(s);
    require(c >= 1, "vertex cycle needs c >= 1");
    const PlaneGraph base = platonic(s);
    const int n = base.num_vertices();
    const Vertex z = 0;
    const auto around = base.neighbors(z);
    std::vector<int> side(n, -1);  // 0: first arc, 1: second arc
    for (int i = 0; i < static_cast<int>(around.size()); ++i) side[around[i]] = i < arc ? 0 : 1;

    // Copy j holds the n - 1 vertices other than z, then the merged vertex w_j.
    auto id = [&](int j, Vertex a) { return ((j % c + c) % c) * n + (a - 1); };
    auto merged = [&](int j) { return ((j % c + c) % c) * n + (n - 1); };
    Rotations rot(static_cast<std::size_t>(n) * c);
    for (int j = 0; j < c; ++j) {
        for (Vertex a = 1; a < n; ++a) {
            for (Vertex b : base.neighbors(a)) {
                if (b == z) {
                    rot[id(j, a)].push_back(side[a] == 0 ? merged(j - 1) : merged(j));
                } else {
                    rot[id(j, a)].push_back(id(j, b));
                }
            }
        }
        auto& w = rot[merged(j)];
        for (int i = arc; i < static_cast<int>(around.size()); ++i) w.push_back(id(j, around[i]));
        for (int i = 0; i < arc; ++i) w.push_back(id(j + 1, around[i]));
    }
    return PlaneGraph::build(rot);
}

namespace {

struct Slit {
    PlaneGraph base;
    Edge edge;
    int f1, f2;
};

// Relative position of the two remaining neighbours of x (besides its two
// neighbours on face f and the edge partner y): -1 / +1 both on one side of
// the directed edge x -> y, 0 split.
int side_of_internal(const PlaneGraph& g, const FaceSet& fs, Vertex x, Vertex y, int f) {
    const int deg = g.degree(x);
    Dart d = g.dart_between(x, y);
    int k = -1;
    for (int i = 0; i < deg; ++i, d = g.sigma(d)) {
        if (fs.dart_to_face[d] == f) k = i;
    }
    // Face f sits between positions k-1 and k; internal neighbours are the
    // positions 1..k-2 (left) and k+1..deg-1 (right).
    const int left = std::max(0, k - 2);
    const int right = std::max(0, deg - 1 - k);
    if (left > 0 && right > 0) return 0;
    return left > 0 ? -1 : 1;
}

// The paper's three configurations of a connecting edge x1 y1 between two
// exceptional triangles: 1 = internal neighbours on opposite sides, 2 = one
// endpoint split, 3 = both split.
int icosahedral_case(const PlaneGraph& g, const FaceSet& fs, Vertex x, Vertex y, int f1, int f2) {
    const int sx = side_of_internal(g, fs, x, y, f1);
    // At y the rotation is read from y -> x, which swaps left and right.
    const int sy = -side_of_internal(g, fs, y, x, f2);
    if (sx == 0 && sy == 0) return 3;
    if (sx == 0 || sy == 0) return 2;
    return sx == sy ? 0 : 1;  // 0: all on one side, impossible in a 2-NP graph
}

Slit find_slit(Solid s, int wanted_case) {
    PlaneGraph g = platonic(s);
    const FaceSet fs = trace_faces(g);
    const int f1 = 0;
    const auto on_f1 = fs.boundary_vertices(g, f1);
    for (int f2 = 1; f2 < fs.num_faces(); ++f2) {
        if (face_distance(g, fs, f1, f2) != 1) continue;
        const auto on_f2 = fs.boundary_vertices(g, f2);
        for (Vertex x : on_f1) {
            for (Vertex y : on_f2) {
                if (!g.adjacent(x, y)) continue;
                if (wanted_case > 0 && icosahedral_case(g, fs, x, y, f1, f2) != wanted_case) continue;
                return {g, {x, y}, f1, f2};
            }
        }
    }
    throw Error(Errc::InvalidArgument, "no slit of the requested kind");
}

Slit slit_for(FamilyId id) {
    switch (id) {
        case FamilyId::DodecahedronThickCycle: return find_slit(Solid::Dodecahedron, 0);
        case FamilyId::IcosahedronFirstThickCycle: return find_slit(Solid::Icosahedron, 1);
        case FamilyId::IcosahedronSecondThickCycle: return find_slit(Solid::Icosahedron, 3);
        default: throw Error(Errc::InvalidArgument, "not a thick-cycle family");
    }
}

}  // namespace

PlaneGraph thick_cycle(FamilyId id, int c) {
    require(c >= 1, "thick cycle needs c >= 1");
    const Slit slit = slit_for(id);
    const MarkedGraph strip = cut_edge(slit.base, slit.edge, slit.f1, slit.f2);
    return glue_cyclic_copies(strip, c);
}

namespace {

int designated_face(const PlaneGraph& g, int d) {
    const FaceSet fs = trace_faces(g);
    for (int f = 0; f < fs.num_faces(); ++f) {
        if (fs.faces[f].size() != d) return f;
    }
    return -1;
}

}  // namespace

PlaneGraph solid_minus_edge(Solid s, int* outer) {
    Rotations rot = platonic(s).rotations();
    const Vertex u = 0, v = rot[0][0];
    rot[u].erase(rot[u].begin());
    rot[v].erase(std::find(rot[v].begin(), rot[v].end(), u));
    PlaneGraph g = PlaneGraph::build(rot);
    if (outer) *outer = designated_face(g, face_size_of(s));
    return g;
}

PlaneGraph vertex_split_block(Solid s, int* outer) {
    const int arc = split_arc(s);
    PlaneGraph g = split_vertex(MarkedGraph(platonic(s)), 0, {0, arc}).finalize();
    if (outer) *outer = designated_face(g, 3);
    return g;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {FamilyId::TetrahedronEdgeCycle, {3, 3}, 1, {1}, "c >= 2 (c = 1: tetrahedron)", "4c",
         [](int c) { return 4 * c; }, Solid::Tetrahedron},
        {FamilyId::CubeEdgeCycle, {3, 4}, 1, {1}, "c >= 2 (c = 1: cube)", "8c", [](int c) { return 8 * c; },
         Solid::Cube},
        {FamilyId::Prism, {3, 4}, 3, {4}, "n >= 3, n != 4 (n = 4: cube)", "2n", [](int n) { return 2 * n; },
         Solid::Cube},
        {FamilyId::DodecahedronEdgeCycle, {3, 5}, 1, {1}, "c >= 2 (c = 1: dodecahedron)", "20c",
         [](int c) { return 20 * c; }, Solid::Dodecahedron},
        {FamilyId::Barrel, {3, 5}, 3, {5}, "n >= 3, n != 5 (n = 5: dodecahedron)", "4n",
         [](int n) { return 4 * n; }, Solid::Dodecahedron},
        {FamilyId::DodecahedronThickCycle, {3, 5}, 1, {1}, "c >= 2 (c = 1: dodecahedron)", "20c",
         [](int c) { return 20 * c; }, Solid::Dodecahedron},
        {FamilyId::OctahedronEdgeCycle, {4, 3}, 1, {1}, "c >= 2 (c = 1: octahedron)", "6c",
         [](int c) { return 6 * c; }, Solid::Octahedron},
        {FamilyId::OctahedronVertexCycle, {4, 3}, 1, {1}, "c >= 2 (c = 1: octahedron)", "6c",
         [](int c) { return 6 * c; }, Solid::Octahedron},
        {FamilyId::Antiprism, {4, 3}, 3, {3}, "n >= 4 (n = 3: octahedron)", "2n", [](int n) { return 2 * n; },
         Solid::Octahedron},
        {FamilyId::IcosahedronEdgeCycle, {5, 3}, 1, {1}, "c >= 2 (c = 1: icosahedron)", "12c",
         [](int c) { return 12 * c; }, Solid::Icosahedron},
        {FamilyId::IcosahedronVertexCycle, {5, 3}, 1, {1}, "c >= 2 (c = 1: icosahedron)", "12c",
         [](int c) { return 12 * c; }, Solid::Icosahedron},
        {FamilyId::IcosahedronWideCycle, {5, 3}, 3, {3}, "n >= 4 (n = 3: icosahedron)", "4n",
         [](int n) { return 4 * n; }, Solid::Icosahedron},
        {FamilyId::IcosahedronFirstThickCycle, {5, 3}, 1, {1}, "c >= 2 (c = 1: icosahedron)", "12c",
         [](int c) { return 12 * c; }, Solid::Icosahedron},
        {FamilyId::IcosahedronSecondThickCycle, {5, 3}, 1, {1}, "c >= 2 (c = 1: icosahedron)", "12c",
         [](int c) { return 12 * c; }, Solid::Icosahedron},
    };
    return entries;
}

const CatalogEntry& catalog_entry(FamilyId id) { return catalog()[static_cast<int>(id)]; }

PlaneGraph generate(FamilyId id, int param) {
    const auto& e = catalog_entry(id);
    if (param < e.min_param) {
        throw Error(Errc::ParamTooSmall,
                    std::string(family_name(id)) + " needs parameter >= " + std::to_string(e.min_param));
    }
    switch (id) {
        case FamilyId::TetrahedronEdgeCycle: return edge_cycle(Solid::Tetrahedron, param);
        case FamilyId::CubeEdgeCycle: return edge_cycle(Solid::Cube, param);
        case FamilyId::Prism: return prism(param);
        case FamilyId::DodecahedronEdgeCycle: return edge_cycle(Solid::Dodecahedron, param);
        case FamilyId::Barrel: return barrel(param);
        case FamilyId::OctahedronEdgeCycle: return edge_cycle(Solid::Octahedron, param);
        case FamilyId::OctahedronVertexCycle: return vertex_cycle(Solid::Octahedron, param);
        case FamilyId::Antiprism: return antiprism(param);
        case FamilyId::IcosahedronEdgeCycle: return edge_cycle(Solid::Icosahedron, param);
        case FamilyId::IcosahedronVertexCycle: return vertex_cycle(Solid::Icosahedron, param);
        case FamilyId::IcosahedronWideCycle: return wide_cycle(param);
        case FamilyId::DodecahedronThickCycle:
        case FamilyId::IcosahedronFirstThickCycle:
        case FamilyId::IcosahedronSecondThickCycle: return thick_cycle(id, param);
    }
    throw Error(Errc::InvalidArgument, "unknown family");
}

FamilyInstance instance(FamilyId id, int param) {
    const auto& e = catalog_entry(id);
    const bool degenerate =
        std::find(e.degenerate_params.begin(), e.degenerate_params.end(), param) != e.degenerate_params.end();
    return {id, param, degenerate};
}

std::optional<FamilyInstance> identify_family(const PlaneGraph& g, const NPReport& report) {
    const int n = g.num_vertices();
    std::optional<CanonicalCode> code;
    for (const auto& e : catalog()) {
        if (e.type != report.type()) continue;
        // Orders are linear in the parameter, so order(1) is the step.
        const int step = e.order(1);
        if (n % step != 0) continue;
        const int p = n / step;
        if (p < e.min_param || e.order(p) != n) continue;
        const PlaneGraph candidate = generate(e.id, p);
        if (!code) code = canonical_code(g);
        if (canonical_code(candidate) == *code) return instance(e.id, p);
    }
    return std::nullopt;
}

std::string report_line(const PlaneGraph& g) {
    std::string line = canonical_code(g).to_hex() + '\t' + std::to_string(g.num_vertices()) + '\t';
    const auto c = classify_nearly_platonic(g);
    const auto* r = std::get_if<NPReport>(&c);
    if (!r) return line + "-\t-\t-\t-\t-\t-\t-";
    line += std::to_string(r->k) + '\t' + std::to_string(r->d) + '\t' + std::to_string(r->t) + '\t';
    const auto sizes = r->exceptional_sizes();
    if (sizes.empty()) line += "-";
    for (std::size_t i = 0; i < sizes.size(); ++i) line += (i ? " " : "") + std::to_string(sizes[i]);
    line += r->balanced ? "\tbalanced\t" : "\tunbalanced\t";
    const auto fam = r->t == 2 ? identify_family(g, *r) : std::nullopt;
    if (!fam) return line + "-\t-";
    return line + std::string(family_name(fam->id)) + '\t' + std::to_string(fam->param);
}

}  // namespace nplatonic
