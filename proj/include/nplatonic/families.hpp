#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nplatonic/classify.hpp"
#include "nplatonic/plane_graph.hpp"

namespace nplatonic {

enum class Solid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

enum class FamilyId {
    TetrahedronEdgeCycle,
    CubeEdgeCycle,
    Prism,
    DodecahedronEdgeCycle,
    Barrel,
    DodecahedronThickCycle,
    OctahedronEdgeCycle,
    OctahedronVertexCycle,
    Antiprism,
    IcosahedronEdgeCycle,
    IcosahedronVertexCycle,
    IcosahedronWideCycle,
    IcosahedronFirstThickCycle,
    IcosahedronSecondThickCycle,
};

inline constexpr int kFamilyCount = 14;

std::string_view family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);
std::string_view solid_name(Solid s);
std::optional<Solid> solid_from_name(std::string_view name);

struct FamilyInstance {
    FamilyId id;
    int param = 0;
    bool degenerate = false;  // the parameter reproduces the base solid
    bool operator==(const FamilyInstance&) const = default;
};

struct CatalogEntry {
    FamilyId id;
    NPType type;
    int min_param = 0;
    std::vector<int> degenerate_params;  // values giving a Platonic graph
    std::string param_range;
    std::string order_formula;
    int (*order)(int param) = nullptr;
    Solid base;
};

/// The 14 families in the fixed order (3|3), (3|4), (3|5), (4|3), (5|3).
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(FamilyId id);

PlaneGraph platonic(Solid s);

/// Faces given as vertex cycles; every directed edge must occur exactly once.
PlaneGraph from_faces(int num_vertices, const std::vector<std::vector<Vertex>>& faces);
PlaneGraph dual(const PlaneGraph& g);

/// x_i = i, y_i = n + i.
PlaneGraph prism(int n);
PlaneGraph antiprism(int n);
/// x_i = i, middle ring m_j = n + j, y_i = 3n + i; x_i ~ m_2i, y_i ~ m_2i+1.
PlaneGraph barrel(int n);
/// x_i = i, v_i = n + 2i, w_i = n + 2i + 1, y_i = 3n + i.
PlaneGraph wide_cycle(int n);
/// c copies of the solid minus an edge, closed into a cycle by c edges.
PlaneGraph edge_cycle(Solid s, int c);
/// c copies of the vertex-split block, amalgamated cyclically.
PlaneGraph vertex_cycle(Solid s, int c);
/// c copies of the base solid cut open along an edge between two faces at
/// distance 1, glued cyclically.
PlaneGraph thick_cycle(FamilyId id, int c);

/// Blocks: the solid minus one edge, and the vertex-split blocks of the
/// octahedron (2+2) and icosahedron (3+2). The designated face is returned
/// through `outer`.
PlaneGraph solid_minus_edge(Solid s, int* outer = nullptr);
PlaneGraph vertex_split_block(Solid s, int* outer = nullptr);

PlaneGraph generate(FamilyId id, int param);
FamilyInstance instance(FamilyId id, int param);

/// The family member embedding-isomorphic to g, if any.
std::optional<FamilyInstance> identify_family(const PlaneGraph& g, const NPReport& report);

/// Tab-separated: code, |V|, k, d, t, sorted exceptional sizes, balanced
/// flag, family or "-", parameter or "-". Graphs that are not nearly
/// Platonic get "-" in every classification field.
std::string report_line(const PlaneGraph& g);

}  // namespace nplatonic
