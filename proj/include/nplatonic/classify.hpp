#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nplatonic/plane_graph.hpp"

namespace nplatonic {

struct NPType {
    int k = 0;  // vertex degree
    int d = 0;  // common face size
    auto operator<=>(const NPType&) const = default;
    std::string to_string() const;
};

struct ExceptionalFace {
    int face = 0;
    int size = 0;
};

struct NPReport {
    int k = 0;
    int d = 0;
    int t = 0;  // number of exceptional faces
    int f = 0;  // total face count
    std::vector<ExceptionalFace> exceptional;
    bool balanced = false;

    NPType type() const { return {k, d}; }
    std::vector<int> exceptional_sizes() const;  // sorted
    bool operator==(const NPReport& o) const;
};

enum class NotNPReason { NotRegular, NoMajorityFaceSize, DegreeTooSmall };

struct NotNP {
    NotNPReason reason;
};

std::string_view reason_name(NotNPReason r);

using Classification = std::variant<NPReport, NotNP>;

/// t-nearly Platonic classification: k-regular with k >= 3 and a face size d
/// held by more than half of the faces. t = 0 means Platonic.
Classification classify_nearly_platonic(const PlaneGraph& g);
/// Convenience wrapper: the report, or nullopt when not nearly Platonic.
std::optional<NPReport> np_report(const PlaneGraph& g);

/// Types (k|d) admitting a 2-nearly Platonic graph, derived from the
/// Euler/degree-sum system rather than listed.
std::vector<NPType> admissible_2np_types();

/// Shortest-path distance between the boundaries of two faces; 0 when they
/// share a vertex.
int face_distance(const PlaneGraph& g, const FaceSet& fs, int f1, int f2);
int face_distance(const PlaneGraph& g, int f1, int f2);

struct Touching {
    enum class Kind { NonTouching, Touching, SelfTouching } kind = Kind::NonTouching;
    std::vector<Vertex> shared;  // for Touching
    int self_touching_face = -1;  // for SelfTouching
};

Touching touching_status(const PlaneGraph& g, const FaceSet& fs, const NPReport& report);

bool is_saturated(const PlaneGraph& g, Vertex v, int k);
/// Internal vertices of a path of length d-1 all have degree k.
bool is_weakly_saturated(const PlaneGraph& g, const std::vector<Vertex>& path, int k, int d);

/// Vertices adjacent to the boundary of face f but not on it.
std::vector<Vertex> face_neighborhood(const PlaneGraph& g, const FaceSet& fs, int f);

struct BlockDescriptor {
    int k = 0, k1 = 0, k2 = 0;  // k2 == 0 for endblocks
    int d = 0;
    int a = 0, b = 0;  // a <= b; for endblocks a = 0, b = h
    Vertex x = -1, y = -1;  // deg(x) = k1, deg(y) = k2
    std::vector<Vertex> boundary;  // x = x0, ..., x_a = y, ..., x_{a+b-1}
    bool endblock = false;

    int h() const { return a + b; }
    std::string to_string() const;
};

/// Recognizes a (k;k1,k2|d,<a,b>)-block with designated face `outer`.
/// Throws NotTwoConnected or NotABlock.
BlockDescriptor block_signature(const PlaneGraph& g, int outer);

}  // namespace nplatonic
