#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nplatonic/error.hpp"

namespace nplatonic {

using Vertex = int;
using Dart = int;

/// Per-vertex cyclic neighbour lists (counterclockwise).
using Rotations = std::vector<std::vector<Vertex>>;

/// A connected, simple plane graph stored as a rotation system.
///
/// Darts are numbered vertex by vertex: the darts leaving v are
/// first_dart(v) .. first_dart(v)+deg(v)-1 in counterclockwise order, so the
/// numbering is a pure function of the rotation lists. sigma() moves to the
/// next dart around the origin, alpha() to the reverse dart, and the face
/// successor is sigma(alpha(d)). Instances are immutable once built.
class PlaneGraph {
public:
    /// Validates the rotation lists and throws Error on NotSimple,
    /// NotConnected, NotPlanar or AsymmetricInput.
    static PlaneGraph build(const Rotations& rotations);

    int num_vertices() const { return static_cast<int>(offsets_.size()) - 1; }
    int num_darts() const { return static_cast<int>(heads_.size()); }
    int num_edges() const { return num_darts() / 2; }
    int num_faces() const { return 2 - num_vertices() + num_edges(); }

    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    Dart first_dart(Vertex v) const { return offsets_[v]; }
    Vertex origin(Dart d) const { return origins_[d]; }
    Vertex head(Dart d) const { return heads_[d]; }
    Dart alpha(Dart d) const { return alpha_[d]; }
    Dart sigma(Dart d) const {
        const Vertex v = origins_[d];
        return d + 1 == offsets_[v + 1] ? offsets_[v] : d + 1;
    }
    Dart sigma_inv(Dart d) const {
        const Vertex v = origins_[d];
        return d == offsets_[v] ? offsets_[v + 1] - 1 : d - 1;
    }
    Dart face_next(Dart d) const { return sigma(alpha(d)); }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {heads_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
    }
    /// Dart from u to v, or -1.
    Dart dart_between(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return dart_between(u, v) >= 0; }

    Rotations rotations() const;
    int min_degree() const;
    int max_degree() const;
    /// k if every vertex has degree k, otherwise 0.
    int regular_degree() const;

    bool operator==(const PlaneGraph& other) const {
        return offsets_ == other.offsets_ && heads_ == other.heads_;
    }

private:
    PlaneGraph() = default;

    std::vector<int> offsets_;
    std::vector<Vertex> heads_;
    std::vector<Vertex> origins_;
    std::vector<Dart> alpha_;
};

struct Face {
    std::vector<Dart> walk;  // darts in face-successor order
    int size() const { return static_cast<int>(walk.size()); }
};

struct FaceSet {
    std::vector<Face> faces;
    std::vector<int> dart_to_face;

    int num_faces() const { return static_cast<int>(faces.size()); }
    /// Origins of the walk's darts, in order.
    std::vector<Vertex> boundary_vertices(const PlaneGraph& g, int face) const;
    std::vector<int> sizes() const;
};

FaceSet trace_faces(const PlaneGraph& g);

struct Edge {
    Vertex u, v;  // u < v
    auto operator<=>(const Edge&) const = default;
};

struct StructureReport {
    bool connected = false;
    std::vector<Vertex> cut_vertices;         // sorted
    std::vector<Edge> bridges;                // sorted
    std::vector<std::vector<Vertex>> blocks;  // each sorted; list sorted
    int min_degree = 0;
    int max_degree = 0;
};

StructureReport structure(const PlaneGraph& g);
bool is_two_connected(const PlaneGraph& g);

/// Embedding-isomorphism invariant (relabeling, root and reflection).
struct CanonicalCode {
    std::vector<std::uint16_t> symbols;

    auto operator<=>(const CanonicalCode&) const = default;
    std::string to_hex() const;
};

/// Symbol stream of the traversal rooted at `root`; `mirrored` walks the
/// rotations clockwise. Vertices are labeled in first-visit order; each vertex
/// contributes its neighbours' labels (1-based) followed by a 0 terminator.
std::vector<std::uint16_t> rooted_code(const PlaneGraph& g, Dart root, bool mirrored);

CanonicalCode canonical_code(const PlaneGraph& g);
bool are_isomorphic(const PlaneGraph& g, const PlaneGraph& h);
/// A vertex map g -> h realizing an embedding isomorphism (possibly
/// orientation-reversing), or nullopt.
std::optional<std::vector<Vertex>> find_isomorphism(const PlaneGraph& g, const PlaneGraph& h);
/// Abstract graph isomorphism by backtracking; throws TooLarge above `limit`.
bool are_isomorphic_abstract(const PlaneGraph& g, const PlaneGraph& h, int limit = 16);

PlaneGraph mirror(const PlaneGraph& g);
/// Renames vertex v to perm[v]; rotations are kept.
PlaneGraph relabel(const PlaneGraph& g, std::span<const Vertex> perm);

std::string serialize(const PlaneGraph& g);
PlaneGraph parse(std::string_view text);

}  // namespace nplatonic
