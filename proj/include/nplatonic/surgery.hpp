#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nplatonic/plane_graph.hpp"

namespace nplatonic {

/// A plane map that may temporarily carry loops or parallel edges, plus named
/// dart anchors. Connectivity and Euler genus 0 are checked on construction;
/// simplicity only in finalize().
///
/// Built from a PlaneGraph, dart ids coincide with the graph's, so face
/// indices from faces() match trace_faces().
class MarkedGraph {
public:
    MarkedGraph(const PlaneGraph& g);  // NOLINT: implicit on purpose

    /// rotation[v] lists the darts leaving v counterclockwise; alpha pairs
    /// darts. Throws NotConnected / NotPlanar / InvalidArgument.
    static MarkedGraph from_darts(std::vector<std::vector<Dart>> rotation, std::vector<Dart> alpha);

    int num_vertices() const { return static_cast<int>(rot_.size()); }
    int num_darts() const { return static_cast<int>(alpha_.size()); }
    int num_edges() const { return num_darts() / 2; }
    int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
    const std::vector<Dart>& darts_at(Vertex v) const { return rot_[v]; }

    Vertex origin(Dart d) const { return origin_[d]; }
    Vertex head(Dart d) const { return origin_[alpha_[d]]; }
    Dart alpha(Dart d) const { return alpha_[d]; }
    Dart sigma(Dart d) const;
    Dart sigma_inv(Dart d) const;
    Dart face_next(Dart d) const { return sigma(alpha_[d]); }

    /// Face orbits, numbered by smallest dart.
    std::vector<std::vector<Dart>> faces() const;
    int face_of(Dart d) const;
    /// Some dart leaving u whose face is `face`, or -1.
    Dart dart_on_face(Vertex u, int face) const;

    std::map<std::string, Dart> marks;
    Dart mark(const std::string& name) const;  // throws IncompatibleMarks

    /// Re-imposes simplicity; throws NotSimple.
    PlaneGraph finalize() const;

private:
    MarkedGraph() = default;
    void index();

    std::vector<std::vector<Dart>> rot_;
    std::vector<Dart> alpha_;
    std::vector<Vertex> origin_;
    std::vector<int> slot_;  // position of a dart in its vertex rotation
};

MarkedGraph mirror(const MarkedGraph& g);

/// Removes boundary edge {p, q} of the face holding mark "outer" and adds
/// the edge attach_at-p, closing a new face of size `d` along the old
/// boundary path attach_at .. p. Mark "outer" is kept on the outer face.
MarkedGraph relocate_boundary_edge(const MarkedGraph& b, Edge remove, Vertex attach_at, int d);

/// Adds the edge u-v through face `inside`.
MarkedGraph add_chord(const MarkedGraph& b, Vertex u, Vertex v, int inside);

/// Contiguous arc of z's rotation, `count` darts starting at position `first`.
struct VertexSplit {
    int first = 0;
    int count = 0;
};

/// z keeps the arc; a new vertex (id num_vertices()) takes the rest. Sets
/// marks "x", "y" to the first dart of each part and "merged" to a dart on
/// the face created by the split.
MarkedGraph split_vertex(const MarkedGraph& g, Vertex z, VertexSplit split);

/// Merges y into x through a common face (the first common one unless
/// given). y is removed and later vertices shift down by one.
MarkedGraph amalgamate_vertices(const MarkedGraph& g, Vertex x, Vertex y, std::optional<int> face = std::nullopt);

/// Cuts the graph open along edge e = {u, v}: u and v are each split in two
/// and the edge doubled, so that face f1 (at u) and face f2 (at v) merge into
/// one slot face. Marks "left" and "right" hold the two edge copies, both
/// directed from the u side. Without faces, the face at each endpoint
/// opposite the edge is used.
MarkedGraph cut_edge(const MarkedGraph& g, Edge e, std::optional<int> f1 = std::nullopt,
                     std::optional<int> f2 = std::nullopt);

/// Glues c copies of a cut strip, "right" of copy i onto "left" of copy
/// i + 1 (mod c). c = 1 closes the strip on itself.
PlaneGraph glue_cyclic_copies(const MarkedGraph& strip, int c);

/// Removes / inserts one column of a distance-3 (3|5) graph, changing both
/// exceptional sizes by one.
PlaneGraph reduce_35_l3(const PlaneGraph& g);
PlaneGraph expand_35_l3(const PlaneGraph& g);

}  // namespace nplatonic
