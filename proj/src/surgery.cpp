#include "nplatonic/surgery.hpp"

#include <algorithm>
#include <numeric>

#include "nplatonic/classify.hpp"
#include "nplatonic/families.hpp"

namespace nplatonic {

MarkedGraph::MarkedGraph(const PlaneGraph& g) {
    rot_.resize(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (int i = 0; i < g.degree(v); ++i) rot_[v].push_back(g.first_dart(v) + i);
    }
    alpha_.resize(g.num_darts());
    for (Dart d = 0; d < g.num_darts(); ++d) alpha_[d] = g.alpha(d);
    index();
}

void MarkedGraph::index() {
    origin_.assign(alpha_.size(), -1);
    slot_.assign(alpha_.size(), -1);
    for (Vertex v = 0; v < num_vertices(); ++v) {
        for (int i = 0; i < degree(v); ++i) {
            origin_[rot_[v][i]] = v;
            slot_[rot_[v][i]] = i;
        }
    }
}

MarkedGraph MarkedGraph::from_darts(std::vector<std::vector<Dart>> rotation, std::vector<Dart> alpha) {
    MarkedGraph g;
    g.rot_ = std::move(rotation);
    g.alpha_ = std::move(alpha);
    const int nd = g.num_darts();
    std::vector<int> seen(nd, 0);
    for (const auto& list : g.rot_) {
        if (list.empty()) throw Error(Errc::NotConnected, "isolated vertex");
        for (Dart d : list) {
            if (d < 0 || d >= nd || seen[d]++) throw Error(Errc::InvalidArgument, "darts must appear exactly once");
        }
    }
    for (Dart d = 0; d < nd; ++d) {
        if (!seen[d]) throw Error(Errc::InvalidArgument, "dart without origin");
        const Dart a = g.alpha_[d];
        if (a < 0 || a >= nd || a == d || g.alpha_[a] != d) {
            throw Error(Errc::InvalidArgument, "alpha must be a fixed-point-free involution");
        }
    }
    g.index();

    std::vector<char> reached(g.num_vertices(), 0);
    std::vector<Vertex> stack{0};
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Dart d : g.rot_[v]) {
            const Vertex u = g.head(d);
            if (!reached[u]) {
                reached[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    if (count != g.num_vertices()) throw Error(Errc::NotConnected, "map is disconnected");
    const int f = static_cast<int>(g.faces().size());
    if (g.num_vertices() - g.num_edges() + f != 2) throw Error(Errc::NotPlanar, "map is not of genus 0");
    return g;
}

Dart MarkedGraph::sigma(Dart d) const {
    const auto& r = rot_[origin_[d]];
    return r[(slot_[d] + 1) % r.size()];
}

Dart MarkedGraph::sigma_inv(Dart d) const {
    const auto& r = rot_[origin_[d]];
    return r[(slot_[d] + r.size() - 1) % r.size()];
}

std::vector<std::vector<Dart>> MarkedGraph::faces() const {
    std::vector<std::vector<Dart>> out;
    std::vector<char> seen(num_darts(), 0);
    for (Dart d = 0; d < num_darts(); ++d) {
        if (seen[d]) continue;
        std::vector<Dart> walk;
        Dart e = d;
        do {
            seen[e] = 1;
            walk.push_back(e);
            e = face_next(e);
        } while (e != d);
        out.push_back(std::move(walk));
    }
    return out;
}

int MarkedGraph::face_of(Dart d) const {
    const auto fs = faces();
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        if (std::find(fs[i].begin(), fs[i].end(), d) != fs[i].end()) return i;
    }
    return -1;
}

Dart MarkedGraph::dart_on_face(Vertex u, int face) const {
    const auto fs = faces();
    if (face < 0 || face >= static_cast<int>(fs.size())) throw Error(Errc::InvalidArgument, "no such face");
    for (Dart d : fs[face]) {
        if (origin_[d] == u) return d;
    }
    return -1;
}

Dart MarkedGraph::mark(const std::string& name) const {
    auto it = marks.find(name);
    if (it == marks.end()) throw Error(Errc::IncompatibleMarks, "missing mark '" + name + "'");
    return it->second;
}

PlaneGraph MarkedGraph::finalize() const {
    Rotations r(num_vertices());
    for (Vertex v = 0; v < num_vertices(); ++v) {
        for (Dart d : rot_[v]) {
            if (head(d) == v) throw Error(Errc::NotSimple, "loop at vertex " + std::to_string(v));
            r[v].push_back(head(d));
        }
    }
    return PlaneGraph::build(r);
}

namespace {

// Mutable copy of a map's dart structure, rebuilt through from_darts.
struct Draft {
    std::vector<std::vector<Dart>> rot;
    std::vector<Dart> alpha;

    explicit Draft(const MarkedGraph& g) : alpha(g.num_darts()) {
        for (Vertex v = 0; v < g.num_vertices(); ++v) rot.push_back(g.darts_at(v));
        for (Dart d = 0; d < g.num_darts(); ++d) alpha[d] = g.alpha(d);
    }

    void erase(Vertex v, Dart d) { rot[v].erase(std::find(rot[v].begin(), rot[v].end(), d)); }
    void insert_before(Vertex v, Dart before, Dart d) {
        rot[v].insert(std::find(rot[v].begin(), rot[v].end(), before), d);
    }
    std::pair<Dart, Dart> new_edge() {
        const Dart a = static_cast<Dart>(alpha.size());
        alpha.push_back(a + 1);
        alpha.push_back(a);
        return {a, a + 1};
    }

    MarkedGraph finish(std::map<std::string, Dart> marks) && {
        MarkedGraph g = MarkedGraph::from_darts(std::move(rot), std::move(alpha));
        g.marks = std::move(marks);
        return g;
    }
};

Dart find_dart(const MarkedGraph& g, Vertex u, Vertex v) {
    if (u < 0 || u >= g.num_vertices() || v < 0 || v >= g.num_vertices()) return -1;
    for (Dart d : g.darts_at(u)) {
        if (g.head(d) == v) return d;
    }
    return -1;
}

}  // namespace

MarkedGraph mirror(const MarkedGraph& g) {
    Draft draft(g);
    for (auto& r : draft.rot) std::reverse(r.begin(), r.end());
    return std::move(draft).finish(g.marks);
}

MarkedGraph relocate_boundary_edge(const MarkedGraph& b, Edge remove, Vertex attach_at, int d) {
    if (d < 3) throw Error(Errc::InvalidArgument, "face size must be at least 3");
    const auto fs = b.faces();
    const int outer = b.face_of(b.mark("outer"));
    const auto& walk = fs[outer];
    const int h = static_cast<int>(walk.size());
    auto at = [&](int i) { return walk[((i % h) + h) % h]; };

    int hit = -1;
    for (int i = 0; i < h; ++i) {
        const Vertex s = b.origin(walk[i]), t = b.head(walk[i]);
        if ((s == remove.u && t == remove.v) || (s == remove.v && t == remove.u)) {
            hit = i;
            break;
        }
    }
    if (hit < 0) throw Error(Errc::NotOnBoundary, "edge is not on the outer face");
    bool attach_on_face = false;
    for (Dart e : walk) attach_on_face = attach_on_face || b.origin(e) == attach_at;
    if (!attach_on_face) throw Error(Errc::NotOnBoundary, "attachment vertex is not on the outer face");

    // Look for attach_at .. p .. q along the walk in either direction, with
    // the path attach_at .. p of length d - 1.
    Draft draft(b);
    std::map<std::string, Dart> marks = b.marks;
    bool done = false;
    for (int i = 0; i < h && !done; ++i) {
        const Dart e = walk[i];
        const Vertex s = b.origin(e), t = b.head(e);
        const bool is_edge = (s == remove.u && t == remove.v) || (s == remove.v && t == remove.u);
        if (!is_edge) continue;
        // Forward: p = s, q = t, path ends at p.
        if (b.origin(at(i - (d - 1))) == attach_at && t != attach_at) {
            // The dart q -> p is reused as attach_at -> p.
            const Dart qp = b.alpha(e);
            draft.erase(t, qp);
            draft.insert_before(attach_at, at(i - (d - 1)), qp);
            marks["outer"] = at(i - d);
            done = true;
        } else if (b.head(at(i + d - 1)) == attach_at && s != attach_at) {
            // Backward: the walk runs q -> p, then p .. attach_at.
            draft.erase(s, e);
            draft.insert_before(attach_at, at(i + d), e);
            marks["outer"] = at(i + d);
            done = true;
        }
    }
    if (!done) throw Error(Errc::WrongSpan, "relocation would not close a face of size " + std::to_string(d));
    try {
        return std::move(draft).finish(std::move(marks));
    } catch (const Error& err) {
        if (err.code() == Errc::NotConnected) throw Error(Errc::Disconnects, "relocation disconnects the graph");
        throw;
    }
}

MarkedGraph add_chord(const MarkedGraph& b, Vertex u, Vertex v, int inside) {
    if (u == v) throw Error(Errc::InvalidArgument, "chord endpoints coincide");
    const Dart du = b.dart_on_face(u, inside);
    const Dart dv = b.dart_on_face(v, inside);
    if (du < 0 || dv < 0) throw Error(Errc::NotOnFace, "chord endpoint not on the face");
    if (find_dart(b, u, v) >= 0) throw Error(Errc::AlreadyAdjacent, "vertices are already adjacent");
    Draft draft(b);
    auto [nu, nv] = draft.new_edge();
    draft.insert_before(u, du, nu);
    draft.insert_before(v, dv, nv);
    return std::move(draft).finish(b.marks);
}

MarkedGraph split_vertex(const MarkedGraph& g, Vertex z, VertexSplit split) {
    const int deg = g.degree(z);
    if (split.count <= 0 || split.count >= deg) throw Error(Errc::EmptyArc, "both arcs must be nonempty");
    Draft draft(g);
    std::vector<Dart> keep, move;
    for (int i = 0; i < deg; ++i) {
        const Dart d = g.darts_at(z)[(split.first + i) % deg];
        (i < split.count ? keep : move).push_back(d);
    }
    draft.rot[z] = keep;
    draft.rot.push_back(move);
    auto marks = g.marks;
    marks["x"] = keep.front();
    marks["y"] = move.front();
    marks["merged"] = keep.front();
    return std::move(draft).finish(std::move(marks));
}

MarkedGraph amalgamate_vertices(const MarkedGraph& g, Vertex x, Vertex y, std::optional<int> face) {
    if (x == y) throw Error(Errc::InvalidArgument, "cannot amalgamate a vertex with itself");
    if (find_dart(g, x, y) >= 0) throw Error(Errc::Adjacent, "vertices are adjacent");
    const int nf = static_cast<int>(g.faces().size());
    Dart dx = -1, dy = -1;
    for (int f = 0; f < nf && dx < 0; ++f) {
        if (face && f != *face) continue;
        const Dart a = g.dart_on_face(x, f), c = g.dart_on_face(y, f);
        if (a >= 0 && c >= 0) {
            dx = a;
            dy = c;
        }
    }
    if (dx < 0) throw Error(Errc::NotOnCommonFace, "vertices share no face");

    auto from = [&](Dart start) {
        std::vector<Dart> out;
        Dart d = start;
        do {
            out.push_back(d);
            d = g.sigma(d);
        } while (d != start);
        return out;
    };
    Draft draft(g);
    auto merged = from(dx);
    auto tail = from(dy);
    merged.insert(merged.end(), tail.begin(), tail.end());
    draft.rot[x] = merged;
    draft.rot.erase(draft.rot.begin() + y);
    return std::move(draft).finish(g.marks);
}

MarkedGraph cut_edge(const MarkedGraph& g, Edge e, std::optional<int> f1, std::optional<int> f2) {
    const Dart d = find_dart(g, e.u, e.v);
    if (d < 0) throw Error(Errc::InvalidArgument, "no such edge");
    if (g.face_of(d) == g.face_of(g.alpha(d))) throw Error(Errc::BridgeCut, "cannot cut a bridge");

    // Position (relative to `start`) of the sector whose face opens the slit.
    auto sector = [&](Dart start, std::optional<int> face) {
        const Vertex v = g.origin(start);
        const int deg = g.degree(v);
        if (deg < 3) throw Error(Errc::InvalidArgument, "cut endpoints need degree at least 3");
        std::vector<Dart> order;
        for (Dart x = start; order.size() < static_cast<std::size_t>(deg); x = g.sigma(x)) order.push_back(x);
        if (!face) return std::pair{(deg + 1) / 2, order};
        for (int k = 2; k < deg; ++k) {
            if (g.face_of(order[k]) == *face) return std::pair{k, order};
        }
        throw Error(Errc::NotOnFace, "face does not meet the edge endpoint away from the edge");
    };
    auto [ku, at_u] = sector(d, f1);
    auto [kv, at_v] = sector(g.alpha(d), f2);
    if (g.face_of(at_u[ku]) == g.face_of(at_v[kv])) {
        throw Error(Errc::InvalidArgument, "slit must join two distinct faces");
    }

    Draft draft(g);
    auto [right, right_back] = draft.new_edge();
    // u keeps [d, a-side], the new vertex takes [b-side, right].
    draft.rot[e.u].assign(at_u.begin(), at_u.begin() + ku);
    std::vector<Dart> u2(at_u.begin() + ku, at_u.end());
    u2.push_back(right);
    // v keeps [g-side, alpha(d)], the new vertex takes [right_back, c-side].
    std::vector<Dart> v1(at_v.begin() + kv, at_v.end());
    v1.push_back(at_v[0]);
    draft.rot[e.v] = v1;
    std::vector<Dart> v2{right_back};
    v2.insert(v2.end(), at_v.begin() + 1, at_v.begin() + kv);
    draft.rot.push_back(u2);
    draft.rot.push_back(v2);
    auto marks = g.marks;
    marks["left"] = d;
    marks["right"] = right;
    return std::move(draft).finish(std::move(marks));
}

PlaneGraph glue_cyclic_copies(const MarkedGraph& strip, int c) {
    if (c < 1) throw Error(Errc::InvalidArgument, "need at least one copy");
    const Dart L = strip.mark("left");
    const Dart R = strip.mark("right");
    if (L == R) throw Error(Errc::IncompatibleMarks, "left and right marks coincide");
    const int slot = strip.face_of(L);
    if (strip.face_of(strip.alpha(R)) != slot || strip.face_of(strip.sigma(R)) != slot ||
        strip.face_of(strip.sigma(strip.alpha(L))) != slot) {
        throw Error(Errc::IncompatibleMarks, "marks do not bound a common slot face");
    }
    const Vertex tail1 = strip.origin(L), head1 = strip.head(L);
    const Vertex tail2 = strip.origin(R), head2 = strip.head(R);
    if (tail1 == tail2 || head1 == head2 || tail1 == head2 || head1 == tail2) {
        throw Error(Errc::IncompatibleMarks, "marked edges share endpoints");
    }

    const int n = strip.num_vertices();
    // tail2/head2 of copy i are the same vertices as tail1/head1 of copy i+1.
    std::vector<int> rank(n, -1);
    int per_copy = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (v != tail2 && v != head2) rank[v] = per_copy++;
    }
    auto id = [&](int copy, Vertex v) {
        copy %= c;
        if (v == tail2) return ((copy + 1) % c) * per_copy + rank[tail1];
        if (v == head2) return ((copy + 1) % c) * per_copy + rank[head1];
        return copy * per_copy + rank[v];
    };
    auto arc_after = [&](Dart start) {
        std::vector<Dart> out;
        for (Dart x = strip.sigma(start); x != start; x = strip.sigma(x)) out.push_back(x);
        return out;
    };

    Rotations rot(static_cast<std::size_t>(c) * per_copy);
    for (int i = 0; i < c; ++i) {
        for (Vertex v = 0; v < n; ++v) {
            if (v == tail1 || v == head1 || v == tail2 || v == head2) continue;
            auto& list = rot[id(i, v)];
            for (Dart x : strip.darts_at(v)) list.push_back(id(i, strip.head(x)));
        }
        // Merged tail: copy i's tail2 followed by copy i+1's tail1.
        auto& tail = rot[id(i, tail2)];
        for (Dart x : arc_after(R)) tail.push_back(id(i, strip.head(x)));
        tail.push_back(id(i, head2));
        for (Dart x : arc_after(L)) tail.push_back(id(i + 1, strip.head(x)));
        auto& head = rot[id(i, head2)];
        for (Dart x : arc_after(strip.alpha(R))) head.push_back(id(i, strip.head(x)));
        for (Dart x : arc_after(strip.alpha(L))) head.push_back(id(i + 1, strip.head(x)));
        head.push_back(id(i, tail2));
    }
    try {
        return PlaneGraph::build(rot);
    } catch (const Error& err) {
        if (err.code() == Errc::NotSimple) throw Error(Errc::NotSimpleAfterGlue, err.what());
        throw;
    }
}

namespace {

// Vertex map barrel(n) -> g, after checking that g is a distance-3 (3|5)
// graph with two exceptional n-gons of that shape.
std::vector<Vertex> barrel_frame(const PlaneGraph& g, int& n) {
    auto rep = np_report(g);
    if (!rep || rep->k != 3 || rep->d != 5) {
        throw Error(Errc::NotBarrelStructured, "not a nearly Platonic graph of type (3|5)");
    }
    if (rep->t == 0) {
        // the dodecahedron is barrel(5)
        n = 5;
    } else {
        if (rep->t != 2 || !rep->balanced) {
            throw Error(Errc::NotBarrelStructured, "not a balanced 2-nearly Platonic graph of type (3|5)");
        }
        const FaceSet fs = trace_faces(g);
        if (face_distance(g, fs, rep->exceptional[0].face, rep->exceptional[1].face) != 3) {
            throw Error(Errc::NotBarrelStructured, "exceptional faces are not at distance 3");
        }
        n = rep->exceptional[0].size;
    }
    auto map = find_isomorphism(barrel(n), g);
    if (!map) throw Error(Errc::NotBarrelStructured, "distance-3 graph without barrel structure");
    return *map;
}

// Rebuilds barrel(m) on g's vertex ids: barrel vertices of columns shared
// with barrel(n) reuse the ids given by `frame`, the rest get fresh ids.
PlaneGraph rebuild_barrel(int n, int m, const std::vector<Vertex>& frame) {
    const PlaneGraph target = barrel(m);
    const int common = std::min(n, m);
    // barrel(n) numbering: x_i = i, m_j = n + j, y_i = 3n + i.
    auto source_id = [&](Vertex w) -> int {
        if (w < m) return w < common ? w : -1;
        if (w < 3 * m) {
            const int j = w - m;
            return j < 2 * common ? n + j : -1;
        }
        const int i = w - 3 * m;
        return i < common ? 3 * n + i : -1;
    };
    std::vector<Vertex> assigned(target.num_vertices(), -1);
    std::vector<Vertex> used;
    for (Vertex w = 0; w < target.num_vertices(); ++w) {
        const int s = source_id(w);
        if (s >= 0) {
            assigned[w] = frame[s];
            used.push_back(frame[s]);
        }
    }
    // Compact surviving ids, keeping their relative order; new ids go last.
    std::sort(used.begin(), used.end());
    int next = static_cast<int>(used.size());
    std::vector<Vertex> perm(target.num_vertices());
    for (Vertex w = 0; w < target.num_vertices(); ++w) {
        if (assigned[w] >= 0) {
            perm[w] = static_cast<int>(std::lower_bound(used.begin(), used.end(), assigned[w]) - used.begin());
        } else {
            perm[w] = next++;
        }
    }
    return relabel(target, perm);
}

}  // namespace

PlaneGraph reduce_35_l3(const PlaneGraph& g) {
    int n = 0;
    const auto frame = barrel_frame(g, n);
    if (n <= 3) throw Error(Errc::TooSmall, "exceptional faces of size 3 cannot shrink");
    return rebuild_barrel(n, n - 1, frame);
}

PlaneGraph expand_35_l3(const PlaneGraph& g) {
    int n = 0;
    const auto frame = barrel_frame(g, n);
    return rebuild_barrel(n, n + 1, frame);
}

}  // namespace nplatonic
