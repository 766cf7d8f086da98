#include "nplatonic/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace nplatonic {

std::string NPType::to_string() const { return "(" + std::to_string(k) + "|" + std::to_string(d) + ")"; }

std::vector<int> NPReport::exceptional_sizes() const {
    std::vector<int> s;
    for (const auto& e : exceptional) s.push_back(e.size);
    std::sort(s.begin(), s.end());
    return s;
}

bool NPReport::operator==(const NPReport& o) const {
    if (k != o.k || d != o.d || t != o.t || f != o.f || balanced != o.balanced) return false;
    if (exceptional.size() != o.exceptional.size()) return false;
    for (std::size_t i = 0; i < exceptional.size(); ++i) {
        if (exceptional[i].face != o.exceptional[i].face || exceptional[i].size != o.exceptional[i].size) return false;
    }
    return true;
}

std::string_view reason_name(NotNPReason r) {
    switch (r) {
        case NotNPReason::NotRegular: return "NotRegular";
        case NotNPReason::NoMajorityFaceSize: return "NoMajorityFaceSize";
        case NotNPReason::DegreeTooSmall: return "DegreeTooSmall";
    }
    return "Unknown";
}

Classification classify_nearly_platonic(const PlaneGraph& g) {
    const int k = g.regular_degree();
    if (k == 0) return NotNP{NotNPReason::NotRegular};
    if (k < 3) return NotNP{NotNPReason::DegreeTooSmall};

    const FaceSet fs = trace_faces(g);
    const int f = fs.num_faces();
    std::map<int, int> histogram;
    for (const auto& face : fs.faces) ++histogram[face.size()];
    int d = 0;
    for (const auto& [size, count] : histogram) {
        if (2 * count > f) d = size;  // f - t > t
    }
    if (d == 0) return NotNP{NotNPReason::NoMajorityFaceSize};

    NPReport rep;
    rep.k = k;
    rep.d = d;
    rep.f = f;
    for (int i = 0; i < f; ++i) {
        if (fs.faces[i].size() != d) rep.exceptional.push_back({i, fs.faces[i].size()});
    }
    rep.t = static_cast<int>(rep.exceptional.size());
    rep.balanced = std::all_of(rep.exceptional.begin(), rep.exceptional.end(),
                               [&](const ExceptionalFace& e) { return e.size == rep.exceptional.front().size; });
    return rep;
}

std::optional<NPReport> np_report(const PlaneGraph& g) {
    auto c = classify_nearly_platonic(g);
    if (auto* r = std::get_if<NPReport>(&c)) return *r;
    return std::nullopt;
}

std::vector<NPType> admissible_2np_types() {
    // For n vertices: E = kn/2, F = E - n + 2 and d(F-2) + m1 + m2 = 2E, so
    // m1 + m2 = n(2k + 2d - kd)/2. A type is admissible when some n gives two
    // sizes >= 3, both != d, with F > 4.
    constexpr int kMaxOrder = 240;
    std::vector<NPType> out;
    for (int k = 3; k <= 6; ++k) {
        for (int d = 3; d <= 6; ++d) {
            bool found = false;
            for (int n = k + 1; n <= kMaxOrder && !found; ++n) {
                if ((k * n) % 2 != 0) continue;
                const int edges = k * n / 2;
                const int faces = edges - n + 2;
                if (faces <= 4) continue;
                const int twice_sum = n * (2 * k + 2 * d - k * d);
                if (twice_sum <= 0 || twice_sum % 2 != 0) continue;
                const int sum = twice_sum / 2;
                for (int m1 = 3; m1 <= sum - 3 && !found; ++m1) {
                    const int m2 = sum - m1;
                    if (m1 != d && m2 != d) found = true;
                }
            }
            if (found) out.push_back({k, d});
        }
    }
    return out;
}

int face_distance(const PlaneGraph& g, const FaceSet& fs, int f1, int f2) {
    const int n = g.num_vertices();
    std::vector<int> dist(n, -1);
    std::deque<Vertex> queue;
    for (Vertex v : fs.boundary_vertices(g, f1)) {
        if (dist[v] < 0) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    std::vector<char> target(n, 0);
    for (Vertex v : fs.boundary_vertices(g, f2)) target[v] = 1;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        if (target[v]) return dist[v];
        for (Vertex u : g.neighbors(v)) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return -1;  // unreachable for connected graphs
}

int face_distance(const PlaneGraph& g, int f1, int f2) { return face_distance(g, trace_faces(g), f1, f2); }

Touching touching_status(const PlaneGraph& g, const FaceSet& fs, const NPReport& report) {
    if (report.t != 2) throw Error(Errc::WrongType, "touching status needs exactly two exceptional faces");
    Touching out;
    std::vector<std::vector<Vertex>> sets;
    for (const auto& e : report.exceptional) {
        auto verts = fs.boundary_vertices(g, e.face);
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
            out.kind = Touching::Kind::SelfTouching;
            out.self_touching_face = e.face;
            return out;
        }
        sets.push_back(std::move(verts));
    }
    std::set_intersection(sets[0].begin(), sets[0].end(), sets[1].begin(), sets[1].end(),
                          std::back_inserter(out.shared));
    out.kind = out.shared.empty() ? Touching::Kind::NonTouching : Touching::Kind::Touching;
    return out;
}

bool is_saturated(const PlaneGraph& g, Vertex v, int k) { return g.degree(v) == k; }

bool is_weakly_saturated(const PlaneGraph& g, const std::vector<Vertex>& path, int k, int d) {
    // A path of length d-1 has d vertices.
    if (static_cast<int>(path.size()) != d) {
        throw Error(Errc::BadPathLength, "path must have length " + std::to_string(d - 1));
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.adjacent(path[i], path[i + 1])) throw Error(Errc::InvalidArgument, "not a path in the graph");
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.degree(path[i]) != k) return false;
    }
    return true;
}

std::vector<Vertex> face_neighborhood(const PlaneGraph& g, const FaceSet& fs, int f) {
    std::vector<char> on_face(g.num_vertices(), 0);
    const auto boundary = fs.boundary_vertices(g, f);
    for (Vertex v : boundary) on_face[v] = 1;
    std::vector<char> mark(g.num_vertices(), 0);
    std::vector<Vertex> out;
    for (Vertex v : boundary) {
        for (Vertex u : g.neighbors(v)) {
            if (!on_face[u] && !mark[u]) {
                mark[u] = 1;
                out.push_back(u);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string BlockDescriptor::to_string() const {
    if (endblock) {
        return "(" + std::to_string(k) + ";" + std::to_string(k1) + "|" + std::to_string(d) + ",<" +
               std::to_string(h()) + ">)-endblock";
    }
    return "(" + std::to_string(k) + ";" + std::to_string(k1) + "," + std::to_string(k2) + "|" + std::to_string(d) +
           ",<" + std::to_string(a) + "," + std::to_string(b) + ">)";
}

BlockDescriptor block_signature(const PlaneGraph& g, int outer) {
    if (!is_two_connected(g)) throw Error(Errc::NotTwoConnected, "block signature needs a 2-connected graph");
    const FaceSet fs = trace_faces(g);
    if (outer < 0 || outer >= fs.num_faces()) throw Error(Errc::InvalidArgument, "no such face");

    int d = -1;
    for (int i = 0; i < fs.num_faces(); ++i) {
        if (i == outer) continue;
        if (d < 0) d = fs.faces[i].size();
        if (fs.faces[i].size() != d) throw Error(Errc::NotABlock, "inner faces have mixed sizes");
    }
    const int h = fs.faces[outer].size();
    if (d < 0 || h == d) throw Error(Errc::NotABlock, "designated face is not exceptional");

    const int k = g.max_degree();
    std::vector<Vertex> low;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) < k) low.push_back(v);
    }
    std::vector<Vertex> walk = fs.boundary_vertices(g, outer);
    auto position = [&](Vertex v) {
        return static_cast<int>(std::find(walk.begin(), walk.end(), v) - walk.begin());
    };
    for (Vertex v : low) {
        if (position(v) == h) throw Error(Errc::NotABlock, "low-degree vertex off the designated face");
    }

    BlockDescriptor bd;
    bd.k = k;
    bd.d = d;
    if (low.size() == 1) {
        bd.endblock = true;
        bd.x = low[0];
        bd.k1 = g.degree(bd.x);
        bd.a = 0;
        bd.b = h;
        std::rotate(walk.begin(), walk.begin() + position(bd.x), walk.end());
        bd.boundary = walk;
        return bd;
    }
    if (low.size() != 2) throw Error(Errc::NotABlock, "expected two vertices of degree below " + std::to_string(k));

    Vertex x = low[0], y = low[1];
    if (g.degree(y) > g.degree(x)) std::swap(x, y);
    std::rotate(walk.begin(), walk.begin() + position(x), walk.end());
    int a = position(y);
    if (a > h - a) {
        std::reverse(walk.begin() + 1, walk.end());
        a = h - a;
    }
    // With equal degrees either special vertex may serve as x; keep the walk as is.
    bd.k1 = g.degree(x);
    bd.k2 = g.degree(y);
    bd.x = x;
    bd.y = y;
    bd.a = a;
    bd.b = h - a;
    bd.boundary = std::move(walk);
    return bd;
}

}  // namespace nplatonic
