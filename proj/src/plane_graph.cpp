#include "nplatonic/plane_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace nplatonic {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::NotSimple: return "NotSimple";
        case Errc::NotConnected: return "NotConnected";
        case Errc::NotPlanar: return "NotPlanar";
        case Errc::AsymmetricInput: return "AsymmetricInput";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::TooLarge: return "TooLarge";
        case Errc::BadPathLength: return "BadPathLength";
        case Errc::NotABlock: return "NotABlock";
        case Errc::NotTwoConnected: return "NotTwoConnected";
        case Errc::ParamTooSmall: return "ParamTooSmall";
        case Errc::UnsupportedSolid: return "UnsupportedSolid";
        case Errc::NotOnBoundary: return "NotOnBoundary";
        case Errc::WrongSpan: return "WrongSpan";
        case Errc::Disconnects: return "Disconnects";
        case Errc::NotOnFace: return "NotOnFace";
        case Errc::AlreadyAdjacent: return "AlreadyAdjacent";
        case Errc::EmptyArc: return "EmptyArc";
        case Errc::NotOnCommonFace: return "NotOnCommonFace";
        case Errc::Adjacent: return "Adjacent";
        case Errc::BridgeCut: return "BridgeCut";
        case Errc::IncompatibleMarks: return "IncompatibleMarks";
        case Errc::NotSimpleAfterGlue: return "NotSimpleAfterGlue";
        case Errc::NotBarrelStructured: return "NotBarrelStructured";
        case Errc::TooSmall: return "TooSmall";
        case Errc::WrongType: return "WrongType";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Construction

PlaneGraph PlaneGraph::build(const Rotations& rotations) {
    const int n = static_cast<int>(rotations.size());
    if (n == 0) throw Error(Errc::InvalidArgument, "graph has no vertices");

    PlaneGraph g;
    g.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        if (rotations[v].empty()) {
            throw Error(Errc::NotConnected, "vertex " + std::to_string(v) + " has no neighbours");
        }
        g.offsets_[v + 1] = g.offsets_[v] + static_cast<int>(rotations[v].size());
    }
    const int darts = g.offsets_[n];
    g.heads_.resize(darts);
    g.origins_.resize(darts);
    g.alpha_.assign(darts, -1);

    std::map<std::pair<Vertex, Vertex>, Dart> by_pair;
    for (int v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < rotations[v].size(); ++i) {
            const Vertex u = rotations[v][i];
            if (u < 0 || u >= n) {
                throw Error(Errc::AsymmetricInput,
                            "neighbour " + std::to_string(u) + " of vertex " + std::to_string(v) + " out of range");
            }
            if (u == v) throw Error(Errc::NotSimple, "loop at vertex " + std::to_string(v));
            const Dart d = g.offsets_[v] + static_cast<int>(i);
            if (!by_pair.emplace(std::pair{v, u}, d).second) {
                throw Error(Errc::NotSimple,
                            "parallel edges between " + std::to_string(v) + " and " + std::to_string(u));
            }
            g.heads_[d] = u;
            g.origins_[d] = v;
        }
    }
    for (const auto& [key, d] : by_pair) {
        auto it = by_pair.find({key.second, key.first});
        if (it == by_pair.end()) {
            throw Error(Errc::AsymmetricInput, std::to_string(key.second) + " lists " +
                                                   std::to_string(key.first) + " but not vice versa");
        }
        g.alpha_[d] = it->second;
    }

    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    if (reached != n) throw Error(Errc::NotConnected, "underlying graph is disconnected");

    std::vector<char> visited(darts, 0);
    int faces = 0;
    for (Dart d = 0; d < darts; ++d) {
        if (visited[d]) continue;
        ++faces;
        for (Dart e = d; !visited[e]; e = g.face_next(e)) visited[e] = 1;
    }
    if (n - darts / 2 + faces != 2) {
        throw Error(Errc::NotPlanar, "Euler characteristic " + std::to_string(n - darts / 2 + faces) + " != 2");
    }
    return g;
}

Dart PlaneGraph::dart_between(Vertex u, Vertex v) const {
    for (Dart d = offsets_[u]; d < offsets_[u + 1]; ++d) {
        if (heads_[d] == v) return d;
    }
    return -1;
}

Rotations PlaneGraph::rotations() const {
    Rotations r(num_vertices());
    for (Vertex v = 0; v < num_vertices(); ++v) {
        auto nb = neighbors(v);
        r[v].assign(nb.begin(), nb.end());
    }
    return r;
}

int PlaneGraph::min_degree() const {
    int m = degree(0);
    for (Vertex v = 1; v < num_vertices(); ++v) m = std::min(m, degree(v));
    return m;
}

int PlaneGraph::max_degree() const {
    int m = degree(0);
    for (Vertex v = 1; v < num_vertices(); ++v) m = std::max(m, degree(v));
    return m;
}

int PlaneGraph::regular_degree() const {
    const int k = min_degree();
    return k == max_degree() ? k : 0;
}

// ---------------------------------------------------------------------------
// Faces

FaceSet trace_faces(const PlaneGraph& g) {
    FaceSet fs;
    fs.dart_to_face.assign(g.num_darts(), -1);
    for (Dart d = 0; d < g.num_darts(); ++d) {
        if (fs.dart_to_face[d] >= 0) continue;
        Face f;
        const int id = fs.num_faces();
        for (Dart e = d; fs.dart_to_face[e] < 0; e = g.face_next(e)) {
            fs.dart_to_face[e] = id;
            f.walk.push_back(e);
        }
        fs.faces.push_back(std::move(f));
    }
    return fs;
}

std::vector<Vertex> FaceSet::boundary_vertices(const PlaneGraph& g, int face) const {
    std::vector<Vertex> out;
    out.reserve(faces[face].walk.size());
    for (Dart d : faces[face].walk) out.push_back(g.origin(d));
    return out;
}

std::vector<int> FaceSet::sizes() const {
    std::vector<int> s;
    s.reserve(faces.size());
    for (const auto& f : faces) s.push_back(f.size());
    return s;
}

// ---------------------------------------------------------------------------
// Block decomposition (Hopcroft-Tarjan lowpoints)

StructureReport structure(const PlaneGraph& g) {
    const int n = g.num_vertices();
    StructureReport rep;
    rep.connected = true;  // enforced by build()
    rep.min_degree = g.min_degree();
    rep.max_degree = g.max_degree();

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    int timer = 0;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (Vertex u : g.neighbors(v)) {
            if (u == parent) continue;
            if (disc[u] < 0) {
                edge_stack.emplace_back(v, u);
                ++children;
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) {
                    if (parent >= 0 || children > 1) is_cut[v] = 1;
                    std::vector<Vertex> block;
                    while (true) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(a);
                        block.push_back(b);
                        if (a == v && b == u) break;
                    }
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    if (block.size() == 2) rep.bridges.push_back({std::min(v, u), std::max(v, u)});
                    rep.blocks.push_back(std::move(block));
                }
            } else if (disc[u] < disc[v]) {
                edge_stack.emplace_back(v, u);
                low[v] = std::min(low[v], disc[u]);
            }
        }
        // The root is a cut vertex only with two or more DFS children.
        if (parent < 0 && children < 2) is_cut[v] = 0;
    };
    dfs(0, -1);

    for (Vertex v = 0; v < n; ++v) {
        if (is_cut[v]) rep.cut_vertices.push_back(v);
    }
    std::sort(rep.bridges.begin(), rep.bridges.end());
    std::sort(rep.blocks.begin(), rep.blocks.end());
    return rep;
}

bool is_two_connected(const PlaneGraph& g) {
    if (g.num_vertices() < 3) return false;
    return structure(g).blocks.size() == 1;
}

// ---------------------------------------------------------------------------
// Canonical codes

namespace {

// Streams the rooted traversal symbol by symbol, so a candidate root can be
// abandoned as soon as it exceeds the best code seen so far.
class Traversal {
public:
    Traversal(const PlaneGraph& g, Dart root, bool mirrored)
        : g_(g), mirrored_(mirrored), label_(g.num_vertices(), 0), first_(g.num_vertices(), -1) {
        label_[g.origin(root)] = 1;
        first_[0] = root;
        order_count_ = 1;
    }

    // Returns the next symbol, or -1 when the traversal is complete.
    int next() {
        if (current_ < 0) {
            if (vertex_index_ >= order_count_) return -1;
            current_ = first_[vertex_index_];
            start_ = current_;
        } else if (current_ == start_ && emitted_in_vertex_ > 0) {
            current_ = -1;
            emitted_in_vertex_ = 0;
            ++vertex_index_;
            return 0;
        }
        const Dart d = current_;
        const Vertex u = g_.head(d);
        if (label_[u] == 0) {
            label_[u] = ++order_count_;
            first_[order_count_ - 1] = g_.alpha(d);
        }
        current_ = mirrored_ ? g_.sigma_inv(d) : g_.sigma(d);
        ++emitted_in_vertex_;
        return label_[u];
    }

private:
    const PlaneGraph& g_;
    bool mirrored_;
    std::vector<int> label_;
    std::vector<Dart> first_;
    int order_count_ = 0;
    int vertex_index_ = 0;
    Dart current_ = -1;
    Dart start_ = -1;
    int emitted_in_vertex_ = 0;
};

}  // namespace

std::vector<std::uint16_t> rooted_code(const PlaneGraph& g, Dart root, bool mirrored) {
    std::vector<std::uint16_t> out;
    out.reserve(g.num_darts() + g.num_vertices());
    Traversal t(g, root, mirrored);
    for (int s = t.next(); s >= 0; s = t.next()) out.push_back(static_cast<std::uint16_t>(s));
    return out;
}

CanonicalCode canonical_code(const PlaneGraph& g) {
    CanonicalCode best;
    best.symbols = rooted_code(g, 0, false);
    std::vector<std::uint16_t> candidate;
    candidate.reserve(best.symbols.size());
    for (int m = 0; m < 2; ++m) {
        for (Dart r = 0; r < g.num_darts(); ++r) {
            if (r == 0 && m == 0) continue;
            Traversal t(g, r, m == 1);
            candidate.clear();
            bool smaller = false;
            std::size_t i = 0;
            for (int s = t.next(); s >= 0; s = t.next(), ++i) {
                candidate.push_back(static_cast<std::uint16_t>(s));
                if (!smaller) {
                    if (s > best.symbols[i]) break;
                    if (s < best.symbols[i]) smaller = true;
                }
            }
            if (smaller) best.symbols = candidate;
        }
    }
    return best;
}

std::string CanonicalCode::to_hex() const {
    // Symbols are small in practice; two hex digits each, wider ones escaped.
    std::string out;
    out.reserve(symbols.size() * 2);
    char buf[8];
    for (std::uint16_t s : symbols) {
        if (s < 0xff) {
            std::snprintf(buf, sizeof buf, "%02x", static_cast<unsigned>(s));
        } else {
            std::snprintf(buf, sizeof buf, "ff%04x", static_cast<unsigned>(s));
        }
        out += buf;
    }
    return out;
}

bool are_isomorphic(const PlaneGraph& g, const PlaneGraph& h) {
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
    return canonical_code(g) == canonical_code(h);
}

namespace {

// Root dart and orientation realizing the canonical code, plus the vertex
// visit order of that traversal.
std::vector<Vertex> canonical_order(const PlaneGraph& g) {
    Dart best_root = 0;
    bool best_mirror = false;
    std::vector<std::uint16_t> best = rooted_code(g, 0, false);
    for (int m = 0; m < 2; ++m) {
        for (Dart r = 0; r < g.num_darts(); ++r) {
            auto code = rooted_code(g, r, m == 1);
            if (code < best) {
                best = std::move(code);
                best_root = r;
                best_mirror = m == 1;
            }
        }
    }
    std::vector<Vertex> order;
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<Dart> first;
    order.push_back(g.origin(best_root));
    first.push_back(best_root);
    seen[order[0]] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Dart d = first[i];
        for (int t = 0; t < g.degree(order[i]); ++t) {
            const Vertex u = g.head(d);
            if (!seen[u]) {
                seen[u] = 1;
                order.push_back(u);
                first.push_back(g.alpha(d));
            }
            d = best_mirror ? g.sigma_inv(d) : g.sigma(d);
        }
    }
    return order;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const PlaneGraph& g, const PlaneGraph& h) {
    if (!are_isomorphic(g, h)) return std::nullopt;
    const auto og = canonical_order(g);
    const auto oh = canonical_order(h);
    std::vector<Vertex> map(g.num_vertices());
    for (std::size_t i = 0; i < og.size(); ++i) map[og[i]] = oh[i];
    return map;
}

bool are_isomorphic_abstract(const PlaneGraph& g, const PlaneGraph& h, int limit) {
    const int n = g.num_vertices();
    if (n > limit || h.num_vertices() > limit) {
        throw Error(Errc::TooLarge, "abstract isomorphism limited to " + std::to_string(limit) + " vertices");
    }
    if (n != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
    std::vector<int> dg(n), dh(n);
    for (Vertex v = 0; v < n; ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    {
        auto a = dg, b = dh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    std::vector<std::vector<char>> adj_h(n, std::vector<char>(n, 0));
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : h.neighbors(v)) adj_h[v][u] = 1;
    }
    std::vector<Vertex> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
        if (v == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || dh[w] != dg[v]) continue;
            bool ok = true;
            for (Vertex u : g.neighbors(v)) {
                if (u < v && !adj_h[map[u]][w]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // Non-edges among mapped vertices must also be preserved.
                int mapped_nbrs = 0;
                for (Vertex u : g.neighbors(v)) mapped_nbrs += u < v;
                int image_nbrs = 0;
                for (Vertex x : h.neighbors(w)) image_nbrs += used[x] ? 1 : 0;
                ok = mapped_nbrs == image_nbrs;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (extend(v + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return extend(0);
}

// ---------------------------------------------------------------------------
// Transformations and text format

PlaneGraph mirror(const PlaneGraph& g) {
    Rotations r = g.rotations();
    for (auto& list : r) std::reverse(list.begin(), list.end());
    return PlaneGraph::build(r);
}

PlaneGraph relabel(const PlaneGraph& g, std::span<const Vertex> perm) {
    const int n = g.num_vertices();
    if (static_cast<int>(perm.size()) != n) throw Error(Errc::InvalidArgument, "permutation size mismatch");
    Rotations r(n);
    for (Vertex v = 0; v < n; ++v) {
        auto& list = r[perm[v]];
        for (Vertex u : g.neighbors(v)) list.push_back(perm[u]);
    }
    return PlaneGraph::build(r);
}

std::string serialize(const PlaneGraph& g) {
    std::string out = "n " + std::to_string(g.num_vertices()) + "\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out += "v " + std::to_string(v) + ":";
        for (Vertex u : g.neighbors(v)) {
            out += ' ';
            out += std::to_string(u);
        }
        out += '\n';
    }
    return out;
}

namespace {

bool parse_int(std::string_view token, int& value) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_spaces(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

PlaneGraph parse(std::string_view text) {
    int n = -1;
    Rotations r;
    std::vector<char> defined;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        auto fail = [&](const std::string& why) {
            throw Error(Errc::SyntaxError, "line " + std::to_string(line_no) + ": " + why);
        };
        auto tokens = split_spaces(line);
        if (n < 0) {
            if (tokens.size() != 2 || tokens[0] != "n" || !parse_int(tokens[1], n) || n < 1) {
                fail("expected header 'n <count>'");
            }
            r.assign(n, {});
            defined.assign(n, 0);
            continue;
        }
        if (tokens.size() < 2 || tokens[0] != "v" || tokens[1].back() != ':') fail("expected 'v <id>: ...'");
        int id = 0;
        if (!parse_int(tokens[1].substr(0, tokens[1].size() - 1), id) || id < 0 || id >= n) fail("bad vertex id");
        if (defined[id]) fail("vertex " + std::to_string(id) + " defined twice");
        defined[id] = 1;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            int u = 0;
            if (!parse_int(tokens[i], u)) fail("bad neighbour '" + std::string(tokens[i]) + "'");
            r[id].push_back(u);
        }
    }
    if (n < 0) throw Error(Errc::SyntaxError, "missing header");
    for (int v = 0; v < n; ++v) {
        if (!defined[v]) throw Error(Errc::SyntaxError, "vertex " + std::to_string(v) + " missing");
    }
    return PlaneGraph::build(r);
}

}  // namespace nplatonic
