#include "nplatonic/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nplatonic/enumerate.hpp"

namespace nplatonic {

bool verify_vertex_count_law(const NPReport& report, const PlaneGraph& g) {
    if (report.type() != NPType{5, 3} || report.t != 2) {
        throw Error(Errc::WrongType, "the vertex count law concerns (5|3) graphs with two exceptional faces");
    }
    const FaceSet fs = trace_faces(g);
    if (touching_status(g, fs, report).kind != Touching::Kind::NonTouching) {
        throw Error(Errc::WrongType, "the exceptional faces touch");
    }
    const auto s = report.exceptional_sizes();
    return g.num_vertices() == 2 * (s[0] + s[1]);
}

std::vector<std::string> check_touching_chain(const PlaneGraph& g, const NPReport& report,
                                              std::vector<BlockDescriptor>* blocks) {
    std::vector<std::string> problems;
    if (report.t != 2) return {"not a 2-nearly Platonic graph"};
    const FaceSet fs = trace_faces(g);
    const int fa = report.exceptional[0].face, fb = report.exceptional[1].face;
    const int n = g.num_vertices();
    const int k = report.k;

    Rotations rot = g.rotations();
    std::vector<char> on_edge_connector(n, 0);
    int edge_connectors = 0;
    for (Dart d = 0; d < g.num_darts(); ++d) {
        if (fs.dart_to_face[d] == fa && fs.dart_to_face[g.alpha(d)] == fb) {
            const Vertex u = g.origin(d), v = g.head(d);
            on_edge_connector[u] = on_edge_connector[v] = 1;
            std::erase(rot[u], v);
            std::erase(rot[v], u);
            ++edge_connectors;
        }
    }

    // Shared vertices that are not the end of a connecting edge get split
    // between the two exceptional faces. owner[v][w] is the copy of v that
    // keeps the neighbour w.
    std::vector<Vertex> copy_of(n, -1);
    std::vector<std::map<Vertex, Vertex>> owner(n);
    const Touching touch = touching_status(g, fs, report);
    int vertex_connectors = 0;
    for (Vertex v : touch.shared) {
        if (on_edge_connector[v]) continue;
        const int deg = g.degree(v);
        int p = -1, q = -1;
        for (int i = 0; i < deg; ++i) {
            const int f = fs.dart_to_face[g.first_dart(v) + i];
            if (f == fa) p = i;
            if (f == fb) q = i;
        }
        const Vertex fresh = static_cast<Vertex>(rot.size());
        copy_of[v] = fresh;
        std::vector<Vertex> keep, moved;
        for (int i = 0; i < deg; ++i) {
            const int pos = (p + i) % deg;
            const Vertex w = g.neighbors(v)[pos];
            const bool first_arc = i < (q - p + deg) % deg;
            (first_arc ? keep : moved).push_back(w);
            owner[v][w] = first_arc ? v : fresh;
        }
        rot[v] = keep;
        rot.push_back(moved);
        ++vertex_connectors;
    }
    for (Vertex v = 0; v < static_cast<Vertex>(rot.size()); ++v) {
        for (Vertex& w : rot[v]) {
            const Vertex orig = v < n ? v : static_cast<Vertex>(std::find(copy_of.begin(), copy_of.end(), v) -
                                                                copy_of.begin());
            if (w < n && copy_of[w] >= 0) w = owner[w].at(orig);
        }
    }

    const int connectors = edge_connectors + vertex_connectors;
    if (edge_connectors > 0 && vertex_connectors > 0) {
        problems.push_back("mixed edge and vertex connections");
    }

    // Components of the remainder, each a candidate block.
    const int total = static_cast<int>(rot.size());
    std::vector<int> comp(total, -1);
    std::vector<std::vector<Vertex>> members;
    for (Vertex s = 0; s < total; ++s) {
        if (comp[s] >= 0) continue;
        members.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s] = static_cast<int>(members.size()) - 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            members.back().push_back(v);
            for (Vertex w : rot[v]) {
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
            }
        }
    }
    if (static_cast<int>(members.size()) != connectors) {
        problems.push_back(std::to_string(members.size()) + " links for " + std::to_string(connectors) +
                           " connections");
    }

    std::vector<BlockDescriptor> found;
    for (auto& part : members) {
        std::sort(part.begin(), part.end());
        std::vector<Vertex> local(total, -1);
        for (int i = 0; i < static_cast<int>(part.size()); ++i) local[part[i]] = i;
        Rotations sub(part.size());
        for (int i = 0; i < static_cast<int>(part.size()); ++i) {
            for (Vertex w : rot[part[i]]) sub[i].push_back(local[w]);
        }
        try {
            const PlaneGraph link = PlaneGraph::build(sub);
            const FaceSet lf = trace_faces(link);
            int outer = -1, odd = 0;
            for (int f = 0; f < lf.num_faces(); ++f) {
                if (lf.faces[f].size() != report.d) {
                    outer = f;
                    ++odd;
                }
            }
            if (odd != 1) {
                problems.push_back("link with " + std::to_string(odd) + " faces of unexpected size");
                continue;
            }
            found.push_back(block_signature(link, outer));
        } catch (const Error& e) {
            problems.push_back(std::string("link rejected: ") + e.what());
        }
    }

    for (const auto& b : found) {
        const bool edge_kind = edge_connectors > 0 && b.k1 == k - 1 && b.k2 == k - 1;
        const bool vertex_kind = vertex_connectors > 0 && b.k1 + b.k2 == k;
        if (b.k != k || b.d != report.d || !(edge_kind || vertex_kind)) {
            problems.push_back("unexpected link " + b.to_string());
        }
        const auto& f = found.front();
        if (b.k1 != f.k1 || b.k2 != f.k2 || b.a != f.a || b.b != f.b) {
            problems.push_back("links differ: " + f.to_string() + " vs " + b.to_string());
        }
    }
    if (blocks) *blocks = std::move(found);
    return problems;
}

namespace {

std::string describe(const CanonicalCode& code, int n) {
    return "|V|=" + std::to_string(n) + " code " + code.to_hex();
}

void check_2np(const PlaneGraph& g, const NPReport& r, VerificationReport& out) {
    NP2Entry e;
    e.code = canonical_code(g);
    e.num_vertices = g.num_vertices();
    e.type = r.type();
    e.sizes = r.exceptional_sizes();
    e.balanced = r.balanced;
    const FaceSet fs = trace_faces(g);
    const Touching touch = touching_status(g, fs, r);
    e.touching = touch.kind != Touching::Kind::NonTouching;
    e.distance = face_distance(g, fs, r.exceptional[0].face, r.exceptional[1].face);
    e.family = identify_family(g, r);

    const std::string who = describe(e.code, e.num_vertices) + " type " + r.type().to_string();
    auto violation = [&](const std::string& what) { out.violations.push_back(who + ": " + what); };

    if (!r.balanced) violation("unbalanced");
    if (!e.family) violation("no family match");
    if (touch.kind == Touching::Kind::SelfTouching) violation("self-touching exceptional face");
    if (touch.kind == Touching::Kind::Touching) {
        for (const auto& p : check_touching_chain(g, r)) violation("chain: " + p);
    }
    if (touch.kind == Touching::Kind::NonTouching) {
        if (r.type() == NPType{3, 5} && e.distance != 1 && e.distance != 3) {
            violation("distance " + std::to_string(e.distance));
        }
        if (r.type() == NPType{5, 3}) {
            if (e.distance != 1 && e.distance != 2) violation("distance " + std::to_string(e.distance));
            if (!verify_vertex_count_law(r, g)) violation("|V| != 2(m+n)");
        }
    }
    out.np2_found.push_back(std::move(e));
}

VerificationReport run(int k, int max_vertices, int parallelism, bool np1, bool np2) {
    VerificationReport out;
    out.k = k;
    out.max_vertices = max_vertices;
    EnumSpec spec;
    spec.k = k;
    spec.max_vertices = max_vertices;
    spec.parallelism = parallelism;
    for (int n = k + 1; n <= max_vertices; ++n) {
        if ((k * n) % 2 == 0) out.counts[n] = 0;
    }
    enumerate_k_regular(spec, [&](const PlaneGraph& g) {
        ++out.counts[g.num_vertices()];
        const auto c = classify_nearly_platonic(g);
        const auto* r = std::get_if<NPReport>(&c);
        if (!r) return;
        if (np1 && r->t == 1) {
            out.np1_found.push_back(canonical_code(g));
            out.violations.push_back(describe(out.np1_found.back(), g.num_vertices()) +
                                     ": one exceptional face");
        }
        if (np2 && r->t == 2) check_2np(g, *r, out);
    });
    return out;
}

}  // namespace

VerificationReport verify_no_1np(int k, int max_vertices, int parallelism) {
    return run(k, max_vertices, parallelism, true, false);
}

VerificationReport verify_2np_classification(int k, int max_vertices, int parallelism) {
    return run(k, max_vertices, parallelism, false, true);
}

VerificationReport verify_all(int k, int max_vertices, int parallelism) {
    return run(k, max_vertices, parallelism, true, true);
}

std::string summary(const VerificationReport& r) {
    std::ostringstream os;
    os << "k=" << r.k << " max=" << r.max_vertices << "\n";
    long total = 0;
    for (const auto& [n, c] : r.counts) {
        os << "  |V|=" << n << ": " << c << " graphs\n";
        total += c;
    }
    std::map<std::string, int> by_family;
    for (const auto& e : r.np2_found) {
        by_family[e.family ? std::string(family_name(e.family->id)) : "unrecognized"]++;
    }
    os << "graphs: " << total << "\n";
    os << "1-nearly Platonic: " << r.np1_found.size() << "\n";
    os << "2-nearly Platonic: " << r.np2_found.size() << "\n";
    for (const auto& [name, c] : by_family) os << "  " << name << ": " << c << "\n";
    os << "violations: " << r.violations.size() << "\n";
    for (const auto& v : r.violations) os << "  " << v << "\n";
    return os.str();
}

std::string machine_report(const VerificationReport& r) {
    std::ostringstream os;
    os << "# verify k=" << r.k << " max=" << r.max_vertices << "\n";
    for (const auto& e : r.np2_found) {
        os << e.code.to_hex() << '\t' << e.num_vertices << '\t' << e.type.k << '\t' << e.type.d << "\t2\t";
        for (std::size_t i = 0; i < e.sizes.size(); ++i) os << (i ? " " : "") << e.sizes[i];
        os << '\t' << (e.balanced ? "balanced" : "unbalanced") << '\t';
        if (e.family) {
            os << family_name(e.family->id) << '\t' << e.family->param;
        } else {
            os << "-\t-";
        }
        os << "\n";
    }
    os << "# violations " << r.violations.size() << "\n";
    for (const auto& v : r.violations) os << v << "\n";
    return os.str();
}

}  // namespace nplatonic
