#include "nplatonic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nplatonic/classify.hpp"
#include "nplatonic/enumerate.hpp"
#include "nplatonic/families.hpp"
#include "nplatonic/surgery.hpp"
#include "nplatonic/verify.hpp"

namespace nplatonic {

std::string render_dot(const PlaneGraph& g) {
    std::ostringstream os;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        os << "# rotation v" << v << ":";
        for (Vertex w : g.neighbors(v)) os << ' ' << w;
        os << '\n';
    }
    os << "graph G {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) os << "  " << v << ";\n";
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (Vertex w : g.neighbors(v)) {
            if (v < w) edges.push_back({v, w});
        }
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

std::vector<PlaneGraph> parse_many(std::string_view text) {
    std::vector<std::size_t> starts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        if (text.substr(pos, 2) == "n ") starts.push_back(pos);
        pos = end + 1;
    }
    if (starts.empty()) throw Error(Errc::SyntaxError, "no graph in input");
    std::vector<PlaneGraph> out;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        const std::size_t end = i + 1 < starts.size() ? starts[i + 1] : text.size();
        out.push_back(parse(text.substr(starts[i], end - starts[i])));
    }
    return out;
}

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Usage("expected an integer, got '" + s + "'");
}

Solid to_solid(const std::string& s) {
    if (auto solid = solid_from_name(s)) return *solid;
    throw Usage("unknown solid '" + s + "'");
}

PlaneGraph generate_from_args(const std::string& family, const std::vector<std::string>& args) {
    auto want = [&](std::size_t n) {
        if (args.size() != n) throw Usage(family + " takes " + std::to_string(n) + " argument(s)");
    };
    if (family == "platonic") {
        want(1);
        return platonic(to_solid(args[0]));
    }
    if (family == "block-minus-edge") {
        want(1);
        return solid_minus_edge(to_solid(args[0]));
    }
    if (family == "block-split") {
        want(1);
        return vertex_split_block(to_solid(args[0]));
    }
    const auto id = family_from_name(family);
    if (!id) throw Usage("unknown family '" + family + "'");
    want(1);
    return generate(*id, to_int(args[0]));
}

class Session {
public:
    Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    std::string in_path, out_path;

    std::string read_input() {
        std::ostringstream buf;
        if (in_path.empty()) {
            buf << in_.rdbuf();
        } else {
            std::ifstream f(in_path);
            if (!f) throw Error(Errc::InvalidArgument, "cannot open " + in_path);
            buf << f.rdbuf();
        }
        return buf.str();
    }
    PlaneGraph read_one() {
        auto all = parse_many(read_input());
        if (all.size() != 1) throw Error(Errc::SyntaxError, "expected exactly one graph");
        return all.front();
    }
    std::ostream& output() {
        if (out_path.empty()) return out_;
        if (!file_.is_open()) {
            file_.open(out_path);
            if (!file_) throw Error(Errc::InvalidArgument, "cannot write " + out_path);
        }
        return file_;
    }
    std::ostream& log() { return err_; }

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    std::ofstream file_;
};

PlaneGraph apply_surgery(const std::string& op, const std::vector<std::string>& a, const PlaneGraph& g) {
    auto want = [&](std::size_t lo, std::size_t hi) {
        if (a.size() < lo || a.size() > hi) throw Usage("wrong number of arguments for surgery " + op);
    };
    if (op == "mirror") {
        want(0, 0);
        return mirror(g);
    }
    if (op == "split") {
        want(3, 3);
        return split_vertex(g, to_int(a[0]), {to_int(a[1]), to_int(a[2])}).finalize();
    }
    if (op == "amalgamate") {
        want(2, 3);
        std::optional<int> face;
        if (a.size() == 3) face = to_int(a[2]);
        return amalgamate_vertices(g, to_int(a[0]), to_int(a[1]), face).finalize();
    }
    if (op == "chord") {
        want(3, 3);
        return add_chord(g, to_int(a[0]), to_int(a[1]), to_int(a[2])).finalize();
    }
    if (op == "cover") {
        // cut along u-v between faces f1 and f2, then glue c copies
        want(5, 5);
        const Vertex u = to_int(a[0]), v = to_int(a[1]);
        const auto strip = cut_edge(g, {std::min(u, v), std::max(u, v)}, to_int(a[2]), to_int(a[3]));
        return glue_cyclic_copies(strip, to_int(a[4]));
    }
    if (op == "reduce") {
        want(0, 0);
        return reduce_35_l3(g);
    }
    if (op == "expand") {
        want(0, 0);
        return expand_35_l3(g);
    }
    throw Usage("unknown surgery '" + op + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"2-nearly Platonic graph toolkit", "nplatonic"};
    app.require_subcommand(1, 1);
    Session s(in, out, err);
    app.add_option("--in", s.in_path, "read the input graph from a file");
    app.add_option("--out", s.out_path, "write output to a file");

    std::string family;
    std::vector<std::string> gen_args;
    auto* gen = app.add_subcommand("gen", "generate a family member, solid or block");
    gen->add_option("family", family, "family name, 'platonic', 'block-minus-edge' or 'block-split'")->required();
    gen->add_option("args", gen_args, "parameter or solid name")->required();

    auto* classify = app.add_subcommand("classify", "report line for each input graph");

    std::string against;
    bool abstract = false;
    auto* iso = app.add_subcommand("iso", "compare the input graph with another");
    iso->add_option("--against", against, "file holding the other graph")->required();
    iso->add_flag("--abstract", abstract, "ignore the embedding");

    int k = 3, max_n = 0, min_n = 0, threads = default_parallelism();
    std::optional<int> t;
    bool report = false;
    auto* enumerate = app.add_subcommand("enumerate", "k-regular plane graphs up to an order");
    enumerate->add_option("--k", k)->required()->check(CLI::Range(3, 5));
    enumerate->add_option("--max", max_n)->required();
    enumerate->add_option("--min", min_n, "smallest order to print");
    enumerate->add_option("--t", t, "only graphs with this many exceptional faces");
    enumerate->add_flag("--report", report, "classification lines instead of graphs");
    enumerate->add_option("--threads", threads)->check(CLI::PositiveNumber);

    std::string report_file;
    auto* verify = app.add_subcommand("verify", "check the classification over an enumerated range");
    verify->add_option("--k", k)->required()->check(CLI::Range(3, 5));
    verify->add_option("--max", max_n)->required();
    verify->add_option("--report-file", report_file, "machine-readable report (default verify-k<K>-max<N>.tsv)");
    verify->add_option("--threads", threads)->check(CLI::PositiveNumber);

    std::string op;
    std::vector<std::string> op_args;
    auto* surgery = app.add_subcommand("surgery", "mirror | split z first count | amalgamate x y [face] | "
                                                  "chord u v face | cover u v f1 f2 c | reduce | expand");
    surgery->add_option("op", op)->required();
    surgery->add_option("args", op_args);

    std::string format = "dot";
    auto* exporter = app.add_subcommand("export", "write the input graph in another format");
    exporter->add_option("--format", format)->check(CLI::IsMember({"dot"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            s.output() << serialize(generate_from_args(family, gen_args));
        } else if (classify->parsed()) {
            for (const auto& g : parse_many(s.read_input())) s.output() << report_line(g) << "\n";
        } else if (iso->parsed()) {
            const PlaneGraph g = s.read_one();
            std::ifstream f(against);
            if (!f) throw Error(Errc::InvalidArgument, "cannot open " + against);
            std::ostringstream buf;
            buf << f.rdbuf();
            const PlaneGraph h = parse(buf.str());
            const bool same = abstract ? are_isomorphic_abstract(g, h) : are_isomorphic(g, h);
            s.output() << (same ? "isomorphic" : "not isomorphic") << "\n";
        } else if (enumerate->parsed()) {
            EnumSpec spec{k, max_n, Strategy::CanonicalAugmentation, threads};
            bool first = true;
            enumerate_k_regular(spec, [&](const PlaneGraph& g) {
                if (g.num_vertices() < min_n) return;
                if (t) {
                    const auto r = np_report(g);
                    if (!r || r->t != *t) return;
                }
                if (report) {
                    s.output() << report_line(g) << "\n";
                } else {
                    s.output() << (first ? "" : "\n") << serialize(g);
                    first = false;
                }
            });
        } else if (verify->parsed()) {
            const auto r = verify_all(k, max_n, threads);
            s.output() << summary(r);
            if (report_file.empty()) {
                report_file = "verify-k" + std::to_string(k) + "-max" + std::to_string(max_n) + ".tsv";
            }
            std::ofstream f(report_file);
            if (!f) throw Error(Errc::InvalidArgument, "cannot write " + report_file);
            f << machine_report(r);
            s.log() << "report written to " << report_file << "\n";
            return r.ok() ? 0 : 1;
        } else if (surgery->parsed()) {
            s.output() << serialize(apply_surgery(op, op_args, s.read_one()));
        } else if (exporter->parsed()) {
            s.output() << render_dot(s.read_one());
        }
    } catch (const Usage& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace nplatonic
