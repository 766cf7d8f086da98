#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "nplatonic/classify.hpp"
#include "nplatonic/plane_graph.hpp"

namespace nplatonic {

enum class Strategy { CanonicalAugmentation, BruteForceOracle };

struct EnumSpec {
    int k = 3;
    int max_vertices = 4;
    Strategy strategy = Strategy::CanonicalAugmentation;
    int parallelism = 1;
};

/// Optional face-size restriction used to reach larger orders: every face
/// has size `d` except at most `max_exceptional` faces.
struct FaceFilter {
    int d = 0;
    int max_exceptional = 0;
};

using GraphSink = std::function<void(const PlaneGraph&)>;

/// One representative per embedding-isomorphism class (mirror identified) of
/// connected simple k-regular plane graphs with |V| <= max_vertices, ordered
/// by |V| and then by canonical code.
void enumerate_k_regular(const EnumSpec& spec, const GraphSink& sink);

/// Same, for a single order n; the result is sorted by canonical code.
std::vector<PlaneGraph> enumerate_order(int k, int n, int parallelism = 1,
                                        std::optional<FaceFilter> filter = std::nullopt);

/// Independent cross-check: BFS-labeled adjacency backtracking, then every
/// rotation system per graph, Euler filter and canonicalization.
std::set<CanonicalCode> bruteforce_oracle(int k, int n);
bool oracle_supports(int k, int n);

struct NPGraph {
    PlaneGraph graph;
    NPReport report;
};

/// Keeps the graphs whose classification succeeds, optionally only those
/// with exactly `t` exceptional faces.
std::vector<NPGraph> filter_nearly_platonic(const std::vector<PlaneGraph>& graphs, std::optional<int> t = std::nullopt);

/// Default worker count: NPLATONIC_THREADS if set, else 1.
int default_parallelism();

}  // namespace nplatonic
