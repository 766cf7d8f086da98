#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nplatonic/classify.hpp"
#include "nplatonic/families.hpp"
#include "nplatonic/plane_graph.hpp"

namespace nplatonic {

struct NP2Entry {
    CanonicalCode code;
    int num_vertices = 0;
    NPType type;
    std::vector<int> sizes;
    bool balanced = false;
    bool touching = false;
    int distance = 0;  // 0 when touching
    std::optional<FamilyInstance> family;
};

struct VerificationReport {
    int k = 0;
    int max_vertices = 0;
    std::map<int, long> counts;  // |V| -> number of k-regular plane graphs
    std::vector<CanonicalCode> np1_found;
    std::vector<NP2Entry> np2_found;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

VerificationReport verify_no_1np(int k, int max_vertices, int parallelism = 1);
VerificationReport verify_2np_classification(int k, int max_vertices, int parallelism = 1);
/// Both checks over a single enumeration pass.
VerificationReport verify_all(int k, int max_vertices, int parallelism = 1);

/// |V| = 2(m + n) for a non-touching (5|3) graph with exceptional sizes m, n.
/// Throws WrongType for anything else.
bool verify_vertex_count_law(const NPReport& report, const PlaneGraph& g);

/// Checks a touching 2-NP graph against the chain description: removing the
/// edges between the two exceptional faces and splitting their shared
/// vertices leaves copies of one block. Returns the problems found (empty
/// when the graph is a proper chain); `blocks` receives the signature of
/// every link.
std::vector<std::string> check_touching_chain(const PlaneGraph& g, const NPReport& report,
                                              std::vector<BlockDescriptor>* blocks = nullptr);

/// Human-readable summary and the machine-readable file body.
std::string summary(const VerificationReport& r);
std::string machine_report(const VerificationReport& r);

}  // namespace nplatonic
