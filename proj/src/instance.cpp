#include "sethforge/instance.hpp"

#include <array>

namespace sethforge {

std::string kind_name(ProblemKind k) {
    switch (k) {
        case ProblemKind::IndependentSet: return "IndependentSet";
        case ProblemKind::DominatingSet: return "DominatingSet";
        case ProblemKind::MaxCut: return "MaxCut";
        case ProblemKind::QColoring: return "QColoring";
        case ProblemKind::QListColoring: return "QListColoring";
        case ProblemKind::OddCycleTransversal: return "OddCycleTransversal";
        case ProblemKind::TrianglePacking: return "TrianglePacking";
        case ProblemKind::PartitionIntoTriangles: return "PartitionIntoTriangles";
    }
    fail("invalid-kind", "unknown kind enum");
}

ProblemKind kind_from_name(const std::string& s) {
    static const std::array<ProblemKind, 8> all = {
        ProblemKind::IndependentSet,      ProblemKind::DominatingSet,
        ProblemKind::MaxCut,              ProblemKind::QColoring,
        ProblemKind::QListColoring,       ProblemKind::OddCycleTransversal,
        ProblemKind::TrianglePacking,     ProblemKind::PartitionIntoTriangles};
    for (ProblemKind k : all)
        if (kind_name(k) == s) return k;
    fail("invalid-kind", "unknown kind: " + s);
}

std::string sense_name(Sense s) {
    switch (s) {
        case Sense::at_least: return "at_least";
        case Sense::at_most: return "at_most";
        case Sense::feasible: return "feasible";
    }
    fail("invalid-sense", "unknown sense enum");
}

Sense sense_from_name(const std::string& s) {
    if (s == "at_least") return Sense::at_least;
    if (s == "at_most") return Sense::at_most;
    if (s == "feasible") return Sense::feasible;
    fail("invalid-sense", "unknown sense: " + s);
}

int Instance::validate() const {
    int w = validate_path_decomposition(graph, decomposition);
    if (w > claimed_width_bound)
        fail("width-bound-violated", "decomposition width " + std::to_string(w) + " exceeds claimed bound " +
                                         std::to_string(claimed_width_bound));
    if ((sense == Sense::feasible) == target.has_value())
        fail("target-sense-mismatch", "target must be present exactly when sense is not 'feasible'");
    if (kind == ProblemKind::QListColoring && lists.empty())
        fail("missing-lists", "list coloring instance carries no lists");
    return w;
}

} // namespace sethforge
