#include "exitgraph/error.h"

namespace exitgraph {

namespace {

std::string format(ErrorKind kind, const std::vector<Label>& labels, const std::string& detail) {
    std::string s(to_string(kind));
    if (!labels.empty()) {
        s += '(';
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(labels[i]);
        }
        s += ')';
    }
    if (!detail.empty()) s += ": " + detail;
    return s;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DuplicatePoint: return "DuplicatePoint";
        case ErrorKind::CollinearTriple: return "CollinearTriple";
        case ErrorKind::TooFewPoints: return "TooFewPoints";
        case ErrorKind::DegenerateLine: return "DegenerateLine";
        case ErrorKind::OnLine: return "OnLine";
        case ErrorKind::SharedEndpoint: return "SharedEndpoint";
        case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
        case ErrorKind::NonDistinctLabels: return "NonDistinctLabels";
        case ErrorKind::NonDistinctSlopes: return "NonDistinctSlopes";
        case ErrorKind::ConcurrentLines: return "ConcurrentLines";
        case ErrorKind::TripleSharedExitVertex: return "TripleSharedExitVertex";
        case ErrorKind::ImmediateDegeneracy: return "ImmediateDegeneracy";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::vector<Label> labels, const std::string& detail)
    : std::runtime_error(format(kind, labels, detail)), kind_(kind), labels_(std::move(labels)) {}

}  // namespace exitgraph
