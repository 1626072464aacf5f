#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace exitgraph {

using Label = std::size_t;

enum class ErrorKind {
    DuplicatePoint,
    CollinearTriple,
    TooFewPoints,
    DegenerateLine,
    OnLine,
    SharedEndpoint,
    LabelOutOfRange,
    NonDistinctLabels,
    NonDistinctSlopes,
    ConcurrentLines,
    TripleSharedExitVertex,
    ImmediateDegeneracy,
    SizeMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Precondition and input violations raised by the library. The labels
/// identify the offending points or lines, when there are any.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::vector<Label> labels = {}, const std::string& detail = {});

    ErrorKind kind() const { return kind_; }
    const std::vector<Label>& labels() const { return labels_; }

private:
    ErrorKind kind_;
    std::vector<Label> labels_;
};

}  // namespace exitgraph
