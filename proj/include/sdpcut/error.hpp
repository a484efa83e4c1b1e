#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sdpcut {

enum class Errc {
    // input parsing
    ParseError,
    DuplicateEdge,
    SelfLoop,
    VertexOutOfRange,
    // violated preconditions
    LabelSizeMismatch,
    OutOfRangeVertex,
    InvalidPlan,
    InvalidEpsilon,
    EpsilonTooLarge,
    NotEnoughTriangles,
    NotAPartition,
    NotACutOfInducedSubgraph,
    NotKrFree,
    CliqueFound,
    TooFewVertices,
    ImproperColoring,
    InfeasibleDegree,
    InfeasibleSpec,
    InvalidArgument,
    // resource limits
    BudgetExceeded,
    RetryLimitExceeded,
};

inline const char* errc_name(Errc e) {
    switch (e) {
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::LabelSizeMismatch: return "LabelSizeMismatch";
    case Errc::OutOfRangeVertex: return "OutOfRangeVertex";
    case Errc::InvalidPlan: return "InvalidPlan";
    case Errc::InvalidEpsilon: return "InvalidEpsilon";
    case Errc::EpsilonTooLarge: return "EpsilonTooLarge";
    case Errc::NotEnoughTriangles: return "NotEnoughTriangles";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NotACutOfInducedSubgraph: return "NotACutOfInducedSubgraph";
    case Errc::NotKrFree: return "NotKrFree";
    case Errc::CliqueFound: return "CliqueFound";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::ImproperColoring: return "ImproperColoring";
    case Errc::InfeasibleDegree: return "InfeasibleDegree";
    case Errc::InfeasibleSpec: return "InfeasibleSpec";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::RetryLimitExceeded: return "RetryLimitExceeded";
    }
    return "Unknown";
}

/// Process exit code associated with an error: 2 for malformed input,
/// 4 for exhausted budgets, 3 for every other violated precondition.
inline int exit_code(Errc e) {
    switch (e) {
    case Errc::ParseError:
    case Errc::DuplicateEdge:
    case Errc::SelfLoop:
    case Errc::VertexOutOfRange:
        return 2;
    case Errc::BudgetExceeded:
    case Errc::RetryLimitExceeded:
        return 4;
    default:
        return 3;
    }
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Raised when a graph assumed to be K_r-free turns out to contain K_r.
/// Carries the offending clique.
class CliqueFound : public Error {
public:
    explicit CliqueFound(std::vector<int> witness)
        : Error(Errc::CliqueFound, "graph contains a clique of size " + std::to_string(witness.size())),
          witness_(std::move(witness)) {}

    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

} // namespace sdpcut
