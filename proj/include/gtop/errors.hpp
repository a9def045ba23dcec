#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "gtop/subset.hpp"

namespace gtop {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A family failed the topology axioms. Witness pair populated for the two
/// closure failures.
struct TopologyError : Error {
    enum class Code { MissingEmptyOrFull, NotClosedUnderUnion, NotClosedUnderIntersection };

    TopologyError(Code c, std::string msg) : Error(std::move(msg)), code(c) {}
    TopologyError(Code c, std::string msg, SubSet a, SubSet b)
        : Error(std::move(msg)), code(c), lhs(a), rhs(b) {}

    Code code;
    std::optional<SubSet> lhs;
    std::optional<SubSet> rhs;
};

/// An explicit operation table failed validation against its host topology.
struct OperationError : Error {
    enum class Code { MissingEntry, ExtraEntry, NotExpansive };

    OperationError(Code c, std::string msg, SubSet w) : Error(std::move(msg)), code(c), witness(w) {}

    Code code;
    SubSet witness;
};

/// A family handed to the subcover search was not a γ-open cover of X.
struct CoverError : Error {
    CoverError(std::string msg, SubSet bad) : Error(std::move(msg)), bad_member(bad) {}
    CoverError(std::string msg, int point) : Error(std::move(msg)), uncovered_point(point) {}

    std::optional<SubSet> bad_member;
    std::optional<int> uncovered_point;
};

/// Enumeration or scan request beyond the exhaustive bounds.
struct ScopeError : Error {
    using Error::Error;
};

/// Space-file syntax or validation failure, with a 1-based source line.
struct ParseError : Error {
    enum class Code { Syntax, UnknownPoint, TopologyInvalid, OperationInvalid };

    ParseError(Code c, int source_line, const std::string& msg)
        : Error("line " + std::to_string(source_line) + ": " + msg), code(c), line(source_line) {}

    Code code;
    int line;
};

}  // namespace gtop
