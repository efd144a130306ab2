#pragma once

#include <stdexcept>
#include <string>

namespace qe {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: unreadable JSON documents, bad expressions, cyclic cover
/// relations.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A polytope/linear-form pair failed the Positivity or Genericity check.
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// An operation was called outside its contract (e.g. special value of a
/// polytope with interior lattice points).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A built-in consistency check failed; signals a bug, never expected.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace qe
