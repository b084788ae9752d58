#pragma once

#include <stdexcept>
#include <string>

namespace bcc {

// Base for everything this library throws on bad input or exhausted resources.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A biclique system violates its structural invariants (empty side, side
// overlap, vertex out of range). Carries the 0-based index of the offender.
class StructureError : public Error {
public:
    StructureError(std::string msg, int biclique_index)
        : Error(std::move(msg)), biclique_index(biclique_index) {}
    int biclique_index;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Size guard or time budget exceeded. The two are distinguishable.
class ResourceError : public Error {
public:
    enum class Kind { Guard, Budget };
    ResourceError(std::string msg, Kind kind) : Error(std::move(msg)), kind(kind) {}
    Kind kind;
};

// Text input could not be parsed; line is 1-based.
class ParseError : public Error {
public:
    ParseError(std::string msg, int line) : Error(std::move(msg)), line(line) {}
    int line;
};

// Random instance generation ran out of retries.
class GenerationError : public Error {
public:
    using Error::Error;
};

// A runtime self-check failed. Seeing this means a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace bcc
