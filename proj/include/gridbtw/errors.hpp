#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gridbtw {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- graph construction / access ----

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(std::int64_t index, std::int64_t limit)
        : Error("node index " + std::to_string(index) + " out of range [0, " +
                std::to_string(limit) + ")"),
          index(index), limit(limit) {}
    std::int64_t index;
    std::int64_t limit;
};

struct SelfLoop : Error {
    explicit SelfLoop(std::int64_t node)
        : Error("self-loop at node " + std::to_string(node)), node(node) {}
    std::int64_t node;
};

struct DuplicateEdge : Error {
    DuplicateEdge(std::int64_t u, std::int64_t v)
        : Error("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")"),
          u(u), v(v) {}
    std::int64_t u;
    std::int64_t v;
};

struct NoSuchEdge : Error {
    NoSuchEdge(std::int64_t u, std::int64_t v)
        : Error("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")"),
          u(u), v(v) {}
    std::int64_t u;
    std::int64_t v;
};

// ---- kernels ----

struct PathCountOverflow : Error {
    explicit PathCountOverflow(std::int64_t node)
        : Error("shortest-path count overflows 64 bits at node " + std::to_string(node)),
          node(node) {}
    std::int64_t node;
};

struct StateMismatch : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct ComputeError : Error {
    ComputeError(std::int64_t source, const std::string& what)
        : Error("source " + std::to_string(source) + ": " + what), source(source) {}
    std::int64_t source;
};

// ---- scores / ranking ----

struct NormalizeTooSmall : Error {
    explicit NormalizeTooSmall(std::int64_t n)
        : Error("normalization needs at least 3 nodes, got " + std::to_string(n)), n(n) {}
    std::int64_t n;
};

struct AlreadyNormalized : Error {
    AlreadyNormalized() : Error("scores are already normalized") {}
};

// ---- oracle ----

struct Unreachable : Error {
    Unreachable(std::int64_t s, std::int64_t t)
        : Error("node " + std::to_string(t) + " unreachable from " + std::to_string(s)),
          s(s), t(t) {}
    std::int64_t s;
    std::int64_t t;
};

struct TooLarge : Error {
    using Error::Error;
};

// ---- ingest ----

struct ParseError : Error {
    ParseError(std::int64_t line, const std::string& detail)
        : Error("parse error at line " + std::to_string(line) + ": " + detail), line(line) {}
    explicit ParseError(const std::string& detail) : Error("parse error: " + detail), line(0) {}
    std::int64_t line;
};

struct UnknownBus : Error {
    UnknownBus(std::int64_t branch_index, const std::string& id)
        : Error("branch " + std::to_string(branch_index) + " references unknown bus '" + id + "'"),
          branch_index(branch_index), id(id) {}
    std::int64_t branch_index;
    std::string id;
};

struct EmptyGraph : Error {
    EmptyGraph() : Error("no nodes remain after preprocessing") {}
};

// ---- bench ----

struct ValidationFailed : Error {
    explicit ValidationFailed(const std::string& cell)
        : Error("benchmark cell " + cell + " diverged from the reference scores"), cell(cell) {}
    std::string cell;
};

struct InvalidArgument : Error {
    using Error::Error;
};

}  // namespace gridbtw
