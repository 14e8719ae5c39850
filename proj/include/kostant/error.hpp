#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kostant {

// Base for every domain error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IllegalRank : public Error {
public:
    using Error::Error;
};

class InvalidDiagram : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class IllegalMove : public Error {
public:
    IllegalMove(int vertex, const std::string& why)
        : Error("illegal move at vertex " + std::to_string(vertex) + ": " + why), vertex_(vertex) {}
    int vertex() const noexcept { return vertex_; }

private:
    int vertex_;
};

// A play that breaks at some step; step k is the k-th move (1-based).
class InvalidMoveAt : public Error {
public:
    InvalidMoveAt(std::size_t step, int vertex)
        : Error("move " + std::to_string(step) + " (vertex " + std::to_string(vertex) +
                ") is not a sad vertex"),
          step_(step), vertex_(vertex) {}
    std::size_t step() const noexcept { return step_; }
    int vertex() const noexcept { return vertex_; }

private:
    std::size_t step_;
    int vertex_;
};

class ModeMismatch : public Error {
public:
    using Error::Error;
};

class NotReduced : public Error {
public:
    using Error::Error;
};

class LetterOutsideJ : public Error {
public:
    using Error::Error;
};

class NotGrassmannian : public Error {
public:
    using Error::Error;
};

class InvalidPlay : public Error {
public:
    using Error::Error;
};

class PlacementImpossible : public Error {
public:
    using Error::Error;
};

class NotSimplyLaced : public Error {
public:
    using Error::Error;
};

class Disconnected : public Error {
public:
    using Error::Error;
};

class NotFiniteType : public Error {
public:
    using Error::Error;
};

class NonTerminating : public Error {
public:
    using Error::Error;
};

class LimitExceeded : public Error {
public:
    using Error::Error;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Two independent computations disagreed. Always a bug, never user error.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

}  // namespace kostant
