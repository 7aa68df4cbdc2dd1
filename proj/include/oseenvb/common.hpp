#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace oseenvb {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Violated mesh invariant (orientation, conformity, tagging).
class MeshError : public Error {
public:
    using Error::Error;
};

/// Inconsistent problem or run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Linear solver failure; pivot_index is the permuted column where the
/// factorization broke down, or -1 if unknown.
class SolverError : public Error {
public:
    SolverError(const std::string& what, long pivot_index = -1)
        : Error(what), pivot_index_(pivot_index) {}
    long pivot_index() const noexcept { return pivot_index_; }

private:
    long pivot_index_;
};

/// 2D scalar cross product a x b = a1 b2 - a2 b1.
inline double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Rotation by +90 degrees: (a1, a2) -> (-a2, a1).
inline Vec2 perp(const Vec2& a) { return {-a.y(), a.x()}; }

} // namespace oseenvb
