#pragma once

#include <stdexcept>
#include <string>

namespace mixgauge {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad argument or violated precondition (negative radius, t not a power of
// two, overlapping shapes, ...).
class domain_error : public error {
public:
    using error::error;
};

// Invalid geometry: self-intersecting polygon, degenerate interval, ...
class geometry_error : public error {
public:
    using error::error;
};

// Shape escapes the dyadic root frame.
class frame_error : public error {
public:
    using error::error;
};

// Depth/level caps exceeded.
class resource_error : public error {
public:
    using error::error;
};

// Cell list fails the cover audit in the certifier.
class coverage_error : public error {
public:
    using error::error;
};

// Operation not defined for this shape/dimension.
class unsupported_error : public error {
public:
    using error::error;
};

// File I/O failure (used by the CLI layer).
class io_error : public error {
public:
    using error::error;
};

} // namespace mixgauge
