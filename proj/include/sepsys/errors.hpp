#pragma once

#include <stdexcept>
#include <string>

namespace sepsys {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input word length does not match the system's component count.
struct DimensionError : Error {
    using Error::Error;
};

// An enumeration cap (component count, edge count) was exceeded.
struct SizeError : Error {
    using Error::Error;
};

// The input violates a structural precondition (non-monotone system,
// comparable mincuts, ...).
struct ModelError : Error {
    using Error::Error;
};

// Parameter outside the operation's domain (N < 4 for the S_N family, ...).
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ConnectivityError : Error {
    using Error::Error;
};

// Operation requires a separable graph class.
struct ClassError : Error {
    using Error::Error;
};

// A claimed witness (cost assignment, certificate) does not check out.
struct WitnessError : Error {
    using Error::Error;
};

struct DegenerateError : Error {
    using Error::Error;
};

} // namespace sepsys
