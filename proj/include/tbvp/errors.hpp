#ifndef TBVP_ERRORS_HPP
#define TBVP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tbvp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownCatalogEntry : public Error {
public:
    explicit UnknownCatalogEntry(const std::string& name)
        : Error("unknown catalog function '" + name + "'") {}
};

class BadParams : public Error {
public:
    using Error::Error;
};

/// A point or interval lies outside the domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

class UnsupportedNorm : public Error {
public:
    explicit UnsupportedNorm(int p)
        : Error("unsupported norm L^" + std::to_string(p) + " (only p = 1, 2)") {}
};

/// Grid shape violations and mismatched grids.
class GridError : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside the trapezoidal region of determinacy.
class OutOfRegion : public Error {
public:
    using Error::Error;
};

/// Edge-strip scaling with a vanishing divisor integral.
class DegenerateScaling : public Error {
public:
    using Error::Error;
};

class BadDelta : public Error {
public:
    using Error::Error;
};

}  // namespace tbvp

#endif  // TBVP_ERRORS_HPP
