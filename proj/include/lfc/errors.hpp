#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lfc {

// Base class for all library errors. The CLI maps any lfc::Error to exit
// code 2 unless noted otherwise.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain (bad interval, exponent out of
// range, gamma argument beyond the overflow guard, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A family was invoked with exponents from the wrong regime.
class RegimeError : public Error {
public:
    using Error::Error;
};

// A value raised to a negative exponent fell below the positivity floor.
class PositivityError : public Error {
public:
    PositivityError(const std::string& what, std::ptrdiff_t sample_index)
        : Error(what), sample_index(sample_index) {}
    std::ptrdiff_t sample_index;
};

// Grid functions passed to one check live on different partitions.
class PartitionMismatchError : public Error {
public:
    using Error::Error;
};

// Expression text could not be parsed. `offset` is the byte position of
// the offending token, `expected` describes what the parser wanted there.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset, std::string expected)
        : Error(what), offset(offset), expected(std::move(expected)) {}
    std::size_t offset;
    std::string expected;
};

// Expression evaluation hit a division by zero, a domain violation, or a
// non-finite result. `subexpr` is the printed offending subexpression.
class EvalError : public Error {
public:
    EvalError(const std::string& what, std::string subexpr)
        : Error(what), subexpr(std::move(subexpr)) {}
    std::string subexpr;
};

}  // namespace lfc
