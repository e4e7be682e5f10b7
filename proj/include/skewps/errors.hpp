#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewps {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing BaseCoeff values from different base rings.
class KindMismatchError : public Error {
public:
    using Error::Error;
};

// Inverting a non-unit (constant term in the maximal ideal).
class NonUnitError : public Error {
public:
    using Error::Error;
};

// Asking for the degree of a zero monomial.
class ZeroMonomialError : public Error {
public:
    using Error::Error;
};

// Asking for the symbol of the zero element.
class ZeroElementError : public Error {
public:
    using Error::Error;
};

// An element involves generators at or above the level it is used at.
class SupportError : public Error {
public:
    using Error::Error;
};

// Combining elements or series built over different presentations.
class PresentationMismatchError : public Error {
public:
    using Error::Error;
};

// Raising the truncation order of a series (the information does not exist).
class OrderRaiseError : public Error {
public:
    using Error::Error;
};

// Invalid constructor parameters; the message names the violated invariant.
class InvalidParamsError : public Error {
public:
    using Error::Error;
};

// Syntax error in an expression, config file or series file.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t byte_pos)
        : Error(what + " at byte " + std::to_string(byte_pos)), pos(byte_pos) {}
    std::size_t pos;
};

// Reference to a generator name the presentation does not have.
class UnknownGeneratorError : public Error {
public:
    UnknownGeneratorError(const std::string& gen_name, std::size_t byte_pos)
        : Error("unknown generator '" + gen_name + "' at byte " + std::to_string(byte_pos)),
          name(gen_name),
          pos(byte_pos) {}
    std::string name;
    std::size_t pos;
};

// A broken internal invariant; seeing this is a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace skewps
