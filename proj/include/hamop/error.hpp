#pragma once

#include <stdexcept>
#include <string>

namespace hamop {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct TableMismatch : Error {
    explicit TableMismatch(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// non-exact division is reported distinctly from division by zero
struct NotExactDivision : Error {
    explicit NotExactDivision(const std::string& msg) : Error(msg) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

struct SingularError : Error {
    explicit SingularError(const std::string& msg) : Error(msg) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& msg) : Error(msg) {}
};

struct UnsupportedInput : Error {
    explicit UnsupportedInput(const std::string& msg) : Error(msg) {}
};

}  // namespace hamop
