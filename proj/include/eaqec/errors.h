#ifndef EAQEC_ERRORS_H
#define EAQEC_ERRORS_H

#include <stdexcept>
#include <string>

namespace eaqec {

/// Malformed text input (matrix files, Pauli strings, exponent matrices).
class ParseError : public std::runtime_error {
   public:
    explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

/// Operands whose shapes do not fit together.
class DimensionError : public std::invalid_argument {
   public:
    explicit DimensionError(const std::string &what) : std::invalid_argument(what) {}
};

}  // namespace eaqec

#endif
