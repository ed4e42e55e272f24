#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hnkit {

/// Two operands live in polynomial rings with different variable counts.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold for the input.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two independent computational routes disagreed. Always an implementation bug.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A bounded search ended before the property it looks for was observed.
class SearchCapExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset)
        : std::runtime_error(message + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace hnkit
