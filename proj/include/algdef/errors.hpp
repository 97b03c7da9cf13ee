#pragma once

#include <stdexcept>
#include <string>

namespace algdef {

/// Malformed serialized input (algebra files, rational literals).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (dimension of two laws, vector lengths, ...).
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A law was handed to an operation defined only on a variety it does not
/// belong to. The message names a violating residual coordinate.
class OffVariety : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two routes that must agree exactly did not. Always a defect.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace algdef
