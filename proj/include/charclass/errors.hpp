#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charclass {

// Input text that does not conform to a grammar. CLI exit code 1.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A mathematical precondition fails for the given input. CLI exit code 2.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Soft failure: the requested cutoff was reached without a certificate, or a
// singular locus turned out not to be zero-dimensional. CLI exit code 2.
class NonIsolatedError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// An identity the engine checks internally failed to hold. CLI exit code 3.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace charclass
