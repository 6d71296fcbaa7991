#pragma once

#include <stdexcept>
#include <string>

namespace mdseries {

// Precondition violation or API misuse. CLI exit code 2.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A symbolic limit at L -> infinity does not exist: the numerator degree
// exceeds the denominator degree. Always indicates a bug or an inconsistent
// input sequence. CLI exit code 3.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// An identity the pipeline relies on failed to hold (reversion identity,
// diagonal coefficient, fixed-point stabilization, ...). CLI exit code 3.
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace mdseries
