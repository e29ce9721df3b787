#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pollflow {

// Bad input data or broken type invariants. CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File / stream problems. CLI exit code 4.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The optimizer could not find any plan satisfying the constraints.
// Carries the (location, day) pairs that made the instance infeasible,
// when they are known. CLI exit code 3.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
    InfeasibleError(const std::string& what, std::vector<std::pair<std::string, int>> pairs)
        : std::runtime_error(what), offending_(std::move(pairs)) {}

    const std::vector<std::pair<std::string, int>>& offending_pairs() const { return offending_; }

private:
    std::vector<std::pair<std::string, int>> offending_;
};

} // namespace pollflow
