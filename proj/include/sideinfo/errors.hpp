#pragma once

#include <stdexcept>
#include <string>

namespace sideinfo {

/// Input violated a probability or shape invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Problem-spec file is not syntactically valid.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested distortion level below the feasible minimum.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, double d_min)
        : std::runtime_error(what), d_min_(d_min) {}
    double d_min() const noexcept { return d_min_; }

private:
    double d_min_;
};

/// Enumeration count or memory requirement exceeded a configured cap.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sideinfo
