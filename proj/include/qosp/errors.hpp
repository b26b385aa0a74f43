#pragma once

#include <stdexcept>
#include <string>

namespace qosp {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct IncompatibleRadicals : std::invalid_argument {
    explicit IncompatibleRadicals(const std::string& what) : std::invalid_argument(what) {}
};

struct PoleAtSample : std::domain_error {
    explicit PoleAtSample(const std::string& what) : std::domain_error(what) {}
};

struct SeriesPole : std::domain_error {
    explicit SeriesPole(const std::string& what) : std::domain_error(what) {}
};

struct NonSolvableLeadingTerm : std::domain_error {
    explicit NonSolvableLeadingTerm(const std::string& what) : std::domain_error(what) {}
};

struct StepBudgetExceeded : std::runtime_error {
    explicit StepBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qosp
