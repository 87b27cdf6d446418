#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ifsim {

/// A value violates a domain constraint (component out of range, bad exponent).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two IFSs (or an IFS and a weight vector) do not share the same universe.
class AlignmentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One problem found while validating an input document, with its location.
struct Violation {
    std::string where;    // e.g. "rows[2].values[1]"
    std::string message;  // e.g. "mu+nu = 1.2 exceeds 1"
};

/// Every violation found in one validation pass, aggregated.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : std::runtime_error(render(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string render(const std::vector<Violation>& violations) {
        std::string out = "input validation failed";
        for (const auto& v : violations) {
            out += "\n  " + v.where + ": " + v.message;
        }
        return out;
    }

    std::vector<Violation> violations_;
};

/// The input document is not syntactically parseable at all.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ifsim
