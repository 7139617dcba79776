#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwbox {

/// Thrown when a standard deviation is zero or negative.
struct NonPositiveSigma : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a variance exceeds the model bound of 1.
struct SigmaOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a box and its Gaussian model disagree on the mean.
struct MeanMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a perturbed covariance has a negative diagonal entry.
struct InvalidPerturbation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when the division count of the uncertainty algorithm is below 5.
struct KTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonFiniteObjective : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Diverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a counterexample search exhausts its trial budget.
struct NoneFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a rank correlation is requested over a constant variable.
struct DegenerateRanks : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input-file validation failure; carries the 1-based line and the offending field.
class ValidationError : public std::runtime_error {
  public:
    ValidationError(std::size_t line, std::string field, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": field '" + field +
                             "': " + what),
          line_(line),
          field_(std::move(field)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

  private:
    std::size_t line_;
    std::string field_;
};

}  // namespace gwbox
