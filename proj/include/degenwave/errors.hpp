#ifndef DEGENWAVE_ERRORS_HPP
#define DEGENWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degenwave {

// A parameter pair (alpha, beta) sits too close to a singular configuration
// of the solution family (csc/sec blowup).
class ParamDegenerateError : public std::runtime_error {
 public:
  ParamDegenerateError(std::string condition, double margin)
      : std::runtime_error("degenerate parameters: " + condition +
                           " (margin " + std::to_string(margin) + ")"),
        condition_(std::move(condition)),
        margin_(margin) {}

  const std::string& condition() const { return condition_; }
  double margin() const { return margin_; }

 private:
  std::string condition_;
  double margin_;
};

// No real angle solves the requested constraint.
class NoSolutionError : public std::runtime_error {
 public:
  explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};

// A planar direction needed for an angle comparison has (numerically) zero length.
class DegenerateDirectionError : public std::runtime_error {
 public:
  explicit DegenerateDirectionError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid physical input (nonpositive mass, zero denominator, bad branch angle).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Scenario file could not be parsed or fails validation; message names the key.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace degenwave

#endif
