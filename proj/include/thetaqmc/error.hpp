#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thetaqmc {

/// Malformed graph input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series did not reach the requested tolerance within its term cap.
class SlowConvergenceError : public std::runtime_error {
 public:
  SlowConvergenceError(const std::string& what, double tail_bound)
      : std::runtime_error(what), tail_bound_(tail_bound) {}

  double tail_bound() const noexcept { return tail_bound_; }

 private:
  double tail_bound_;
};

class NotPsdError : public std::runtime_error {
 public:
  NotPsdError(double min_eigenvalue, double tol)
      : std::runtime_error("not PSD within tolerance: lambda_min = " + std::to_string(min_eigenvalue) +
                           ", tol = " + std::to_string(tol)),
        min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

}  // namespace thetaqmc
