#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tennis {

/// Deuce closure denominator p_a*p_b + q_a*q_b vanishes (profiles (1,0) and (0,1)).
class SingularProfile : public std::domain_error {
 public:
  explicit SingularProfile(const std::string& what) : std::domain_error(what) {}
};

/// Break-point metrics requested for a schedule where S serves some points.
class MixedServerBreakpoint : public std::logic_error {
 public:
  explicit MixedServerBreakpoint(const std::string& what) : std::logic_error(what) {}
};

/// A simulated game looped through deuce more often than the configured cap.
class DeuceCapExceeded : public std::runtime_error {
 public:
  explicit DeuceCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A value outside its admissible range (probabilities, bounds, cutoffs).
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// Malformed input row; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Cutoff equation has no solution because both serve rates coincide.
class DegenerateProfile : public std::domain_error {
 public:
  explicit DegenerateProfile(const std::string& what) : std::domain_error(what) {}
};

}  // namespace tennis
