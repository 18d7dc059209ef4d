#pragma once

#include <stdexcept>
#include <string>

namespace umtlab {

// Caller passed structurally invalid options (missing star index, empty
// family, bad config file, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric parameter outside its admissible range.
class ParameterError : public std::runtime_error {
 public:
  explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched space sizes between objects that must agree.
class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a documented precondition (non-bijective permutation,
// loss value outside [0,1], ...).
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Requested computation exceeds the configured enumeration or memory cap.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Lower-bound parameters violate the admissibility inequality.
class AdmissibilityError : public ParameterError {
 public:
  explicit AdmissibilityError(const std::string& what) : ParameterError(what) {}
};

// Replicates disagree on checkpoints or metrics during aggregation.
class AggregationError : public std::runtime_error {
 public:
  explicit AggregationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace umtlab
