#pragma once

#include <stdexcept>
#include <string>

namespace dirac1d {

// Base class for every failure that stems from the mathematics (as opposed
// to malformed input, which is reported with std::invalid_argument).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class BranchPointError : public NumericalError {
 public:
  explicit BranchPointError(const std::string& what) : NumericalError(what) {}
};

class SingularMatrixError : public NumericalError {
 public:
  explicit SingularMatrixError(const std::string& what) : NumericalError(what) {}
};

class NotHermitianError : public NumericalError {
 public:
  explicit NotHermitianError(const std::string& what) : NumericalError(what) {}
};

class DegenerateCaseError : public NumericalError {
 public:
  explicit DegenerateCaseError(const std::string& what) : NumericalError(what) {}
};

class NotInResolventSetError : public NumericalError {
 public:
  explicit NotInResolventSetError(const std::string& what) : NumericalError(what) {}
};

class ContourOnZeroError : public NumericalError {
 public:
  explicit ContourOnZeroError(const std::string& what) : NumericalError(what) {}
};

class EigenvalueHitError : public NumericalError {
 public:
  explicit EigenvalueHitError(const std::string& what) : NumericalError(what) {}
};

class OnCutError : public NumericalError {
 public:
  explicit OnCutError(const std::string& what) : NumericalError(what) {}
};

class DegenerateConditionError : public NumericalError {
 public:
  explicit DegenerateConditionError(const std::string& what) : NumericalError(what) {}
};

class ResolutionError : public NumericalError {
 public:
  explicit ResolutionError(const std::string& what) : NumericalError(what) {}
};

class QuadratureError : public NumericalError {
 public:
  explicit QuadratureError(const std::string& what) : NumericalError(what) {}
};

}  // namespace dirac1d
