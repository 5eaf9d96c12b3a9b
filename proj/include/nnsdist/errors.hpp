#pragma once

#include <stdexcept>
#include <string>

namespace nnsdist {

// Base of every library failure. Callers that only care about "something
// went wrong inside nnsdist" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class LengthNotPowerOfThree : public Error {
 public:
  using Error::Error;
};

class NonRealInput : public Error {
 public:
  using Error::Error;
};

class NotOrbitConstant : public Error {
 public:
  using Error::Error;
};

class AlphaOutOfInterval : public Error {
 public:
  using Error::Error;
};

class AllZero : public Error {
 public:
  using Error::Error;
};

class NonMonotonePredicate : public Error {
 public:
  using Error::Error;
};

// Neither a witness nor a certificate could be certified at the requested
// tolerances. Carries the raw LP numbers so reports can show them.
class NumericalIndeterminate : public Error {
 public:
  NumericalIndeterminate(const std::string& what, double phase_one_objective,
                         double best_residual, double best_margin)
      : Error(what),
        phase_one_objective_(phase_one_objective),
        best_residual_(best_residual),
        best_margin_(best_margin) {}

  double phase_one_objective() const noexcept { return phase_one_objective_; }
  double best_residual() const noexcept { return best_residual_; }
  double best_margin() const noexcept { return best_margin_; }

 private:
  double phase_one_objective_;
  double best_residual_;
  double best_margin_;
};

}  // namespace nnsdist
