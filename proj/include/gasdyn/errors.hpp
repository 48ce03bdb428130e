#ifndef GASDYN_ERRORS_HPP_
#define GASDYN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gasdyn {

enum class Err {
  InvalidState,      // nonpositive density/pressure or malformed state
  ModeError,         // operation not defined for the gas model's mode
  VacuumFormation,   // Riemann data would open a vacuum
  NoConvergence,     // root finder exhausted its budget
  NotADiscontinuity, // RH residual too large for an admissibility verdict
  GeometryMismatch,  // grids of different shape/spacing
  InsufficientData,  // not enough refinement levels
  UnknownProblem,    // name not in the problem catalog
  SingularJacobian,  // numeric eigensolve failed
  NoReference,       // problem carries no sampleable reference
  ConfigError,       // bad run configuration
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidState: return "InvalidState";
    case Err::ModeError: return "ModeError";
    case Err::VacuumFormation: return "VacuumFormation";
    case Err::NoConvergence: return "NoConvergence";
    case Err::NotADiscontinuity: return "NotADiscontinuity";
    case Err::GeometryMismatch: return "GeometryMismatch";
    case Err::InsufficientData: return "InsufficientData";
    case Err::UnknownProblem: return "UnknownProblem";
    case Err::SingularJacobian: return "SingularJacobian";
    case Err::NoReference: return "NoReference";
    case Err::ConfigError: return "ConfigError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace gasdyn

#endif  // GASDYN_ERRORS_HPP_
