#pragma once

#include <stdexcept>
#include <string>

namespace hzeta {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HZETA_DEFINE_ERROR(Name)                 \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(#Name ": " + what) {}            \
  }

// exact
HZETA_DEFINE_ERROR(ParseError);
HZETA_DEFINE_ERROR(EndpointRoot);
HZETA_DEFINE_ERROR(RefinementBudgetExceeded);

// analysis
HZETA_DEFINE_ERROR(DegenerateLeading);
HZETA_DEFINE_ERROR(BoundaryCase);
HZETA_DEFINE_ERROR(CaseNotCovered);

// zeta
HZETA_DEFINE_ERROR(DomainError);
HZETA_DEFINE_ERROR(PoleError);
HZETA_DEFINE_ERROR(SignZero);
HZETA_DEFINE_ERROR(NoSignChange);
HZETA_DEFINE_ERROR(NoCrossing);
HZETA_DEFINE_ERROR(MultipleCrossings);
HZETA_DEFINE_ERROR(QuadratureNonConvergence);

#undef HZETA_DEFINE_ERROR

}  // namespace hzeta
