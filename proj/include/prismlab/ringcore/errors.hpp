#pragma once

#include <stdexcept>
#include <string>

namespace prismlab {

// Every failure the library reports is one of these; the harness maps them to
// check details verbatim.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PRISMLAB_ERROR(Name)             \
  struct Name : Error {                  \
    explicit Name(const std::string& m)  \
        : Error(#Name ": " + m) {}       \
  }

PRISMLAB_ERROR(RingMismatch);
PRISMLAB_ERROR(NonzeroConstantTerm);
PRISMLAB_ERROR(NonIntegralCoefficient);
PRISMLAB_ERROR(DoesNotConverge);
PRISMLAB_ERROR(NonIntegralGhost);
PRISMLAB_ERROR(PrecisionExhausted);
PRISMLAB_ERROR(NotADeltaRing);
PRISMLAB_ERROR(AxiomFailure);
PRISMLAB_ERROR(NotPolynomial);
PRISMLAB_ERROR(NotIntegerValued);
PRISMLAB_ERROR(NotPD);
PRISMLAB_ERROR(ReductionFailure);
PRISMLAB_ERROR(EigenCheckFailed);
PRISMLAB_ERROR(IdentityFailed);
PRISMLAB_ERROR(NotTeichmuller);
PRISMLAB_ERROR(BoundExceeded);
PRISMLAB_ERROR(DegreeExceedsFiltration);
PRISMLAB_ERROR(TailNotStabilized);
PRISMLAB_ERROR(ConfigError);

#undef PRISMLAB_ERROR

}  // namespace prismlab
