#pragma once

// Numeric gate for derived identities.

#include "mzv/identities.hpp"
#include "mzv/numerics.hpp"

#include <string>

namespace mzv {

struct IdentityReport {
  std::string identity;  // the combination in zeta notation, asserted == 0
  VerificationReport report;
};

/// Fails with DivergenceError on identities that still carry zeta(1) factors.
inline IdentityReport verify_identity(Oracle& oracle, const Identity& id, const Real& eps) {
  if (id.regularized()) throw DivergenceError("regularized identity: eliminate zeta(1) terms first");
  return {format_combination(id.combination), verify_combination(oracle, id.combination, eps)};
}

}  // namespace mzv
