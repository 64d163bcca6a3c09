#pragma once

#include "brumer/gmodule.hpp"
#include "brumer/linalg.hpp"

namespace brumer {

// Z[G]_+ = Z[G]/(1 - c) and Z[G]_- = Z[G]/(1 + c).
enum class Sign { kPlus, kMinus };

enum class TorRoute {
  kPeriodic,        // 2-periodic resolution of Z[G]_sign by multiplication with 1 +- c
  kFreeResolution,  // generic kernel-by-kernel free resolution of Z[G]_sign, tensored with M
};

// Tor_i^{Z[G]}(M, Z[G]_sign), i >= 1. Throws TrivialConjugation.
Subquotient tor_sign(const GModule& m, Sign sign, int degree, TorRoute route = TorRoute::kPeriodic);

// M_sign[k]: the k-torsion of M / (1 -+ c)M, where M_- = M/(1 + c)M.
Subquotient sign_part_torsion(const GModule& m, Sign sign, const Integer& k = 2);

}  // namespace brumer
