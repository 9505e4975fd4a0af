#pragma once

#include <stdexcept>

#include "derange/signed_permutation.hpp"

namespace derange {

struct FlipResult {
  SignedPermutation image;
  int flipped_index;
};

/// Negates the window entry at tau(p). Throws std::domain_error on w_0 and on
/// non-derangements.
FlipResult pi_minus(const SignedPermutation& p);

/// pi_minus restricted to H^{B+} \ {w_0}; the image lies in H^{B-} \ {w_0}.
SignedPermutation f_parity(const SignedPermutation& p);

/// pi_minus restricted to H^D \ {w_0}; the image lies in H^{B-D} \ {w_0}.
SignedPermutation g_parity(const SignedPermutation& p);

}  // namespace derange
