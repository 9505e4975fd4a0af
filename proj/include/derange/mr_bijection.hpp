#pragma once

#include "derange/permutation.hpp"

namespace derange {

/// A point of [n-1] x (H_{n-1} u H_{n-2}); the branch is read off the degree
/// of `sigma`.
struct MRPreimage {
  int index;
  Permutation sigma;

  int source_degree() const noexcept { return sigma.degree(); }
  bool operator==(const MRPreimage&) const = default;
};

/// The derangement recurrence bijection onto H_n.
///
/// When `sigma` has degree n-1, n is inserted after `index` in its cycle.
/// When `sigma` has degree n-2, every label >= `index` is shifted up by one
/// and the transposition (n, index) is adjoined. Requires n >= 3.
Permutation f_map(int n, const MRPreimage& pre);
Permutation f_map(int n, int index, const Permutation& sigma);

/// Inverse of f_map. The H_{n-2} branch is taken iff n lies in a 2-cycle.
MRPreimage g_map(int n, const Permutation& sigma);

}  // namespace derange
