#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "derange/permutation.hpp"

namespace derange {

/// A pair is outside the image of an injection that is not surjective.
class NotInImage : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using PermPair = std::pair<Permutation, Permutation>;

enum class TypeAClass { T1, T2, T3, T4 };

std::string to_string(TypeAClass c);

/// Partition of H_n x H_n driving the type A injection (n >= 3):
///   T1  pi(n) != pi^{-1}(n)
///   T2  pi(n) == pi^{-1}(n) <= n-2
///   T3  pi contains (n, n-1), sigma(n) != sigma^{-1}(n)
///   T4  pi contains (n, n-1), sigma(n) == sigma^{-1}(n)
TypeAClass classify_a(const Permutation& pi, const Permutation& sigma);

/// The injection H_n x H_n -> H_{n-1} x H_{n+1}.
///
/// Degrees 3 and 4 use fixed tables. The degree-4 table pairs the i-th element
/// of H_4 x H_4 with the i-th element of H_3 x H_5, both in lexicographic
/// order on (first, second). Larger degrees dispatch on classify_a; T4 recurses
/// to degree n-2, so every even degree inherits the degree-4 table.
PermPair psi(const Permutation& pi, const Permutation& sigma);

/// Left inverse of psi for domain degree n. Throws NotInImage when the pair
/// has no preimage.
PermPair lambda_inv(int n, const Permutation& pi1, const Permutation& sigma1);
std::optional<PermPair> try_lambda_inv(int n, const Permutation& pi1, const Permutation& sigma1);

}  // namespace derange
