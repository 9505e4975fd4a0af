#pragma once

#include <optional>
#include <string>

#include "derange/signed_permutation.hpp"
#include "derange/type_a.hpp"

namespace derange {

enum class FirstTag { B1, B21, B22 };
enum class PairTag { P1, P2, P3, P1p, P2p, P3p, P4p, Any };

/// Dispatch class of a pair in H_n^B x H_n^B.
///
/// First component: B1 when pi(n) = -n; otherwise, with k = kappa(pi), B22 when
/// sign(pi(k)) * pi(n) = k and B21 when not.
/// Within B22 the tag is read off sigma(n): P3 for -n, P2 for +-k, P1 otherwise.
/// Within B1 the tag is read off which of tau(pi), tau(sigma) vanish:
/// P1' neither, P2' tau(sigma), P3' tau(pi), P4' both.
struct TypeBClass {
  FirstTag first;
  PairTag pair;

  bool operator==(const TypeBClass&) const = default;
};

std::string to_string(TypeBClass c);

TypeBClass classify_b(const SignedPermutation& pi, const SignedPermutation& sigma);

// Sub-maps. Each throws std::invalid_argument when the pair is outside its
// class.
SignedPair phi_a(const SignedPermutation& pi, const SignedPermutation& sigma);   // B22/P1
SignedPair phi_b(const SignedPermutation& pi, const SignedPermutation& sigma);   // B22/P2
SignedPair phi_c(const SignedPermutation& pi, const SignedPermutation& sigma);   // B22/P3
SignedPair phi_21(const SignedPermutation& pi, const SignedPermutation& sigma);  // B21
SignedPair phi_11(const SignedPermutation& pi, const SignedPermutation& sigma);  // B1/P1'
SignedPair phi_12(const SignedPermutation& pi, const SignedPermutation& sigma);  // B1/P2'
SignedPair phi_13(const SignedPermutation& pi, const SignedPermutation& sigma);  // B1/P3'

/// Image of the single B1/P4' pair ([-1..-n], [-1..-n]).
SignedPair phi_star(int n);

/// The injection H_n^B x H_n^B -> H_{n-1}^B x H_{n+1}^B for n > 2.
SignedPair phi(const SignedPermutation& pi, const SignedPermutation& sigma);

// Literal inverse formulas of the sub-maps. They evaluate the formula on any
// input and return nullopt only when the result is not a signed permutation;
// callers confirm membership by re-applying phi.
std::optional<SignedPair> theta_a(const SignedPermutation& zeta, const SignedPermutation& xi);
std::optional<SignedPair> theta_b(const SignedPermutation& zeta, const SignedPermutation& xi);
std::optional<SignedPair> theta_c(const SignedPermutation& zeta, const SignedPermutation& xi);
std::optional<SignedPair> theta_21(const SignedPermutation& zeta, const SignedPermutation& xi);
std::optional<SignedPair> theta_11(const SignedPermutation& zeta, const SignedPermutation& xi);
std::optional<SignedPair> theta_12(const SignedPermutation& zeta, const SignedPermutation& xi);
std::optional<SignedPair> theta_13(const SignedPermutation& zeta, const SignedPermutation& xi);

/// Preimage under phi for domain degree n. The slots xi(n), xi(n+1) and the
/// position of +-(n+1) in xi select candidate branches; a candidate is accepted
/// only if phi maps it back onto (zeta, xi).
SignedPair theta(int n, const SignedPermutation& zeta, const SignedPermutation& xi);
std::optional<SignedPair> try_theta(int n, const SignedPermutation& zeta, const SignedPermutation& xi);

/// Drops -n from pi and appends -(n+1) to sigma. Defined on B1 x H_n^B; it is
/// injective but flips the negative-entry parity of both components.
SignedPair naive_b1_map(const SignedPermutation& pi, const SignedPermutation& sigma);

}  // namespace derange
