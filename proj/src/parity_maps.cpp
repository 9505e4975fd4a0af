#include "derange/parity_maps.hpp"

#include <vector>

namespace derange {

FlipResult pi_minus(const SignedPermutation& p) {
  if (!is_derangement_b(p)) throw std::domain_error("pi_minus: " + to_string(p) + " is not a signed derangement");
  const int t = tau(p);
  if (t == 0) throw std::domain_error("pi_minus: undefined on " + to_string(p));
  std::vector<int> w(p.window().begin(), p.window().end());
  w[static_cast<std::size_t>(t - 1)] = -w[static_cast<std::size_t>(t - 1)];
  return {SignedPermutation(std::move(w)), t};
}

SignedPermutation f_parity(const SignedPermutation& p) {
  if (!in_family(p, SignedFamily::Bplus)) throw std::domain_error("f_parity: " + to_string(p) + " has odd inv_b");
  return pi_minus(p).image;
}

SignedPermutation g_parity(const SignedPermutation& p) {
  if (!in_family(p, SignedFamily::D)) throw std::domain_error("g_parity: " + to_string(p) + " is not in D");
  return pi_minus(p).image;
}

}  // namespace derange
