#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "derange/permutation.hpp"  // ParseError

namespace derange {

/// Element of the hyperoctahedral group B_n in window notation. The value at
/// -k is -window[k] by definition and is never stored.
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> window);

  /// Same as the constructor but returns nullopt instead of throwing.
  static std::optional<SignedPermutation> from_window(std::vector<int> window);

  /// [-1, -2, ..., -n]
  static SignedPermutation longest(int n);

  int degree() const noexcept { return static_cast<int>(window_.size()); }

  /// 1-based; negative arguments use pi(-k) = -pi(k).
  int operator()(int k) const {
    return k > 0 ? window_.at(static_cast<std::size_t>(k - 1)) : -window_.at(static_cast<std::size_t>(-k - 1));
  }
  std::span<const int> window() const noexcept { return window_; }

  auto operator<=>(const SignedPermutation&) const = default;
  bool operator==(const SignedPermutation&) const = default;

 private:
  struct Unchecked {};
  SignedPermutation(std::vector<int> window, Unchecked) : window_(std::move(window)) {}

  std::vector<int> window_;
};

using SignedPair = std::pair<SignedPermutation, SignedPermutation>;

enum class SignedFamily { B, D, BminusD, Bplus, Bminus, Dplus, Dminus };

std::string to_string(SignedFamily f);
std::optional<SignedFamily> parse_signed_family(std::string_view name);

bool is_derangement_b(const SignedPermutation& p);
int neg_count(const SignedPermutation& p);
bool is_in_d(const SignedPermutation& p);

/// Index k with |pi(k)| = n.
int kappa(const SignedPermutation& p);

/// Smallest k in [n-1] with pi(k) != -k, or 0 when there is none.
int tau(const SignedPermutation& p);

/// a + b reduced to the representative in {1, ..., k}.
int cyclic_add(int a, int b, int k);

std::uint64_t inv_b(const SignedPermutation& p);
std::uint64_t inv_d(const SignedPermutation& p);

bool in_family(const SignedPermutation& p, SignedFamily family);

/// Members of the family in lexicographic window order.
void for_each_signed_derangement(int n, SignedFamily family, const std::function<void(const SignedPermutation&)>& visit);
std::vector<SignedPermutation> enumerate_signed_derangements(int n, SignedFamily family);

std::string to_string(const SignedPermutation& p);  // "[-1,-6,-3,5,-4,-2]"
SignedPermutation parse_window(std::string_view text);

}  // namespace derange
