#include "derange/mr_bijection.hpp"

#include <stdexcept>
#include <string>

namespace derange {

namespace {

void require_degree(int n) {
  if (n < 3) throw std::invalid_argument("recurrence bijection needs degree >= 3, got " + std::to_string(n));
}

}  // namespace

Permutation f_map(int n, int index, const Permutation& sigma) {
  require_degree(n);
  if (!is_derangement(sigma)) throw std::invalid_argument("f_map: sigma is not a derangement");
  if (index < 1 || index > n - 1)
    throw std::invalid_argument("f_map: index " + std::to_string(index) + " outside [1," + std::to_string(n - 1) + "]");

  std::vector<int> w(static_cast<std::size_t>(n));
  auto at = [&](int k) -> int& { return w[static_cast<std::size_t>(k - 1)]; };

  if (sigma.degree() == n - 1) {
    for (int k = 1; k <= n - 1; ++k) at(k) = sigma(k);
    at(n) = sigma(index);
    at(index) = n;
  } else if (sigma.degree() == n - 2) {
    const auto shift = [index](int x) { return x < index ? x : x + 1; };
    for (int x = 1; x <= n - 2; ++x) at(shift(x)) = shift(sigma(x));
    at(index) = n;
    at(n) = index;
  } else {
    throw std::invalid_argument("f_map: sigma has degree " + std::to_string(sigma.degree()) +
                                ", expected " + std::to_string(n - 1) + " or " + std::to_string(n - 2));
  }
  return Permutation(std::move(w));
}

Permutation f_map(int n, const MRPreimage& pre) { return f_map(n, pre.index, pre.sigma); }

MRPreimage g_map(int n, const Permutation& sigma) {
  require_degree(n);
  if (sigma.degree() != n) throw std::invalid_argument("g_map: degree mismatch");
  if (!is_derangement(sigma)) throw std::invalid_argument("g_map: sigma is not a derangement");

  if (in_two_cycle(sigma, n)) {
    const int index = sigma(n);
    const auto unshift = [index](int y) { return y < index ? y : y - 1; };
    const auto shift = [index](int x) { return x < index ? x : x + 1; };
    std::vector<int> w(static_cast<std::size_t>(n - 2));
    for (int x = 1; x <= n - 2; ++x) w[static_cast<std::size_t>(x - 1)] = unshift(sigma(shift(x)));
    return MRPreimage{index, Permutation(std::move(w))};
  }

  const int index = sigma.inverse()(n);
  std::vector<int> w(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k) w[static_cast<std::size_t>(k - 1)] = sigma(k);
  w[static_cast<std::size_t>(index - 1)] = sigma(n);
  return MRPreimage{index, Permutation(std::move(w))};
}

}  // namespace derange
