#include "derange/type_a.hpp"

#include <map>

#include "derange/mr_bijection.hpp"

namespace derange {

namespace {

struct BaseTable {
  std::map<PermPair, PermPair> forward;
  std::map<PermPair, PermPair> backward;

  void add(PermPair from, PermPair to) {
    backward.emplace(to, from);
    forward.emplace(std::move(from), std::move(to));
  }
};

const BaseTable& degree3_table() {
  static const BaseTable table = [] {
    BaseTable t;
    const auto c = [](std::string_view text, int n) { return parse_cycle_permutation(text, n); };
    t.add({c("(3,1,2)", 3), c("(3,1,2)", 3)}, {c("(2,1)", 2), c("(4,1,2,3)", 4)});
    t.add({c("(3,1,2)", 3), c("(3,2,1)", 3)}, {c("(2,1)", 2), c("(4,3,1,2)", 4)});
    t.add({c("(3,2,1)", 3), c("(3,2,1)", 3)}, {c("(2,1)", 2), c("(4,1,3,2)", 4)});
    t.add({c("(3,2,1)", 3), c("(3,1,2)", 3)}, {c("(2,1)", 2), c("(4,2,1,3)", 4)});
    return t;
  }();
  return table;
}

const BaseTable& degree4_table() {
  static const BaseTable table = [] {
    BaseTable t;
    const auto h3 = enumerate_derangements(3);
    const auto h4 = enumerate_derangements(4);
    const auto h5 = enumerate_derangements(5);
    std::size_t slot = 0;
    for (const auto& a : h4) {
      for (const auto& b : h4) {
        t.add({a, b}, {h3[slot / h5.size()], h5[slot % h5.size()]});
        ++slot;
      }
    }
    return t;
  }();
  return table;
}

void require_pair(const Permutation& pi, const Permutation& sigma) {
  if (pi.degree() != sigma.degree()) throw std::invalid_argument("psi: components differ in degree");
  if (pi.degree() < 3) throw std::invalid_argument("psi: degree must be at least 3");
  if (!is_derangement(pi) || !is_derangement(sigma)) throw std::invalid_argument("psi: input is not a derangement pair");
}

}  // namespace

std::string to_string(TypeAClass c) {
  switch (c) {
    case TypeAClass::T1: return "T1";
    case TypeAClass::T2: return "T2";
    case TypeAClass::T3: return "T3";
    case TypeAClass::T4: return "T4";
  }
  return "?";
}

TypeAClass classify_a(const Permutation& pi, const Permutation& sigma) {
  require_pair(pi, sigma);
  const int n = pi.degree();
  if (!in_two_cycle(pi, n)) return TypeAClass::T1;
  if (pi(n) <= n - 2) return TypeAClass::T2;
  return in_two_cycle(sigma, n) ? TypeAClass::T4 : TypeAClass::T3;
}

PermPair psi(const Permutation& pi, const Permutation& sigma) {
  require_pair(pi, sigma);
  const int n = pi.degree();
  if (n == 3) return degree3_table().forward.at({pi, sigma});
  if (n == 4) return degree4_table().forward.at({pi, sigma});

  switch (classify_a(pi, sigma)) {
    case TypeAClass::T1: {
      auto [i, pi_prime] = g_map(n, pi);
      return {pi_prime, f_map(n + 1, i, sigma)};
    }
    case TypeAClass::T2: {
      auto [i, pi_2] = g_map(n, pi);
      return {f_map(n - 1, i, pi_2), f_map(n + 1, n, sigma)};
    }
    case TypeAClass::T3: {
      const auto pi_down = restrict_to(pi, n - 2);
      return {f_map(n - 1, 1, pi_down), f_map(n + 1, g_map(n, sigma))};
    }
    case TypeAClass::T4: {
      const auto pi_down = restrict_to(pi, n - 2);
      auto [j, sigma_2] = g_map(n, sigma);
      auto [pi_3, sigma_3] = psi(pi_down, sigma_2);
      return {adjoin_top_transposition(pi_3), f_map(n + 1, j, sigma_3)};
    }
  }
  throw std::logic_error("psi: unreachable");
}

std::optional<PermPair> try_lambda_inv(int n, const Permutation& pi1, const Permutation& sigma1) {
  if (n < 3) throw std::invalid_argument("lambda_inv: degree must be at least 3");
  if (pi1.degree() != n - 1 || sigma1.degree() != n + 1)
    throw std::invalid_argument("lambda_inv: expected degrees " + std::to_string(n - 1) + " and " + std::to_string(n + 1));
  if (!is_derangement(pi1) || !is_derangement(sigma1))
    throw std::invalid_argument("lambda_inv: input is not a derangement pair");

  if (n == 3 || n == 4) {
    const auto& table = n == 3 ? degree3_table() : degree4_table();
    const auto it = table.backward.find({pi1, sigma1});
    if (it == table.backward.end()) return std::nullopt;
    return it->second;
  }

  if (!in_two_cycle(sigma1, n + 1)) {
    auto [i, sigma] = g_map(n + 1, sigma1);
    if (i < n) return PermPair{f_map(n, i, pi1), sigma};  // T1
    // T2: the first component must come from the insertion branch.
    if (in_two_cycle(pi1, n - 1)) return std::nullopt;
    auto [i2, pi_2] = g_map(n - 1, pi1);
    return PermPair{f_map(n, i2, pi_2), sigma};
  }

  auto [j, sigma_low] = g_map(n + 1, sigma1);
  if (j > n - 1) return std::nullopt;

  if (in_two_cycle(pi1, n - 1)) {  // T4
    if (pi1(n - 1) != n - 2) return std::nullopt;
    const auto pi_3 = restrict_to(pi1, n - 3);
    auto inner = try_lambda_inv(n - 2, pi_3, sigma_low);
    if (!inner) return std::nullopt;
    return PermPair{adjoin_top_transposition(inner->first), f_map(n, j, inner->second)};
  }

  // T3
  auto [one, pi_down] = g_map(n - 1, pi1);
  if (one != 1) return std::nullopt;
  return PermPair{adjoin_top_transposition(pi_down), f_map(n, j, sigma_low)};
}

PermPair lambda_inv(int n, const Permutation& pi1, const Permutation& sigma1) {
  auto result = try_lambda_inv(n, pi1, sigma1);
  if (!result)
    throw NotInImage("(" + to_cycle_string(pi1) + ";" + to_cycle_string(sigma1) + ") is not in the image of the degree-" +
                     std::to_string(n) + " injection");
  return *std::move(result);
}

}  // namespace derange
