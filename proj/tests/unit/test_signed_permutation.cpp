#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "derange/signed_permutation.hpp"

using namespace derange;

namespace {

SignedPermutation w(std::vector<int> v) { return SignedPermutation(std::move(v)); }

// Every window of degree n, via permutations times sign masks.
std::vector<SignedPermutation> all_windows(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      auto v = base;
      for (int k = 0; k < n; ++k)
        if (mask & (1 << k)) v[k] = -v[k];
      out.emplace_back(v);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Pair-sum form of the second inversion term.
std::uint64_t oracle_inv_b(const SignedPermutation& p) {
  const auto v = p.window();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) ++count;
    for (std::size_t j = i + 1; j < v.size(); ++j) count += (v[i] > v[j]) + (v[i] + v[j] < 0);
  }
  return count;
}

}  // namespace

TEST_CASE("derangement predicate and negatives") {
  CHECK(is_derangement_b(w({-1, -2})));
  CHECK_FALSE(is_derangement_b(w({-1, 2})));
  CHECK(is_derangement_b(w({2, 1})));
  CHECK(neg_count(w({1, 2})) == 0);
  CHECK(is_in_d(w({1, 2})));
  CHECK(neg_count(w({-2, 1})) == 1);
  CHECK_FALSE(is_in_d(w({-2, 1})));
  CHECK(neg_count(w({-1, -2})) == 2);
  CHECK(is_in_d(w({-1, -2})));
}

TEST_CASE("kappa and tau") {
  CHECK(kappa(w({-1, -6, -3, 5, -4, -2})) == 2);
  CHECK(kappa(w({2, 1})) == 1);
  CHECK(kappa(SignedPermutation::longest(5)) == 5);
  CHECK(tau(SignedPermutation::longest(4)) == 0);
  CHECK(tau(w({2, 3, 1, -5, 4, -6})) == 1);
  CHECK(tau(w({-1, -2, 6, -5, 3, -4})) == 3);
  // Only the first n-1 slots are scanned.
  CHECK(tau(w({-1, -2, 3})) == 0);
}

TEST_CASE("cyclic addition") {
  CHECK(cyclic_add(6, 7, 8) == 5);
  CHECK(cyclic_add(2, -2, 8) == 8);
  CHECK(cyclic_add(1, 1, 2) == 2);
  CHECK(cyclic_add(2, 1, 2) == 1);
  CHECK(cyclic_add(1, -1, 5) == 5);
}

TEST_CASE("signed inversions") {
  CHECK(inv_b(w({1, 2})) == 0);
  CHECK(inv_b(w({-2, 1})) == 2);
  CHECK(inv_b(w({-1, -2})) == 4);
  CHECK(inv_d(w({1, 2})) == 0);
  CHECK(inv_d(w({-1, -2})) == 2);
  CHECK(inv_d(w({2, 1})) == 1);
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_windows(n)) {
      REQUIRE(inv_b(p) == oracle_inv_b(p));
      REQUIRE(inv_b(p) == inv_d(p) + static_cast<std::uint64_t>(neg_count(p)));
    }
}

TEST_CASE("one sign flip changes inv_b parity") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_windows(n))
      for (int k = 0; k < n; ++k) {
        std::vector<int> v(p.window().begin(), p.window().end());
        v[k] = -v[k];
        REQUIRE(inv_b(p) % 2 != inv_b(SignedPermutation(v)) % 2);
      }
}

TEST_CASE("enumeration matches brute force") {
  const std::vector<SignedPermutation> two = {w({-2, -1}), w({-2, 1}), w({-1, -2}), w({2, -1}), w({2, 1})};
  CHECK(enumerate_signed_derangements(2, SignedFamily::B) == two);
  CHECK(enumerate_signed_derangements(2, SignedFamily::D).size() == 3);
  CHECK(enumerate_signed_derangements(2, SignedFamily::Bplus).size() == 3);
  CHECK(enumerate_signed_derangements(1, SignedFamily::B) == std::vector{w({-1})});

  const SignedFamily families[] = {SignedFamily::B,     SignedFamily::D,      SignedFamily::BminusD, SignedFamily::Bplus,
                                   SignedFamily::Bminus, SignedFamily::Dplus, SignedFamily::Dminus};
  for (int n = 1; n <= 5; ++n) {
    const auto all = all_windows(n);
    for (auto f : families) {
      std::vector<SignedPermutation> brute;
      for (const auto& p : all)
        if (in_family(p, f)) brute.push_back(p);
      REQUIRE(brute == enumerate_signed_derangements(n, f));
    }
  }
}

TEST_CASE("family counts") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto count = [&](SignedFamily f) { return static_cast<long>(enumerate_signed_derangements(n, f).size()); };
    const long sign = n % 2 == 0 ? 1 : -1;
    CHECK(count(SignedFamily::D) - count(SignedFamily::BminusD) == sign);
    CHECK(count(SignedFamily::Bplus) - count(SignedFamily::Bminus) == sign);
    CHECK(count(SignedFamily::Bplus) == count(SignedFamily::D));
    CHECK(count(SignedFamily::Bminus) == count(SignedFamily::BminusD));
    CHECK(count(SignedFamily::Dplus) + count(SignedFamily::Dminus) == count(SignedFamily::D));
  }
  CHECK(enumerate_signed_derangements(4, SignedFamily::B).size() == 233);
}

TEST_CASE("window text") {
  CHECK(to_string(w({-1, -6, -3, 5, -4, -2})) == "[-1,-6,-3,5,-4,-2]");
  CHECK(parse_window("[-1,-6,-3,5,-4,-2]") == w({-1, -6, -3, 5, -4, -2}));
  CHECK_THROWS_AS(parse_window("[-1,1]"), ParseError);
  CHECK_THROWS_AS(parse_window("[1,3]"), ParseError);
  CHECK_THROWS_AS(parse_window("[1,-]"), ParseError);
  CHECK(w({2, -1})(-1) == -2);
  CHECK_FALSE(SignedPermutation::from_window({0, 1}).has_value());
}
