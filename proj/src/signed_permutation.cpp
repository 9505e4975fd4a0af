#include "derange/signed_permutation.hpp"

#include <cstdlib>
#include <stdexcept>

#include "derange/permutation.hpp"
#include "text_scan.hpp"

namespace derange {

namespace {

bool valid_window(const std::vector<int>& window) {
  if (window.empty()) return false;
  const int n = static_cast<int>(window.size());
  std::vector<bool> seen(window.size() + 1, false);
  for (int v : window) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) return false;
    seen[static_cast<std::size_t>(a)] = true;
  }
  return true;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  if (!valid_window(window_)) throw std::invalid_argument("not a signed permutation window");
}

std::optional<SignedPermutation> SignedPermutation::from_window(std::vector<int> window) {
  if (!valid_window(window)) return std::nullopt;
  return SignedPermutation(std::move(window), Unchecked{});
}

SignedPermutation SignedPermutation::longest(int n) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) w[static_cast<std::size_t>(k - 1)] = -k;
  return SignedPermutation(std::move(w), Unchecked{});
}

std::string to_string(SignedFamily f) {
  switch (f) {
    case SignedFamily::B: return "B";
    case SignedFamily::D: return "D";
    case SignedFamily::BminusD: return "BminusD";
    case SignedFamily::Bplus: return "Bplus";
    case SignedFamily::Bminus: return "Bminus";
    case SignedFamily::Dplus: return "Dplus";
    case SignedFamily::Dminus: return "Dminus";
  }
  return "?";
}

std::optional<SignedFamily> parse_signed_family(std::string_view name) {
  for (auto f : {SignedFamily::B, SignedFamily::D, SignedFamily::BminusD, SignedFamily::Bplus, SignedFamily::Bminus,
                 SignedFamily::Dplus, SignedFamily::Dminus})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

bool is_derangement_b(const SignedPermutation& p) {
  for (int k = 1; k <= p.degree(); ++k)
    if (p(k) == k) return false;
  return true;
}

int neg_count(const SignedPermutation& p) {
  int count = 0;
  for (int v : p.window())
    if (v < 0) ++count;
  return count;
}

bool is_in_d(const SignedPermutation& p) { return neg_count(p) % 2 == 0; }

int kappa(const SignedPermutation& p) {
  const int n = p.degree();
  for (int k = 1; k <= n; ++k)
    if (std::abs(p(k)) == n) return k;
  throw std::logic_error("kappa: window has no entry of absolute value n");
}

int tau(const SignedPermutation& p) {
  for (int k = 1; k <= p.degree() - 1; ++k)
    if (p(k) != -k) return k;
  return 0;
}

int cyclic_add(int a, int b, int k) {
  if (k < 1) throw std::invalid_argument("cyclic_add: modulus must be positive");
  const int r = ((a + b) % k + k) % k;
  return r == 0 ? k : r;
}

std::uint64_t inv_d(const SignedPermutation& p) {
  const auto w = p.window();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++count;
      if (-w[i] > w[j]) ++count;
    }
  }
  return count;
}

std::uint64_t inv_b(const SignedPermutation& p) { return inv_d(p) + static_cast<std::uint64_t>(neg_count(p)); }

bool in_family(const SignedPermutation& p, SignedFamily family) {
  if (!is_derangement_b(p)) return false;
  switch (family) {
    case SignedFamily::B: return true;
    case SignedFamily::D: return is_in_d(p);
    case SignedFamily::BminusD: return !is_in_d(p);
    case SignedFamily::Bplus: return inv_b(p) % 2 == 0;
    case SignedFamily::Bminus: return inv_b(p) % 2 == 1;
    case SignedFamily::Dplus: return is_in_d(p) && inv_d(p) % 2 == 0;
    case SignedFamily::Dminus: return is_in_d(p) && inv_d(p) % 2 == 1;
  }
  return false;
}

void for_each_signed_derangement(int n, SignedFamily family,
                                 const std::function<void(const SignedPermutation&)>& visit) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  // Candidate values in increasing integer order: -n..-1, 1..n.
  std::vector<int> values;
  for (int v = -n; v <= n; ++v)
    if (v != 0) values.push_back(v);

  std::function<void(int)> place = [&](int pos) {
    if (pos > n) {
      auto p = *SignedPermutation::from_window(w);
      if (in_family(p, family)) visit(p);
      return;
    }
    for (int v : values) {
      const auto a = static_cast<std::size_t>(std::abs(v));
      if (v == pos || used[a]) continue;
      used[a] = true;
      w[static_cast<std::size_t>(pos - 1)] = v;
      place(pos + 1);
      used[a] = false;
    }
  };
  place(1);
}

std::vector<SignedPermutation> enumerate_signed_derangements(int n, SignedFamily family) {
  std::vector<SignedPermutation> out;
  for_each_signed_derangement(n, family, [&](const SignedPermutation& p) { out.push_back(p); });
  return out;
}

std::string to_string(const SignedPermutation& p) {
  std::string s = "[";
  for (int k = 1; k <= p.degree(); ++k) {
    if (k > 1) s += ',';
    s += std::to_string(p(k));
  }
  return s + "]";
}

SignedPermutation parse_window(std::string_view text) {
  detail::Scanner scan(text);
  auto entries = scan.bracketed_list('[', ']', /*allow_negative=*/true);
  scan.expect_end();
  auto p = SignedPermutation::from_window(std::move(entries));
  if (!p) throw ParseError("window entries must have absolute values forming a permutation of 1..n", 0);
  return *std::move(p);
}

}  // namespace derange
