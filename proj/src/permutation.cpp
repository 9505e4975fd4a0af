#include "derange/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "text_scan.hpp"

namespace derange {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"),
      message_(message),
      position_(position) {}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be at least 1");
  const int n = degree();
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n) throw std::invalid_argument("permutation entry out of range: " + std::to_string(v));
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation entry repeated: " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k)
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("cannot compose permutations of different degree");
  std::vector<int> out(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) out[static_cast<std::size_t>(k - 1)] = p(q(k));
  return Permutation(std::move(out));
}

CycleDecomposition canonicalize(CycleDecomposition c) {
  std::vector<std::vector<int>> kept;
  kept.reserve(c.cycles.size());
  for (auto& cycle : c.cycles) {
    if (cycle.size() < 2) continue;
    std::rotate(cycle.begin(), std::max_element(cycle.begin(), cycle.end()), cycle.end());
    kept.push_back(std::move(cycle));
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.front() > b.front(); });
  return CycleDecomposition{std::move(kept)};
}

CycleDecomposition cycle_decompose(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  CycleDecomposition out;
  // Largest unvisited element first yields the canonical order directly.
  for (int start = n; start >= 1; --start) {
    if (seen[static_cast<std::size_t>(start)] || p(start) == start) continue;
    std::vector<int> cycle;
    for (int k = start; !seen[static_cast<std::size_t>(k)]; k = p(k)) {
      seen[static_cast<std::size_t>(k)] = true;
      cycle.push_back(k);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

Permutation cycle_compose(const CycleDecomposition& c, int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& cycle : c.cycles) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const int a = cycle[j];
      if (a < 1 || a > n)
        throw std::invalid_argument("cycle element " + std::to_string(a) + " outside [1," + std::to_string(n) + "]");
      if (used[static_cast<std::size_t>(a)])
        throw std::invalid_argument("cycle element repeated: " + std::to_string(a));
      used[static_cast<std::size_t>(a)] = true;
      images[static_cast<std::size_t>(a - 1)] = cycle[(j + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

std::uint64_t inversion_count(const Permutation& p) {
  const auto w = p.one_line();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

bool is_even(const Permutation& p) { return inversion_count(p) % 2 == 0; }

bool is_derangement(const Permutation& p) {
  for (int k = 1; k <= p.degree(); ++k)
    if (p(k) == k) return false;
  return true;
}

bool in_two_cycle(const Permutation& p, int k) { return p(k) != k && p(p(k)) == k; }

Permutation restrict_to(const Permutation& p, int m) {
  if (m < 1 || m > p.degree()) throw std::invalid_argument("restriction degree out of range");
  const auto w = p.one_line();
  return Permutation(std::vector<int>(w.begin(), w.begin() + m));
}

Permutation adjoin_top_transposition(const Permutation& p) {
  const int d = p.degree();
  std::vector<int> w(p.one_line().begin(), p.one_line().end());
  w.push_back(d + 2);
  w.push_back(d + 1);
  return Permutation(std::move(w));
}

void for_each_derangement(int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  // Depth-first over positions, trying values in increasing order, gives
  // lexicographic order with fixed points pruned early.
  std::vector<int> w(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> place = [&](int pos) {
    if (pos > n) {
      visit(Permutation(w));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (v == pos || used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      w[static_cast<std::size_t>(pos - 1)] = v;
      place(pos + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  place(1);
}

std::vector<Permutation> enumerate_derangements(int n) {
  std::vector<Permutation> out;
  for_each_derangement(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::string to_one_line_string(const Permutation& p) {
  std::string s = "[";
  for (int k = 1; k <= p.degree(); ++k) {
    if (k > 1) s += ',';
    s += std::to_string(p(k));
  }
  return s + "]";
}

std::string to_string(const CycleDecomposition& c) {
  if (c.cycles.empty()) return "()";
  std::string s;
  for (const auto& cycle : c.cycles) {
    s += '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j > 0) s += ',';
      s += std::to_string(cycle[j]);
    }
    s += ')';
  }
  return s;
}

std::string to_cycle_string(const Permutation& p) { return to_string(cycle_decompose(p)); }

Permutation parse_one_line(std::string_view text) {
  detail::Scanner scan(text);
  auto entries = scan.bracketed_list('[', ']', /*allow_negative=*/false);
  scan.expect_end();
  try {
    return Permutation(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

CycleDecomposition parse_cycles(std::string_view text) {
  detail::Scanner scan(text);
  CycleDecomposition c;
  scan.skip_space();
  if (scan.at_end()) throw ParseError("expected '('", scan.pos());
  if (scan.try_consume("()")) {
    scan.expect_end();
    return c;
  }
  while (!scan.at_end()) {
    c.cycles.push_back(scan.bracketed_list('(', ')', /*allow_negative=*/false));
    scan.skip_space();
  }
  return c;
}

Permutation parse_cycle_permutation(std::string_view text, int n) {
  auto c = parse_cycles(text);
  try {
    return cycle_compose(c, n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace derange
