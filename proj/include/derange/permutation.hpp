#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace derange {

/// Malformed permutation text. `position()` is the 0-based character offset
/// at which parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// A bijection of [n] in one-line form. Entry k-1 of `one_line()` holds the
/// image of k; every accessor is 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
  std::span<const int> one_line() const noexcept { return images_; }

  Permutation inverse() const;

  // Lexicographic on one-line notation.
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// (p * q)(k) = p(q(k)); degrees must agree.
Permutation operator*(const Permutation& p, const Permutation& q);

/// Cycles in the canonical form: each cycle starts with its largest element
/// and cycles appear in decreasing order of their first element. Fixed points
/// are omitted.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  bool operator==(const CycleDecomposition&) const = default;
};

CycleDecomposition canonicalize(CycleDecomposition c);
CycleDecomposition cycle_decompose(const Permutation& p);

/// Builds the permutation of degree n whose nontrivial cycles are `c`.
/// Throws std::invalid_argument on repeated elements or elements outside [n].
Permutation cycle_compose(const CycleDecomposition& c, int n);

std::uint64_t inversion_count(const Permutation& p);
bool is_even(const Permutation& p);
bool is_derangement(const Permutation& p);

/// True iff k lies in a cycle of length exactly two.
bool in_two_cycle(const Permutation& p, int k);

/// Restriction of p to [m]; p must map [m] onto itself.
Permutation restrict_to(const Permutation& p, int m);

/// p of degree d extended to degree d + 2 by the transposition (d+2, d+1).
Permutation adjoin_top_transposition(const Permutation& p);

/// Visits every derangement of [n] in lexicographic one-line order.
void for_each_derangement(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_derangements(int n);

std::string to_one_line_string(const Permutation& p);   // "[2,3,1]"
std::string to_cycle_string(const Permutation& p);      // "(3,1,2)"; identity prints "()"
std::string to_string(const CycleDecomposition& c);

Permutation parse_one_line(std::string_view text);
CycleDecomposition parse_cycles(std::string_view text);
Permutation parse_cycle_permutation(std::string_view text, int n);

}  // namespace derange
