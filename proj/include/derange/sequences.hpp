#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace derange {

using Int = boost::multiprecision::cpp_int;
// Counts. Every function returning Nat guarantees a nonnegative value.
using Nat = Int;

/// h_1 = 0, h_2 = 1, h_n = (n-1)(h_{n-1} + h_{n-2}).
Nat h_rec(int n);

/// h_n = n h_{n-1} + (-1)^n, iterated from h_1 = 0. Requires n >= 2.
Nat h_reduced(int n);

/// Even and odd derangement counts: (h_n +- (-1)^{n-1}(n-1)) / 2.
Nat h_plus(int n);
Nat h_minus(int n);

/// Closed forms equal to 4(a_{n+1}a_{n-1} - a_n^2) for a = h_plus, h_minus.
Int even_expr(int n);
Int odd_expr(int n);

struct SequenceTable {
  std::string name;
  int start_index = 1;
  std::vector<Nat> values;

  int end_index() const { return start_index + static_cast<int>(values.size()) - 1; }
  const Nat& at(int n) const { return values.at(static_cast<std::size_t>(n - start_index)); }
};

struct ShapeVerdict {
  bool holds = true;
  std::optional<int> first_violation;  // index n, not offset
};

/// a_n^2 <= a_{n-1} a_{n+1} at every interior n of [from, to]. Throws
/// std::domain_error if a term in the window is zero.
ShapeVerdict is_log_convex(const SequenceTable& t, int from, int to);
ShapeVerdict is_log_convex(const SequenceTable& t);
ShapeVerdict is_log_concave(const SequenceTable& t, int from, int to);

/// Family names accepted by table builders.
inline constexpr std::string_view kFamilies[] = {"h",  "hB",     "hD",     "hBminusD", "hPlus",
                                                 "hMinus", "hBPlus", "hBMinus", "hDPlus", "hDMinus"};
bool is_family(std::string_view name);
bool is_signed_family(std::string_view name);

struct EnumerationCaps {
  int signed_max = 7;
  int unsigned_max = 9;
};

/// Counts by exhaustive enumeration for n = 1..n_max. Throws
/// std::out_of_range past the cap.
SequenceTable enumerated_table(std::string_view family, int n_max, EnumerationCaps caps = {});

/// h, hPlus and hMinus come from the recurrences; signed families fall back to
/// enumeration.
SequenceTable sequence_table(std::string_view family, int n_max, EnumerationCaps caps = {});

std::string to_text(const SequenceTable& t);   // "1:0 2:1 3:2"
std::string to_csv(const std::vector<SequenceTable>& tables);
std::string to_json(const std::vector<SequenceTable>& tables);

}  // namespace derange
