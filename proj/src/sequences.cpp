#include "derange/sequences.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "derange/permutation.hpp"
#include "derange/signed_permutation.hpp"

namespace derange {

namespace {

Int alternating(int n) { return n % 2 == 0 ? Int(1) : Int(-1); }  // (-1)^n

Nat to_nat(const Int& v) {
  if (v < 0) throw std::logic_error("negative count");
  return Nat(v);
}

void require_positive(int n, const char* name) {
  if (n < 1) throw std::invalid_argument(std::string(name) + ": index must be at least 1");
}

std::optional<SignedFamily> signed_family_of(std::string_view name) {
  if (name == "hB") return SignedFamily::B;
  if (name == "hD") return SignedFamily::D;
  if (name == "hBminusD") return SignedFamily::BminusD;
  if (name == "hBPlus") return SignedFamily::Bplus;
  if (name == "hBMinus") return SignedFamily::Bminus;
  if (name == "hDPlus") return SignedFamily::Dplus;
  if (name == "hDMinus") return SignedFamily::Dminus;
  return std::nullopt;
}

ShapeVerdict check_shape(const SequenceTable& t, int from, int to, bool convex) {
  if (from < t.start_index || to > t.end_index())
    throw std::out_of_range("window [" + std::to_string(from) + ", " + std::to_string(to) + "] outside table " + t.name);
  for (int n = from; n <= to; ++n)
    if (t.at(n) == 0) throw std::domain_error(t.name + " vanishes at n=" + std::to_string(n));
  for (int n = from + 1; n < to; ++n) {
    const Nat square = t.at(n) * t.at(n);
    const Nat outer = t.at(n - 1) * t.at(n + 1);
    if (convex ? square > outer : square < outer) return {false, n};
  }
  return {};
}

}  // namespace

Nat h_rec(int n) {
  require_positive(n, "h_rec");
  if (n == 1) return 0;
  Nat prev = 0, cur = 1;
  for (int k = 3; k <= n; ++k) {
    Nat next = Nat(k - 1) * (cur + prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Nat h_reduced(int n) {
  if (n < 2) throw std::invalid_argument("h_reduced: index must be at least 2");
  Int h = 0;
  for (int k = 2; k <= n; ++k) h = k * h + alternating(k);
  return to_nat(h);
}

Nat h_plus(int n) {
  require_positive(n, "h_plus");
  return to_nat((Int(h_rec(n)) - alternating(n) * (n - 1)) / 2);
}

Nat h_minus(int n) {
  require_positive(n, "h_minus");
  return to_nat((Int(h_rec(n)) + alternating(n) * (n - 1)) / 2);
}

Int even_expr(int n) {
  if (n < 2) throw std::invalid_argument("even_expr: index must be at least 2");
  const Int h = Int(h_rec(n - 1));
  const Int nn = n;
  return nn * h * (h + alternating(n) * (nn * nn + nn - 4)) + nn * nn - 4;
}

Int odd_expr(int n) {
  if (n < 2) throw std::invalid_argument("odd_expr: index must be at least 2");
  const Int h = Int(h_rec(n - 1));
  const Int nn = n;
  return nn * h * (h - alternating(n) * (nn * nn + nn - 2)) - nn * nn;
}

ShapeVerdict is_log_convex(const SequenceTable& t, int from, int to) { return check_shape(t, from, to, true); }
ShapeVerdict is_log_convex(const SequenceTable& t) { return check_shape(t, t.start_index, t.end_index(), true); }
ShapeVerdict is_log_concave(const SequenceTable& t, int from, int to) { return check_shape(t, from, to, false); }

bool is_family(std::string_view name) {
  return std::find(std::begin(kFamilies), std::end(kFamilies), name) != std::end(kFamilies);
}

bool is_signed_family(std::string_view name) { return signed_family_of(name).has_value(); }

SequenceTable enumerated_table(std::string_view family, int n_max, EnumerationCaps caps) {
  if (!is_family(family)) throw std::invalid_argument("unknown family: " + std::string(family));
  require_positive(n_max, "enumerated_table");
  SequenceTable t{std::string(family), 1, {}};
  if (auto sf = signed_family_of(family)) {
    if (n_max > caps.signed_max)
      throw std::out_of_range("enumeration cap for " + t.name + " is " + std::to_string(caps.signed_max));
    for (int n = 1; n <= n_max; ++n) {
      std::uint64_t count = 0;
      for_each_signed_derangement(n, *sf, [&](const SignedPermutation&) { ++count; });
      t.values.emplace_back(count);
    }
    return t;
  }
  if (n_max > caps.unsigned_max)
    throw std::out_of_range("enumeration cap for " + t.name + " is " + std::to_string(caps.unsigned_max));
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t count = 0;
    for_each_derangement(n, [&](const Permutation& p) {
      if (family == "h" || (family == "hPlus") == is_even(p)) ++count;
    });
    t.values.emplace_back(count);
  }
  return t;
}

SequenceTable sequence_table(std::string_view family, int n_max, EnumerationCaps caps) {
  if (is_signed_family(family)) return enumerated_table(family, n_max, caps);
  if (!is_family(family)) throw std::invalid_argument("unknown family: " + std::string(family));
  require_positive(n_max, "sequence_table");
  SequenceTable t{std::string(family), 1, {}};
  for (int n = 1; n <= n_max; ++n) {
    if (family == "h") t.values.push_back(h_rec(n));
    else if (family == "hPlus") t.values.push_back(h_plus(n));
    else t.values.push_back(h_minus(n));
  }
  return t;
}

std::string to_text(const SequenceTable& t) {
  std::ostringstream out;
  for (std::size_t k = 0; k < t.values.size(); ++k) {
    if (k > 0) out << ' ';
    out << t.start_index + static_cast<int>(k) << ':' << t.values[k];
  }
  return out.str();
}

std::string to_csv(const std::vector<SequenceTable>& tables) {
  std::ostringstream out;
  out << "family,n,value\n";
  for (const auto& t : tables)
    for (std::size_t k = 0; k < t.values.size(); ++k)
      out << t.name << ',' << t.start_index + static_cast<int>(k) << ',' << t.values[k] << '\n';
  return out.str();
}

std::string to_json(const std::vector<SequenceTable>& tables) {
  auto doc = nlohmann::json::array();
  for (const auto& t : tables) {
    auto values = nlohmann::json::array();
    for (const auto& v : t.values) values.push_back(v.str());
    doc.push_back({{"family", t.name}, {"start_index", t.start_index}, {"values", values}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace derange
