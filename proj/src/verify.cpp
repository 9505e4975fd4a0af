#include "derange/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "derange/mr_bijection.hpp"
#include "derange/parity_maps.hpp"
#include "derange/permutation.hpp"
#include "derange/sequences.hpp"
#include "derange/signed_permutation.hpp"
#include "derange/type_a.hpp"
#include "derange/type_bd.hpp"

namespace derange {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << report.suite << ": " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  out << report.suite << ": " << (report.passed() ? "PASSED" : "FAILED") << '\n';
  return out.str();
}

namespace {

unsigned worker_count(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls body(worker, k) for k in [0, count); rows are handed out dynamically.
template <class Body>
void parallel_rows(std::size_t count, unsigned workers, Body body) {
  std::atomic<std::size_t> next{0};
  auto run = [&](unsigned w) {
    for (std::size_t k = next++; k < count; k = next++) body(w, k);
  };
  if (workers <= 1) {
    run(0);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  for (auto& t : pool) t.join();
}

using Key = std::pair<std::uint64_t, std::uint64_t>;

// 5 bits per entry, offset so that signed entries stay nonnegative.
template <class Range>
std::uint64_t pack(const Range& entries) {
  std::uint64_t word = 0;
  for (int v : entries) word = (word << 5) | static_cast<std::uint64_t>(v + 16);
  return word;
}

struct Failure {
  std::size_t count = 0;
  std::string first;

  void note(const std::string& what) {
    if (count++ == 0) first = what;
  }
  void merge(const Failure& other) {
    if (count == 0) first = other.first;
    count += other.count;
  }
  std::string detail() const { return count == 0 ? std::string() : std::to_string(count) + " failures, first " + first; }
};

std::string pair_text(const Permutation& a, const Permutation& b) {
  return "(" + to_cycle_string(a) + ";" + to_cycle_string(b) + ")";
}

std::string pair_text(const SignedPermutation& a, const SignedPermutation& b) {
  return "(" + to_string(a) + ";" + to_string(b) + ")";
}

struct Tagged {
  Key key;
  std::uint32_t row;
  std::uint32_t col;
  bool operator<(const Tagged& o) const { return std::tie(key, row, col) < std::tie(o.key, o.row, o.col); }
};

// ---- type A ---------------------------------------------------------------

struct TypeAWorker {
  std::vector<Tagged> images;
  Failure range, law, inverse, branch_index;
};

bool type_a_law(int n, TypeAClass c, const Permutation& p1, const Permutation& s1) {
  const bool top_pair = in_two_cycle(s1, n + 1);
  switch (c) {
    case TypeAClass::T1: return !top_pair;
    case TypeAClass::T2: {
      if (top_pair) return false;
      const auto pre = g_map(n + 1, s1);
      return pre.index == n && pre.source_degree() == n;
    }
    case TypeAClass::T3: return top_pair && !in_two_cycle(p1, n - 1);
    case TypeAClass::T4: return top_pair && in_two_cycle(p1, n - 1);
  }
  return false;
}

}  // namespace

SuiteReport verify_type_a(const VerifyOptions& opts) {
  SuiteReport report{"a", {}};
  const unsigned workers = worker_count(opts.jobs);
  for (int n = 3; n <= opts.max_n_a; ++n) {
    const auto h = enumerate_derangements(n);
    std::vector<TypeAWorker> slots(workers);
    parallel_rows(h.size(), workers, [&](unsigned w, std::size_t r) {
      auto& slot = slots[w];
      for (std::size_t c = 0; c < h.size(); ++c) {
        const auto& pi = h[r];
        const auto& sigma = h[c];
        const auto [p1, s1] = psi(pi, sigma);
        if (p1.degree() != n - 1 || s1.degree() != n + 1 || !is_derangement(p1) || !is_derangement(s1)) {
          slot.range.note(pair_text(pi, sigma));
          continue;
        }
        const auto cls = classify_a(pi, sigma);
        if (n >= 5 && !type_a_law(n, cls, p1, s1)) slot.law.note(pair_text(pi, sigma));
        if (cls == TypeAClass::T2) {
          const auto pre = g_map(n, pi);
          if (pre.index > n - 2 || pre.source_degree() != n - 2) slot.branch_index.note(to_cycle_string(pi));
        }
        const auto back = try_lambda_inv(n, p1, s1);
        if (!back || back->first != pi || back->second != sigma) slot.inverse.note(pair_text(pi, sigma));
        slot.images.push_back({{pack(p1.one_line()), pack(s1.one_line())},
                               static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)});
      }
    });

    std::vector<Tagged> images;
    Failure range, law, inverse, branch_index;
    for (auto& s : slots) {
      images.insert(images.end(), s.images.begin(), s.images.end());
      range.merge(s.range);
      law.merge(s.law);
      inverse.merge(s.inverse);
      branch_index.merge(s.branch_index);
    }
    std::sort(images.begin(), images.end());
    Failure collisions;
    for (std::size_t k = 1; k < images.size(); ++k) {
      if (images[k].key != images[k - 1].key) continue;
      collisions.note(pair_text(h[images[k - 1].row], h[images[k - 1].col]) + " and " +
                      pair_text(h[images[k].row], h[images[k].col]));
    }
    const std::size_t pairs = h.size() * h.size();
    const std::string tag = "n=" + std::to_string(n);
    report.add(tag + " images in H_{n-1} x H_{n+1}", range.count == 0,
               range.count ? range.detail() : std::to_string(pairs) + " pairs");
    report.add(tag + " injective", collisions.count == 0,
               collisions.count ? collisions.detail() : std::to_string(pairs - collisions.count) + " distinct images");
    report.add(tag + " left inverse", inverse.count == 0, inverse.detail());
    if (n >= 5) report.add(tag + " class range laws", law.count == 0, law.detail());
    report.add(tag + " T2 index stays in [n-2]", branch_index.count == 0, branch_index.detail());

    const auto below = static_cast<std::uint64_t>(enumerate_derangements(n - 1).size());
    const auto above = static_cast<std::uint64_t>(enumerate_derangements(n + 1).size());
    const auto square = static_cast<std::uint64_t>(pairs);
    report.add(tag + " h_n^2 <= h_{n-1} h_{n+1}", square <= below * above,
               std::to_string(square) + " <= " + std::to_string(below * above));
  }
  return report;
}

namespace {

// ---- type B ---------------------------------------------------------------

enum SubMap : std::uint8_t { kA, kB, kC, k21, k11, k12, k13Tilde, k13Hat, kStar, kSubMaps };
constexpr std::array<const char*, kSubMaps> kSubMapNames = {"a", "b", "c", "21", "11", "12", "13~", "13^", "star"};

SubMap sub_map_of(const SignedPermutation& pi, const SignedPermutation& sigma) {
  const auto c = classify_b(pi, sigma);
  switch (c.pair) {
    case PairTag::P1: return kA;
    case PairTag::P2: return kB;
    case PairTag::P3: return kC;
    case PairTag::Any: return k21;
    case PairTag::P1p: return k11;
    case PairTag::P2p: return k12;
    case PairTag::P3p: return sigma(sigma.degree()) == -sigma.degree() ? k13Hat : k13Tilde;
    case PairTag::P4p: return kStar;
  }
  return kStar;
}

struct TypeBWorker {
  std::vector<Tagged> images;
  std::array<std::size_t, kSubMaps> per_sub_map{};
  Failure range, parity, inverse;
  std::size_t d_pairs = 0, d_closed = 0, odd_pairs = 0, odd_closed = 0;
};

}  // namespace

SuiteReport verify_type_bd(const VerifyOptions& opts) {
  SuiteReport report{"bd", {}};
  const unsigned workers = worker_count(opts.jobs);
  std::array<std::set<int>, kSubMaps> seen_at;
  for (int n = 3; n <= opts.max_n_b; ++n) {
    const auto h = enumerate_signed_derangements(n, SignedFamily::B);
    std::vector<TypeBWorker> slots(workers);
    parallel_rows(h.size(), workers, [&](unsigned w, std::size_t r) {
      auto& slot = slots[w];
      for (std::size_t c = 0; c < h.size(); ++c) {
        const auto& pi = h[r];
        const auto& sigma = h[c];
        const auto [zeta, xi] = phi(pi, sigma);
        ++slot.per_sub_map[sub_map_of(pi, sigma)];
        if (zeta.degree() != n - 1 || xi.degree() != n + 1 || !is_derangement_b(zeta) || !is_derangement_b(xi)) {
          slot.range.note(pair_text(pi, sigma));
          continue;
        }
        const bool first_kept = is_in_d(zeta) == is_in_d(pi);
        const bool second_kept = is_in_d(xi) == is_in_d(sigma);
        if (!first_kept || !second_kept) slot.parity.note(pair_text(pi, sigma));
        if (is_in_d(pi) && is_in_d(sigma)) {
          ++slot.d_pairs;
          if (is_in_d(zeta) && is_in_d(xi)) ++slot.d_closed;
        }
        if (!is_in_d(pi) && !is_in_d(sigma)) {
          ++slot.odd_pairs;
          if (!is_in_d(zeta) && !is_in_d(xi)) ++slot.odd_closed;
        }
        const auto back = try_theta(n, zeta, xi);
        if (!back || back->first != pi || back->second != sigma) slot.inverse.note(pair_text(pi, sigma));
        slot.images.push_back({{pack(zeta.window()), pack(xi.window())},
                               static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)});
      }
    });

    std::vector<Tagged> images;
    Failure range, parity, inverse;
    std::array<std::size_t, kSubMaps> per_sub_map{};
    std::size_t d_pairs = 0, d_closed = 0, odd_pairs = 0, odd_closed = 0;
    for (auto& s : slots) {
      images.insert(images.end(), s.images.begin(), s.images.end());
      range.merge(s.range);
      parity.merge(s.parity);
      inverse.merge(s.inverse);
      for (std::size_t k = 0; k < kSubMaps; ++k) per_sub_map[k] += s.per_sub_map[k];
      d_pairs += s.d_pairs;
      d_closed += s.d_closed;
      odd_pairs += s.odd_pairs;
      odd_closed += s.odd_closed;
    }
    for (std::size_t k = 0; k < kSubMaps; ++k)
      if (per_sub_map[k] > 0) seen_at[k].insert(n);

    std::sort(images.begin(), images.end());
    Failure collisions;
    std::map<std::string, std::size_t> colliding_maps;
    for (std::size_t k = 1; k < images.size(); ++k) {
      if (images[k].key != images[k - 1].key) continue;
      const auto& a = images[k - 1];
      const auto& b = images[k];
      collisions.note(pair_text(h[a.row], h[a.col]) + " and " + pair_text(h[b.row], h[b.col]));
      std::string x = kSubMapNames[sub_map_of(h[a.row], h[a.col])];
      std::string y = kSubMapNames[sub_map_of(h[b.row], h[b.col])];
      if (y < x) std::swap(x, y);
      ++colliding_maps[x + "/" + y];
    }
    std::string where;
    for (const auto& [maps, count] : colliding_maps) where += (where.empty() ? "" : ", ") + maps + ":" + std::to_string(count);

    const std::size_t pairs = h.size() * h.size();
    const std::string tag = "n=" + std::to_string(n);
    report.add(tag + " images in H_{n-1}^B x H_{n+1}^B", range.count == 0,
               range.count ? range.detail() : std::to_string(pairs) + " pairs");
    report.add(tag + " injective", collisions.count == 0,
               collisions.count ? collisions.detail() + "; sub-maps " + where
                                : std::to_string(pairs) + " distinct images");
    report.add(tag + " negative-entry parity preserved", parity.count == 0, parity.detail());
    report.add(tag + " D-closed", d_closed == d_pairs, std::to_string(d_closed) + "/" + std::to_string(d_pairs));
    report.add(tag + " (B-D)-closed", odd_closed == odd_pairs,
               std::to_string(odd_closed) + "/" + std::to_string(odd_pairs));
    report.add(tag + " left inverse", inverse.count == 0, inverse.detail());
  }

  std::string coverage;
  bool covered = true;
  for (std::size_t k = 0; k < kSubMaps; ++k) {
    std::string at;
    for (int n : seen_at[k]) at += (at.empty() ? "" : ",") + std::to_string(n);
    if (seen_at[k].count(3) == 0 && seen_at[k].count(4) == 0) covered = false;
    coverage += std::string(coverage.empty() ? "" : " ") + kSubMapNames[k] + "@" + (at.empty() ? "-" : at);
  }
  if (opts.max_n_b >= 3) report.add("every sub-map exercised", covered, coverage);
  return report;
}

SuiteReport verify_naive_control() {
  SuiteReport report{"naive", {}};
  const int n = 3;
  const auto d = enumerate_signed_derangements(n, SignedFamily::D);
  std::size_t tried = 0, violations = 0;
  std::string first;
  for (const auto& pi : d) {
    if (pi(n) != -n) continue;
    for (const auto& sigma : d) {
      ++tried;
      const auto [zeta, xi] = naive_b1_map(pi, sigma);
      if (!is_derangement_b(zeta) || !is_derangement_b(xi)) continue;
      if (!is_in_d(zeta) || !is_in_d(xi)) {
        if (violations++ == 0) first = pair_text(pi, sigma) + " -> " + pair_text(zeta, xi);
      }
    }
  }
  report.add("naive map leaves D at n=3", violations > 0,
             std::to_string(violations) + "/" + std::to_string(tried) + " pairs" + (first.empty() ? "" : ", first " + first));
  return report;
}

namespace {

// Checks that `map` bijects `from \ {w0}` onto `to \ {w0}` with pi_minus on
// the other side as its inverse.
template <class Map>
std::string bijection_failure(const std::vector<SignedPermutation>& from, const std::vector<SignedPermutation>& to,
                              SignedFamily from_family, Map map) {
  const int n = from.empty() ? (to.empty() ? 0 : to.front().degree()) : from.front().degree();
  const auto w0 = n > 0 ? std::optional(SignedPermutation::longest(n)) : std::nullopt;
  std::set<SignedPermutation> targets;
  for (const auto& p : to)
    if (p != w0) targets.insert(p);
  std::set<SignedPermutation> hit;
  for (const auto& p : from) {
    if (p == w0) continue;
    const auto q = map(p);
    if (!targets.count(q)) return "image of " + to_string(p) + " outside the target";
    if (!hit.insert(q).second) return "two inputs reach " + to_string(q);
    if (pi_minus(q).image != p) return "flip does not undo the map at " + to_string(p);
  }
  for (const auto& q : targets) {
    const auto p = pi_minus(q).image;
    if (!in_family(p, from_family)) return "flip of " + to_string(q) + " leaves the domain";
    if (map(p) != q) return "map does not undo the flip at " + to_string(q);
  }
  if (hit.size() != targets.size()) return "not onto";
  return {};
}

}  // namespace

SuiteReport verify_parity(const VerifyOptions& opts) {
  SuiteReport report{"parity", {}};
  for (int n = 1; n <= opts.max_n_parity; ++n) {
    const auto bplus = enumerate_signed_derangements(n, SignedFamily::Bplus);
    const auto bminus = enumerate_signed_derangements(n, SignedFamily::Bminus);
    const auto d = enumerate_signed_derangements(n, SignedFamily::D);
    const auto odd = enumerate_signed_derangements(n, SignedFamily::BminusD);
    const std::string tag = "n=" + std::to_string(n);

    const auto f_fail = bijection_failure(bplus, bminus, SignedFamily::Bplus, f_parity);
    report.add(tag + " f_parity bijective with two-sided inverse", f_fail.empty(),
               f_fail.empty() ? std::to_string(bplus.size()) + " -> " + std::to_string(bminus.size()) : f_fail);
    const auto g_fail = bijection_failure(d, odd, SignedFamily::D, g_parity);
    report.add(tag + " g_parity bijective with two-sided inverse", g_fail.empty(),
               g_fail.empty() ? std::to_string(d.size()) + " -> " + std::to_string(odd.size()) : g_fail);

    const auto w0 = SignedPermutation::longest(n);
    const long sign = n % 2 == 0 ? 1 : -1;
    const long w0_b = in_family(w0, SignedFamily::Bplus) ? 1 : -1;
    const long w0_d = in_family(w0, SignedFamily::D) ? 1 : -1;
    const long b_diff = static_cast<long>(bplus.size()) - static_cast<long>(bminus.size());
    const long d_diff = static_cast<long>(d.size()) - static_cast<long>(odd.size());
    report.add(tag + " w0 bookkeeping", b_diff == w0_b && d_diff == w0_d && b_diff == sign && d_diff == sign,
               "B+ - B- = " + std::to_string(b_diff) + ", D - (B-D) = " + std::to_string(d_diff));
  }
  return report;
}

SuiteReport verify_sequences(const VerifyOptions&) {
  SuiteReport report{"sequences", {}};
  const int top = 30;

  {
    std::string bad;
    for (int n = 1; n <= 8 && bad.empty(); ++n) {
      const Nat counted = enumerate_derangements(n).size();
      if (h_rec(n) != counted || (n >= 2 && h_reduced(n) != counted)) bad = "n=" + std::to_string(n);
    }
    report.add("h_rec = h_reduced = enumeration on 1..8", bad.empty(), bad);
  }
  {
    std::string bad;
    for (int n = 1; n <= top && bad.empty(); ++n) {
      const Int diff = Int(h_plus(n)) - Int(h_minus(n));
      const Int expected = (n % 2 == 1 ? 1 : -1) * (n - 1);
      if (h_plus(n) + h_minus(n) != h_rec(n) || diff != expected) bad = "n=" + std::to_string(n);
    }
    report.add("even/odd counts sum and difference on 1..30", bad.empty(), bad);
  }
  {
    const auto plus = enumerated_table("hPlus", 8);
    const auto minus = enumerated_table("hMinus", 8);
    std::string bad;
    for (int n = 1; n <= 8 && bad.empty(); ++n)
      if (plus.at(n) != h_plus(n) || minus.at(n) != h_minus(n)) bad = "n=" + std::to_string(n);
    report.add("even/odd closed forms match enumeration on 1..8", bad.empty(), bad);
  }
  {
    std::string bad;
    for (int n = 2; n <= top && bad.empty(); ++n) {
      const Int p = 4 * (Int(h_plus(n + 1)) * Int(h_plus(n - 1)) - Int(h_plus(n)) * Int(h_plus(n)));
      const Int m = 4 * (Int(h_minus(n + 1)) * Int(h_minus(n - 1)) - Int(h_minus(n)) * Int(h_minus(n)));
      if (even_expr(n) != p || odd_expr(n) != m) bad = "n=" + std::to_string(n);
    }
    report.add("even_expr and odd_expr match their products on 2..30", bad.empty(), bad);
  }
  {
    std::string bad;
    for (int n = 6; n <= top && bad.empty(); ++n)
      if (even_expr(n) < 0) bad = "even_expr at n=" + std::to_string(n);
    for (int n = 5; n <= top && bad.empty(); ++n)
      if (odd_expr(n) < 0) bad = "odd_expr at n=" + std::to_string(n);
    report.add("even_expr >= 0 on 6..30 and odd_expr >= 0 on 5..30", bad.empty(), bad);
  }

  const auto verdict = [&](const std::string& what, const SequenceTable& t, int from, int to) {
    const auto v = is_log_convex(t, from, to);
    report.add(what + " log-convex on " + std::to_string(from) + ".." + std::to_string(to), v.holds,
               v.first_violation ? "fails at n=" + std::to_string(*v.first_violation) : "");
  };
  verdict("h", sequence_table("h", top), 2, top);
  verdict("hPlus", sequence_table("hPlus", top), 6, top);
  verdict("hMinus", sequence_table("hMinus", top), 5, top);

  const auto hb = enumerated_table("hB", 6);
  const auto hd = enumerated_table("hD", 6);
  const auto hbd = enumerated_table("hBminusD", 6);
  verdict("hB", hb, 1, 6);
  verdict("hD", hd, 2, 6);
  verdict("hBminusD", hbd, 1, 6);
  {
    std::string bad;
    for (int n = 1; n <= 6 && bad.empty(); ++n) {
      const Int diff = Int(hd.at(n)) - Int(hbd.at(n));
      if (diff != (n % 2 == 0 ? 1 : -1) || hd.at(n) + hbd.at(n) != hb.at(n)) bad = "n=" + std::to_string(n);
    }
    report.add("hD - hBminusD = (-1)^n and hD + hBminusD = hB on 1..6", bad.empty(), bad);
  }
  return report;
}

}  // namespace derange
