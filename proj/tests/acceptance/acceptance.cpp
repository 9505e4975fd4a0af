#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "derange/mr_bijection.hpp"
#include "derange/parity_maps.hpp"
#include "derange/sequences.hpp"
#include "derange/type_a.hpp"
#include "derange/type_bd.hpp"
#include "derange/verify.hpp"

using namespace derange;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string failed_checks(const SuiteReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += "; " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  return out;
}

Permutation cyc(const char* text, int n) { return parse_cycle_permutation(text, n); }
SignedPermutation win(const char* text) { return parse_window(text); }

std::string show(const PermPair& p) { return "(" + to_cycle_string(p.first) + ";" + to_cycle_string(p.second) + ")"; }
std::string show(const SignedPair& p) { return "(" + to_string(p.first) + ";" + to_string(p.second) + ")"; }

Outcome worked_examples() {
  const auto start = Clock::now();
  int ok = 0, total = 0;
  std::string bad;
  auto expect = [&](const std::string& got, const std::string& want, const std::string& label) {
    ++total;
    if (got == want) ++ok;
    else bad += "; " + label + " gave " + got;
  };

  expect(to_cycle_string(f_map(5, 2, cyc("(4,1,3,2)", 4))), "(5,4,1,3,2)", "F5 a");
  expect(to_cycle_string(f_map(5, 2, cyc("(3,1,2)", 3))), "(5,2)(4,1,3)", "F5 b");
  const auto g1 = g_map(5, cyc("(5,4,1,3,2)", 5));
  const auto g2 = g_map(5, cyc("(5,2)(4,1,3)", 5));
  expect(std::to_string(g1.index) + to_cycle_string(g1.sigma), "2(4,1,3,2)", "G5 a");
  expect(std::to_string(g2.index) + to_cycle_string(g2.sigma), "2(3,1,2)", "G5 b");

  const char* psi5[][3] = {
      {"(5,4,1,3,2)", "(5,3)(4,1,2)", "((4,1,3,2);(6,4,1,2)(5,3))"},
      {"(5,2)(4,1,3)", "(5,3)(4,1,2)", "((4,3,1,2);(6,3,5)(4,1,2))"},
      {"(5,4)(3,1,2)", "(5,4,1,3,2)", "((4,2,3,1);(6,2)(5,1,4,3))"},
      {"(5,4)(3,1,2)", "(5,2)(4,1,3)", "((4,3)(2,1);(6,2)(5,1,3,4))"},
  };
  for (const auto& e : psi5) expect(show(psi(cyc(e[0], 5), cyc(e[1], 5))), e[2], std::string("Psi5 ") + e[0]);

  const char* psi3[][3] = {
      {"(3,1,2)", "(3,1,2)", "((2,1);(4,1,2,3))"},
      {"(3,1,2)", "(3,2,1)", "((2,1);(4,3,1,2))"},
      {"(3,2,1)", "(3,2,1)", "((2,1);(4,1,3,2))"},
      {"(3,2,1)", "(3,1,2)", "((2,1);(4,2,1,3))"},
  };
  for (const auto& e : psi3) expect(show(psi(cyc(e[0], 3), cyc(e[1], 3))), e[2], std::string("Psi3 ") + e[0] + e[1]);

  const char* phi6[][3] = {
      {"[-1,-6,-3,5,-4,-2]", "[-1,-2,6,-5,3,-4]", "([-1,5,-3,2,-4];[-1,-2,6,-5,3,-7,4])"},
      {"[-1,-6,-3,5,-4,-2]", "[-1,-3,6,-5,-4,2]", "([-1,3,-2,5,-4];[-1,-3,6,-5,-4,-7,-2])"},
      {"[-1,-6,-3,5,-4,-2]", "[-1,-2,4,-5,3,-6]", "([-1,-3,2,5,-4];[-1,-2,4,-5,3,-7,6])"},
      {"[-1,-6,-3,5,-4,2]", "[-1,-3,6,-5,-4,2]", "([-1,-2,-3,5,-4];[-1,-7,6,-5,-4,2,3])"},
      {"[2,3,1,-5,4,-6]", "[-1,-3,-2,5,-6,4]", "([-2,3,1,-5,4];[-1,3,-2,5,-6,4,-7])"},
      {"[2,3,1,-5,4,-6]", "[-1,-2,-3,-4,-5,-6]", "([-2,3,1,-5,4];[-1,-2,-3,-5,4,7,6])"},
      {"[-1,-2,-3,-4,-5,-6]", "[2,3,1,-5,-6,4]", "([-1,-2,5,-4,-3];[2,3,1,-5,-6,-7,-4])"},
  };
  for (const auto& e : phi6) expect(show(phi(win(e[0]), win(e[1]))), e[2], std::string("Phi6 ") + e[0] + e[1]);

  const double t = seconds_since(start);
  Outcome o;
  o.passed = ok == total && t < 1.0;
  o.detail = std::to_string(ok) + "/" + std::to_string(total) + " example rows exact in " + std::to_string(t) + " s" + bad;
  return o;
}

Outcome type_a_injectivity() {
  VerifyOptions opts;
  opts.max_n_a = 6;
  opts.jobs = 1;
  const auto start = Clock::now();
  const auto r = verify_type_a(opts);
  const double t = seconds_since(start);
  return {r.passed() && t < 60.0,
          "n=3..6 single-threaded in " + std::to_string(t) + " s (target 60 s)" + failed_checks(r)};
}

Outcome type_bd_injectivity(int max_n) {
  VerifyOptions opts;
  opts.max_n_b = max_n;
  const auto start = Clock::now();
  const auto r = verify_type_bd(opts);
  const double t = seconds_since(start);
  return {r.passed() && t < 120.0,
          "n=3.." + std::to_string(max_n) + " in " + std::to_string(t) + " s (target 120 s)" + failed_checks(r)};
}

Outcome sequence_identities() {
  Outcome o;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) {
      o.passed = false;
      o.detail += "; " + what;
    }
  };
  const auto en = enumerated_table("h", 8);
  for (int n = 1; n <= 8; ++n) {
    require(h_rec(n) == en.at(n), "h_rec vs enumeration at " + std::to_string(n));
    if (n >= 2) require(h_reduced(n) == h_rec(n), "h_reduced at " + std::to_string(n));
  }
  const auto ep = enumerated_table("hPlus", 8);
  const auto em = enumerated_table("hMinus", 8);
  for (int n = 1; n <= 8; ++n) {
    require(h_plus(n) == ep.at(n), "h_plus vs enumeration at " + std::to_string(n));
    require(h_minus(n) == em.at(n), "h_minus vs enumeration at " + std::to_string(n));
  }
  for (int n = 1; n <= 30; ++n) {
    const Int sign = n % 2 == 0 ? 1 : -1;
    require(h_plus(n) + h_minus(n) == h_rec(n), "sum at " + std::to_string(n));
    require(Int(h_plus(n)) - Int(h_minus(n)) == -sign * (n - 1), "difference at " + std::to_string(n));
  }
  for (int n = 2; n <= 30; ++n) {
    const Int gp = Int(h_plus(n + 1)) * h_plus(n - 1) - Int(h_plus(n)) * h_plus(n);
    const Int gm = Int(h_minus(n + 1)) * h_minus(n - 1) - Int(h_minus(n)) * h_minus(n);
    require(even_expr(n) == 4 * gp, "even_expr product at " + std::to_string(n));
    require(odd_expr(n) == 4 * gm, "odd_expr product at " + std::to_string(n));
    if (n >= 6) require(even_expr(n) >= 0, "even_expr sign at " + std::to_string(n));
    if (n >= 5) require(odd_expr(n) >= 0, "odd_expr sign at " + std::to_string(n));
  }
  o.detail = "recurrences on 1..8, even/odd counts and closed forms on 1..30" + o.detail;
  return o;
}

Outcome log_convexity() {
  struct Window {
    SequenceTable table;
    int from, to;
  };
  const std::vector<Window> windows = {
      {sequence_table("h", 30), 2, 30},        {sequence_table("hPlus", 30), 6, 30},
      {sequence_table("hMinus", 30), 5, 30},   {enumerated_table("hB", 6), 1, 6},
      {enumerated_table("hD", 6), 2, 6},       {enumerated_table("hBminusD", 6), 1, 6},
  };
  Outcome o;
  for (const auto& w : windows) {
    const auto v = is_log_convex(w.table, w.from, w.to);
    o.detail += (o.detail.empty() ? "" : ", ") + w.table.name + " " + std::to_string(w.from) + ".." +
                std::to_string(w.to) + (v.holds ? " yes" : " NO at " + std::to_string(*v.first_violation));
    o.passed = o.passed && v.holds;
  }
  return o;
}

Outcome parity_bijections() {
  VerifyOptions opts;
  opts.max_n_parity = 6;
  const auto r = verify_parity(opts);
  Outcome o{r.passed(), "f_parity and g_parity on n=1..6"};
  const auto bp = enumerated_table("hBPlus", 6), bm = enumerated_table("hBMinus", 6);
  const auto d = enumerated_table("hD", 6), bd = enumerated_table("hBminusD", 6);
  for (int n = 1; n <= 6; ++n) {
    const Int sign = n % 2 == 0 ? 1 : -1;
    if (Int(bp.at(n)) - Int(bm.at(n)) != sign || Int(d.at(n)) - Int(bd.at(n)) != sign) {
      o.passed = false;
      o.detail += "; w0 bookkeeping at n=" + std::to_string(n);
    }
  }
  o.detail += failed_checks(r);
  return o;
}

Outcome naive_control() {
  const auto r = verify_naive_control();
  std::string detail;
  for (const auto& c : r.checks) detail += (detail.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  return {r.passed(), detail};
}

Outcome desk_scale_substitution() {
  const auto a = sequence_identities();
  const auto b = log_convexity();
  return {a.passed && b.passed,
          "all-n log-convexity is out of reach; exact identities and bounded windows stand in (criteria 4 and 5 " +
              std::string(a.passed && b.passed ? "hold" : "do not hold") + ")"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  int max_n_b = 4;
  app.add_option("--criterion", only, "run one criterion (1..8)")->check(CLI::Range(1, 8));
  app.add_option("--max-n-b", max_n_b, "largest degree for the type B criterion")->check(CLI::Range(3, 5));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"worked examples", worked_examples},
      {"type A injectivity", type_a_injectivity},
      {"type B/D injectivity", [&] { return type_bd_injectivity(max_n_b); }},
      {"sequence identities", sequence_identities},
      {"log-convexity verdicts", log_convexity},
      {"parity bijections", parity_bijections},
      {"naive map control", naive_control},
      {"desk-scale substitution", desk_scale_substitution},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && static_cast<int>(k + 1) != only) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.passed;
    std::cout << "criterion " << k + 1 << " " << (o.passed ? "PASS" : "FAIL") << ": " << criteria[k].first << ": "
              << o.detail << '\n';
  }
  return all ? 0 : 1;
}
