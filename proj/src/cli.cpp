#include "derange/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "derange/permutation.hpp"
#include "derange/sequences.hpp"
#include "derange/signed_permutation.hpp"
#include "derange/type_a.hpp"
#include "derange/type_bd.hpp"
#include "derange/verify.hpp"

namespace derange::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PairText {
  std::string first;
  std::string second;
  std::size_t second_offset;
};

PairText split_pair(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("expected ';' between the two components", text.size());
  if (text.find(';', semi + 1) != std::string::npos) throw ParseError("more than one ';'", text.find(';', semi + 1));
  return {text.substr(0, semi), text.substr(semi + 1), semi + 1};
}

template <class Parse>
auto parse_at(const std::string& text, std::size_t offset, Parse parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.position() + offset);
  }
}

void require_degree(int actual, int expected, const char* which) {
  if (actual != expected)
    throw UsageError(std::string(which) + " component has degree " + std::to_string(actual) + ", expected " +
                     std::to_string(expected));
}

PermPair parse_a_pair(const std::string& text, int first_degree, int second_degree) {
  const auto parts = split_pair(text);
  auto a = parse_at(parts.first, 0, [&](const std::string& s) { return parse_cycle_permutation(s, first_degree); });
  auto b = parse_at(parts.second, parts.second_offset,
                    [&](const std::string& s) { return parse_cycle_permutation(s, second_degree); });
  return {std::move(a), std::move(b)};
}

SignedPair parse_b_pair(const std::string& text, int first_degree, int second_degree) {
  const auto parts = split_pair(text);
  auto a = parse_at(parts.first, 0, [](const std::string& s) { return parse_window(s); });
  auto b = parse_at(parts.second, parts.second_offset, [](const std::string& s) { return parse_window(s); });
  require_degree(a.degree(), first_degree, "first");
  require_degree(b.degree(), second_degree, "second");
  return {std::move(a), std::move(b)};
}

std::string show(const PermPair& p) { return "(" + to_cycle_string(p.first) + ";" + to_cycle_string(p.second) + ")"; }
std::string show(const SignedPair& p) { return "(" + to_string(p.first) + ";" + to_string(p.second) + ")"; }

void require_a_derangements(const PermPair& p) {
  if (!is_derangement(p.first) || !is_derangement(p.second)) throw UsageError("both components must be derangements");
}

void require_b_derangements(const SignedPair& p) {
  if (!is_derangement_b(p.first) || !is_derangement_b(p.second))
    throw UsageError("both components must be signed derangements");
}

struct PairOptions {
  std::string type;
  int n = 0;
  std::string pair;
};

int do_map(const PairOptions& o, bool class_only, std::ostream& out) {
  if (o.type == "A") {
    const auto p = parse_a_pair(o.pair, o.n, o.n);
    require_a_derangements(p);
    out << to_string(classify_a(p.first, p.second)) << '\n';
    if (!class_only) out << show(psi(p.first, p.second)) << '\n';
  } else {
    const auto p = parse_b_pair(o.pair, o.n, o.n);
    require_b_derangements(p);
    out << to_string(classify_b(p.first, p.second)) << '\n';
    if (!class_only) out << show(phi(p.first, p.second)) << '\n';
  }
  return kOk;
}

int do_invert(const PairOptions& o, std::ostream& out) {
  if (o.type == "A") {
    const auto p = parse_a_pair(o.pair, o.n - 1, o.n + 1);
    require_a_derangements(p);
    const auto pre = try_lambda_inv(o.n, p.first, p.second);
    if (!pre) {
      out << "NOT-IN-IMAGE\n";
      return kFailed;
    }
    out << show(*pre) << '\n';
  } else {
    const auto p = parse_b_pair(o.pair, o.n - 1, o.n + 1);
    require_b_derangements(p);
    const auto pre = try_theta(o.n, p.first, p.second);
    if (!pre) {
      out << "NOT-IN-IMAGE\n";
      return kFailed;
    }
    out << show(*pre) << '\n';
  }
  return kOk;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) items.push_back(item);
  return items;
}

int do_seq(const std::string& families, int to, const std::string& format, std::ostream& out) {
  std::vector<SequenceTable> tables;
  for (const auto& f : split_list(families)) {
    if (!is_family(f)) throw UsageError("unknown family '" + f + "'");
    tables.push_back(sequence_table(f, to));
  }
  if (tables.empty()) throw UsageError("no family given");
  if (format == "csv") {
    out << to_csv(tables);
  } else if (format == "json") {
    out << to_json(tables);
  } else {
    for (const auto& t : tables) out << (tables.size() > 1 ? t.name + " " : "") << to_text(t) << '\n';
  }
  return kOk;
}

void parse_max_n(const std::string& text, VerifyOptions& opts) {
  if (text.empty()) return;
  const auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size() || v < 1) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError("--max-n: bad value '" + text + "'");
    }
  };
  if (text.find(':') == std::string::npos) {
    opts.max_n_a = opts.max_n_b = number(text);
    return;
  }
  for (const auto& item : split_list(text)) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--max-n: expected KEY:VALUE in '" + item + "'");
    const auto key = item.substr(0, colon);
    const int v = number(item.substr(colon + 1));
    if (key == "A") opts.max_n_a = v;
    else if (key == "B" || key == "BD") opts.max_n_b = v;
    else if (key == "P") opts.max_n_parity = v;
    else throw UsageError("--max-n: unknown key '" + key + "'");
  }
}

int do_verify(const std::string& suite, const VerifyOptions& opts, std::ostream& out) {
  if (opts.max_n_b > 5) throw UsageError("type B suites are limited to n <= 5");
  if (opts.max_n_a > 8) throw UsageError("type A suites are limited to n <= 8");
  if (opts.max_n_parity > 7) throw UsageError("parity suites are limited to n <= 7");
  std::vector<SuiteReport> reports;
  const bool all = suite == "all";
  if (all || suite == "a") reports.push_back(verify_type_a(opts));
  if (all || suite == "bd") reports.push_back(verify_type_bd(opts));
  if (all || suite == "bd" || suite == "naive") reports.push_back(verify_naive_control());
  if (all || suite == "parity") reports.push_back(verify_parity(opts));
  if (all || suite == "sequences") reports.push_back(verify_sequences(opts));
  bool ok = true;
  for (const auto& r : reports) {
    out << format_report(r);
    ok = ok && r.passed();
  }
  out << "verify: " << (ok ? "PASSED" : "FAILED") << '\n';
  return ok ? kOk : kFailed;
}

std::string verdict_text(const ShapeVerdict& v) {
  if (v.holds) return "yes";
  return "no (n=" + std::to_string(*v.first_violation) + ")";
}

int do_explore_d(int to, std::ostream& out) {
  const auto plus = enumerated_table("hDPlus", to);
  const auto minus = enumerated_table("hDMinus", to);
  out << "EXPLORATORY: even/odd type D derangement counts, no claim is made\n";
  out << "n,hDPlus,hDMinus\n";
  for (int n = 1; n <= to; ++n) out << n << ',' << plus.at(n) << ',' << minus.at(n) << '\n';
  for (const auto* t : {&plus, &minus}) {
    int from = 1;
    while (from <= to && t->at(from) == 0) ++from;
    if (to - from < 2) {
      out << "EXPLORATORY " << t->name << ": window too short\n";
      continue;
    }
    out << "EXPLORATORY " << t->name << " on " << from << ".." << to
        << ": log-convex " << verdict_text(is_log_convex(*t, from, to)) << ", log-concave "
        << verdict_text(is_log_concave(*t, from, to)) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derangement injections for Coxeter types A, B and D", "derange"};
  app.require_subcommand(1);

  PairOptions pair_opts;
  const auto add_pair_options = [&](CLI::App* cmd) {
    cmd->add_option("--type", pair_opts.type, "A (cycle form) or B (window form)")
        ->required()
        ->check(CLI::IsMember({"A", "B"}));
    cmd->add_option("--n", pair_opts.n, "degree of the injection's domain")->required()->check(CLI::Range(3, 12));
    cmd->add_option("--pair", pair_opts.pair, "two permutations separated by ';'")->required();
  };
  auto* map_cmd = app.add_subcommand("map", "apply the injection and print class and image");
  add_pair_options(map_cmd);
  auto* invert_cmd = app.add_subcommand("invert", "print the preimage of a pair or NOT-IN-IMAGE");
  add_pair_options(invert_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "print the class of a pair");
  add_pair_options(classify_cmd);

  std::string family;
  int to = 0;
  std::string format = "text";
  auto* seq_cmd = app.add_subcommand("seq", "print a sequence table");
  seq_cmd->add_option("--family", family, "comma-separated family names")->required();
  seq_cmd->add_option("--to", to, "last index")->required()->check(CLI::PositiveNumber);
  seq_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  std::string suite = "all";
  std::string max_n;
  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "run exhaustive verification suites");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"a", "bd", "naive", "parity", "sequences", "all"}));
  verify_cmd->add_option("--max-n", max_n, "K, or per-type limits such as A:6,B:4");
  verify_cmd->add_option("--jobs", verify_opts.jobs, "worker threads (0: all cores)");

  int explore_to = 7;
  auto* explore_cmd = app.add_subcommand("explore-d", "even/odd type D counts with shape verdicts");
  explore_cmd->add_option("--to", explore_to)->check(CLI::Range(3, 7));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (map_cmd->parsed()) return do_map(pair_opts, false, out);
    if (classify_cmd->parsed()) return do_map(pair_opts, true, out);
    if (invert_cmd->parsed()) return do_invert(pair_opts, out);
    if (seq_cmd->parsed()) return do_seq(family, to, format, out);
    if (verify_cmd->parsed()) {
      parse_max_n(max_n, verify_opts);
      return do_verify(suite, verify_opts, out);
    }
    if (explore_cmd->parsed()) return do_explore_d(explore_to, out);
  } catch (const ParseError& e) {
    err << "error: parse error at position " << e.position() << ": " << e.message() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace derange::cli
