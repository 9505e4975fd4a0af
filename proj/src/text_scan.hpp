#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "derange/permutation.hpp"

namespace derange::detail {

// Minimal cursor over permutation text; every failure reports its offset.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'" + found(), pos_);
    ++pos_;
  }

  void expect_end() {
    skip_space();
    if (!at_end()) throw ParseError("unexpected trailing input" + found(), pos_);
  }

  int integer(bool allow_negative) {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (!at_end() && text_[pos_] == '-') {
      if (!allow_negative) throw ParseError("negative entry not allowed", pos_);
      negative = true;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer" + found(), pos_);
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  std::vector<int> bracketed_list(char open, char close, bool allow_negative) {
    expect(open);
    std::vector<int> out;
    out.push_back(integer(allow_negative));
    for (;;) {
      skip_space();
      if (at_end()) throw ParseError(std::string("expected ',' or '") + close + "'", pos_);
      if (text_[pos_] == close) {
        ++pos_;
        return out;
      }
      expect(',');
      out.push_back(integer(allow_negative));
    }
  }

 private:
  std::string found() const {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace derange::detail
