#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "octa/exactmath/mpoly.hpp"

namespace octa {

namespace detail {

/// Recursive-descent reader for + - * / ^ and parentheses. Juxtaposed factors
/// multiply ("3 x^2 y"), division is by rational constants only, and exponents
/// may be written x^{12}.
class PolyReader {
 public:
  PolyReader(std::string_view text, std::vector<std::string> vars) : s_(text), vars_(std::move(vars)) {}

  MPoly run() {
    MPoly p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  MPoly sum() {
    MPoly acc = MPoly::constant(0, vars_);
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek('+')) {
        ++pos_;
      } else if (peek('-')) {
        ++pos_;
        sign = -1;
      } else if (!first) {
        break;
      }
      MPoly t = product();
      acc += sign < 0 ? -t : t;
      first = false;
    }
    return acc;
  }

  MPoly product() {
    MPoly acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (peek('/')) {
        ++pos_;
        MPoly d = power();
        if (!d.is_constant() || d.constant_value() == 0) fail("division by a non-constant or zero");
        acc *= Rational(1) / d.constant_value();
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  MPoly power() {
    MPoly base = atom();
    if (!peek('^')) return base;
    ++pos_;
    bool braced = peek('{');
    if (braced) ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent expected");
    unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    if (braced) {
      if (!peek('}')) fail("'}' expected");
      ++pos_;
    }
    return base.pow(e);
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("operand expected");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = sum();
      if (!peek(')')) fail("')' expected");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MPoly::constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10)), vars_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      // longest variable name that prefixes the input, so "vu" reads as v*u
      const std::string* best = nullptr;
      for (const auto& v : vars_) {
        if (s_.substr(pos_, v.size()) == v && (!best || v.size() > best->size())) best = &v;
      }
      if (!best) fail("unknown variable");
      pos_ += best->size();
      return MPoly::variable(vars_, *best);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads a polynomial over the given variable list, e.g.
/// parse_mpoly("(x^2 - 1/2 y)^3", {"x", "y"}).
inline MPoly parse_mpoly(std::string_view text, std::vector<std::string> vars) {
  return detail::PolyReader(text, std::move(vars)).run();
}

}  // namespace octa
