#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "octa/exactmath/rational.hpp"

namespace octa {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a map ordered lexicographically by exponent vector, so the
/// last entry is the lex-leading term. Zero coefficients are never stored and
/// every exponent vector has one entry per variable. Negative exponents are
/// rejected; Laurent data lives in RatFunc.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) { check_unique_vars(); }

  static MPoly constant(const Rational& c, std::vector<std::string> vars = {}) {
    MPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
  }

  static MPoly variable(std::vector<std::string> vars, std::string_view name) {
    MPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.index_of(name)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  static MPoly monomial(std::vector<std::string> vars, Exponents exps, const Rational& c = 1) {
    MPoly p(std::move(vars));
    p.add_term(std::move(exps), c);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_vars() const { return vars_.size(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  Rational constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  bool has_var(std::string_view name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
  }

  std::size_t index_of(std::string_view name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  /// Adds c * x^exps in place.
  void add_term(Exponents exps, const Rational& c) {
    if (exps.size() != vars_.size()) throw std::invalid_argument("exponent vector has wrong length");
    for (int e : exps) {
      if (e < 0) throw std::invalid_argument("negative exponent in MPoly");
    }
    if (c == 0) return;
    Rational cc = c;
    cc.canonicalize();
    auto [it, inserted] = terms_.try_emplace(std::move(exps), cc);
    if (!inserted) {
      it->second += cc;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree(std::string_view var) const {
    if (!has_var(var)) return is_zero() ? -1 : 0;
    std::size_t k = index_of(var);
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
    return d;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  /// Lex-leading term (largest exponent vector). Requires a nonzero polynomial.
  const std::pair<const Exponents, Rational>& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  /// Re-expresses the polynomial over `new_vars`, which must contain every
  /// variable that actually occurs.
  MPoly lift(const std::vector<std::string>& new_vars) const {
    if (new_vars == vars_) return *this;
    MPoly out(new_vars);
    std::vector<std::optional<std::size_t>> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
      if (it != new_vars.end()) map[i] = static_cast<std::size_t>(it - new_vars.begin());
    }
    for (const auto& [e, c] : terms_) {
      Exponents ne(new_vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!map[i]) throw std::invalid_argument("cannot drop occurring variable '" + vars_[i] + "'");
        ne[*map[i]] = e[i];
      }
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  /// Removes variables that do not occur.
  MPoly trimmed() const {
    std::vector<std::string> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
      if (used) keep.push_back(vars_[i]);
    }
    return lift(keep);
  }

  MPoly operator-() const {
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  MPoly& operator+=(const MPoly& other) {
    if (other.is_zero()) return *this;
    align_with(other);
    if (other.vars_ == vars_) {
      for (const auto& [e, c] : other.terms_) add_term_unchecked(e, c);
    } else {
      // other is a constant with a different (possibly empty) variable list
      add_term_unchecked(Exponents(vars_.size(), 0), other.constant_value());
    }
    return *this;
  }

  MPoly& operator-=(const MPoly& other) { return *this += -other; }

  MPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  MPoly& operator*=(const MPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) {
      MPoly z(a.vars_.empty() ? b.vars_ : a.vars_);
      return z;
    }
    if (a.vars_ != b.vars_) {
      if (b.is_constant()) return a * b.constant_value();
      if (a.is_constant()) return b * a.constant_value();
      throw std::invalid_argument("variable-list mismatch: " + describe_vars(a.vars_) + " vs " +
                                  describe_vars(b.vars_));
    }
    MPoly out(a.vars_);
    const std::size_t n = a.vars_.size();
    Exponents e(n);
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        prod = ca * cb;
        out.add_term_unchecked(e, prod);
      }
    }
    return out;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
    return false;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned n) const {
    MPoly result = MPoly::constant(1, vars_);
    MPoly base = *this;
    while (n > 0) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n) base = base * base;
    }
    return result;
  }

  MPoly derivative(std::string_view var) const {
    MPoly out(vars_);
    if (!has_var(var)) return out;
    std::size_t k = index_of(var);
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exponents ne = e;
      ne[k] -= 1;
      out.terms_.emplace(std::move(ne), c * e[k]);
    }
    return out;
  }

  /// Full evaluation; `point` is indexed like vars().
  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong dimension");
    // cache powers per variable
    std::vector<std::vector<Rational>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) powers[i].push_back(Rational(1));
    Rational sum = 0;
    Rational term;
    for (const auto& [e, c] : terms_) {
      term = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * point[i]);
        term *= pw[static_cast<std::size_t>(e[i])];
      }
      sum += term;
    }
    return sum;
  }

  /// Evaluates one variable, keeping the variable list (the variable then has
  /// degree 0 everywhere).
  MPoly partial_evaluate(std::string_view var, const Rational& value) const {
    if (!has_var(var)) return *this;
    std::size_t k = index_of(var);
    MPoly out(vars_);
    std::vector<Rational> pw{Rational(1)};
    for (const auto& [e, c] : terms_) {
      while (static_cast<int>(pw.size()) <= e[k]) pw.push_back(pw.back() * value);
      Exponents ne = e;
      ne[k] = 0;
      out.add_term_unchecked(ne, c * pw[static_cast<std::size_t>(e[k])]);
    }
    return out;
  }

  /// Coefficient of var^power as a polynomial over the same variable list.
  MPoly coefficient_in(std::string_view var, int power) const {
    std::size_t k = index_of(var);
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[k] != power) continue;
      Exponents ne = e;
      ne[k] = 0;
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  /// Coefficients c_0..c_d of the expansion in `var`.
  std::vector<MPoly> coefficients_in(std::string_view var) const {
    std::size_t k = index_of(var);
    int d = degree(var);
    std::vector<MPoly> out(static_cast<std::size_t>(std::max(d, 0) + 1), MPoly(vars_));
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      ne[k] = 0;
      out[static_cast<std::size_t>(e[k])].terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  /// Rational content: positive gcd of numerators over lcm of denominators.
  Rational content() const {
    if (terms_.empty()) return Rational(0);
    Integer g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    return r;
  }

  /// Divides by the content and makes the lex-leading coefficient positive.
  MPoly primitive() const {
    if (terms_.empty()) return *this;
    Rational s = Rational(1) / content();
    if (leading_term().second < 0) s = -s;
    return *this * s;
  }

  /// Per-variable minimum exponent over all terms (the largest monomial divisor).
  Exponents monomial_gcd() const {
    Exponents m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        m = e;
        first = false;
      } else {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
      }
    }
    return m;
  }

  /// Divides by x^shift (every exponent must stay non-negative).
  MPoly shifted_down(const Exponents& shift) const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      for (std::size_t i = 0; i < ne.size(); ++i) {
        ne[i] -= shift[i];
        if (ne[i] < 0) throw std::invalid_argument("monomial division leaves a negative exponent");
      }
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  MPoly shifted_up(const Exponents& shift) const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += shift[i];
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = abs(c);
      os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      bool unit_coeff = mag == 1;
      bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
      if (!unit_coeff || !any_var) os << mag.get_str();
      bool need_star = !unit_coeff || !any_var;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << "*";
        os << vars_[i];
        if (e[i] > 1) os << "^" << e[i];
        need_star = true;
      }
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

 private:
  static std::string describe_vars(const std::vector<std::string>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "]";
  }

  void check_unique_vars() const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (std::size_t j = i + 1; j < vars_.size(); ++j) {
        if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable '" + vars_[i] + "'");
      }
    }
  }

  // Brings *this onto other's variable list when one side is a constant.
  void align_with(const MPoly& other) {
    if (vars_ == other.vars_) return;
    if (other.is_constant()) return;
    if (is_constant()) {
      Rational c = constant_value();
      vars_ = other.vars_;
      terms_.clear();
      if (c != 0) terms_.emplace(Exponents(vars_.size(), 0), c);
      return;
    }
    throw std::invalid_argument("variable-list mismatch: " + describe_vars(vars_) + " vs " +
                                describe_vars(other.vars_));
  }

  void add_term_unchecked(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.lower_bound(e);
    if (it != terms_.end() && it->first == e) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.emplace_hint(it, e, c);
    }
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a. Uses the
/// lex-leading-term division algorithm, which terminates with a zero remainder
/// exactly when b | a.
inline std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (b.is_constant()) return a * (Rational(1) / b.constant_value());
  if (a.is_zero()) return MPoly(b.vars());
  if (a.vars() != b.vars()) throw std::invalid_argument("variable-list mismatch in divide_exact");
  const auto& [lead_e, lead_c] = b.leading_term();
  const std::size_t n = a.num_vars();
  MPoly rem = a;
  MPoly quot(a.vars());
  Exponents shift(n);
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    for (std::size_t i = 0; i < n; ++i) {
      shift[i] = re[i] - lead_e[i];
      if (shift[i] < 0) return std::nullopt;
    }
    Rational q = rc / lead_c;
    quot.add_term(shift, q);
    rem -= b.shifted_up(shift) * q;
  }
  return quot;
}

/// Same polynomial up to a nonzero rational times a monomial.
inline bool unit_equivalent(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  std::vector<std::string> all = a.vars();
  for (const auto& v : b.vars()) {
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  }
  MPoly pa = a.lift(all), pb = b.lift(all);
  pa = pa.shifted_down(pa.monomial_gcd()).primitive();
  pb = pb.shifted_down(pb.monomial_gcd()).primitive();
  return pa == pb;
}

/// Normal form used by the unit-equivalence comparator and golden files:
/// monomial factor removed, content 1, positive lex-leading coefficient.
inline MPoly unit_normal_form(const MPoly& p) {
  if (p.is_zero()) return p;
  return p.shifted_down(p.monomial_gcd()).primitive();
}

/// The rational r with a == r * b, if any.
inline std::optional<Rational> rational_ratio(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  MPoly lb = b.lift(a.vars());
  Rational r = a.leading_term().second / lb.leading_term().second;
  if (a == lb * r) return r;
  return std::nullopt;
}

}  // namespace octa
