#pragma once

// Truncated multivariate formal power series with exact rational coefficients.
//
// Every variable carries a nonnegative grading weight; a series stores only
// monomials whose weighted grading is at most its cutoff. One variable (by
// convention the genus-counting lambda) may be Laurent; it has weight 0 and
// its exponents are bounded below by a per-series floor.

#include "sumkit/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumkit {

struct Variable {
  std::string name;
  int weight = 0;
  bool laurent = false;

  bool operator==(const Variable&) const = default;
};

class VariableContext {
 public:
  explicit VariableContext(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::invalid_argument for an unknown name.
  std::size_t index(std::string_view name) const;
  std::optional<std::size_t> laurent_index() const { return laurent_; }

  bool operator==(const VariableContext& other) const { return vars_ == other.vars_; }

 private:
  std::vector<Variable> vars_;
  std::optional<std::size_t> laurent_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<Variable> vars);

struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
  static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }

  int operator[](std::size_t i) const { return exponents[i]; }
  int& operator[](std::size_t i) { return exponents[i]; }
  std::size_t size() const { return exponents.size(); }

  auto operator<=>(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

class Series {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Series(ContextPtr ctx, int cutoff);

  static Series constant(ContextPtr ctx, int cutoff, const Rational& c);
  static Series variable(ContextPtr ctx, int cutoff, std::string_view name);
  /// c times the product of name^exp; terms beyond the cutoff vanish.
  static Series monomial(ContextPtr ctx, int cutoff,
                         std::initializer_list<std::pair<std::string_view, int>> powers,
                         const Rational& c = 1);
  /// Zero coefficients and over-cutoff monomials are dropped.
  static Series from_terms(ContextPtr ctx, int cutoff, TermMap terms);

  const ContextPtr& context() const { return ctx_; }
  int cutoff() const { return cutoff_; }
  int laurent_floor() const { return floor_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int grading(const Monomial& m) const;

  /// Adds c to the coefficient of m (dropped if m exceeds the cutoff).
  void accumulate(const Monomial& m, const Rational& c);

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& c);

  /// Widens the declared lower bound on laurent exponents (never raises it).
  void lower_floor(int floor);

  bool operator==(const Series& other) const;

 private:
  ContextPtr ctx_;
  int cutoff_;
  int floor_ = 0;
  TermMap terms_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series pow(const Series& a, unsigned n);

/// Requires f to vanish in weighted grading 0.
Series exp(const Series& f);
/// Requires the grading-0 part of f to be exactly the constant 1.
Series log(const Series& f);
/// Requires the grading-0 part of f to be a nonzero constant.
Series inverse(const Series& f);

Series differentiate(const Series& f, std::string_view var);
/// Multiplies every term by its weighted grading (the Euler operator).
Series euler_operator(const Series& f);
Series truncate(const Series& f, int cutoff);

/// Throws CutoffExceeded when mono lies above the cutoff.
Rational coefficient(const Series& f, const Monomial& mono);
Rational coefficient(const Series& f, std::initializer_list<std::pair<std::string_view, int>> powers);

/// One term per line: "<num>/<den> <var>^<exp> ..." in canonical order.
std::string to_text(const Series& f);
Series from_text(ContextPtr ctx, int cutoff, std::string_view text);

}  // namespace sumkit
