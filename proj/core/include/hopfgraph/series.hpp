#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopfgraph/rational.hpp"

namespace hopfgraph {

// Raised when a computation would need coefficients beyond the truncation
// orders of its ring.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered variable names, each with a truncation order (largest exponent
// kept). Immutable; series share it through VariablesPtr.
class Variables {
 public:
  Variables(std::vector<std::string> names, std::vector<int> orders);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int order(std::size_t i) const { return orders_[i]; }
  std::optional<std::size_t> index(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  std::shared_ptr<const Variables> with_order(std::string_view name, int order) const;

  friend bool operator==(const Variables&, const Variables&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> orders_;
};

using VariablesPtr = std::shared_ptr<const Variables>;

VariablesPtr make_variables(std::vector<std::pair<std::string, int>> names_and_orders);

// Truncated multivariate power series with exact rational coefficients.
// Coefficients of monomials whose exponent in some variable exceeds that
// variable's order are dropped; everything kept is exact. Binary operations
// require rings with identical names and orders.
class Series {
 public:
  using Monomial = std::vector<std::uint16_t>;

  explicit Series(VariablesPtr vars);
  static Series constant(VariablesPtr vars, const Rational& value);
  static Series variable(VariablesPtr vars, std::string_view name);

  const VariablesPtr& variables() const { return vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  // Throws TruncationError if the monomial lies beyond the ring's orders.
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  bool is_zero() const { return terms_.empty(); }
  // Smallest total degree of a nonzero term.
  std::optional<int> order() const;

  // Coefficient of var^k as a series in the remaining variables.
  Series coefficient_series(std::string_view var, int k) const;
  // Coefficients of var^0 .. var^order for a series in var alone.
  std::vector<Rational> univariate_coefficients(std::string_view var) const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Series& other);
  Series& operator*=(const Rational& factor);
  Series operator-() const;

  Series pow(unsigned k) const;
  Series inverse() const;  // needs a nonzero constant term
  Series exp() const;      // needs a zero constant term
  Series log() const;      // needs constant term 1

  // d/d var. The result lives in a ring where var's order is one lower,
  // because the top coefficient is unknown.
  Series derivative(std::string_view var) const;

  // Replaces var by value (same ring, zero constant term). Coefficients of
  // var beyond its order are unknown, so value^(order+1) must vanish under
  // truncation; otherwise TruncationError.
  Series compose(std::string_view var, const Series& value) const;

  // Replaces var by var + offset, where offset has no constant term and does
  // not involve var. Each unit of total degree in the other variables can
  // pull in one higher power of var, so var's order in the result drops by
  // the sum of the other variables' orders; throws TruncationError when
  // nothing would remain.
  Series shift(std::string_view var, const Series& offset) const;

  // Re-expresses the series in another ring, matching variables by name.
  // Shared variables may only keep or lower their order; variables missing
  // from the target must not occur; new variables are allowed.
  Series in_ring(const VariablesPtr& target) const;

  // "g^0 j^2: 1/2" lines, one per nonzero coefficient, in monomial order;
  // "0" for the zero series.
  std::string to_table() const;

  friend bool operator==(const Series& a, const Series& b);

 private:
  void require_same_ring(const Series& other) const;
  bool in_range(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  VariablesPtr vars_;
  std::map<Monomial, Rational> terms_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(Series a, const Rational& b);
Series operator*(const Rational& a, Series b);

}  // namespace hopfgraph
