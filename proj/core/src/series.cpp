#include "hopfgraph/series.hpp"

#include <algorithm>
#include <sstream>

namespace hopfgraph {

Variables::Variables(std::vector<std::string> names, std::vector<int> orders)
    : names_(std::move(names)), orders_(std::move(orders)) {
  if (names_.size() != orders_.size()) {
    throw std::invalid_argument("variable names and orders differ in length");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    if (orders_[i] < 0 || orders_[i] > 0xFFFF) {
      throw std::invalid_argument("truncation order of '" + names_[i] + "' out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[j] == names_[i]) throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> Variables::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Variables::require(std::string_view name) const {
  auto i = index(name);
  if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return *i;
}

VariablesPtr Variables::with_order(std::string_view name, int order) const {
  std::vector<int> orders = orders_;
  orders[require(name)] = order;
  return std::make_shared<const Variables>(names_, std::move(orders));
}

VariablesPtr make_variables(std::vector<std::pair<std::string, int>> names_and_orders) {
  std::vector<std::string> names;
  std::vector<int> orders;
  for (auto& [name, order] : names_and_orders) {
    names.push_back(std::move(name));
    orders.push_back(order);
  }
  return std::make_shared<const Variables>(std::move(names), std::move(orders));
}

Series::Series(VariablesPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("series needs a variable set");
}

Series Series::constant(VariablesPtr vars, const Rational& value) {
  Series s(std::move(vars));
  s.add_term(Monomial(s.vars_->size(), 0), value);
  return s;
}

Series Series::variable(VariablesPtr vars, std::string_view name) {
  Series s(std::move(vars));
  Monomial m(s.vars_->size(), 0);
  m[s.vars_->require(name)] = 1;
  if (s.in_range(m)) s.add_term(m, 1);
  return s;
}

bool Series::in_range(const Monomial& m) const {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > vars_->order(i)) return false;
  }
  return true;
}

void Series::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Series::require_same_ring(const Series& other) const {
  if (vars_ != other.vars_ && !(*vars_ == *other.vars_)) {
    throw std::invalid_argument("series belong to different rings");
  }
}

Rational Series::coefficient(const Monomial& m) const {
  if (m.size() != vars_->size()) throw std::invalid_argument("monomial has wrong arity");
  if (!in_range(m)) throw TruncationError("coefficient requested beyond truncation order");
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const { return coefficient(Monomial(vars_->size(), 0)); }

std::optional<int> Series::order() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto e : m) d += e;
    if (!best || d < *best) best = d;
  }
  return best;
}

Series Series::coefficient_series(std::string_view var, int k) const {
  const std::size_t i = vars_->require(var);
  if (k < 0) throw std::invalid_argument("negative exponent");
  if (k > vars_->order(i)) {
    throw TruncationError("coefficient of " + std::string(var) + "^" + std::to_string(k) +
                          " lies beyond truncation order " + std::to_string(vars_->order(i)));
  }
  Series out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] != k) continue;
    Monomial reduced = m;
    reduced[i] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

std::vector<Rational> Series::univariate_coefficients(std::string_view var) const {
  const std::size_t i = vars_->require(var);
  std::vector<Rational> out(static_cast<std::size_t>(vars_->order(i)) + 1);
  for (const auto& [m, c] : terms_) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != i && m[j] != 0) {
        throw std::invalid_argument("series depends on variables other than " + std::string(var));
      }
    }
    out[m[i]] = c;
  }
  return out;
}

Series& Series::operator+=(const Series& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Series& Series::operator*=(const Series& other) {
  require_same_ring(other);
  Series product(vars_);
  Monomial m(vars_->size());
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      bool keep = true;
      for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
        if (m[i] > vars_->order(i)) {
          keep = false;
          break;
        }
      }
      if (keep) product.add_term(m, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

Series& Series::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

Series Series::operator-() const {
  Series out = *this;
  out *= Rational(-1);
  return out;
}

Series Series::pow(unsigned k) const {
  Series result = constant(vars_, 1);
  Series base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

namespace {

// Sum of coefficients[k] * x^k for k >= 0 until x^k vanishes; x must have no
// constant term, so its powers are nilpotent under truncation.
template <class Coefficient>
Series nilpotent_sum(const Series& x, Coefficient coefficient) {
  Series result(x.variables());
  Series power = Series::constant(x.variables(), 1);
  for (unsigned k = 0; !power.is_zero(); ++k) {
    Rational c = coefficient(k);
    if (c != 0) result += power * c;
    power *= x;
  }
  return result;
}

}  // namespace

Series Series::inverse() const {
  const Rational c = constant_term();
  if (c == 0) throw std::domain_error("inverse of a series with zero constant term");
  Series rest = *this - constant(vars_, c);
  Series x = rest * Rational(-1 / c);
  return nilpotent_sum(x, [](unsigned) -> Rational { return 1; }) * Rational(1 / c);
}

Series Series::exp() const {
  if (constant_term() != 0) throw std::domain_error("exp needs a zero constant term");
  return nilpotent_sum(*this, [](unsigned k) -> Rational { return Rational(1) / factorial(k); });
}

Series Series::log() const {
  if (constant_term() != 1) throw std::domain_error("log needs constant term 1");
  Series x = *this - constant(vars_, 1);
  return nilpotent_sum(x, [](unsigned k) -> Rational {
    if (k == 0) return Rational(0);
    return Rational(k % 2 == 1 ? 1 : -1, k);
  });
}

Series Series::derivative(std::string_view var) const {
  const std::size_t i = vars_->require(var);
  if (vars_->order(i) == 0) {
    throw TruncationError("derivative in " + std::string(var) + " of a series truncated at order 0");
  }
  Series out(vars_->with_order(var, vars_->order(i) - 1));
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial reduced = m;
    --reduced[i];
    out.add_term(reduced, c * m[i]);
  }
  return out;
}

Series Series::compose(std::string_view var, const Series& value) const {
  require_same_ring(value);
  const std::size_t i = vars_->require(var);
  if (value.constant_term() != 0) {
    throw std::invalid_argument("composition value must have a zero constant term");
  }
  Series result(vars_);
  Series power = constant(vars_, 1);
  for (int k = 0; k <= vars_->order(i); ++k) {
    Series coeff = coefficient_series(var, k);
    if (!coeff.is_zero()) result += coeff * power;
    power *= value;
  }
  if (!power.is_zero()) {
    throw TruncationError("composition in " + std::string(var) +
                          " would need coefficients beyond its truncation order");
  }
  return result;
}

Series Series::shift(std::string_view var, const Series& offset) const {
  require_same_ring(offset);
  const std::size_t i = vars_->require(var);
  for (const auto& [m, c] : offset.terms_) {
    int others = 0;
    for (std::size_t j = 0; j < m.size(); ++j) others += j == i ? 0 : m[j];
    if (m[i] != 0 || others == 0) {
      throw std::invalid_argument("shift offset must be free of " + std::string(var) +
                                  " and have no constant term");
    }
  }
  int budget = 0;
  for (std::size_t j = 0; j < vars_->size(); ++j) budget += j == i ? 0 : vars_->order(j);
  const int kept = vars_->order(i) - budget;
  if (kept < 0) {
    throw TruncationError("shift in " + std::string(var) + " needs order at least " +
                          std::to_string(budget));
  }
  // Binomial expansion of (var + offset)^k, exact in the full ring, then
  // cut down to the orders that are still fully determined.
  Series x = variable(vars_, var);
  Series shifted_var = x + offset;
  Series result(vars_);
  Series power = constant(vars_, 1);
  for (int k = 0; k <= vars_->order(i); ++k) {
    Series coeff = coefficient_series(var, k);
    if (!coeff.is_zero()) result += coeff * power;
    power *= shifted_var;
  }
  return result.in_ring(vars_->with_order(var, kept));
}

Series Series::in_ring(const VariablesPtr& target) const {
  std::vector<std::optional<std::size_t>> where(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    where[i] = target->index(vars_->name(i));
    if (where[i] && target->order(*where[i]) > vars_->order(i)) {
      throw TruncationError("target ring keeps " + vars_->name(i) + " beyond the known order");
    }
  }
  Series out(target);
  Monomial mapped(target->size());
  for (const auto& [m, c] : terms_) {
    std::fill(mapped.begin(), mapped.end(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!where[i]) {
        throw std::invalid_argument("series depends on " + vars_->name(i) +
                                    ", which the target ring lacks");
      }
      mapped[*where[i]] = m[i];
    }
    if (out.in_range(mapped)) out.add_term(mapped, c);
  }
  return out;
}

std::string Series::to_table() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [m, c] : terms_) {
    if (m.empty()) out << '1';
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0) out << ' ';
      out << vars_->name(i) << '^' << m[i];
    }
    out << ": " << to_string(c) << '\n';
  }
  return out.str();
}

bool operator==(const Series& a, const Series& b) {
  a.require_same_ring(b);
  return a.terms_ == b.terms_;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator*(const Series& a, const Series& b) {
  Series out = a;
  out *= b;
  return out;
}
Series operator*(Series a, const Rational& b) { return a *= b; }
Series operator*(const Rational& a, Series b) { return b *= a; }

}  // namespace hopfgraph
