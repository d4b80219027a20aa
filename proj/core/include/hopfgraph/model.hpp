#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopfgraph/rational.hpp"
#include "hopfgraph/series.hpp"

namespace hopfgraph {

// Polynomial with rational coefficients in named variables; the exact
// symbolic form of propagators and couplings before a truncation order is
// chosen.
class Polynomial {
 public:
  // Sorted (name, exponent) pairs with positive exponents.
  using Monomial = std::vector<std::pair<std::string, unsigned>>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Polynomial variable(const std::string& name);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const;
  std::optional<Rational> as_constant() const;
  // Smallest total degree of a nonzero term.
  std::optional<unsigned> order() const;
  std::vector<std::string> variable_names() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;
  Polynomial pow(unsigned k) const;

  Series to_series(const VariablesPtr& vars) const;
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Monomial, Rational> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Polynomial& b);

// Parses "g", "3/2*g^2 - h", "(g+h)^2/4". Division only by nonzero constants.
Polynomial parse_polynomial(std::string_view text);

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class LegConvention { unamputated, amputated };
// bare: edge = propagator, vertex = coupling.
// dressed: edge = 1/propagator, vertex = coupling times a propagator on each
// attachment.
enum class VertexConvention { bare, dressed };
enum class UndeclaredCoupling { zero, error };
// vanish: connected functions obey the "1-point functions vanish" convention
// by discarding graphs with a leg-free part hanging off a bridge.
enum class OnePoint { keep, vanish };

// Species profile of a vertex: sorted species ids of all its attachments.
using Profile = std::vector<int>;

struct FieldModel {
  int species = 1;
  std::vector<Polynomial> propagators{Polynomial(1)};  // index species - 1
  std::map<Profile, Polynomial> couplings;
  std::map<std::string, int> orders;  // explicit truncation orders
  LegConvention legs = LegConvention::unamputated;
  VertexConvention convention = VertexConvention::bare;
  UndeclaredCoupling undeclared = UndeclaredCoupling::zero;
  OnePoint one_point = OnePoint::keep;

  const Polynomial& propagator(int species_id) const;
  // Zero for undeclared profiles unless undeclared == error (then throws).
  Polynomial coupling(const Profile& profile) const;
  // Variable names in propagators and couplings, sorted.
  std::vector<std::string> variable_names() const;
  // Ring with every model variable at its explicit order or default_order.
  VariablesPtr ring(int default_order) const;
  // Degrees of nonzero declared couplings, ascending.
  std::vector<int> coupling_degrees() const;

  void validate() const;  // throws ModelError
};

// Single-species model with coupling values g per degree.
FieldModel monomial_model(const std::map<int, Polynomial>& couplings_by_degree,
                          const Rational& propagator = 1);

// Plain declarative text format, one declaration per line, '#' comments:
//   species 2
//   propagator 1 = 1
//   coupling 3 = g          all attachments of species 1
//   vertex 1 1 2 = h        explicit species profile
//   order g 6
//   legs unamputated|amputated
//   convention bare|dressed
//   undeclared zero|error
//   one_point keep|vanish
FieldModel parse_model(std::string_view text);
FieldModel load_model(const std::string& path);
std::string format_model(const FieldModel& model);

}  // namespace hopfgraph
