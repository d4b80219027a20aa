#include "hopfgraph/zero_d.hpp"

#include <algorithm>

namespace hopfgraph {

namespace {

const char* const kSource = "j";
const char* const kField = "phi";

std::string x_name(int species) { return "_x" + std::to_string(species); }

// Model ring plus extra variables appended in order.
VariablesPtr extend(const VariablesPtr& base, const std::vector<std::pair<std::string, int>>& extra) {
  std::vector<std::pair<std::string, int>> vars;
  for (std::size_t i = 0; i < base->size(); ++i) vars.emplace_back(base->name(i), base->order(i));
  for (const auto& e : extra) vars.push_back(e);
  return make_variables(std::move(vars));
}

VariablesPtr without(const VariablesPtr& vars, const std::string& name) {
  std::vector<std::pair<std::string, int>> kept;
  for (std::size_t i = 0; i < vars->size(); ++i) {
    if (vars->name(i) != name) kept.emplace_back(vars->name(i), vars->order(i));
  }
  return make_variables(std::move(kept));
}

Rational propagator_constant(const FieldModel& model, int species) {
  auto c = model.propagator(species).as_constant();
  if (!c) throw ModelError("the zero-dimensional oracle needs constant propagators");
  return *c;
}

}  // namespace

Series zero_d_log_z(const FieldModel& model, int max_order, int source_order, Species leg_species) {
  model.validate();
  if (max_order < 0 || source_order < 0) throw std::invalid_argument("orders must be non-negative");
  if (leg_species.id < 1 || leg_species.id > model.species) throw std::invalid_argument("leg species outside the model");
  const VariablesPtr base = model.ring(max_order);

  // Bound on the x-degree: each interaction factor carries total degree >= 1
  // in the model variables and at most max_degree powers of x.
  int total_order = 0;
  for (std::size_t i = 0; i < base->size(); ++i) total_order += base->order(i);
  int max_degree = 0;
  for (const auto& [profile, c] : model.couplings) {
    if (c.is_zero()) continue;
    if (c.constant_term() != 0) throw ModelError("couplings must vanish at zero coupling");
    max_degree = std::max(max_degree, static_cast<int>(profile.size()));
  }
  const int x_order = total_order * max_degree + source_order;

  std::vector<std::pair<std::string, int>> extra{{kSource, source_order}};
  for (int s = 1; s <= model.species; ++s) extra.emplace_back(x_name(s), x_order);
  const VariablesPtr ring = extend(base, extra);

  Series exponent = Series::variable(ring, kSource) * Series::variable(ring, x_name(leg_species.id));
  for (const auto& [profile, c] : model.couplings) {
    if (c.is_zero()) continue;
    Series term = c.to_series(ring);
    for (int s = 1; s <= model.species; ++s) {
      const auto m = static_cast<unsigned>(std::count(profile.begin(), profile.end(), s));
      term *= Series::variable(ring, x_name(s)).pow(m) * (Rational(1) / factorial(m));
    }
    exponent += term;
  }
  const Series integrand = exponent.exp();

  // Gaussian expectation value of each x monomial.
  const VariablesPtr out_ring = extend(base, {{kSource, source_order}});
  const std::size_t first_x = base->size() + 1;
  std::vector<Rational> propagator;
  for (int s = 1; s <= model.species; ++s) propagator.push_back(propagator_constant(model, s));
  Series z(out_ring);
  for (const auto& [m, c] : integrand.terms()) {
    Rational moment = c;
    for (int s = 0; s < model.species; ++s) {
      const unsigned e = m[first_x + static_cast<std::size_t>(s)];
      if (e % 2 == 1) {
        moment = 0;
        break;
      }
      Rational p_power = 1;
      for (unsigned k = 0; k < e / 2; ++k) p_power *= propagator[static_cast<std::size_t>(s)];
      moment *= Rational(double_factorial(static_cast<int>(e) - 1)) * p_power;
    }
    if (moment == 0) continue;
    Series::Monomial reduced(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(first_x));
    Series term = Series::constant(out_ring, moment);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (reduced[i] > 0) term *= Series::variable(out_ring, out_ring->name(i)).pow(reduced[i]);
    }
    z += term;
  }
  return z.log();
}

Series zero_d_connected_oracle(const FieldModel& model, int n, int max_order, bool source_shift, Species leg_species) {
  if (n < 0) throw std::invalid_argument("leg count must be non-negative");
  const VariablesPtr base = model.ring(max_order);
  // j* has no constant term, so j*^k vanishes under truncation once k
  // exceeds the total order of the ring.
  int budget = 0;
  if (source_shift) {
    for (std::size_t i = 0; i < base->size(); ++i) budget += base->order(i);
  }
  const Series w = zero_d_log_z(model, max_order, n + budget + (source_shift ? 1 : 0), leg_species);
  auto taylor = [&](int q) { return (w.coefficient_series(kSource, q) * factorial(q)).in_ring(base); };

  Series value(base);
  if (!source_shift) {
    value = taylor(n);
  } else {
    // W'(j) = sum_k d[k+1] j^k / k! with d[q] the q-th derivative at 0.
    std::vector<Series> d;
    for (int q = 0; q <= n + budget + 1; ++q) d.push_back(taylor(q));
    auto derivative_at = [&](int order, const Series& j) {
      Series sum(base);
      Series power = Series::constant(base, 1);
      for (int k = 0; order + k < static_cast<int>(d.size()) && !power.is_zero(); ++k) {
        sum += d[static_cast<std::size_t>(order + k)] * power * (Rational(1) / factorial(k));
        power *= j;
      }
      return sum;
    };
    const Rational slope = d[2].constant_term();
    if (slope == 0) throw std::domain_error("source shift needs a nonzero free propagator");
    // j <- j - W'(j) / W''(0)|_0 gains at least one order per step.
    Series j_star(base);
    for (int step = 0; step <= budget + 1; ++step) {
      Series residual = derivative_at(1, j_star);
      if (residual.is_zero()) break;
      j_star -= residual * (Rational(1) / slope);
    }
    if (!derivative_at(1, j_star).is_zero()) throw std::logic_error("source shift did not converge");
    value = derivative_at(n, j_star);
  }
  if (model.legs == LegConvention::amputated) {
    const Rational p = propagator_constant(model, leg_species.id);
    Rational factor = 1;
    for (int k = 0; k < n; ++k) factor /= p;
    value *= factor;
  }
  return value;
}

Series monomial_loop_part(const Series& w, const std::string& coupling, int degree, int loops) {
  const VariablesPtr& vars = w.variables();
  const std::size_t g = vars->require(coupling);
  const std::size_t j = vars->require(kSource);
  Series out(vars);
  for (const auto& [m, c] : w.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != g && i != j && m[i] != 0) throw std::invalid_argument("series has variables besides the coupling and j");
    }
    const int p = m[g];
    const int q = m[j];
    const int twice_edges = degree * p - q;
    if (p == 0 && q == 2) {  // the bare line, a tree
      if (loops == 0) out += Series::constant(vars, c) * Series::variable(vars, kSource).pow(2);
      continue;
    }
    if (twice_edges < 0 || twice_edges % 2 != 0) throw std::invalid_argument("series is not a monomial-model series");
    if (twice_edges / 2 - p + 1 != loops) continue;
    Series term = Series::constant(vars, c);
    term *= Series::variable(vars, coupling).pow(static_cast<unsigned>(p));
    term *= Series::variable(vars, kSource).pow(static_cast<unsigned>(q));
    out += term;
  }
  return out;
}

LegendreTransform legendre_transform(const Series& w, int max_n) {
  const VariablesPtr& vars = w.variables();
  const std::size_t j_index = vars->require(kSource);
  if (max_n < 2) throw std::invalid_argument("Legendre transform needs max_n >= 2");
  if (vars->order(j_index) < max_n) {
    throw TruncationError("Legendre transform to order " + std::to_string(max_n) + " needs W to j^" +
                          std::to_string(max_n));
  }
  if (vars->index(kField)) throw std::invalid_argument("variable 'phi' is reserved");
  const VariablesPtr out_ring = without(vars, kSource);
  std::vector<std::pair<std::string, int>> names;
  for (std::size_t i = 0; i < out_ring->size(); ++i) names.emplace_back(out_ring->name(i), out_ring->order(i));
  names.emplace_back(kField, max_n);
  const VariablesPtr ring = make_variables(names);

  // coefficients w_q of j^q, embedded in the (couplings, phi) ring
  std::vector<Series> wq;
  for (int q = 0; q <= max_n; ++q) wq.push_back(w.coefficient_series(kSource, q).in_ring(out_ring).in_ring(ring));
  const Series psi = Series::variable(ring, kField);
  const Series phi0 = wq[1];
  const Series d = wq[2] * Rational(2);
  if (d.constant_term() == 0) throw std::domain_error("W''(0) must be invertible");
  const Series d_inverse = d.inverse();

  // phi - phi0 = sum_{k>=1} (k+1) w_{k+1} j^k; solve for j as a series in psi.
  Series j = psi * d_inverse;
  for (int step = 1; step < max_n; ++step) {
    Series higher(ring);
    Series power = j * j;
    for (int k = 2; k < max_n && !power.is_zero(); ++k) {
      higher += wq[static_cast<std::size_t>(k + 1)] * power * Rational(k + 1);
      power *= j;
    }
    j = (psi - higher) * d_inverse;
  }
  Series gamma_series(ring);
  Series power = Series::constant(ring, 1);
  for (int q = 0; q <= max_n; ++q) {
    gamma_series += wq[static_cast<std::size_t>(q)] * power;
    power *= j;
  }
  if (!power.is_zero()) throw std::logic_error("Legendre expansion left untruncated terms");
  gamma_series -= j * (phi0 + psi);

  LegendreTransform lt{phi0.in_ring(out_ring), d.in_ring(out_ring), {}};
  for (int k = 0; k <= max_n; ++k) {
    lt.gamma.push_back((gamma_series.coefficient_series(kField, k) * factorial(k)).in_ring(out_ring));
  }
  return lt;
}

OnePIData one_pi_from_legendre(const LegendreTransform& lt, const Series& propagator, OnePIMode mode) {
  const VariablesPtr& ring = lt.two_point.variables();
  OnePIData data{OnePITable(ring), mode == OnePIMode::standard ? propagator : lt.two_point};
  const Series& dressing = data.two_point;
  for (std::size_t n = 2; n < lt.gamma.size(); ++n) {
    if (n == 2) {
      if (mode == OnePIMode::standard) data.table.set(2, propagator + propagator * propagator * lt.gamma[2]);
      continue;
    }
    data.table.set(static_cast<int>(n), lt.gamma[n] * dressing.pow(static_cast<unsigned>(n)));
  }
  return data;
}

}  // namespace hopfgraph
