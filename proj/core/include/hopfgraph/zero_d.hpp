#pragma once

#include <vector>

#include "hopfgraph/model.hpp"
#include "hopfgraph/one_pi.hpp"
#include "hopfgraph/series.hpp"

namespace hopfgraph {

// Zero-dimensional field theory as an ordinary Gaussian integral: one real
// variable x_a per species with <x_a^2m> = (2m-1)!! P_a^m, interaction
//   I = sum_profiles coupling * prod_a x_a^{m_a} / m_a!,
// and a source j coupled to the leg species. Propagators must be nonzero
// rational constants and couplings must vanish at zero coupling.
//
// W = log Z(j) with Z = <exp(I + j x_s)>, as a series in the model variables
// (orders from model.ring(max_order)) and "j" up to source_order.
Series zero_d_log_z(const FieldModel& model, int max_order, int source_order, Species leg_species = {});

// n-th derivative of W at j = 0, as a series in the model variables: the
// connected n-point function. With source_shift, the derivative is taken at
// the source j* solving W'(j*) = 0 instead, so the 1-point function vanishes.
// Amputated models divide by P^n.
Series zero_d_connected_oracle(const FieldModel& model, int n, int max_order, bool source_shift = false,
                               Species leg_species = {});

// Terms of a single-coupling monomial model's series (coupling variable g,
// vertex degree k, source j) belonging to graphs with the given loop number:
// g^p j^q comes from graphs with v = p, n = q and e = (kp - q)/2 edges;
// g^0 j^2 is the bare line and counts as a tree.
Series monomial_loop_part(const Series& w, const std::string& coupling, int degree, int loops);

struct LegendreTransform {
  Series phi0;                // W'(0)
  Series two_point;           // W''(0)
  std::vector<Series> gamma;  // gamma[n]: n-th derivative of W - j phi at phi0
};

// Legendre transform of a series W in "j" (plus other variables): inverts
// phi = W'(j) around phi0 as a truncated series and expands
// Gamma(phi) = W(j(phi)) - j(phi) phi. gamma[1] = 0 and
// gamma[2] = -1/W''(0). Results live in W's ring without j; needs
// max_n <= the j order of W.
LegendreTransform legendre_transform(const Series& w, int max_n);

// 1PI tables with propagator-dressed (unamputated) entries:
//   standard: tau(2) = P + P^2 gamma[2], tau(n >= 3) = gamma[n] P^n, edges 1/P;
//   modified: tau(2) = 0, tau(n >= 3) = gamma[n] D^n with D = W''(0), edges 1/D.
// The matching two-point value is returned alongside.
struct OnePIData {
  OnePITable table;
  Series two_point;
};
OnePIData one_pi_from_legendre(const LegendreTransform& lt, const Series& propagator, OnePIMode mode);

}  // namespace hopfgraph
