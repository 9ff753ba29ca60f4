#pragma once

#include <vector>

#include "ucalg/report.hpp"
#include "ucalg/symfunc.hpp"
#include "ucalg/ucbasis.hpp"

namespace ucalg {

// Half-vertex operator label. family 1 works on the x side, family 2 on the
// y side. sign -1 is the creation half (nonnegative powers of the spectral
// parameter, horizontal strips added); sign +1 is the annihilation half
// (negative powers, strips removed). order is the highest |z-power| kept.
struct GammaSpec {
  int family = 1;
  int sign = -1;
  int order = 0;
};

// Coefficient list of the exponential of the generating sum applied to p:
// entry k holds the coefficient of z^k (sign -1) or z^{-k} (sign +1), for
// k = 0..order. Computed through the exponential series, not through the
// complete-h columns, so it gives an independent route to the same operators.
template <class Dom>
std::vector<Poly<Dom>> gamma_apply(GammaSpec g, const Poly<Dom>& p);

// Mode operator of the fermion realization:
//   fam = X, sign s:  sum_b h_{n+b}(s(x - dy~)) h_b(-s dx~)
//   fam = Y, sign s:  sum_b h_{n+b}(s(y - dx~)) h_b(-s dy~)
// The inner sum is finite on any polynomial.
template <class Dom>
Poly<Dom> mode_apply(VarFamily fam, int sign, int n, const Poly<Dom>& p);

// Raising-mode construction of the pair character: X modes for la, Y modes
// for mu, applied to 1. Equals the determinant routes.
PolyQ raise_uc(const Partition& la, const Partition& mu, int nx, int ny);

// Monomial test family: all monomials with x-weight and y-weight <= d.
std::vector<Monomial> monomial_family(int d);

// Mode relations at one index pair (i, j), each applied to the whole
// monomial family:
//   square: M_i^s M_j^s + M_{j-1}^s M_{i+1}^s = 0 (s = +1 and -1)
//   mixed:  M_i^+ M_j^- + M_{j+1}^- M_{i-1}^+ = delta_{i+j,0}
//   cross:  modes of the two families commute (all four sign pairs)
Report fermion_relation_check(VarFamily letter, int i, int j, int d, int nx, int ny);

// Strip rules for the halves: creation adds horizontal strips with weight
// z^{|nu|-|la|}, annihilation removes them. Checked against the
// combinatorial route for k = 0..g.order.
Report gamma_pieri_check(GammaSpec g, const Partition& la, const Partition& mu, int nx,
                         int ny);

// Exponential route vs complete-h columns on the monomial family.
Report gamma_route_check(GammaSpec g, int d, int nx, int ny);

// sum_{i+j=-1} M_i^- tau (x) M_j^+ tau over the doubled ring for
// tau = S_{[la,mu]}. The window starts at `window` and grows until the
// boundary modes annihilate tau, so the returned finite sum is the whole
// bilinear expression; expected zero.
PolyQ uc_bilinear_residual(const Partition& la, const Partition& mu, VarFamily fam,
                           int window, int nx, int ny);

Report uc_bilinear_check(const Partition& la, const Partition& mu, VarFamily fam, int nx,
                         int ny);

}  // namespace ucalg
