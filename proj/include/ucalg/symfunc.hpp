#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ucalg/partition.hpp"
#include "ucalg/poly.hpp"

namespace ucalg {

// Alphabets the complete homogeneous functions are taken in. The shift
// alphabets have letters x_n - (1/n) d/dy_n resp. y_n - (1/n) d/dx_n; the
// derivative alphabets have letters (1/n) d/dx_n resp. (1/n) d/dy_n. All
// letters within one alphabet commute.
enum class Alph { X, Y, XShift, YShift, DX, DY };

struct AlphOp {
  Alph kind;
  bool negated = false;  // every letter carries an extra factor -1
  bool operator==(const AlphOp&) const = default;
};

// h_n of the alphabet applied as an operator: the sum over partitions of n
// of products of letters with multinomial weights. h_0 = id, h_{n<0} = 0.
template <class Dom>
Poly<Dom> h_apply(int n, AlphOp op, const Poly<Dom>& p);

// h_n(x) or h_n(y) as a ring element.
PolyQ complete_h(int n, VarFamily f, int nx, int ny);

// h_n evaluated on a finite list of numeric points.
Rat complete_h_numeric(int n, const std::vector<Rat>& points);

// h_n(x - dy~) p (which = X) or h_n(y - dx~) p (which = Y).
template <class Dom>
Poly<Dom> h_shifted(int n, VarFamily which, const Poly<Dom>& p) {
  return h_apply(n, AlphOp{which == VarFamily::X ? Alph::XShift : Alph::YShift}, p);
}

// S_la in one variable family: det(h_{la_i - i + j}).
PolyQ schur(const Partition& la, VarFamily f, int nx, int ny);

// Pair character S_{[la,mu]}(x,y) via the twisted determinant: the first
// l(mu) rows carry h_{mu_{l'-i+1}+i-j}(y), the rest h_{la_{i-l'}-i+j}(x).
// Results are cached per (la, mu, nx, ny).
PolyQ universal_character_jt(const Partition& la, const Partition& mu, int nx, int ny);

// Same element built by operator application: the mu determinant in the
// alphabet y - dx~ applied to 1, then the la determinant in x - dy~.
PolyQ universal_character_op(const Partition& la, const Partition& mu, int nx, int ny);

// Numeric Schur value s_la(u_1, ..., u_m); 0 when l(la) > m.
Rat schur_eval(const Partition& la, const std::vector<Rat>& points);

// [h_k(shift alphabet) p : k = 0..M]; which selects x - dy~ or y - dx~.
template <class Dom>
std::vector<Poly<Dom>> truncated_H_apply(int M, VarFamily which, const Poly<Dom>& p);

// Pair-basis expansion of h_k^perp S_{[la,mu]} for k = 0..M: horizontal
// k-strips removed from la (target = X) or mu (target = Y).
std::vector<std::vector<std::pair<Partition, Partition>>> skew_H_apply(int M,
                                                                       VarFamily target,
                                                                       const Partition& la,
                                                                       const Partition& mu);

// Expansion of p in the pair-character basis. The basis is triangular with
// respect to the canonical term order, so coefficients are read off the
// minimal surviving term; exact, no remainder.
std::map<std::pair<Partition, Partition>, Rat> uc_expand(const PolyQ& p);

}  // namespace ucalg
