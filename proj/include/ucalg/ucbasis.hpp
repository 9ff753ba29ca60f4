#pragma once

#include <map>
#include <utility>

#include "ucalg/partition.hpp"
#include "ucalg/symfunc.hpp"

namespace ucalg {

template <class C>
inline bool coeff_zero(const C& c) {
  return c == 0;
}
template <>
inline bool coeff_zero<TruncSeries>(const TruncSeries& c) {
  return c.is_zero();
}

// Vector in the pair-character basis: coefficient per (la, mu).
template <class C>
struct UCVec {
  using Key = std::pair<Partition, Partition>;
  std::map<Key, C> comps;

  bool is_zero() const { return comps.empty(); }

  void add(const Key& k, const C& c) {
    if (coeff_zero(c)) return;
    auto it = comps.find(k);
    if (it == comps.end()) {
      comps.emplace(k, c);
    } else {
      it->second += c;
      if (coeff_zero(it->second)) comps.erase(it);
    }
  }

  UCVec& operator+=(const UCVec& o) {
    for (auto& [k, c] : o.comps) add(k, c);
    return *this;
  }
  UCVec& operator-=(const UCVec& o) {
    for (auto& [k, c] : o.comps) add(k, -c);
    return *this;
  }
  friend UCVec operator+(UCVec a, const UCVec& b) { return a += b; }
  friend UCVec operator-(UCVec a, const UCVec& b) { return a -= b; }

  template <class S>
  UCVec scaled(const S& s) const {
    UCVec out;
    for (auto& [k, c] : comps) out.add(k, c * s);
    return out;
  }

  bool operator==(const UCVec& o) const { return comps == o.comps; }
};

// h_k acting through the shift alphabet adds horizontal strips of size k on
// the chosen side. box_cols >= 0 drops components whose first row would
// exceed that many columns (the truncated-space projection).
template <class C>
UCVec<C> uc_mult_h(const UCVec<C>& v, int k, VarFamily side, int box_cols = -1) {
  UCVec<C> out;
  for (auto& [key, c] : v.comps) {
    const Partition& target = side == VarFamily::X ? key.first : key.second;
    for (const Partition& nu : add_horizontal_strips(target, k)) {
      if (box_cols >= 0 && nu.part(0) > box_cols) continue;
      out.add(side == VarFamily::X ? std::make_pair(nu, key.second)
                                   : std::make_pair(key.first, nu),
              c);
    }
  }
  return out;
}

// h_k of the derivative alphabet removes horizontal strips of size k.
template <class C>
UCVec<C> uc_skew_h(const UCVec<C>& v, int k, VarFamily side) {
  UCVec<C> out;
  for (auto& [key, c] : v.comps) {
    const Partition& target = side == VarFamily::X ? key.first : key.second;
    for (const Partition& nu : remove_horizontal_strips(target, k)) {
      out.add(side == VarFamily::X ? std::make_pair(nu, key.second)
                                   : std::make_pair(key.first, nu),
              c);
    }
  }
  return out;
}

template <class C>
UCVec<C> uc_box_project(const UCVec<C>& v, VarFamily side, int cols) {
  UCVec<C> out;
  for (auto& [key, c] : v.comps) {
    const Partition& target = side == VarFamily::X ? key.first : key.second;
    if (target.part(0) > cols) continue;
    out.add(key, c);
  }
  return out;
}

inline PolyQ uc_materialize(const UCVec<Rat>& v, int nx, int ny) {
  PolyQ acc(RationalDomain{}, nx, ny);
  for (auto& [key, c] : v.comps)
    acc += universal_character_jt(key.first, key.second, nx, ny).scaled(c);
  return acc;
}

inline PolyS uc_materialize_series(const UCVec<TruncSeries>& v, const SeriesDomain& dom,
                                   int nx, int ny) {
  PolyS acc(dom, nx, ny);
  for (auto& [key, c] : v.comps)
    acc += lift_to_series(dom, universal_character_jt(key.first, key.second, nx, ny))
               .scaled_coeff(c);
  return acc;
}

inline UCVec<Rat> uc_from_expansion(const std::map<std::pair<Partition, Partition>, Rat>& m) {
  UCVec<Rat> v;
  for (auto& [k, c] : m) v.add(k, c);
  return v;
}

}  // namespace ucalg
