#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucalg/rational.hpp"
#include "ucalg/series.hpp"

namespace ucalg {

enum class VarFamily { X, Y };

// Product of powers of x_i and y_j. Exponent lists are sparse, sorted by
// index, entries strictly positive.
struct Monomial {
  std::vector<std::pair<int, int>> xe, ye;

  static Monomial var(VarFamily f, int index, int power = 1);

  bool is_constant() const { return xe.empty() && ye.empty(); }
  int exp(VarFamily f, int index) const;
  int max_index(VarFamily f) const;
  // Weighted degree: x_n and y_n both weigh n within their family.
  int x_weight() const;
  int y_weight() const;
  // deg x_n = n, deg y_n = -n.
  int graded_degree() const { return x_weight() - y_weight(); }
  int total_degree() const;

  Monomial times(VarFamily f, int index, int power) const;
  Monomial merged(const Monomial& o) const;  // product
  // All indices shifted (bank embedding for the doubled ring).
  Monomial offset(int dx, int dy) const;

  std::string str() const;  // "x1^2*x2*y3", "1" when constant

  bool operator==(const Monomial& o) const = default;
};

// Canonical term order: total degree, then x exponents (a higher exponent at
// a lower index sorts earlier), then y exponents.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

struct RationalDomain {
  using Coeff = Rat;
  static constexpr bool is_series = false;
  Coeff from_rat(const Rat& r) const { return r; }
  static bool coeff_is_zero(const Coeff& c) { return c == 0; }
  std::string tag() const { return "rational"; }
  bool operator==(const RationalDomain&) const { return true; }
  RationalDomain merged(const RationalDomain&) const { return {}; }
  Coeff adapt(const Coeff& c) const { return c; }
};

struct SeriesDomain {
  using Coeff = TruncSeries;
  static constexpr bool is_series = true;
  std::string param;
  int cap = 0;
  Coeff from_rat(const Rat& r) const { return TruncSeries::constant(param, cap, r); }
  static bool coeff_is_zero(const Coeff& c) { return c.is_zero(); }
  std::string tag() const { return "series:" + param + ":" + std::to_string(cap); }
  bool operator==(const SeriesDomain& o) const { return param == o.param && cap == o.cap; }
  SeriesDomain merged(const SeriesDomain& o) const;
  // Coefficients entering a poly are truncated to the ring cap; a coefficient
  // known to less than the cap would silently lose exactness, so it throws.
  Coeff adapt(const Coeff& c) const;
};

// Sparse polynomial in x_1..x_nx, y_1..y_ny over an exact coefficient domain.
// The cutoffs are hard bounds: any operation that would need a variable index
// beyond them throws CutoffExceeded.
template <class Dom>
class Poly {
 public:
  using Coeff = typename Dom::Coeff;
  using TermMap = std::map<Monomial, Coeff, MonomialOrder>;

  Poly(Dom dom, int nx, int ny) : dom_(std::move(dom)), nx_(nx), ny_(ny) {
    if (nx < 0 || ny < 0) throw InvalidInput("negative cutoff");
  }

  static Poly constant(Dom dom, int nx, int ny, const Rat& v) {
    Poly p(std::move(dom), nx, ny);
    p.add_term(Monomial{}, p.dom_.from_rat(v));
    return p;
  }
  static Poly one(Dom dom, int nx, int ny) { return constant(std::move(dom), nx, ny, 1); }

  const Dom& dom() const { return dom_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? dom_.from_rat(0) : it->second;
  }
  // Pairing with the vacuum: the constant term.
  Coeff constant_term() const { return coeff(Monomial{}); }

  int x_weight_max() const;
  int y_weight_max() const;

  void check_monomial(const Monomial& m) const {
    if (m.max_index(VarFamily::X) > nx_ || m.max_index(VarFamily::Y) > ny_)
      throw CutoffExceeded("monomial " + m.str() + " outside ring cutoffs (" +
                           std::to_string(nx_) + "," + std::to_string(ny_) + ")");
  }

  void add_term(const Monomial& m, const Coeff& c) {
    check_monomial(m);
    Coeff v = dom_.adapt(c);
    if (Dom::coeff_is_zero(v)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(v));
    } else {
      it->second += v;
      if (Dom::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  void check_same_ring(const Poly& o) const {
    if (nx_ != o.nx_ || ny_ != o.ny_)
      throw DomainMismatch("ring cutoffs differ: (" + std::to_string(nx_) + "," +
                           std::to_string(ny_) + ") vs (" + std::to_string(o.nx_) + "," +
                           std::to_string(o.ny_) + ")");
    if (!(dom_ == o.dom_)) throw DomainMismatch("coefficient domains differ");
  }

  Poly operator-() const {
    Poly r(dom_, nx_, ny_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    check_same_ring(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_same_ring(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly r(a.dom_.merged(b.dom_), a.nx_, a.ny_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(ma.merged(mb), ca * cb);
    return r;
  }

  Poly& scale(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  Poly scaled(const Rat& c) const {
    Poly r = *this;
    r.scale(c);
    return r;
  }
  // Multiply every coefficient by a domain coefficient.
  Poly scaled_coeff(const Coeff& c) const {
    Poly r(dom_, nx_, ny_);
    for (auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
  }

  // p * variable^power
  Poly times_var(VarFamily f, int index, int power = 1) const {
    if (index < 1 || index > (f == VarFamily::X ? nx_ : ny_))
      throw CutoffExceeded("variable index " + std::to_string(index) + " outside cutoffs");
    Poly r(dom_, nx_, ny_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m.times(f, index, power), c);
    return r;
  }

  // d/d(variable), single order
  Poly derivative(VarFamily f, int index) const {
    if (index < 1 || index > (f == VarFamily::X ? nx_ : ny_))
      throw CutoffExceeded("variable index " + std::to_string(index) + " outside cutoffs");
    Poly r(dom_, nx_, ny_);
    for (auto& [m, c] : terms_) {
      int e = m.exp(f, index);
      if (e == 0) continue;
      r.add_term(m.times(f, index, -1), c * Rat(e));
    }
    return r;
  }

  // Graded degree when homogeneous, nullopt otherwise; zero has no degree.
  std::optional<int> graded_degree() const {
    if (terms_.empty()) throw InvalidInput("graded degree of the zero polynomial");
    int d = terms_.begin()->first.graded_degree();
    for (auto& [m, c] : terms_)
      if (m.graded_degree() != d) return std::nullopt;
    return d;
  }

  // Rename variables into a bank of a larger ring (index offsets must keep
  // the image inside `target`'s cutoffs).
  Poly embedded(const Poly& target_shape, int dx, int dy) const {
    Poly r(target_shape.dom_, target_shape.nx_, target_shape.ny_);
    for (auto& [m, c] : terms_) r.add_term(m.offset(dx, dy), c);
    return r;
  }

  Poly with_cutoffs(int nx, int ny) const {
    Poly r(dom_, nx, ny);
    for (auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

  bool operator==(const Poly& o) const {
    return nx_ == o.nx_ && ny_ == o.ny_ && dom_ == o.dom_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  Dom dom_;
  int nx_, ny_;
  TermMap terms_;
};

using PolyQ = Poly<RationalDomain>;
using PolyS = Poly<SeriesDomain>;

// (x_n - (1/n) d/dy_n)^power (which = X) or (y_n - (1/n) d/dx_n)^power
// (which = Y), expanded binomially; the two pieces commute.
template <class Dom>
Poly<Dom> shifted_generator_apply(const Poly<Dom>& p, VarFamily which, int n, int power = 1);

// Re-coefficient a rational polynomial into a series domain (constants).
PolyS lift_to_series(const SeriesDomain& dom, const PolyQ& p);

extern template class Poly<RationalDomain>;
extern template class Poly<SeriesDomain>;

}  // namespace ucalg
