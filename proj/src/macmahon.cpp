#include "ucalg/macmahon.hpp"

#include <algorithm>
#include <functional>

#include "ucalg/error.hpp"
#include "ucalg/symfunc.hpp"
#include "ucalg/vertex.hpp"

namespace ucalg {

QSeries::QSeries(TruncSeries ts) : ts_(std::move(ts)) {
  for (auto& [e, c] : ts_.terms())
    if (e % 2 != 0 && c != 0)
      throw InvalidInput("odd half-grid coefficient at exponent " + std::to_string(e));
}

std::vector<Rat> QSeries::q_coefficients() const {
  std::vector<Rat> out;
  for (int k = 0; 2 * k <= ts_.cap(); ++k) out.push_back(ts_.coeff(2 * k));
  return out;
}

std::string QSeries::str() const {
  TruncSeries q("q", q_order());
  for (int k = 0; 2 * k <= ts_.cap(); ++k) q.set_coeff(k, ts_.coeff(2 * k));
  return q.str();
}

QSeries macmahon_series(int K) {
  if (K < 0) throw InvalidInput("order must be nonnegative");
  TruncSeries acc = TruncSeries::constant("t", 2 * K, 1);
  for (int n = 1; n <= K; ++n) {
    TruncSeries factor = TruncSeries::constant("t", 2 * K, 1);
    factor.set_coeff(2 * n, -1);
    TruncSeries inv = factor.inverse(2 * K);
    for (int rep = 0; rep < n; ++rep) acc = acc * inv;
  }
  return QSeries(acc);
}

namespace {

// Rows below `prev` (pointwise, weakly decreasing) using up to rem boxes; a
// closed row recurses on the remainder, rem = 0 closes the whole shape.
long long pp_count_from(const std::vector<int>& prev, int rem) {
  if (rem == 0) return 1;
  long long total = 0;
  std::vector<int> row;
  std::function<void(int, int)> extend = [&](int idx, int left) {
    if (!row.empty()) total += pp_count_from(row, left);
    if (idx == static_cast<int>(prev.size()) || left == 0) return;
    int cap = std::min(prev[idx], left);
    if (!row.empty()) cap = std::min(cap, row.back());
    for (int p = cap; p >= 1; --p) {
      row.push_back(p);
      extend(idx + 1, left - p);
      row.pop_back();
    }
  };
  extend(0, rem);
  return total;
}

}  // namespace

long long plane_partition_count(int n) {
  if (n < 0) throw InvalidInput("box count must be nonnegative");
  if (n > 10) throw InvalidInput("enumeration bound is 10 boxes");
  if (n == 0) return 1;
  return pp_count_from(std::vector<int>(n, n), n);
}

namespace {

// Terms whose series valuation plus remaining variable weight exceeds the
// window cannot reach the constant term within the cap; drop them.
PolyS prune_window(const PolyS& p, int window) {
  PolyS out(p.dom(), p.nx(), p.ny());
  for (auto& [m, c] : p.terms()) {
    if (c.is_zero()) continue;
    if (c.valuation() + m.x_weight() + m.y_weight() > window) continue;
    out.add_term(m, c);
  }
  return out;
}

// One level of the annihilation-side pair: the chain-2 factor after the
// chain-1 factor, both specialized at t^{2*level-1}.
PolyS apply_level_minus(const PolyS& p, int level, int window) {
  int w = 2 * level - 1;
  const std::string& param = p.dom().param;
  auto half = [&](Alph kind, const PolyS& q) {
    PolyS acc(q.dom(), q.nx(), q.ny());
    for (int k = 0; w * k <= window; ++k) {
      PolyS hk = h_apply(k, AlphOp{kind}, q);
      acc += hk.scaled_coeff(TruncSeries::term(param, window, w * k, 1));
    }
    return prune_window(acc, window);
  };
  return half(Alph::YShift, half(Alph::XShift, p));
}

// Creation-side pair at level m: z = q^{-m+1/2}, so the z^{-k} weights of the
// derivative exponentials carry t^{(2m-1)k}.
PolyS apply_level_plus(const PolyS& p, int level, int window) {
  int w = 2 * level - 1;
  const std::string& param = p.dom().param;
  auto half = [&](Alph kind, const PolyS& q) {
    PolyS acc(q.dom(), q.nx(), q.ny());
    for (int k = 0; w * k <= window; ++k) {
      PolyS hk = h_apply(k, AlphOp{kind}, q);
      acc += hk.scaled_coeff(TruncSeries::term(param, window, w * k, 1));
    }
    return prune_window(acc, window);
  };
  return half(Alph::DY, half(Alph::DX, p));
}

}  // namespace

QSeries correlator_minus(int K) {
  if (K < 0) throw InvalidInput("order must be nonnegative");
  int window = 2 * K;
  int vars = std::max(1, 2 * K);
  SeriesDomain dom{"t", window};
  PolyS acc = PolyS::one(dom, vars, vars);
  // Levels above K only contribute beyond the window; checked, not assumed.
  PolyS boundary = apply_level_minus(acc, K + 1, window);
  if (!(boundary == acc)) throw Error("boundary level leaked into the window");
  for (int level = K; level >= 1; --level) acc = apply_level_minus(acc, level, window);
  return QSeries(acc.constant_term());
}

QSeries correlator_full(int K) {
  if (K < 0) throw InvalidInput("order must be nonnegative");
  int window = 2 * K;
  int vars = std::max(1, 2 * K);
  SeriesDomain dom{"t", window};
  PolyS acc = PolyS::one(dom, vars, vars);
  PolyS boundary = apply_level_minus(acc, K + 1, window);
  if (!(boundary == acc)) throw Error("boundary level leaked into the window");
  for (int level = K; level >= 1; --level) acc = apply_level_minus(acc, level, window);
  PolyS boundary_plus = apply_level_plus(acc, K + 1, window);
  if (!(boundary_plus == acc)) throw Error("boundary level leaked into the window");
  for (int level = K; level >= 1; --level) acc = apply_level_plus(acc, level, window);
  return QSeries(acc.constant_term());
}

namespace {

PolyQ h_chain(const PolyQ& p, std::initializer_list<std::pair<int, AlphOp>> ops) {
  // rightmost pair acts first
  PolyQ acc = p;
  std::vector<std::pair<int, AlphOp>> v(ops);
  for (auto it = v.rbegin(); it != v.rend(); ++it) acc = h_apply(it->first, it->second, acc);
  return acc;
}

}  // namespace

Report normal_order_check(const Rat& z, const Rat& w, const PolyQ& p, int order) {
  Report rep;
  rep.check = "normal-order";
  rep.params = {{"z", rat_str(z)}, {"w", rat_str(w)}, {"order", order}};
  for (int j = 0; j <= order; ++j)
    for (int k = 0; k <= order; ++k) {
      PolyQ lhs = h_chain(p, {{j, AlphOp{Alph::YShift}}, {k, AlphOp{Alph::XShift}}});
      auto ordered = [&](int a, int b) {
        PolyQ acc(p.dom(), p.nx(), p.ny());
        for (int a1 = 0; a1 <= a; ++a1)
          for (int b1 = 0; b1 <= b; ++b1)
            acc += h_chain(p, {{a1, AlphOp{Alph::Y}},
                               {b1, AlphOp{Alph::X}},
                               {a - a1, AlphOp{Alph::DX, true}},
                               {b - b1, AlphOp{Alph::DY, true}}});
        return acc;
      };
      PolyQ rhs = ordered(j, k);
      if (j >= 1 && k >= 1) rhs -= ordered(j - 1, k - 1);
      Rat weight = rat_pow(z, j) * rat_pow(w, k);
      bool ok = lhs.scaled(weight) == rhs.scaled(weight);
      rep.add_case("z^" + std::to_string(j) + " w^" + std::to_string(k), ok,
                   ok ? "" : (lhs - rhs).str());
    }
  return rep;
}

Report gamma_exchange_check(int family, const Rat& z, const Rat& w, const PolyQ& p,
                            int order) {
  if (family != 1 && family != 2) throw InvalidInput("family must be 1 or 2");
  if (z == 0) throw InvalidInput("creation-side argument must be nonzero");
  Report rep;
  rep.check = "gamma-exchange";
  rep.params = {{"family", family}, {"z", rat_str(z)}, {"w", rat_str(w)}, {"order", order}};
  Alph der = family == 1 ? Alph::DX : Alph::DY;
  Alph shift = family == 1 ? Alph::XShift : Alph::YShift;
  for (int a = 0; a <= order; ++a)
    for (int b = 0; b <= order; ++b) {
      PolyQ lhs = h_chain(p, {{a, AlphOp{der}}, {b, AlphOp{shift}}});
      PolyQ rhs(p.dom(), p.nx(), p.ny());
      for (int s = 0; s <= std::min(a, b); ++s)
        rhs += h_chain(p, {{b - s, AlphOp{shift}}, {a - s, AlphOp{der}}});
      Rat weight = rat_pow(z, -a) * rat_pow(w, b);
      bool ok = lhs.scaled(weight) == rhs.scaled(weight);
      rep.add_case("z^-" + std::to_string(a) + " w^" + std::to_string(b), ok,
                   ok ? "" : (lhs - rhs).str());
    }
  // Opposite-family factors commute outright.
  Alph other_shift = family == 1 ? Alph::YShift : Alph::XShift;
  for (int a = 0; a <= order; ++a)
    for (int b = 0; b <= order; ++b) {
      PolyQ ab = h_chain(p, {{a, AlphOp{der}}, {b, AlphOp{other_shift}}});
      PolyQ ba = h_chain(p, {{b, AlphOp{other_shift}}, {a, AlphOp{der}}});
      bool ok = ab == ba;
      rep.add_case("cross a=" + std::to_string(a) + " b=" + std::to_string(b), ok,
                   ok ? "" : (ab - ba).str());
    }
  return rep;
}

Report vertex_rep_limit_check(int family, int order, const PolyQ& p) {
  if (family != 1 && family != 2) throw InvalidInput("family must be 1 or 2");
  if (order < 0) throw InvalidInput("order must be nonnegative");
  Report rep;
  rep.check = "vertex-limit";
  rep.params = {{"family", family}, {"order", order}};
  VarFamily which = family == 1 ? VarFamily::X : VarFamily::Y;
  std::vector<PolyQ> gamma = gamma_apply(GammaSpec{family, -1, order}, p);
  std::vector<PolyQ> trunc = truncated_H_apply(order, which, p);
  std::vector<PolyQ> wider = truncated_H_apply(order + 1, which, p);
  for (int k = 0; k <= order; ++k) {
    bool ok = gamma[k] == trunc[k];
    rep.add_case("exponential route k=" + std::to_string(k), ok,
                 ok ? "" : (gamma[k] - trunc[k]).str());
    bool stable = trunc[k] == wider[k];
    rep.add_case("stabilized k=" + std::to_string(k), stable,
                 stable ? "" : (trunc[k] - wider[k]).str());
  }
  return rep;
}

}  // namespace ucalg
