#include "ucalg/vertex.hpp"

#include <functional>
#include <sstream>

namespace ucalg {

namespace {

AlphOp gamma_alphabet(GammaSpec g) {
  if (g.family == 1) return AlphOp{g.sign < 0 ? Alph::XShift : Alph::DX};
  if (g.family == 2) return AlphOp{g.sign < 0 ? Alph::YShift : Alph::DY};
  throw InvalidInput("gamma family must be 1 or 2");
}

}  // namespace

template <class Dom>
std::vector<Poly<Dom>> gamma_apply(GammaSpec g, const Poly<Dom>& p) {
  if (g.order < 0) throw InvalidInput("negative gamma order");
  AlphOp op = gamma_alphabet(g);
  int order = g.order;
  Poly<Dom> zero(p.dom(), p.nx(), p.ny());
  std::vector<Poly<Dom>> res(order + 1, zero), cur(order + 1, zero);
  res[0] = p;
  cur[0] = p;
  // exp(G) = sum_j G^j / j!, graded by the power of the spectral parameter;
  // letter_n carries grade n. cur holds G^j p / j! gradewise.
  for (int j = 1; j <= order; ++j) {
    std::vector<Poly<Dom>> next(order + 1, zero);
    bool any = false;
    for (int k = j; k <= order; ++k) {
      Poly<Dom> acc = zero;
      for (int n = 1; n <= k; ++n) {
        const Poly<Dom>& prev = cur[k - n];
        if (prev.is_zero()) continue;
        Poly<Dom> one_letter = [&] {
          switch (op.kind) {
            case Alph::XShift:
              return shifted_generator_apply(prev, VarFamily::X, n, 1);
            case Alph::YShift:
              return shifted_generator_apply(prev, VarFamily::Y, n, 1);
            case Alph::DX:
              return prev.derivative(VarFamily::X, n).scaled(Rat(1, n));
            case Alph::DY:
              return prev.derivative(VarFamily::Y, n).scaled(Rat(1, n));
            default:
              throw Error("unexpected gamma alphabet");
          }
        }();
        acc += one_letter;
      }
      acc.scale(Rat(1, j));
      if (!acc.is_zero()) any = true;
      next[k] = std::move(acc);
    }
    cur = std::move(next);
    for (int k = j; k <= order; ++k) res[k] += cur[k];
    if (!any) break;
  }
  return res;
}

template std::vector<PolyQ> gamma_apply(GammaSpec, const PolyQ&);
template std::vector<PolyS> gamma_apply(GammaSpec, const PolyS&);

template <class Dom>
Poly<Dom> mode_apply(VarFamily fam, int sign, int n, const Poly<Dom>& p) {
  if (sign != 1 && sign != -1) throw InvalidInput("mode sign must be +1 or -1");
  AlphOp outer{fam == VarFamily::X ? Alph::XShift : Alph::YShift, sign < 0};
  AlphOp inner{fam == VarFamily::X ? Alph::DX : Alph::DY, sign > 0};
  int bmax = fam == VarFamily::X ? p.x_weight_max() : p.y_weight_max();
  Poly<Dom> acc(p.dom(), p.nx(), p.ny());
  for (int b = 0; b <= bmax; ++b) {
    if (n + b < 0) continue;
    Poly<Dom> q = h_apply(b, inner, p);
    if (q.is_zero()) continue;
    acc += h_apply(n + b, outer, q);
  }
  return acc;
}

template PolyQ mode_apply(VarFamily, int, int, const PolyQ&);
template PolyS mode_apply(VarFamily, int, int, const PolyS&);

PolyQ raise_uc(const Partition& la, const Partition& mu, int nx, int ny) {
  PolyQ cur = PolyQ::one(RationalDomain{}, nx, ny);
  for (int i = mu.length(); i >= 1; --i) cur = mode_apply(VarFamily::Y, 1, mu.part(i - 1), cur);
  for (int i = la.length(); i >= 1; --i) cur = mode_apply(VarFamily::X, 1, la.part(i - 1), cur);
  return cur;
}

std::vector<Monomial> monomial_family(int d) {
  std::vector<Partition> parts = partitions_up_to(d);
  auto as_exps = [](const Partition& p) {
    std::vector<std::pair<int, int>> e;
    for (auto& [idx, mult] : p.occupations()) e.emplace_back(idx, mult);
    return e;
  };
  std::vector<Monomial> fam;
  fam.reserve(parts.size() * parts.size());
  for (const Partition& a : parts)
    for (const Partition& b : parts) {
      Monomial m;
      m.xe = as_exps(a);
      m.ye = as_exps(b);
      fam.push_back(m);
    }
  return fam;
}

namespace {

PolyQ mono_poly(const Monomial& m, int nx, int ny) {
  PolyQ p(RationalDomain{}, nx, ny);
  p.add_term(m, 1);
  return p;
}

std::string mode_label(VarFamily fam, int sign, int i) {
  std::ostringstream os;
  os << (fam == VarFamily::X ? "X" : "Y") << "_" << i << (sign > 0 ? "+" : "-");
  return os.str();
}

// Residual of `relation` over the monomial family; empty string when all
// residuals vanish.
std::string sweep_family(int d, int nx, int ny,
                         const std::function<PolyQ(const PolyQ&)>& relation) {
  for (const Monomial& m : monomial_family(d)) {
    PolyQ r = relation(mono_poly(m, nx, ny));
    if (!r.is_zero()) return "on " + m.str() + ": " + r.str();
  }
  return "";
}

}  // namespace

Report fermion_relation_check(VarFamily letter, int i, int j, int d, int nx, int ny) {
  Report rep;
  rep.check = "mode_relations";
  rep.params = {{"family", letter == VarFamily::X ? "x" : "y"},
                {"i", i},
                {"j", j},
                {"weight", d}};
  VarFamily other = letter == VarFamily::X ? VarFamily::Y : VarFamily::X;
  for (int s : {1, -1}) {
    std::string res = sweep_family(d, nx, ny, [&](const PolyQ& p) {
      return mode_apply(letter, s, i, mode_apply(letter, s, j, p)) +
             mode_apply(letter, s, j - 1, mode_apply(letter, s, i + 1, p));
    });
    rep.add_case("square " + mode_label(letter, s, i) + " " + mode_label(letter, s, j),
                 res.empty(), res);
  }
  {
    std::string res = sweep_family(d, nx, ny, [&](const PolyQ& p) {
      PolyQ lhs = mode_apply(letter, 1, i, mode_apply(letter, -1, j, p)) +
                  mode_apply(letter, -1, j + 1, mode_apply(letter, 1, i - 1, p));
      if (i + j == 0) lhs -= p;
      return lhs;
    });
    rep.add_case("mixed " + mode_label(letter, 1, i) + " " + mode_label(letter, -1, j),
                 res.empty(), res);
  }
  for (int s : {1, -1})
    for (int t : {1, -1}) {
      std::string res = sweep_family(d, nx, ny, [&](const PolyQ& p) {
        return mode_apply(letter, s, i, mode_apply(other, t, j, p)) -
               mode_apply(other, t, j, mode_apply(letter, s, i, p));
      });
      rep.add_case("cross " + mode_label(letter, s, i) + " " + mode_label(other, t, j),
                   res.empty(), res);
    }
  return rep;
}

Report gamma_pieri_check(GammaSpec g, const Partition& la, const Partition& mu, int nx,
                         int ny) {
  Report rep;
  rep.check = "gamma_strip_rule";
  rep.params = {{"family", g.family},
                {"sign", g.sign},
                {"la", la.str()},
                {"mu", mu.str()},
                {"order", g.order}};
  PolyQ uc = universal_character_jt(la, mu, nx, ny);
  std::vector<PolyQ> got = gamma_apply(g, uc);
  VarFamily side = g.family == 1 ? VarFamily::X : VarFamily::Y;
  UCVec<Rat> base;
  base.add({la, mu}, 1);
  for (int k = 0; k <= g.order; ++k) {
    UCVec<Rat> expect = g.sign < 0 ? uc_mult_h(base, k, side) : uc_skew_h(base, k, side);
    PolyQ want = uc_materialize(expect, nx, ny);
    PolyQ diff = got[k] - want;
    std::ostringstream label;
    label << "z^" << (g.sign < 0 ? k : -k);
    rep.add_case(label.str(), diff.is_zero(), diff.is_zero() ? "" : diff.str());
  }
  return rep;
}

Report gamma_route_check(GammaSpec g, int d, int nx, int ny) {
  Report rep;
  rep.check = "gamma_two_routes";
  rep.params = {{"family", g.family}, {"sign", g.sign}, {"order", g.order}, {"weight", d}};
  AlphOp op = gamma_alphabet(g);
  for (const Monomial& m : monomial_family(d)) {
    PolyQ p = mono_poly(m, nx, ny);
    std::vector<PolyQ> got = gamma_apply(g, p);
    bool ok = true;
    std::string residual;
    for (int k = 0; k <= g.order && ok; ++k) {
      PolyQ want = h_apply(k, op, p);
      PolyQ diff = got[k] - want;
      if (!diff.is_zero()) {
        ok = false;
        std::ostringstream os;
        os << "at order " << k << ": " << diff.str();
        residual = os.str();
      }
    }
    rep.add_case(m.str(), ok, residual);
  }
  return rep;
}

PolyQ uc_bilinear_residual(const Partition& la, const Partition& mu, VarFamily fam,
                           int window, int nx, int ny) {
  PolyQ tau = universal_character_jt(la, mu, nx, ny);
  // Every mode below -(weight of tau) annihilates tau, since the inner
  // derivative index cannot exceed that weight. Take the larger of the
  // requested window and that provable bound, then confirm the boundary.
  int wmax = (fam == VarFamily::X ? tau.x_weight_max() : tau.y_weight_max()) + 1;
  int w = std::max(window, wmax);
  if (!mode_apply(fam, -1, -w, tau).is_zero() || !mode_apply(fam, 1, -w, tau).is_zero())
    throw Error("bilinear window failed to close");
  PolyQ doubled(RationalDomain{}, 2 * nx, 2 * ny);
  PolyQ sum = doubled;
  for (int i = -w; i <= w - 1; ++i) {
    int j = -1 - i;
    PolyQ left = mode_apply(fam, -1, i, tau);
    if (left.is_zero()) continue;
    PolyQ right = mode_apply(fam, 1, j, tau);
    if (right.is_zero()) continue;
    sum += left.embedded(doubled, 0, 0) * right.embedded(doubled, nx, ny);
  }
  return sum;
}

Report uc_bilinear_check(const Partition& la, const Partition& mu, VarFamily fam, int nx,
                         int ny) {
  Report rep;
  rep.check = "pair_character_bilinear";
  rep.params = {{"la", la.str()},
                {"mu", mu.str()},
                {"family", fam == VarFamily::X ? "x" : "y"}};
  PolyQ res = uc_bilinear_residual(la, mu, fam, 1, nx, ny);
  rep.add_case("bilinear sum", res.is_zero(), res.is_zero() ? "" : res.str());
  return rep;
}

}  // namespace ucalg
