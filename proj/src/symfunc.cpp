#include "ucalg/symfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_map>

namespace ucalg {

namespace {

// Apply (letter_n)^mult for a single alphabet letter. Negated letters pick up
// (-1)^mult. Derivative letters vanish quietly beyond the cutoffs (they act
// as zero there); multiplication letters throw, since the result would leave
// the ring.
PolyQ apply_letter_power(const AlphOp& op, int n, int mult, const PolyQ& p) {
  PolyQ q = [&]() -> PolyQ {
    switch (op.kind) {
      case Alph::X:
        return p.times_var(VarFamily::X, n, mult);
      case Alph::Y:
        return p.times_var(VarFamily::Y, n, mult);
      case Alph::XShift:
        return shifted_generator_apply(p, VarFamily::X, n, mult);
      case Alph::YShift:
        return shifted_generator_apply(p, VarFamily::Y, n, mult);
      case Alph::DX:
      case Alph::DY: {
        VarFamily f = op.kind == Alph::DX ? VarFamily::X : VarFamily::Y;
        if (n > (f == VarFamily::X ? p.nx() : p.ny()))
          return PolyQ(p.dom(), p.nx(), p.ny());
        PolyQ r = p;
        for (int t = 0; t < mult && !r.is_zero(); ++t) r = r.derivative(f, n);
        r.scale(rat_pow(Rat(1, n), mult));
        return r;
      }
    }
    throw Error("unknown alphabet");
  }();
  if (op.negated && mult % 2 == 1) q.scale(-1);
  return q;
}

struct ColKey {
  int kind;
  bool neg;
  int n;
  Monomial m;
  int nx, ny;
  bool operator==(const ColKey&) const = default;
};

struct ColKeyHash {
  std::size_t operator()(const ColKey& k) const {
    std::size_t h = MonomialHash{}(k.m);
    h = h * 1099511628211ull ^ static_cast<std::size_t>(k.kind * 2 + (k.neg ? 1 : 0));
    h = h * 1099511628211ull ^ static_cast<std::size_t>(k.n + 64);
    h = h * 1099511628211ull ^ static_cast<std::size_t>(k.nx * 131 + k.ny);
    return h;
  }
};

std::mutex col_mu;
std::unordered_map<ColKey, std::shared_ptr<const PolyQ>, ColKeyHash> col_cache;

// h_n(op) applied to a single monomial, memoized. Columns are rational even
// when callers work over series coefficients.
std::shared_ptr<const PolyQ> h_column(const AlphOp& op, int n, const Monomial& m, int nx,
                                      int ny) {
  ColKey key{static_cast<int>(op.kind), op.negated, n, m, nx, ny};
  {
    std::lock_guard lk(col_mu);
    auto it = col_cache.find(key);
    if (it != col_cache.end()) return it->second;
  }
  PolyQ base(RationalDomain{}, nx, ny);
  base.add_term(m, 1);
  PolyQ acc(RationalDomain{}, nx, ny);
  for (const Partition& kappa : partitions_of(n)) {
    PolyQ q = base;
    Rat w = 1;
    for (auto& [part, mult] : kappa.occupations()) {
      q = apply_letter_power(op, part, mult, q);
      if (q.is_zero()) break;
      w /= Rat(factorial(mult));
    }
    if (q.is_zero()) continue;
    acc += q.scaled(w);
  }
  auto sp = std::make_shared<const PolyQ>(std::move(acc));
  std::lock_guard lk(col_mu);
  return col_cache.emplace(key, sp).first->second;
}

}  // namespace

template <class Dom>
Poly<Dom> h_apply(int n, AlphOp op, const Poly<Dom>& p) {
  if (n < 0) return Poly<Dom>(p.dom(), p.nx(), p.ny());
  if (n == 0) return p;
  Poly<Dom> r(p.dom(), p.nx(), p.ny());
  for (auto& [m, c] : p.terms()) {
    auto col = h_column(op, n, m, p.nx(), p.ny());
    for (auto& [m2, w] : col->terms()) r.add_term(m2, c * w);
  }
  return r;
}

template PolyQ h_apply(int, AlphOp, const PolyQ&);
template PolyS h_apply(int, AlphOp, const PolyS&);

PolyQ complete_h(int n, VarFamily f, int nx, int ny) {
  PolyQ zero(RationalDomain{}, nx, ny);
  if (n < 0) return zero;
  PolyQ one = PolyQ::one(RationalDomain{}, nx, ny);
  if (n == 0) return one;
  return h_apply(n, AlphOp{f == VarFamily::X ? Alph::X : Alph::Y}, one);
}

namespace {

// ---- h-symbol layer: formal products of h_k(x) and h_k(y) ----

int multiset_weight(const std::vector<int>& v) {
  int w = 0;
  for (int k : v) w += k;
  return w;
}

struct HMono2 {
  std::vector<int> hx, hy;  // descending, entries >= 1
  bool operator==(const HMono2&) const = default;
};

// Order under which every pair character has its defining (la, mu) as the
// unique minimal symbol with coefficient 1: heavier total weight first, then
// heavier x side, then lexicographically smaller index lists.
struct UCOrder {
  bool operator()(const HMono2& a, const HMono2& b) const {
    int wa = multiset_weight(a.hx) + multiset_weight(a.hy);
    int wb = multiset_weight(b.hx) + multiset_weight(b.hy);
    if (wa != wb) return wa > wb;
    int xa = multiset_weight(a.hx), xb = multiset_weight(b.hx);
    if (xa != xb) return xa > xb;
    if (a.hx != b.hx) return a.hx < b.hx;
    return a.hy < b.hy;
  }
};

using HPoly2 = std::map<HMono2, Rat, UCOrder>;

void hpoly2_add(HPoly2& acc, const HMono2& m, const Rat& c) {
  if (c == 0) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

// Matrix entry: h_{k} of family fam (0 = x, 1 = y); k < 0 kills the term.
struct DetEntry {
  int fam;
  int k;
};

void det_rec(const std::vector<std::vector<DetEntry>>& M, int row, std::uint32_t used,
             int sign, std::vector<int>& hx, std::vector<int>& hy, HPoly2& out) {
  int n = static_cast<int>(M.size());
  if (row == n) {
    HMono2 key;
    key.hx = hx;
    key.hy = hy;
    std::sort(key.hx.rbegin(), key.hx.rend());
    std::sort(key.hy.rbegin(), key.hy.rend());
    hpoly2_add(out, key, sign);
    return;
  }
  for (int j = 0; j < n; ++j) {
    if (used & (1u << j)) continue;
    const DetEntry& e = M[row][j];
    if (e.k < 0) continue;
    // inversions added: previously chosen columns to the right of j
    int inv = __builtin_popcount(used >> (j + 1));
    int s = (inv % 2 == 0) ? sign : -sign;
    auto& side = e.fam == 0 ? hx : hy;
    if (e.k > 0) side.push_back(e.k);
    det_rec(M, row + 1, used | (1u << j), s, hx, hy, out);
    if (e.k > 0) side.pop_back();
  }
}

HPoly2 det_expand(const std::vector<std::vector<DetEntry>>& M) {
  HPoly2 out;
  std::vector<int> hx, hy;
  det_rec(M, 0, 0, 1, hx, hy, out);
  return out;
}

// Twisted block determinant for the pair (la, mu): the first l(mu) rows hold
// h_{mu_{l'-i+1}+i-j}(y), the remaining l(la) rows h_{la_{i-l'}-i+j}(x).
HPoly2 uc_h_expansion_impl(const Partition& la, const Partition& mu) {
  int l = la.length(), lp = mu.length(), n = l + lp;
  if (n == 0) {
    HPoly2 one;
    hpoly2_add(one, HMono2{}, 1);
    return one;
  }
  if (n > 20) throw InvalidInput("pair character with more than 20 rows");
  std::vector<std::vector<DetEntry>> M(n, std::vector<DetEntry>(n));
  for (int i = 1; i <= lp; ++i)
    for (int j = 1; j <= n; ++j) M[i - 1][j - 1] = {1, mu.part(lp - i) + i - j};
  for (int i = lp + 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) M[i - 1][j - 1] = {0, la.part(i - lp - 1) - i + j};
  return det_expand(M);
}

std::mutex uc_h_mu;
std::map<std::pair<std::vector<int>, std::vector<int>>, std::shared_ptr<const HPoly2>>
    uc_h_cache;

std::shared_ptr<const HPoly2> uc_h_expansion(const Partition& la, const Partition& mu) {
  auto key = std::make_pair(la.parts(), mu.parts());
  {
    std::lock_guard lk(uc_h_mu);
    auto it = uc_h_cache.find(key);
    if (it != uc_h_cache.end()) return it->second;
  }
  auto sp = std::make_shared<const HPoly2>(uc_h_expansion_impl(la, mu));
  std::lock_guard lk(uc_h_mu);
  return uc_h_cache.emplace(key, sp).first->second;
}

PolyQ eval_h2(const HPoly2& hp, int nx, int ny) {
  PolyQ acc(RationalDomain{}, nx, ny);
  for (auto& [m, c] : hp) {
    PolyQ t = PolyQ::one(RationalDomain{}, nx, ny);
    for (int k : m.hx) t = t * complete_h(k, VarFamily::X, nx, ny);
    for (int k : m.hy) t = t * complete_h(k, VarFamily::Y, nx, ny);
    acc += t.scaled(c);
  }
  return acc;
}

std::mutex uc_poly_mu;
std::map<std::tuple<std::vector<int>, std::vector<int>, int, int>,
         std::shared_ptr<const PolyQ>>
    uc_poly_cache;

}  // namespace

PolyQ universal_character_jt(const Partition& la, const Partition& mu, int nx, int ny) {
  auto key = std::make_tuple(la.parts(), mu.parts(), nx, ny);
  {
    std::lock_guard lk(uc_poly_mu);
    auto it = uc_poly_cache.find(key);
    if (it != uc_poly_cache.end()) return *it->second;
  }
  auto sp = std::make_shared<const PolyQ>(eval_h2(*uc_h_expansion(la, mu), nx, ny));
  std::lock_guard lk(uc_poly_mu);
  return *uc_poly_cache.emplace(key, sp).first->second;
}

PolyQ schur(const Partition& la, VarFamily f, int nx, int ny) {
  if (f == VarFamily::X) return universal_character_jt(la, Partition{}, nx, ny);
  return universal_character_jt(Partition{}, la, nx, ny);
}

PolyQ universal_character_op(const Partition& la, const Partition& mu, int nx, int ny) {
  auto apply_det = [&](const Partition& pa, AlphOp op, const PolyQ& p) {
    HPoly2 det = uc_h_expansion_impl(pa, Partition{});  // single-family symbols in hx
    PolyQ acc(RationalDomain{}, nx, ny);
    for (auto& [m, c] : det) {
      PolyQ q = p;
      for (int k : m.hx) {
        q = h_apply(k, op, q);
        if (q.is_zero()) break;
      }
      if (!q.is_zero()) acc += q.scaled(c);
    }
    return acc;
  };
  PolyQ cur = PolyQ::one(RationalDomain{}, nx, ny);
  cur = apply_det(mu, AlphOp{Alph::YShift}, cur);
  cur = apply_det(la, AlphOp{Alph::XShift}, cur);
  return cur;
}

Rat complete_h_numeric(int n, const std::vector<Rat>& points) {
  if (n < 0) return 0;
  std::vector<Rat> h(n + 1, Rat(0));
  h[0] = 1;
  for (const Rat& u : points)
    for (int k = 1; k <= n; ++k) h[k] += u * h[k - 1];
  return h[n];
}

Rat schur_eval(const Partition& la, const std::vector<Rat>& points) {
  int l = la.length();
  if (l == 0) return 1;
  int maxh = la.part(0) + l;
  std::vector<Rat> h(maxh + 1, Rat(0));
  h[0] = 1;
  for (const Rat& u : points)
    for (int k = 1; k <= maxh; ++k) h[k] += u * h[k - 1];
  // det over h[la_i - i + j], small recursive expansion
  std::vector<std::vector<Rat>> M(l, std::vector<Rat>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      int k = la.part(i - 1) - i + j;
      M[i - 1][j - 1] = (k < 0 || k > maxh) ? Rat(0) : h[k];
    }
  std::function<Rat(int, std::uint32_t)> rec = [&](int row, std::uint32_t used) -> Rat {
    if (row == l) return 1;
    Rat acc = 0;
    for (int j = 0; j < l; ++j) {
      if (used & (1u << j)) continue;
      if (M[row][j] == 0) continue;
      int inv = __builtin_popcount(used >> (j + 1));
      Rat sub = rec(row + 1, used | (1u << j));
      acc += (inv % 2 == 0 ? M[row][j] : -M[row][j]) * sub;
    }
    return acc;
  };
  return rec(0, 0);
}

template <class Dom>
std::vector<Poly<Dom>> truncated_H_apply(int M, VarFamily which, const Poly<Dom>& p) {
  if (M < 0) throw InvalidInput("negative truncation bound");
  AlphOp op{which == VarFamily::X ? Alph::XShift : Alph::YShift};
  std::vector<Poly<Dom>> out;
  out.reserve(M + 1);
  for (int k = 0; k <= M; ++k) out.push_back(h_apply(k, op, p));
  return out;
}

template std::vector<PolyQ> truncated_H_apply(int, VarFamily, const PolyQ&);
template std::vector<PolyS> truncated_H_apply(int, VarFamily, const PolyS&);

std::vector<std::vector<std::pair<Partition, Partition>>> skew_H_apply(
    int M, VarFamily target, const Partition& la, const Partition& mu) {
  if (M < 0) throw InvalidInput("negative truncation bound");
  std::vector<std::vector<std::pair<Partition, Partition>>> out(M + 1);
  for (int k = 0; k <= M; ++k) {
    const Partition& t = target == VarFamily::X ? la : mu;
    for (const Partition& nu : remove_horizontal_strips(t, k))
      out[k].push_back(target == VarFamily::X ? std::make_pair(nu, mu)
                                              : std::make_pair(la, nu));
  }
  return out;
}

namespace {

// ---- power sums to h conversion for the expansion routine ----

using HPoly1 = std::map<std::vector<int>, Rat>;  // descending multisets

HPoly1 mul1(const HPoly1& a, const HPoly1& b) {
  HPoly1 out;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      std::vector<int> m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m),
                 std::greater<int>());
      auto [it, fresh] = out.emplace(std::move(m), ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

std::mutex xh_mu;
std::vector<HPoly1> xn_table;  // xn_table[n] = x_n written in h symbols

// x_n = [z^n] log(1 + sum_k h_k z^k); the table is grown on demand.
void grow_xn_table(int n) {
  if (static_cast<int>(xn_table.size()) > n) return;
  int N = std::max(n, 4);
  std::vector<HPoly1> logM(N + 1);
  // mz[k] = h_k for k >= 1
  std::vector<HPoly1> mz(N + 1), power(N + 1);
  for (int k = 1; k <= N; ++k) mz[k].emplace(std::vector<int>{k}, Rat(1));
  power = mz;
  for (int j = 1; j <= N; ++j) {
    Rat c = Rat((j % 2 == 1) ? 1 : -1, j);
    for (int t = j; t <= N; ++t)
      for (auto& [m, w] : power[t]) {
        auto [it, fresh] = logM[t].emplace(m, w * c);
        if (!fresh) {
          it->second += w * c;
          if (it->second == 0) logM[t].erase(it);
        }
      }
    if (j == N) break;
    // power <- power * mz, truncated at z^N
    std::vector<HPoly1> next(N + 1);
    for (int t = j + 1; t <= N; ++t)
      for (int b = 1; t - b >= j; ++b) {
        if (power[t - b].empty()) continue;
        HPoly1 prod = mul1(power[t - b], mz[b]);
        for (auto& [m, w] : prod) {
          auto [it, fresh] = next[t].emplace(m, w);
          if (!fresh) {
            it->second += w;
            if (it->second == 0) next[t].erase(it);
          }
        }
      }
    power = std::move(next);
  }
  xn_table = std::move(logM);
}

HPoly1 xn_in_h(int n) {
  std::lock_guard lk(xh_mu);
  grow_xn_table(n);
  return xn_table[n];
}

HPoly2 mono_to_h2(const Monomial& mono) {
  HPoly2 acc;
  hpoly2_add(acc, HMono2{}, 1);
  auto fold = [&](const std::vector<std::pair<int, int>>& exps, bool yside) {
    for (auto& [n, e] : exps) {
      HPoly1 xn = xn_in_h(n);
      for (int t = 0; t < e; ++t) {
        HPoly2 next;
        for (auto& [m2, c2] : acc)
          for (auto& [m1, c1] : xn) {
            HMono2 key = m2;
            auto& side = yside ? key.hy : key.hx;
            std::vector<int> merged;
            merged.reserve(side.size() + m1.size());
            std::merge(side.begin(), side.end(), m1.begin(), m1.end(),
                       std::back_inserter(merged), std::greater<int>());
            side = std::move(merged);
            hpoly2_add(next, key, c1 * c2);
          }
        acc = std::move(next);
      }
    }
  };
  fold(mono.xe, false);
  fold(mono.ye, true);
  return acc;
}

}  // namespace

std::map<std::pair<Partition, Partition>, Rat> uc_expand(const PolyQ& p) {
  HPoly2 rem;
  for (auto& [m, c] : p.terms()) {
    HPoly2 hm = mono_to_h2(m);
    for (auto& [k, w] : hm) hpoly2_add(rem, k, c * w);
  }
  std::map<std::pair<Partition, Partition>, Rat> out;
  long iterations = 0;
  while (!rem.empty()) {
    if (++iterations > 2000000) throw Error("pair-character expansion did not terminate");
    auto it = rem.begin();
    HMono2 key = it->first;
    Rat c = it->second;
    Partition la(key.hx), mu(key.hy);
    out[{la, mu}] += c;
    for (auto& [k2, c2] : *uc_h_expansion(la, mu)) hpoly2_add(rem, k2, -c * c2);
    if (rem.count(key)) throw Error("pair-character basis lost triangularity");
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace ucalg
