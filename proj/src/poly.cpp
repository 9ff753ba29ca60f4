#include "ucalg/poly.hpp"

#include <sstream>

namespace ucalg {

namespace {

int exp_in(const std::vector<std::pair<int, int>>& v, int index) {
  for (auto& [i, e] : v)
    if (i == index) return e;
  return 0;
}

int weight_of(const std::vector<std::pair<int, int>>& v) {
  int w = 0;
  for (auto& [i, e] : v) w += i * e;
  return w;
}

std::vector<std::pair<int, int>> merge_exps(const std::vector<std::pair<int, int>>& a,
                                            const std::vector<std::pair<int, int>>& b) {
  std::vector<std::pair<int, int>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return out;
}

// Compare sparse exponent vectors: the monomial with the higher exponent at
// the first differing index sorts earlier. Returns <0, 0, >0.
int cmp_exps(const std::vector<std::pair<int, int>>& a,
             const std::vector<std::pair<int, int>>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int ia = i < a.size() ? a[i].first : INT32_MAX;
    int ib = j < b.size() ? b[j].first : INT32_MAX;
    int idx = std::min(ia, ib);
    int ea = ia == idx ? a[i].second : 0;
    int eb = ib == idx ? b[j].second : 0;
    if (ea != eb) return ea > eb ? -1 : 1;
    if (ia == idx) ++i;
    if (ib == idx) ++j;
  }
  return 0;
}

}  // namespace

Monomial Monomial::var(VarFamily f, int index, int power) {
  if (index < 1 || power < 0) throw InvalidInput("bad variable index or power");
  Monomial m;
  if (power > 0) (f == VarFamily::X ? m.xe : m.ye).emplace_back(index, power);
  return m;
}

int Monomial::exp(VarFamily f, int index) const {
  return exp_in(f == VarFamily::X ? xe : ye, index);
}

int Monomial::max_index(VarFamily f) const {
  const auto& v = f == VarFamily::X ? xe : ye;
  return v.empty() ? 0 : v.back().first;
}

int Monomial::x_weight() const { return weight_of(xe); }
int Monomial::y_weight() const { return weight_of(ye); }

int Monomial::total_degree() const {
  int d = 0;
  for (auto& [i, e] : xe) d += e;
  for (auto& [i, e] : ye) d += e;
  return d;
}

Monomial Monomial::times(VarFamily f, int index, int power) const {
  Monomial r = *this;
  auto& v = f == VarFamily::X ? r.xe : r.ye;
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& p, int k) { return p.first < k; });
  if (it != v.end() && it->first == index) {
    it->second += power;
    if (it->second < 0) throw InvalidInput("negative exponent");
    if (it->second == 0) v.erase(it);
  } else {
    if (power < 0) throw InvalidInput("negative exponent");
    if (power > 0) v.insert(it, {index, power});
  }
  return r;
}

Monomial Monomial::merged(const Monomial& o) const {
  Monomial r;
  r.xe = merge_exps(xe, o.xe);
  r.ye = merge_exps(ye, o.ye);
  return r;
}

Monomial Monomial::offset(int dx, int dy) const {
  Monomial r = *this;
  for (auto& [i, e] : r.xe) i += dx;
  for (auto& [i, e] : r.ye) i += dy;
  for (auto& [i, e] : r.xe)
    if (i < 1) throw InvalidInput("variable index shifted below 1");
  for (auto& [i, e] : r.ye)
    if (i < 1) throw InvalidInput("variable index shifted below 1");
  return r;
}

std::string Monomial::str() const {
  if (is_constant()) return "1";
  std::ostringstream os;
  bool first = true;
  auto put = [&](char name, const std::vector<std::pair<int, int>>& v) {
    for (auto& [i, e] : v) {
      if (!first) os << "*";
      first = false;
      os << name << i;
      if (e > 1) os << "^" << e;
    }
  };
  put('x', xe);
  put('y', ye);
  return os.str();
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  int c = cmp_exps(a.xe, b.xe);
  if (c != 0) return c < 0;
  return cmp_exps(a.ye, b.ye) < 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (auto& [i, e] : m.xe) {
    mix(static_cast<std::size_t>(i) << 20);
    mix(static_cast<std::size_t>(e));
  }
  mix(0xabcdefull);
  for (auto& [i, e] : m.ye) {
    mix(static_cast<std::size_t>(i) << 20);
    mix(static_cast<std::size_t>(e));
  }
  return h;
}

SeriesDomain SeriesDomain::merged(const SeriesDomain& o) const {
  if (param != o.param) throw DomainMismatch("series parameters differ: " + param + " vs " + o.param);
  return {param, std::min(cap, o.cap)};
}

TruncSeries SeriesDomain::adapt(const TruncSeries& c) const {
  if (c.param() != param) throw DomainMismatch("series parameter " + c.param() + " in ring over " + param);
  if (c.cap() < cap)
    throw DomainMismatch("coefficient exact only to " + std::to_string(c.cap()) +
                         " in ring with cap " + std::to_string(cap));
  return c.cap() == cap ? c : c.truncated(cap);
}

template <class Dom>
int Poly<Dom>::x_weight_max() const {
  int w = 0;
  for (auto& [m, c] : terms_) w = std::max(w, m.x_weight());
  return w;
}

template <class Dom>
int Poly<Dom>::y_weight_max() const {
  int w = 0;
  for (auto& [m, c] : terms_) w = std::max(w, m.y_weight());
  return w;
}

namespace {

std::string coeff_str(const Rat& c) { return rat_str(c); }
std::string coeff_str(const TruncSeries& c) { return c.str(); }

}  // namespace

template <class Dom>
std::string Poly<Dom>::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest-order terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = coeff_str(c);
    bool multi = cs.find(' ') != std::string::npos;  // series with several terms
    bool neg = !multi && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (m.is_constant()) {
      os << (multi ? "(" + cs + ")" : cs);
    } else if (!multi && cs == "1") {
      os << m.str();
    } else {
      os << (multi ? "(" + cs + ")" : cs) << "*" << m.str();
    }
  }
  return os.str();
}

template <class Dom>
Poly<Dom> shifted_generator_apply(const Poly<Dom>& p, VarFamily which, int n, int power) {
  if (n < 1 || power < 0) throw InvalidInput("bad shifted generator parameters");
  VarFamily mul_f = which;
  VarFamily der_f = which == VarFamily::X ? VarFamily::Y : VarFamily::X;
  // If the derivative bank stops short of n, the derivative half is zero.
  int jmax = n > (der_f == VarFamily::X ? p.nx() : p.ny()) ? 0 : power;
  Poly<Dom> acc(p.dom(), p.nx(), p.ny());
  for (int j = 0; j <= jmax; ++j) {
    // binom(power, j) * x_n^(power-j) * (-1/n d/dy_n)^j
    Poly<Dom> q = p;
    for (int t = 0; t < j; ++t) q = q.derivative(der_f, n);
    if (q.is_zero()) continue;
    Rat scale = binomial(power, j) * rat_pow(Rat(-1, n), j);
    if (power > j) q = q.times_var(mul_f, n, power - j);
    acc += q.scaled(scale);
  }
  return acc;
}

PolyS lift_to_series(const SeriesDomain& dom, const PolyQ& p) {
  PolyS r(dom, p.nx(), p.ny());
  for (auto& [m, c] : p.terms()) r.add_term(m, dom.from_rat(c));
  return r;
}

template class Poly<RationalDomain>;
template class Poly<SeriesDomain>;

template PolyQ shifted_generator_apply(const PolyQ&, VarFamily, int, int);
template PolyS shifted_generator_apply(const PolyS&, VarFamily, int, int);

}  // namespace ucalg
