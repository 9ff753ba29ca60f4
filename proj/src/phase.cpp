#include "ucalg/phase.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "ucalg/error.hpp"
#include "ucalg/rational.hpp"

namespace ucalg {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string piece = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.empty()) throw InvalidInput("empty occupation entry in '" + s + "'");
    for (char ch : piece)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw InvalidInput("bad occupation entry '" + piece + "'");
    out.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

OccState::OccState(std::vector<int> a, std::vector<int> b)
    : c1(std::move(a)), c2(std::move(b)) {
  if (c1.empty()) throw InvalidInput("chain 1 needs at least one site");
  for (int n : c1)
    if (n < 0) throw InvalidInput("negative occupation");
  for (int n : c2)
    if (n < 0) throw InvalidInput("negative occupation");
}

OccState OccState::vacuum(int m1, int m2) {
  if (m1 < 0) throw InvalidInput("chain 1 length must be nonnegative");
  OccState s;
  s.c1.assign(m1 + 1, 0);
  if (m2 >= 0) s.c2.assign(m2 + 1, 0);
  return s;
}

int OccState::n1() const {
  int t = 0;
  for (int n : c1) t += n;
  return t;
}

int OccState::n2() const {
  int t = 0;
  for (int n : c2) t += n;
  return t;
}

std::string OccState::str() const { return join_ints(c1) + "|" + join_ints(c2); }

OccState OccState::parse(const std::string& s) {
  size_t bar = s.find('|');
  if (bar == std::string::npos) throw InvalidInput("occupation state needs a '|'");
  if (s.find('|', bar + 1) != std::string::npos)
    throw InvalidInput("occupation state has more than one '|'");
  return OccState(parse_int_list(s.substr(0, bar)), parse_int_list(s.substr(bar + 1)));
}

FockVec fock_unit(const OccState& s) { return {{s, Rat(1)}}; }

void fock_add(FockVec& v, const OccState& s, const Rat& c) {
  if (c == 0) return;
  auto it = v.find(s);
  if (it == v.end()) {
    v.emplace(s, c);
    return;
  }
  it->second += c;
  if (it->second == 0) v.erase(it);
}

FockVec fock_sum(const FockVec& a, const FockVec& b) {
  FockVec out = a;
  for (auto& [s, c] : b) fock_add(out, s, c);
  return out;
}

FockVec fock_scale(const FockVec& v, const Rat& c) {
  FockVec out;
  if (c == 0) return out;
  for (auto& [s, a] : v) out.emplace(s, a * c);
  return out;
}

bool fock_equal(const FockVec& a, const FockVec& b) { return a == b; }

std::string fock_str(const FockVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (auto& [s, c] : v) {
    if (!out.empty()) out += " + ";
    out += rat_str(c) + "*|" + s.str() + ">";
  }
  return out;
}

std::string graded_str(const GradedFock& v) {
  std::string out;
  for (auto& [e, comp] : v) {
    if (comp.empty()) continue;
    if (!out.empty()) out += " ; ";
    out += "u^" + std::to_string(e) + ": " + fock_str(comp);
  }
  return out.empty() ? "0" : out;
}

FockVec word_apply(const Word& w, const FockVec& v) {
  FockVec out;
  for (auto& [state, coeff] : v) {
    OccState cur = state;
    Rat c = coeff;
    bool dead = false;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (it->kind == SiteOp::Id) continue;
      std::vector<int>* chain;
      if (it->chain == 1)
        chain = &cur.c1;
      else if (it->chain == 2)
        chain = &cur.c2;
      else
        throw InvalidInput("chain must be 1 or 2");
      if (it->site < 0 || it->site >= static_cast<int>(chain->size()))
        throw InvalidInput("site index out of range");
      int& n = (*chain)[it->site];
      switch (it->kind) {
        case SiteOp::Phi:
          if (n == 0) dead = true;
          else --n;
          break;
        case SiteOp::PhiDag:
          ++n;
          break;
        case SiteOp::Number:
          if (n == 0) dead = true;
          else c *= n;
          break;
        case SiteOp::VacProj:
          if (n != 0) dead = true;
          break;
        case SiteOp::Id:
          break;
      }
      if (dead) break;
    }
    if (!dead) fock_add(out, cur, c);
  }
  return out;
}

OpMat l_matrix(int chain, int site) {
  if (site < 0) throw InvalidInput("site index out of range");
  OpMat m;
  m.e[0][0] = {{-1, {{Rat(1), Word{}}}}};
  m.e[0][1] = {{0, {{Rat(1), Word{{chain, site, SiteOp::PhiDag}}}}}};
  m.e[1][0] = {{0, {{Rat(1), Word{{chain, site, SiteOp::Phi}}}}}};
  m.e[1][1] = {{1, {{Rat(1), Word{}}}}};
  return m;
}

Entry entry_mul(const Entry& a, const Entry& b) {
  Entry out;
  for (auto& [ea, la] : a)
    for (auto& [eb, lb] : b)
      for (auto& [ca, wa] : la)
        for (auto& [cb, wb] : lb) {
          Word w = wa;
          w.insert(w.end(), wb.begin(), wb.end());
          out[ea + eb].emplace_back(ca * cb, std::move(w));
        }
  return out;
}

Entry entry_sum(const Entry& a, const Entry& b) {
  Entry out = a;
  for (auto& [e, l] : b) {
    auto& dst = out[e];
    dst.insert(dst.end(), l.begin(), l.end());
  }
  return out;
}

Entry entry_shift_upow(const Entry& a, int shift) {
  Entry out;
  for (auto& [e, l] : a) out[e + shift] = l;
  return out;
}

Entry entry_dagger_uinv(const Entry& a) {
  Entry out;
  for (auto& [e, l] : a) {
    auto& dst = out[-e];
    for (auto& [c, w] : l) {
      Word rw(w.rbegin(), w.rend());
      for (Prim& p : rw) {
        if (p.kind == SiteOp::Phi)
          p.kind = SiteOp::PhiDag;
        else if (p.kind == SiteOp::PhiDag)
          p.kind = SiteOp::Phi;
      }
      dst.emplace_back(c, std::move(rw));
    }
  }
  return out;
}

OpMat op_mul(const OpMat& a, const OpMat& b) {
  OpMat out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.e[i][j] =
          entry_sum(entry_mul(a.e[i][0], b.e[0][j]), entry_mul(a.e[i][1], b.e[1][j]));
  return out;
}

OpMat monodromy1(int m1) {
  if (m1 < 0) throw InvalidInput("chain length must be nonnegative");
  OpMat t = l_matrix(1, m1);
  for (int site = m1 - 1; site >= 0; --site) t = op_mul(t, l_matrix(1, site));
  return t;
}

OpMat monodromy2(int m2) {
  if (m2 < 0) throw InvalidInput("chain length must be nonnegative");
  OpMat t = l_matrix(2, m2);
  for (int site = m2 - 1; site >= 0; --site) t = op_mul(t, l_matrix(2, site));
  return t;
}

OpMat monodromy_full(int m1, int m2) { return op_mul(monodromy2(m2), monodromy1(m1)); }

FockVec entry_apply_at(const Entry& e, const Rat& u, const FockVec& v) {
  if (u == 0) throw InvalidInput("spectral parameter must be nonzero");
  FockVec out;
  for (auto& [exp, l] : e) {
    Rat upow = rat_pow(u, exp);
    for (auto& [c, w] : l)
      for (auto& [s, a] : word_apply(w, v)) fock_add(out, s, a * c * upow);
  }
  return out;
}

GradedFock entry_apply_graded(const Entry& e, const GradedFock& v) {
  GradedFock out;
  for (auto& [k, comp] : v)
    for (auto& [exp, l] : e)
      for (auto& [c, w] : l)
        for (auto& [s, a] : word_apply(w, comp)) fock_add(out[k + exp], s, a * c);
  for (auto it = out.begin(); it != out.end();)
    it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

GradedFock graded_from(const FockVec& v) {
  GradedFock out;
  if (!v.empty()) out[0] = v;
  return out;
}

RMat r_matrix(const Rat& u, const Rat& v) {
  if (u == 0 || v == 0) throw InvalidInput("spectral parameters must be nonzero");
  if (u * u == v * v) throw InvalidInput("singular spectral pair: u^2 = v^2");
  Rat f = (u * u) / (u * u - v * v);
  Rat g = (u * v) / (u * u - v * v);
  RMat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = 0;
  r.m[0][0] = f;
  r.m[1][1] = g;
  r.m[1][2] = 1;
  r.m[2][2] = g;
  r.m[3][3] = f;
  return r;
}

// All states of the given shape with at most cap particles in total.
std::vector<OccState> enumerate_states(int m1, int m2, int cap) {
  int slots1 = m1 + 1;
  int slots2 = m2 >= 0 ? m2 + 1 : 0;
  std::vector<OccState> out;
  std::vector<int> occ(slots1 + slots2, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == static_cast<int>(occ.size())) {
      OccState s;
      s.c1.assign(occ.begin(), occ.begin() + slots1);
      s.c2.assign(occ.begin() + slots1, occ.end());
      out.push_back(std::move(s));
      return;
    }
    for (int n = 0; n <= left; ++n) {
      occ[pos] = n;
      rec(pos + 1, left - n);
    }
    occ[pos] = 0;
  };
  rec(0, cap);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool graded_equal(const GradedFock& a, const GradedFock& b) {
  auto nonzero = [](const GradedFock& g) {
    GradedFock out;
    for (auto& [e, c] : g)
      if (!c.empty()) out.emplace(e, c);
    return out;
  };
  return nonzero(a) == nonzero(b);
}

std::string uc_str(const UCVec<Rat>& v) {
  if (v.comps.empty()) return "0";
  std::string out;
  for (auto& [k, c] : v.comps) {
    if (!out.empty()) out += " + ";
    out += rat_str(c) + "*[" + k.first.str() + ";" + k.second.str() + "]";
  }
  return out;
}

std::string uc_diff_str(const UCVec<Rat>& a, const UCVec<Rat>& b) {
  UCVec<Rat> d = a - b;
  return uc_str(d);
}

}  // namespace

Report rtt_check(int m1, int m2, const std::vector<std::pair<Rat, Rat>>& samples,
                 int particle_cap) {
  Report rep;
  rep.check = "rtt";
  rep.params = {{"m1", m1}, {"m2", m2}, {"particle_cap", particle_cap}};
  OpMat t = monodromy_full(m1, m2);
  std::vector<OccState> states = enumerate_states(m1, m2, particle_cap);
  for (auto& [u, v] : samples) {
    RMat r = r_matrix(u, v);
    bool ok = true;
    std::string residual;
    for (const OccState& s : states) {
      FockVec base = fock_unit(s);
      // first factor of the composite index in rows/cols: (i1 i2) -> 2*i1 + i2
      FockVec tu[2][2], tv[2][2];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          tu[i][j] = entry_apply_at(t.e[i][j], u, base);
          tv[i][j] = entry_apply_at(t.e[i][j], v, base);
        }
      for (int row = 0; row < 4 && ok; ++row)
        for (int col = 0; col < 4 && ok; ++col) {
          int i1 = row / 2, i2 = row % 2, j1 = col / 2, j2 = col % 2;
          FockVec lhs, rhs;
          for (int mid = 0; mid < 4; ++mid) {
            int k1 = mid / 2, k2 = mid % 2;
            if (r.m[row][mid] != 0) {
              // (T(u) ox T(v)) entry: T(v) acts first
              FockVec term = entry_apply_at(t.e[k1][j1], u, tv[k2][j2]);
              lhs = fock_sum(lhs, fock_scale(term, r.m[row][mid]));
            }
            if (r.m[mid][col] != 0) {
              FockVec term = entry_apply_at(t.e[i1][k1], v, tu[i2][k2]);
              rhs = fock_sum(rhs, fock_scale(term, r.m[mid][col]));
            }
          }
          if (!fock_equal(lhs, rhs)) {
            ok = false;
            residual = "entry (" + std::to_string(row) + "," + std::to_string(col) +
                       ") on |" + s.str() + ">: lhs " + fock_str(lhs) + " vs rhs " +
                       fock_str(rhs);
          }
        }
      if (!ok) break;
    }
    rep.add_case("u=" + rat_str(u) + ", v=" + rat_str(v), ok, residual);
  }
  return rep;
}

Report conservation_check(int m1, int m2, int particle_cap) {
  Report rep;
  rep.check = "conservation";
  rep.params = {{"m1", m1}, {"m2", m2}, {"particle_cap", particle_cap}};
  struct Row {
    std::string name;
    Entry entry;
    int dn1, dn2;
  };
  OpMat t1 = monodromy1(m1);
  OpMat t2 = monodromy2(m2);
  OpMat t = monodromy_full(m1, m2);
  std::vector<Row> rows = {
      {"A1", t1.e[0][0], 0, 0},  {"B1", t1.e[0][1], 1, 0},  {"C1", t1.e[1][0], -1, 0},
      {"D1", t1.e[1][1], 0, 0},  {"A2", t2.e[0][0], 0, 0},  {"B2", t2.e[0][1], 0, 1},
      {"C2", t2.e[1][0], 0, -1}, {"D2", t2.e[1][1], 0, 0},
  };
  std::vector<OccState> states = enumerate_states(m1, m2, particle_cap);
  for (const Row& row : rows) {
    bool ok = true;
    std::string residual;
    for (const OccState& s : states) {
      GradedFock g = entry_apply_graded(row.entry, graded_from(fock_unit(s)));
      for (auto& [e, comp] : g)
        for (auto& [out, c] : comp) {
          (void)c;
          if (out.n1() != s.n1() + row.dn1 || out.n2() != s.n2() + row.dn2) {
            ok = false;
            residual = row.name + " on |" + s.str() + "> reaches |" + out.str() + ">";
          }
        }
      if (!ok) break;
    }
    rep.add_case(row.name, ok, residual);
  }
  // Full-monodromy entries shift the total by +1 (B), -1 (C), 0 (A, D).
  struct FullRow {
    std::string name;
    Entry entry;
    int dn;
  };
  std::vector<FullRow> full = {{"A", t.e[0][0], 0},
                               {"B", t.e[0][1], 1},
                               {"C", t.e[1][0], -1},
                               {"D", t.e[1][1], 0}};
  for (const FullRow& row : full) {
    bool ok = true;
    std::string residual;
    for (const OccState& s : states) {
      GradedFock g = entry_apply_graded(row.entry, graded_from(fock_unit(s)));
      for (auto& [e, comp] : g)
        for (auto& [out, c] : comp) {
          (void)c;
          if (out.total() != s.total() + row.dn) {
            ok = false;
            residual = row.name + " on |" + s.str() + "> reaches |" + out.str() + ">";
          }
        }
      if (!ok) break;
    }
    rep.add_case("full " + row.name, ok, residual);
  }
  return rep;
}

Report phase_algebra_check(int m, int particle_cap) {
  Report rep;
  rep.check = "phase-algebra";
  rep.params = {{"m", m}, {"particle_cap", particle_cap}};
  std::vector<OccState> states = enumerate_states(m, -1, particle_cap);
  auto prim = [](int site, SiteOp k) { return Prim{1, site, k}; };
  for (int site = 0; site <= m; ++site) {
    struct Rel {
      std::string name;
      std::vector<std::pair<Rat, Word>> words;  // sum must vanish
    };
    Word number = {prim(site, SiteOp::Number)};
    Word phi = {prim(site, SiteOp::Phi)};
    Word phid = {prim(site, SiteOp::PhiDag)};
    Word proj = {prim(site, SiteOp::VacProj)};
    auto cat = [](const Word& a, const Word& b) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      return w;
    };
    std::vector<Rel> rels = {
        {"[N,phi]+phi", {{1, cat(number, phi)}, {-1, cat(phi, number)}, {1, phi}}},
        {"[N,phi+]-phi+", {{1, cat(number, phid)}, {-1, cat(phid, number)}, {-1, phid}}},
        {"[phi,phi+]-proj",
         {{1, cat(phi, phid)}, {-1, cat(phid, phi)}, {-1, proj}}},
        {"phi.phi+-1", {{1, cat(phi, phid)}, {-1, Word{}}}},
        {"phi+.phi-1+proj", {{1, cat(phid, phi)}, {-1, Word{}}, {1, proj}}},
    };
    for (const Rel& rel : rels) {
      bool ok = true;
      std::string residual;
      for (const OccState& s : states) {
        FockVec acc;
        for (auto& [c, w] : rel.words)
          acc = fock_sum(acc, fock_scale(word_apply(w, fock_unit(s)), c));
        if (!acc.empty()) {
          ok = false;
          residual = "on |" + s.str() + ">: " + fock_str(acc);
          break;
        }
      }
      rep.add_case(rel.name + " site " + std::to_string(site), ok, residual);
    }
  }
  return rep;
}

FockVec hamiltonian_apply(int m, const FockVec& v) {
  if (m < 0) throw InvalidInput("chain length must be nonnegative");
  for (auto& [s, c] : v) {
    (void)c;
    if (!s.c2.empty()) throw InvalidInput("hamiltonian acts on single-chain states");
    if (static_cast<int>(s.c1.size()) != m + 1)
      throw InvalidInput("state has wrong number of sites");
  }
  FockVec out;
  for (int i = 0; i <= m; ++i) {
    int j = (i + 1) % (m + 1);
    Word hop1 = {Prim{1, i, SiteOp::PhiDag}, Prim{1, j, SiteOp::Phi}};
    Word hop2 = {Prim{1, i, SiteOp::Phi}, Prim{1, j, SiteOp::PhiDag}};
    Word num = {Prim{1, i, SiteOp::Number}};
    out = fock_sum(out, fock_scale(word_apply(hop1, v), Rat(-1, 2)));
    out = fock_sum(out, fock_scale(word_apply(hop2, v), Rat(-1, 2)));
    out = fock_sum(out, word_apply(num, v));
  }
  return out;
}

Report hamiltonian_check(int m, int particle_cap) {
  Report rep;
  rep.check = "hamiltonian";
  rep.params = {{"m", m}, {"particle_cap", particle_cap}};
  OccState vac = OccState::vacuum(m, -1);
  FockVec hvac = hamiltonian_apply(m, fock_unit(vac));
  if (m == 0) {
    // One periodic site: the hop degenerates to phi phi^dag = 1, leaving a
    // constant vacuum energy of -1/2.
    FockVec want = fock_scale(fock_unit(vac), Rat(-1, 2));
    rep.add_case("H|0> = -1/2 |0>", fock_equal(hvac, want), fock_str(hvac));
  } else {
    rep.add_case("H|0> = 0", hvac.empty(), fock_str(hvac));
  }
  bool ok = true;
  std::string residual;
  for (const OccState& s : enumerate_states(m, -1, particle_cap)) {
    FockVec hv = hamiltonian_apply(m, fock_unit(s));
    FockVec nhv;
    for (auto& [out, c] : hv) fock_add(nhv, out, c * out.n1());
    FockVec hnv = hamiltonian_apply(m, fock_scale(fock_unit(s), Rat(s.n1())));
    FockVec diff = fock_sum(nhv, fock_scale(hnv, Rat(-1)));
    if (!diff.empty()) {
      ok = false;
      residual = "[H,N] on |" + s.str() + ">: " + fock_str(diff);
      break;
    }
  }
  rep.add_case("[H,N] = 0", ok, residual);
  return rep;
}

namespace {

Partition positive_part(const std::vector<int>& chain) {
  std::map<int, int> occ;
  for (size_t i = 1; i < chain.size(); ++i)
    if (chain[i] > 0) occ[static_cast<int>(i)] = chain[i];
  return Partition::from_occupations(occ);
}

}  // namespace

JmathResult jmath_map(const OccState& s, int nx, int ny) {
  Partition la = positive_part(s.c1);
  Partition mu = positive_part(s.c2);
  return {la, mu, s.c1.empty() ? 0 : s.c1[0], s.c2.empty() ? 0 : s.c2[0],
          universal_character_jt(la, mu, nx, ny)};
}

UCVec<Rat> jmath_project(const FockVec& v) {
  UCVec<Rat> out;
  for (auto& [s, c] : v) out.add({positive_part(s.c1), positive_part(s.c2)}, c);
  return out;
}

Report prop_bb_check(int m1, int m2, const OccState& s, int nx, int ny) {
  Report rep;
  rep.check = "creation-pieri";
  rep.params = {{"m1", m1}, {"m2", m2}, {"state", s.str()}};
  JmathResult jm = jmath_map(s, nx, ny);
  struct Side {
    std::string name;
    Entry entry;
    int m;
    VarFamily fam;
  };
  std::vector<Side> sides = {
      {"chain 1", entry_shift_upow(monodromy1(m1).e[0][1], m1), m1, VarFamily::X},
      {"chain 2", entry_shift_upow(monodromy2(m2).e[0][1], m2), m2, VarFamily::Y},
  };
  for (const Side& side : sides) {
    GradedFock g = entry_apply_graded(side.entry, graded_from(fock_unit(s)));
    std::vector<PolyQ> hs = truncated_H_apply(side.m, side.fam, jm.value);
    bool ok = true;
    std::string residual;
    for (auto& [e, comp] : g)
      if (e < 0 || e > 2 * side.m || e % 2 != 0) {
        ok = false;
        residual = "unexpected exponent u^" + std::to_string(e);
      }
    for (int k = 0; ok && k <= side.m; ++k) {
      UCVec<Rat> fock_side;
      auto it = g.find(2 * k);
      if (it != g.end()) fock_side = jmath_project(it->second);
      // The chain realizes the truncated subspace: first rows longer than the
      // chain cannot occur, so drop them from the polynomial oracle.
      UCVec<Rat> pieri_side =
          uc_box_project(uc_from_expansion(uc_expand(hs[k])), side.fam, side.m);
      if (!(fock_side == pieri_side)) {
        ok = false;
        residual = "u^" + std::to_string(2 * k) + ": " + uc_diff_str(fock_side, pieri_side);
      }
    }
    rep.add_case(side.name, ok, residual);
  }
  return rep;
}

Report annihilation_check(int m1, const OccState& s, int nx, int ny) {
  Report rep;
  rep.check = "annihilation";
  rep.params = {{"m1", m1}, {"state", s.str()}};
  OpMat t1 = monodromy1(m1);
  JmathResult jm = jmath_map(s, nx, ny);

  // C tilde against strip removal, coefficientwise in u.
  {
    Entry ct = entry_shift_upow(t1.e[1][0], -m1);
    GradedFock g = entry_apply_graded(ct, graded_from(fock_unit(s)));
    auto skew = skew_H_apply(m1, VarFamily::X, jm.lambda, jm.mu);
    bool ok = true;
    std::string residual;
    for (auto& [e, comp] : g)
      if (e > 0 || e < -2 * m1 || e % 2 != 0) {
        ok = false;
        residual = "unexpected exponent u^" + std::to_string(e);
      }
    for (int k = 0; ok && k <= m1; ++k) {
      UCVec<Rat> fock_side;
      auto it = g.find(-2 * k);
      if (it != g.end()) fock_side = jmath_project(it->second);
      UCVec<Rat> skew_side;
      for (auto& key : skew[k]) skew_side.add(key, Rat(1));
      if (!(fock_side == skew_side)) {
        ok = false;
        residual =
            "u^" + std::to_string(-2 * k) + ": " + uc_diff_str(fock_side, skew_side);
      }
    }
    rep.add_case("strip removal", ok, residual);
  }

  // Unprojected entry relations, exact on the given state.
  Entry phid0 = {{0, {{Rat(1), Word{Prim{1, 0, SiteOp::PhiDag}}}}}};
  Entry phi0 = {{0, {{Rat(1), Word{Prim{1, 0, SiteOp::Phi}}}}}};
  Entry adag = entry_dagger_uinv(t1.e[0][0]);
  struct Rel {
    std::string name;
    Entry lhs, rhs;
  };
  std::vector<Rel> rels = {
      {"B = u A phi0+", t1.e[0][1], entry_shift_upow(entry_mul(t1.e[0][0], phid0), 1)},
      {"C = u^-1 phi0 A+(1/u)", t1.e[1][0],
       entry_shift_upow(entry_mul(phi0, adag), -1)},
      {"D = phi0 A+(1/u) phi0+", t1.e[1][1], entry_mul(phi0, entry_mul(adag, phid0))},
  };
  for (const Rel& rel : rels) {
    GradedFock lhs = entry_apply_graded(rel.lhs, graded_from(fock_unit(s)));
    GradedFock rhs = entry_apply_graded(rel.rhs, graded_from(fock_unit(s)));
    bool ok = graded_equal(lhs, rhs);
    rep.add_case(rel.name, ok,
                 ok ? "" : "lhs " + graded_str(lhs) + " vs rhs " + graded_str(rhs));
  }
  return rep;
}

FockVec bethe_state(const std::vector<Rat>& us, int m1, int m2) {
  Entry b1 = monodromy1(m1).e[0][1];
  Entry b2 = monodromy2(m2).e[0][1];
  FockVec v = fock_unit(OccState::vacuum(m1, m2));
  for (auto it = us.rbegin(); it != us.rend(); ++it) {
    v = entry_apply_at(b1, *it, v);
    v = entry_apply_at(b2, *it, v);
  }
  return v;
}

GradedFock bethe_pair_graded(int m1, int m2) {
  Entry b1 = monodromy1(m1).e[0][1];
  Entry b2 = monodromy2(m2).e[0][1];
  GradedFock g = graded_from(fock_unit(OccState::vacuum(m1, m2)));
  return entry_apply_graded(b2, entry_apply_graded(b1, g));
}

namespace {

void require_distinct_nonzero(const std::vector<Rat>& us) {
  for (size_t i = 0; i < us.size(); ++i) {
    if (us[i] == 0) throw InvalidInput("spectral parameter must be nonzero");
    for (size_t j = i + 1; j < us.size(); ++j)
      if (us[i] * us[i] == us[j] * us[j])
        throw InvalidInput("spectral parameters must have distinct squares");
  }
}

std::vector<Rat> squares(const std::vector<Rat>& us) {
  std::vector<Rat> out;
  out.reserve(us.size());
  for (const Rat& u : us) out.push_back(u * u);
  return out;
}

std::string us_str(const std::vector<Rat>& us) {
  std::string out;
  for (size_t i = 0; i < us.size(); ++i) {
    if (i) out += ",";
    out += rat_str(us[i]);
  }
  return out;
}

}  // namespace

Report bethe_expansion_check(const std::vector<Rat>& us, int m1, int m2) {
  require_distinct_nonzero(us);
  Report rep;
  rep.check = "bethe-expansion";
  rep.params = {{"m1", m1}, {"m2", m2}, {"u", us_str(us)}};
  int n = static_cast<int>(us.size());
  UCVec<Rat> lhs = jmath_project(bethe_state(us, m1, m2));
  Rat prod(1);
  for (const Rat& u : us) prod *= u;
  Rat pref = rat_pow(prod, -(m1 + m2));
  std::vector<Rat> sq = squares(us);
  UCVec<Rat> rhs;
  for (const Partition& la : partitions_in_box(n, m1))
    for (const Partition& mu : partitions_in_box(n, m2))
      rhs.add({la, mu}, pref * schur_eval(la, sq) * schur_eval(mu, sq));
  bool ok = lhs == rhs;
  rep.add_case("N=" + std::to_string(n), ok, ok ? "" : uc_diff_str(lhs, rhs));
  return rep;
}

Report single_chain_expansion_check(const std::vector<Rat>& us, int m1) {
  require_distinct_nonzero(us);
  Report rep;
  rep.check = "single-chain-expansion";
  rep.params = {{"m1", m1}, {"u", us_str(us)}};
  int n = static_cast<int>(us.size());
  // Normalized creation u^{m1} B_1(u) so no prefactor appears.
  Entry bt = entry_shift_upow(monodromy1(m1).e[0][1], m1);
  FockVec v = fock_unit(OccState::vacuum(m1, 0));
  for (auto it = us.rbegin(); it != us.rend(); ++it) v = entry_apply_at(bt, *it, v);
  UCVec<Rat> lhs = jmath_project(v);
  std::vector<Rat> sq = squares(us);
  UCVec<Rat> rhs;
  for (const Partition& la : partitions_in_box(n, m1))
    rhs.add({la, Partition{}}, schur_eval(la, sq));
  bool ok = lhs == rhs;
  rep.add_case("N=" + std::to_string(n), ok, ok ? "" : uc_diff_str(lhs, rhs));
  return rep;
}

UCVec<Rat> uc_H_at(const UCVec<Rat>& v, int m, const Rat& t, VarFamily side) {
  UCVec<Rat> out;
  Rat tk(1);
  for (int k = 0; k <= m; ++k) {
    out += uc_mult_h(v, k, side, m).scaled(tk);
    tk *= t;
  }
  return out;
}

UCVec<Rat> uc_Hperp_at(const UCVec<Rat>& v, int m, const Rat& t, VarFamily side) {
  UCVec<Rat> out;
  Rat tk(1);
  for (int k = 0; k <= m; ++k) {
    out += uc_skew_h(v, k, side).scaled(tk);
    tk *= t;
  }
  return out;
}

UCVec<Rat> uc_combo_at(const UCVec<Rat>& v, int m, const Rat& u) {
  if (u == 0) throw InvalidInput("spectral parameter must be nonzero");
  UCVec<Rat> out = uc_H_at(v, m, u * u, VarFamily::X).scaled(rat_pow(u, -m - 1));
  out += uc_Hperp_at(v, m, Rat(1) / (u * u), VarFamily::X).scaled(rat_pow(u, m + 1));
  return out;
}

Report exchange_identity_check(int m1, const Rat& u1, const Rat& u2, const PolyQ& p) {
  if (u1 == 0 || u2 == 0) throw InvalidInput("spectral parameters must be nonzero");
  if (u1 * u1 == u2 * u2) throw InvalidInput("singular spectral pair: u^2 = v^2");
  Report rep;
  rep.check = "exchange-identity";
  rep.params = {{"m1", m1}, {"u1", rat_str(u1)}, {"u2", rat_str(u2)}};
  UCVec<Rat> v0 = uc_from_expansion(uc_expand(p));
  Rat f = (u1 * u1) / (u1 * u1 - u2 * u2);
  auto H = [&](const UCVec<Rat>& v, const Rat& u) {
    return uc_H_at(v, m1, u * u, VarFamily::X);
  };
  auto Hp = [&](const UCVec<Rat>& v, const Rat& u) {
    return uc_Hperp_at(v, m1, Rat(1) / (u * u), VarFamily::X);
  };
  Rat a = rat_pow(u1, m1 + 1) * rat_pow(u2, -m1 - 1);
  Rat b = rat_pow(u1, -m1 - 1) * rat_pow(u2, m1 + 1);
  UCVec<Rat> lhs = Hp(H(v0, u2), u1).scaled(a);
  UCVec<Rat> rhs =
      H(Hp(v0, u1), u2).scaled(a * f) - H(Hp(v0, u2), u1).scaled(b * f);
  bool ok = lhs == rhs;
  rep.add_case("exchange", ok, ok ? "" : uc_diff_str(lhs, rhs));
  UCVec<Rat> c12 = uc_combo_at(uc_combo_at(v0, m1, u1), m1, u2);
  UCVec<Rat> c21 = uc_combo_at(uc_combo_at(v0, m1, u2), m1, u1);
  bool okc = c12 == c21;
  rep.add_case("combined operators commute", okc, okc ? "" : uc_diff_str(c12, c21));
  return rep;
}

namespace {

// Subset-sum right side shared by the single-chain and two-chain product
// expansions. For each index subset K the factor prod runs over k in K and j
// outside K (the adopted reading); all_indices switches j to every index
// different from k.
struct SubsetTerm {
  std::vector<int> k;
  Rat weight;
};

std::vector<SubsetTerm> subset_terms(const std::vector<Rat>& us, int m1,
                                     bool all_indices) {
  int n = static_cast<int>(us.size());
  std::vector<SubsetTerm> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    SubsetTerm term;
    term.weight = Rat(1);
    for (int k = 0; k < n; ++k)
      if (mask & (1 << k)) {
        term.k.push_back(k);
        term.weight *= rat_pow(us[k], -2 * m1 - 2);
      }
    for (int k : term.k)
      for (int j = 0; j < n; ++j) {
        bool in_range = all_indices ? j != k : !(mask & (1 << j));
        if (!in_range) continue;
        Rat uj2 = us[j] * us[j];
        Rat uk2 = us[k] * us[k];
        term.weight *= uj2 / (uj2 - uk2);
      }
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace

Report subset_expansion_check(const std::vector<Rat>& us, int m1) {
  require_distinct_nonzero(us);
  Report rep;
  rep.check = "subset-expansion";
  rep.params = {{"m1", m1}, {"u", us_str(us)}};
  int n = static_cast<int>(us.size());
  UCVec<Rat> one;
  one.add({Partition{}, Partition{}}, Rat(1));
  UCVec<Rat> lhs = one;
  for (int j = n - 1; j >= 0; --j) lhs = uc_combo_at(lhs, m1, us[j]);
  Rat prod(1);
  for (const Rat& u : us) prod *= u;
  Rat pref = rat_pow(prod, m1 + 1);
  auto rhs_for = [&](bool all_indices) {
    UCVec<Rat> rhs;
    for (const SubsetTerm& term : subset_terms(us, m1, all_indices)) {
      UCVec<Rat> w = one;
      for (int k : term.k) w = uc_H_at(w, m1, us[k] * us[k], VarFamily::X);
      rhs += w.scaled(pref * term.weight);
    }
    return rhs;
  };
  UCVec<Rat> rhs = rhs_for(false);
  bool ok = lhs == rhs;
  rep.add_case("N=" + std::to_string(n), ok, ok ? "" : uc_diff_str(lhs, rhs));
  rep.params["all_indices_reading_matches"] = (lhs == rhs_for(true));
  return rep;
}

Report full_psi_check(const std::vector<Rat>& us, int m1, int m2) {
  require_distinct_nonzero(us);
  Report rep;
  rep.check = "full-psi";
  rep.params = {{"m1", m1}, {"m2", m2}, {"u", us_str(us)}};
  int n = static_cast<int>(us.size());
  // Zero-energy headroom keeps every annihilation at site 0 alive, so the
  // projected product agrees with the product of projected operators.
  OccState start = OccState::vacuum(m1, m2);
  start.c1[0] = n + 1;
  start.c2[0] = n + 1;
  Entry b = monodromy_full(m1, m2).e[0][1];
  FockVec v = fock_unit(start);
  for (int j = n - 1; j >= 0; --j) v = entry_apply_at(b, us[j], v);
  UCVec<Rat> lhs = jmath_project(v);
  Rat prod(1);
  for (const Rat& u : us) prod *= u;
  Rat pref = rat_pow(prod, -m2 + m1 + 1);
  std::vector<Rat> sq_all = squares(us);
  UCVec<Rat> rhs;
  for (const SubsetTerm& term : subset_terms(us, m1, false)) {
    std::vector<Rat> sq_k;
    for (int k : term.k) sq_k.push_back(us[k] * us[k]);
    int rows = static_cast<int>(term.k.size());
    for (const Partition& la : partitions_in_box(rows, m1))
      for (const Partition& mu : partitions_in_box(n, m2))
        rhs.add({la, mu},
                pref * term.weight * schur_eval(la, sq_k) * schur_eval(mu, sq_all));
  }
  bool ok = lhs == rhs;
  rep.add_case("N=" + std::to_string(n), ok, ok ? "" : uc_diff_str(lhs, rhs));
  return rep;
}

}  // namespace ucalg
