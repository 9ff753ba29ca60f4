#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ucalg/partition.hpp"
#include "ucalg/poly.hpp"
#include "ucalg/report.hpp"
#include "ucalg/ucbasis.hpp"

namespace ucalg {

// Occupation numbers of a two-chain state. chain1 has m1+1 sites, chain2 has
// m2+1 sites; chain2 may be empty for the single-chain model.
struct OccState {
  std::vector<int> c1;
  std::vector<int> c2;

  OccState() = default;
  OccState(std::vector<int> a, std::vector<int> b);

  // All-zero state with m1+1 / m2+1 sites; m2 < 0 leaves chain2 empty.
  static OccState vacuum(int m1, int m2);

  int n1() const;
  int n2() const;
  int total() const { return n1() + n2(); }

  std::string str() const;  // "n0,n1,...|m0,m1,..."
  static OccState parse(const std::string& s);

  auto operator<=>(const OccState&) const = default;
};

// Sparse state vector; zero amplitudes are never stored.
using FockVec = std::map<OccState, Rat>;
// u-exponent -> component, for identities checked coefficientwise in u.
using GradedFock = std::map<int, FockVec>;

FockVec fock_unit(const OccState& s);
void fock_add(FockVec& v, const OccState& s, const Rat& c);
FockVec fock_sum(const FockVec& a, const FockVec& b);
FockVec fock_scale(const FockVec& v, const Rat& c);
bool fock_equal(const FockVec& a, const FockVec& b);
std::string fock_str(const FockVec& v);
std::string graded_str(const GradedFock& v);

enum class SiteOp { Phi, PhiDag, Number, VacProj, Id };

struct Prim {
  int chain;  // 1 or 2
  int site;
  SiteOp kind;
};

// Rightmost primitive acts first, matching operator-product notation.
using Word = std::vector<Prim>;

FockVec word_apply(const Word& w, const FockVec& v);

// One matrix entry: u-exponent -> weighted words.
using Entry = std::map<int, std::vector<std::pair<Rat, Word>>>;

struct OpMat {
  Entry e[2][2];
};

OpMat l_matrix(int chain, int site);
// Entry-wise product; b acts first.
OpMat op_mul(const OpMat& a, const OpMat& b);
Entry entry_mul(const Entry& a, const Entry& b);
Entry entry_sum(const Entry& a, const Entry& b);
Entry entry_shift_upow(const Entry& a, int shift);
// E(u) -> E^dagger(u^{-1}): words reversed and daggered, exponents negated.
Entry entry_dagger_uinv(const Entry& a);

// T_1 = L_{m1}...L_0 on chain 1; T_2 likewise on chain 2; T = T_2 T_1.
OpMat monodromy1(int m1);
OpMat monodromy2(int m2);
OpMat monodromy_full(int m1, int m2);

FockVec entry_apply_at(const Entry& e, const Rat& u, const FockVec& v);
GradedFock entry_apply_graded(const Entry& e, const GradedFock& v);
GradedFock graded_from(const FockVec& v);

// f and g from the 4x4 intertwiner; throws InvalidInput when u^2 = v^2 or
// either parameter vanishes.
struct RMat {
  Rat m[4][4];
};
RMat r_matrix(const Rat& u, const Rat& v);

// All states of the given shape with at most cap particles in total; pass
// m2 = -1 for a single-chain shape.
std::vector<OccState> enumerate_states(int m1, int m2, int cap);

Report rtt_check(int m1, int m2, const std::vector<std::pair<Rat, Rat>>& samples,
                 int particle_cap);
Report conservation_check(int m1, int m2, int particle_cap);
Report phase_algebra_check(int m, int particle_cap);

// Periodic single-chain hamiltonian on m+1 sites; input states must have an
// empty chain2.
FockVec hamiltonian_apply(int m, const FockVec& v);
Report hamiltonian_check(int m, int particle_cap);

struct JmathResult {
  Partition lambda;
  Partition mu;
  int n0 = 0;
  int m0 = 0;
  PolyQ value;
};
JmathResult jmath_map(const OccState& s, int nx, int ny);

// Pair-basis view of a state vector; site-0 occupations are forgotten.
UCVec<Rat> jmath_project(const FockVec& v);

Report prop_bb_check(int m1, int m2, const OccState& s, int nx, int ny);
Report annihilation_check(int m1, const OccState& s, int nx, int ny);

FockVec bethe_state(const std::vector<Rat>& us, int m1, int m2);
// Single creation-pair application B_2(u)B_1(u)|0>, graded by u-exponent.
GradedFock bethe_pair_graded(int m1, int m2);
Report bethe_expansion_check(const std::vector<Rat>& us, int m1, int m2);
Report single_chain_expansion_check(const std::vector<Rat>& us, int m1);

// Truncated generating-series operators on the pair basis, first rows capped
// at m columns: H multiplies by sum t^k h_k, Hperp removes strips.
UCVec<Rat> uc_H_at(const UCVec<Rat>& v, int m, const Rat& t, VarFamily side);
UCVec<Rat> uc_Hperp_at(const UCVec<Rat>& v, int m, const Rat& t, VarFamily side);
// u^{-m-1} H(u^2) + u^{m+1} Hperp(u^{-2}) on the chain-1 side.
UCVec<Rat> uc_combo_at(const UCVec<Rat>& v, int m, const Rat& u);

Report exchange_identity_check(int m1, const Rat& u1, const Rat& u2, const PolyQ& p);
Report subset_expansion_check(const std::vector<Rat>& us, int m1);
Report full_psi_check(const std::vector<Rat>& us, int m1, int m2);

}  // namespace ucalg
