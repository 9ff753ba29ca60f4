#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ucalg/macmahon.hpp"
#include "ucalg/symfunc.hpp"
#include "ucalg/vertex.hpp"

using namespace ucalg;

namespace {

PolyQ one(int nx = 6, int ny = 6) { return PolyQ::one(RationalDomain{}, nx, ny); }

PolyQ xv(int n, int nx = 6, int ny = 6) {
  return PolyQ::one(RationalDomain{}, nx, ny).times_var(VarFamily::X, n, 1);
}
PolyQ yv(int n, int nx = 6, int ny = 6) {
  return PolyQ::one(RationalDomain{}, nx, ny).times_var(VarFamily::Y, n, 1);
}

std::vector<Rat> rats(std::initializer_list<long long> vs) {
  std::vector<Rat> out;
  for (long long v : vs) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("generating series for plane partitions") {
  CHECK(macmahon_series(0).q_coefficients() == rats({1}));
  CHECK(macmahon_series(3).q_coefficients() == rats({1, 1, 3, 6}));
  CHECK(macmahon_series(6).q_coefficients() == rats({1, 1, 3, 6, 13, 24, 48}));
}

TEST_CASE("q series rejects odd t exponents") {
  TruncSeries ok = TruncSeries::term("t", 6, 4, 2);
  CHECK(QSeries(ok).q_coefficients()[2] == Rat(2));
  TruncSeries bad = TruncSeries::term("t", 6, 3, 1);
  CHECK_THROWS_AS(QSeries{bad}, InvalidInput);
  CHECK(QSeries(TruncSeries::constant("t", 5, 1)).q_order() == 2);
}

TEST_CASE("direct enumeration of plane partitions") {
  CHECK(plane_partition_count(0) == 1);
  CHECK(plane_partition_count(1) == 1);
  CHECK(plane_partition_count(2) == 3);
  CHECK(plane_partition_count(6) == 48);
  auto coeffs = macmahon_series(8).q_coefficients();
  for (int n = 0; n <= 8; ++n) CHECK(Rat(plane_partition_count(n)) == coeffs[n]);
  CHECK_THROWS_AS(plane_partition_count(11), InvalidInput);
  CHECK_THROWS_AS(plane_partition_count(-1), InvalidInput);
}

TEST_CASE("creation-only correlator") {
  CHECK(correlator_minus(0).q_coefficients() == rats({1}));
  CHECK(correlator_minus(1).q_coefficients() == rats({1, -1}));
  CHECK(correlator_minus(3).q_coefficients() == rats({1, -1, -2, -1}));
  CHECK(correlator_minus(4).q_coefficients() == rats({1, -1, -2, -1, 0}));
}

TEST_CASE("creation-only correlator cancels the generating product") {
  for (int K : {2, 4}) {
    TruncSeries prod = correlator_minus(K).t_series() * macmahon_series(K).t_series();
    CHECK(prod == TruncSeries::constant("t", 2 * K, 1));
  }
}

TEST_CASE("two-sided correlator reproduces the generating series") {
  CHECK(correlator_full(0).q_coefficients() == rats({1}));
  CHECK(correlator_full(2) == macmahon_series(2));
  CHECK(correlator_full(4).q_coefficients() == rats({1, 1, 3, 6, 13}));
}

TEST_CASE("correlators are stable under widening the window") {
  auto lo = correlator_minus(2).q_coefficients();
  auto hi = correlator_minus(4).q_coefficients();
  for (int n = 0; n <= 2; ++n) CHECK(lo[n] == hi[n]);
  auto flo = correlator_full(1).q_coefficients();
  auto fhi = correlator_full(3).q_coefficients();
  for (int n = 0; n <= 1; ++n) CHECK(flo[n] == fhi[n]);
}

TEST_CASE("normal ordering of opposite-family creation halves") {
  auto rep = normal_order_check(Rat(3), Rat(2), one(), 2);
  CHECK(rep.pass);
  CHECK(rep.cases.size() == 9);
  CHECK(normal_order_check(Rat(3), Rat(2), xv(1), 2).pass);
  CHECK(normal_order_check(Rat(1, 2), Rat(5), yv(1), 2).pass);
  // Degenerate weights collapse most terms but the identity still holds.
  CHECK(normal_order_check(Rat(0), Rat(2), one(), 1).pass);
}

TEST_CASE("creation past annihilation within one family") {
  auto rep = gamma_exchange_check(1, Rat(3), Rat(1), one(), 4);
  CHECK(rep.pass);
  CHECK(gamma_exchange_check(2, Rat(2), Rat(1), xv(1) + yv(1), 3).pass);
  CHECK(gamma_exchange_check(1, Rat(1, 2), Rat(0), one(), 2).pass);
  CHECK_THROWS_AS(gamma_exchange_check(1, Rat(0), Rat(1), one(), 2), InvalidInput);
  CHECK_THROWS_AS(gamma_exchange_check(3, Rat(1), Rat(1), one(), 2), InvalidInput);
}

TEST_CASE("exponential route matches iterated multiplication") {
  auto rep = vertex_rep_limit_check(1, 2, one());
  CHECK(rep.pass);
  auto g = gamma_apply(GammaSpec{1, -1, 2}, one());
  REQUIRE(g.size() == 3);
  CHECK(g[0] == one());
  CHECK(g[1] == xv(1));
  CHECK(g[2] == xv(2) + xv(1).times_var(VarFamily::X, 1, 1).scaled(Rat(1, 2)));

  CHECK(vertex_rep_limit_check(2, 1, xv(1)).pass);
  auto g2 = gamma_apply(GammaSpec{2, -1, 1}, xv(1));
  CHECK(g2[0] == xv(1));
  CHECK(g2[1] == yv(1).times_var(VarFamily::X, 1, 1) - one());

  CHECK(vertex_rep_limit_check(1, 0, yv(2)).pass);
}
