#pragma once

#include <string>
#include <vector>

#include "ucalg/poly.hpp"
#include "ucalg/report.hpp"
#include "ucalg/series.hpp"

namespace ucalg {

// Series in q kept on the half-exponent grid: the underlying parameter is t
// with q = t^2, and odd t-coefficients must vanish.
class QSeries {
 public:
  explicit QSeries(TruncSeries ts);

  const TruncSeries& t_series() const { return ts_; }
  int q_order() const { return ts_.cap() / 2; }
  std::vector<Rat> q_coefficients() const;
  std::string str() const;

  bool operator==(const QSeries& o) const = default;

 private:
  TruncSeries ts_;
};

// Coefficients of prod (1-q^n)^{-n} through q^K.
QSeries macmahon_series(int K);

// Exhaustive count of plane partitions of n; the enumeration bound is 10.
long long plane_partition_count(int n);

// Vacuum expectation of the level-truncated annihilation-side product; equals
// prod_{n<=K} (1-q^n)^n through q^K.
QSeries correlator_minus(int K);

// Both blocks; equals macmahon_series(K) coefficientwise.
QSeries correlator_full(int K);

Report normal_order_check(const Rat& z, const Rat& w, const PolyQ& p, int order);
Report gamma_exchange_check(int family, const Rat& z, const Rat& w, const PolyQ& p,
                            int order);
Report vertex_rep_limit_check(int family, int order, const PolyQ& p);

}  // namespace ucalg
