#pragma once

#include <map>
#include <string>

#include "ucalg/rational.hpp"

namespace ucalg {

// Truncated Laurent series in a named parameter. Every coefficient with
// exponent <= cap is stored exactly (absent means zero); exponents above the
// cap are unknown. Arithmetic lowers the cap as needed to keep that contract:
// for nonnegatively supported operands this is the usual min-cap rule.
class TruncSeries {
 public:
  TruncSeries(std::string param, int cap) : param_(std::move(param)), cap_(cap) {}

  static TruncSeries constant(const std::string& param, int cap, const Rat& v);
  // v * p^exp
  static TruncSeries term(const std::string& param, int cap, int exp, const Rat& v);

  const std::string& param() const { return param_; }
  int cap() const { return cap_; }
  const std::map<int, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int e) const;
  // Lowest stored exponent; throws Error when the series is zero.
  int valuation() const;

  void set_coeff(int e, const Rat& v);

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rat& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Rat& c) { return a *= c; }
  friend TruncSeries operator*(const Rat& c, TruncSeries a) { return a *= c; }
  // a * inverse(b) at the largest order b's cap supports.
  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);

  bool operator==(const TruncSeries& o) const {
    return param_ == o.param_ && cap_ == o.cap_ && terms_ == o.terms_;
  }

  // Multiply by param^k (cap rises by k: exactness shifts with the terms).
  TruncSeries shifted(int k) const;
  // Copy with a lower cap, dropping terms above it.
  TruncSeries truncated(int new_cap) const;

  // Multiplicative inverse. With valuation v, requires cap >= order + v so
  // enough of this series is known; the result has cap = order - v.
  TruncSeries inverse(int order) const;

  std::string str() const;

 private:
  void check_same_param(const TruncSeries& o) const;
  void drop(int new_cap);

  std::string param_;
  int cap_;
  std::map<int, Rat> terms_;
};

}  // namespace ucalg
