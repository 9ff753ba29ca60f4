#include "ucalg/series.hpp"

#include <algorithm>
#include <sstream>

namespace ucalg {

TruncSeries TruncSeries::constant(const std::string& param, int cap, const Rat& v) {
  return term(param, cap, 0, v);
}

TruncSeries TruncSeries::term(const std::string& param, int cap, int exp, const Rat& v) {
  TruncSeries s(param, cap);
  if (v != 0 && exp <= cap) s.terms_[exp] = v;
  return s;
}

Rat TruncSeries::coeff(int e) const {
  if (e > cap_)
    throw InvalidInput("coefficient of exponent " + std::to_string(e) +
                       " is beyond the series cap " + std::to_string(cap_));
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int TruncSeries::valuation() const {
  if (terms_.empty()) throw Error("valuation of the zero series");
  return terms_.begin()->first;
}

void TruncSeries::set_coeff(int e, const Rat& v) {
  if (e > cap_) return;
  if (v == 0)
    terms_.erase(e);
  else
    terms_[e] = v;
}

void TruncSeries::check_same_param(const TruncSeries& o) const {
  if (param_ != o.param_)
    throw DomainMismatch("series parameters differ: '" + param_ + "' vs '" + o.param_ + "'");
}

void TruncSeries::drop(int new_cap) {
  cap_ = new_cap;
  terms_.erase(terms_.upper_bound(cap_), terms_.end());
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r(param_, cap_);
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_same_param(o);
  drop(std::min(cap_, o.cap_));
  for (auto& [e, c] : o.terms_) {
    if (e > cap_) break;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this += -o; }

TruncSeries& TruncSeries::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_same_param(b);
  // The unknown tail of one factor meets the other factor's terms below its
  // valuation (all zero) only while the result exponent stays within this cap:
  int cap = std::min(a.cap_, b.cap_);
  if (!a.terms_.empty() && !b.terms_.empty()) {
    cap = std::min({cap, a.cap_ + b.valuation(), b.cap_ + a.valuation()});
  }
  TruncSeries r(a.param_, cap);
  for (auto& [ea, ca] : a.terms_) {
    for (auto& [eb, cb] : b.terms_) {
      if (ea + eb > cap) break;
      auto [it, fresh] = r.terms_.emplace(ea + eb, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
  if (b.is_zero()) throw DivisionByZero("series division by zero");
  return a * b.inverse(b.cap() - b.valuation());
}

TruncSeries TruncSeries::shifted(int k) const {
  TruncSeries r(param_, cap_ + k);
  for (auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

TruncSeries TruncSeries::truncated(int new_cap) const {
  TruncSeries r = *this;
  r.drop(std::min(cap_, new_cap));
  return r;
}

TruncSeries TruncSeries::inverse(int order) const {
  if (terms_.empty()) throw DivisionByZero("inverse of the zero series");
  int v = valuation();
  if (cap_ < order + v)
    throw InvalidInput("series cap " + std::to_string(cap_) +
                       " too low to invert through order " + std::to_string(order));
  Rat lead = terms_.begin()->second;
  // m = self / (lead * p^v) - 1 has valuation >= 1.
  TruncSeries m(param_, order);
  for (auto& [e, c] : terms_) {
    if (e - v > order) break;
    if (e != v) m.terms_[e - v] = c / lead;
  }
  // (1 + m)^-1 = sum (-m)^j, truncated at `order`.
  TruncSeries acc = constant(param_, order, 1);
  TruncSeries pw = constant(param_, order, 1);
  TruncSeries neg = -m;
  for (int j = 1; j <= order && !pw.is_zero(); ++j) {
    pw = pw * neg;
    acc += pw;
  }
  TruncSeries r = acc.shifted(-v);
  r *= 1 / lead;
  return r;
}

std::string TruncSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1) && e != 0;
    if (!unit) os << rat_str(a);
    if (e != 0) {
      if (!unit) os << "*";
      os << param_;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace ucalg
