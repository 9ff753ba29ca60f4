#include "ucalg/rational.hpp"

#include <cctype>

namespace ucalg {

namespace {

bool valid_int_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  if (!valid_int_text(num)) throw InvalidInput("bad rational: '" + s + "'");
  if (slash == std::string::npos) return Rat(Int(num));
  std::string den = s.substr(slash + 1);
  if (!valid_int_text(den)) throw InvalidInput("bad rational: '" + s + "'");
  Int d(den);
  if (d == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  return Rat(Int(num), d);
}

std::string rat_str(const Rat& r) {
  if (denom(r) == 1) return numer(r).str();
  return numer(r).str() + "/" + denom(r).str();
}

Rat rat_div(const Rat& a, const Rat& b) {
  if (b == 0) throw DivisionByZero("rational division by zero");
  return a / b;
}

Rat rat_pow(const Rat& base, long long e) {
  if (e < 0) {
    if (base == 0) throw DivisionByZero("0 raised to a negative power");
    return rat_pow(1 / base, -e);
  }
  Rat acc(1), b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rat binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return Rat(num, den);
}

}  // namespace ucalg
