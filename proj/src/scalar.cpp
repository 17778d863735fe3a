#include "liftcert/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>

namespace liftcert {

std::string Scalar::str() const {
  if (exact_) return r_.str();
  char buf[64];
  // %.17g round-trips every double.
  std::snprintf(buf, sizeof buf, "%.17g", f_);
  // Trim to the shortest representation that still round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[64];
    std::snprintf(shorter, sizeof shorter, "%.*g", prec, f_);
    if (std::strtod(shorter, nullptr) == f_) return shorter;
  }
  return buf;
}

Scalar Scalar::parse_exact(const std::string& text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  std::string s = text.substr(a, b - a);
  if (s.empty()) throw ParseError("empty numeric literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    BigInt n, d;
    try {
      n = BigInt(num);
      d = BigInt(den);
    } catch (const std::runtime_error&) {
      throw ParseError("bad rational literal '" + text + "'");
    }
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return Scalar::exact(Rational(n, d));
  }

  // [sign] digits [. digits] [eE [sign] digits]
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  std::string digits;
  long long frac_digits = 0, exponent = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      ++frac_digits;
      any = true;
    }
  }
  if (!any) throw ParseError("bad numeric literal '" + text + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    if (i == s.size()) throw ParseError("bad exponent in '" + text + "'");
    long long e = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      e = e * 10 + (s[i++] - '0');
      if (e > 1000000) throw ParseError("exponent out of range in '" + text + "'");
    }
    exponent = eneg ? -e : e;
  }
  if (i != s.size()) throw ParseError("trailing characters in numeric literal '" + text + "'");

  BigInt mant(digits.empty() ? "0" : digits);
  if (neg) mant = -mant;
  long long p = exponent - frac_digits;
  Rational r(mant);
  if (p > 0)
    r *= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(p)));
  else if (p < 0)
    r /= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-p)));
  return Scalar::exact(r);
}

}  // namespace liftcert
