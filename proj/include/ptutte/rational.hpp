#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "ptutte/error.hpp"

namespace ptutte {

// Exact rationals. mpq_class keeps values in lowest terms with a positive
// denominator as long as every constructed value is canonicalized, which the
// helpers below guarantee.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long numerator, long denominator = 1) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgs, "zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgs, "zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace detail

// Accepts "[-]p", "[-]p/q" and plain decimals "[-]d.ddd".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'"); };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) throw fail();
    Integer d{std::string(den)};
    if (d == 0) throw fail();
    value = make_rational(Integer(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!detail::all_digits(whole) || !detail::all_digits(frac)) throw fail();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = make_rational(Integer(std::string(whole)) * scale + Integer(std::string(frac)), scale);
  } else {
    if (!detail::all_digits(s)) throw fail();
    value = Rational(Integer(std::string(s)));
  }
  if (negative) value = -value;
  return value;
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1), b(base);
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

enum class Rounding { HalfAwayFromZero, Truncate };

// Fixed-point rendering with exactly `places` decimals.
inline std::string to_decimal(const Rational& r, int places, Rounding mode = Rounding::HalfAwayFromZero) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Integer num = abs(r.get_num()) * scale;
  Integer q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
  if (mode == Rounding::HalfAwayFromZero && 2 * rem >= r.get_den()) q += 1;
  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = (r < 0 && q != 0) ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

}  // namespace ptutte
