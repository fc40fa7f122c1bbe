#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptutte/error.hpp"
#include "ptutte/rational.hpp"

namespace ptutte {

// Exponent pair (i, j) of the monomial x^i y^j.
struct Monomial {
  int x = 0;
  int y = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded order used for iteration and display: higher total degree first,
// then higher x-degree first. "x^3 + x^2 + x*y + y^2 + x + y".
struct DisplayOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.x + a.y, db = b.x + b.y;
    if (da != db) return da > db;
    return a.x > b.x;
  }
};

// Sparse bivariate polynomial over Rational. No stored coefficient is zero.
class BiPoly {
 public:
  using Terms = std::map<Monomial, Rational, DisplayOrder>;

  BiPoly() = default;
  explicit BiPoly(const Rational& constant) { add_term({0, 0}, constant); }

  static BiPoly monomial(const Rational& coeff, int i, int j) {
    BiPoly p;
    p.add_term({i, j}, coeff);
    return p;
  }
  static BiPoly x() { return monomial(Rational(1), 1, 0); }
  static BiPoly y() { return monomial(Rational(1), 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree_x() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
  }
  int degree_y() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y);
    return d;
  }

  void add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    return out;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  Rational eval(const Rational& xv, const Rational& yv) const {
    std::vector<Rational> xp{Rational(1)}, yp{Rational(1)};
    const int dx = degree_x(), dy = degree_y();
    for (int i = 1; i <= dx; ++i) xp.push_back(xp.back() * xv);
    for (int j = 1; j <= dy; ++j) yp.push_back(yp.back() * yv);
    Rational sum(0);
    for (const auto& [m, c] : terms_) sum += c * xp[m.x] * yp[m.y];
    return sum;
  }

  // q(x, y) = p(y, x)
  BiPoly swapped() const {
    BiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.y, m.x}, c);
    return out;
  }

  Rational coefficient_sum() const {
    Rational s(0);
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  std::string to_string() const;
  static BiPoly parse(std::string_view text);

 private:
  Terms terms_;
};

inline BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result(Rational(1)), b(base);
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

// Terms joined by " + ", each "p/q*x^i*y^j" with unit exponents and unit
// coefficients elided; the zero polynomial prints as "0".
inline std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string factors;
    auto append = [&](const char* var, int e) {
      if (e == 0) return;
      if (!factors.empty()) factors += '*';
      factors += var;
      if (e > 1) factors += "^" + std::to_string(e);
    };
    append("x", m.x);
    append("y", m.y);
    if (factors.empty()) {
      out += ptutte::to_string(c);
    } else if (c == 1) {
      out += factors;
    } else if (c == -1) {
      out += "-" + factors;
    } else {
      out += ptutte::to_string(c) + "*" + factors;
    }
  }
  return out;
}

inline BiPoly BiPoly::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::Parse, "polynomial '" + std::string(text) + "': " + why);
  };
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) throw fail("empty");
  BiPoly out;
  if (compact == "0") return out;

  std::size_t pos = 0;
  while (pos <= compact.size()) {
    std::size_t next = compact.find('+', pos);
    std::string_view term(compact);
    term = term.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (term.empty()) throw fail("empty term");

    Rational coeff(1);
    if (term.front() == '-') {
      coeff = -1;
      term.remove_prefix(1);
    }
    Monomial m;
    bool have_number = false;
    std::size_t start = 0;
    while (start <= term.size()) {
      std::size_t star = term.find('*', start);
      std::string_view factor = term.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
      if (factor.empty()) throw fail("empty factor");
      if (factor.front() == 'x' || factor.front() == 'y') {
        int e = 1;
        if (factor.size() > 1) {
          if (factor[1] != '^' || !detail::all_digits(factor.substr(2))) throw fail("bad exponent");
          e = std::stoi(std::string(factor.substr(2)));
        }
        (factor.front() == 'x' ? m.x : m.y) += e;
      } else {
        if (have_number || start != 0) throw fail("coefficient must lead the term");
        coeff *= parse_rational(factor);
        have_number = true;
      }
      if (star == std::string_view::npos) break;
      start = star + 1;
    }
    out.add_term(m, coeff);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace ptutte
