#include "jordan/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jordan {

Fraction::Fraction(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

std::string Fraction::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }
Fraction operator+(const Fraction& a, const Fraction& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}
Fraction operator-(const Fraction& a, const Fraction& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}
Fraction operator*(const Fraction& a, const Fraction& b) { return {a.num * b.num, a.den * b.den}; }

std::optional<Fraction> snap(double x, std::int64_t max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  const bool neg = x < 0;
  const double ax = std::fabs(x);
  // Convergents p/q of the continued fraction of ax.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = ax;
  std::int64_t best_p = static_cast<std::int64_t>(std::llround(ax)), best_q = 1;
  for (int it = 0; it < 64; ++it) {
    const double a_d = std::floor(r);
    if (a_d > 1e15) break;
    const auto a = static_cast<std::int64_t>(a_d);
    const std::int64_t q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Largest admissible semiconvergent, compared with the last convergent.
      const std::int64_t k = (max_den - q0) / q1;
      const std::int64_t ps = k * p1 + p0, qs = k * q1 + q0;
      const double e1 = std::fabs(ax - static_cast<double>(p1) / q1);
      const double es = std::fabs(ax - static_cast<double>(ps) / qs);
      if (es < e1) {
        best_p = ps;
        best_q = qs;
      } else {
        best_p = p1;
        best_q = q1;
      }
      break;
    }
    const std::int64_t p2 = a * p1 + p0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    best_p = p1;
    best_q = q1;
    const double frac = r - a_d;
    if (frac < 1e-15 || std::fabs(ax - static_cast<double>(p1) / q1) < 1e-15) break;
    r = 1.0 / frac;
  }
  Fraction f(neg ? -best_p : best_p, best_q);
  if (std::fabs(f.value() - x) > tol) return std::nullopt;
  return f;
}

Fraction parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Fraction(std::stoll(s), 1);
  return Fraction(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::string join(const std::vector<Fraction>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

}  // namespace jordan
