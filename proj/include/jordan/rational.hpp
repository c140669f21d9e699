#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jordan {

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d = 1);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b);
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
};

// Best rational approximation with denominator <= max_den (continued
// fractions with semiconvergents); nullopt if it misses x by more than tol.
std::optional<Fraction> snap(double x, std::int64_t max_den = 64, double tol = 1e-6);

// Parses "p/q" or "p".
Fraction parse_fraction(const std::string& s);

std::string join(const std::vector<Fraction>& v, const std::string& sep = ", ");

}  // namespace jordan
