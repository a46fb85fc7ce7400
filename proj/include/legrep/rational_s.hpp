#pragma once

#include "legrep/laurent.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace legrep {

// Polynomial over Q, dense little-endian coefficients, no trailing zeros.
struct PolyQ {
  std::vector<mpq_class> c;

  static PolyQ constant(const mpq_class& v);
  static PolyQ monomial(int e, const mpq_class& v = 1);

  int degree() const { return int(c.size()) - 1; } // -1 for zero
  bool is_zero() const { return c.empty(); }
  void trim();

  PolyQ operator+(const PolyQ& o) const;
  PolyQ operator-(const PolyQ& o) const;
  PolyQ operator*(const PolyQ& o) const;
  PolyQ scaled(const mpq_class& v) const;
  bool operator==(const PolyQ& o) const { return c == o.c; }

  // Euclidean division by a nonzero divisor.
  static void divmod(const PolyQ& a, const PolyQ& b, PolyQ& quo, PolyQ& rem);
  static PolyQ gcd(PolyQ a, PolyQ b); // monic
  PolyQ monic() const;

  std::string to_string(const std::string& var = "s") const;
};

// Value in Q[sqrt(base)]: a + b*sqrt(base). When base is a perfect square
// the root is folded into a and b stays 0, so equality is structural.
struct QSqrt {
  mpq_class a, b;
  long base = 0;

  QSqrt() = default;
  QSqrt(mpq_class a_, mpq_class b_, long base_);
  static QSqrt rational(const mpq_class& v, long base);
  // sqrt(base)^e, exact for all integer e (base >= 2).
  static QSqrt root_pow(long base, long e);

  bool is_rational() const { return b == 0; }
  QSqrt operator+(const QSqrt& o) const;
  QSqrt operator-(const QSqrt& o) const;
  QSqrt operator*(const QSqrt& o) const;
  QSqrt operator/(const QSqrt& o) const; // throws std::domain_error on 0
  bool operator==(const QSqrt& o) const;
  bool is_zero() const { return a == 0 && b == 0; }

  std::string to_string() const;
};

// Rational function in s with rational coefficients; canonical form is
// gcd-reduced with monic denominator (zero is 0/1), so == is structural.
struct RationalFunctionS {
  PolyQ num, den;

  RationalFunctionS();
  RationalFunctionS(PolyQ n, PolyQ d);
  static RationalFunctionS constant(const mpq_class& v);
  static RationalFunctionS s_power(int e); // s^e, negative allowed

  bool is_zero() const { return num.is_zero(); }
  RationalFunctionS operator+(const RationalFunctionS& o) const;
  RationalFunctionS operator-(const RationalFunctionS& o) const;
  RationalFunctionS operator*(const RationalFunctionS& o) const;
  RationalFunctionS operator/(const RationalFunctionS& o) const;
  bool operator==(const RationalFunctionS& o) const;

  // Exact value at s = sqrt(q); throws std::domain_error if the denominator
  // vanishes there.
  QSqrt eval_at_sqrt(long q) const;

  std::string to_string() const;
};

// Substitution z -> s - s^{-1} applied to a Laurent polynomial in z.
RationalFunctionS eval_laurent_at_z(const LaurentZ& p);

// s^{n(n-1)/2} * prod_{i=1..n} (s^i - s^-i)/(s - s^-1); the n-component
// ruling-sum normalizer. c_1 = 1, c_2 = s^2 + 1.
RationalFunctionS color_normalizer(int n);

} // namespace legrep
