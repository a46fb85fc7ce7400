#include "legrep/rational_s.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace legrep {

PolyQ PolyQ::constant(const mpq_class& v) {
  PolyQ p;
  if (v != 0) p.c = {v};
  return p;
}

PolyQ PolyQ::monomial(int e, const mpq_class& v) {
  PolyQ p;
  if (v != 0) {
    p.c.assign(e + 1, mpq_class(0));
    p.c[e] = v;
  }
  return p;
}

void PolyQ::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
  PolyQ r;
  r.c.resize(std::max(c.size(), o.c.size()), mpq_class(0));
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.trim();
  return r;
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + o.scaled(-1); }

PolyQ PolyQ::operator*(const PolyQ& o) const {
  if (is_zero() || o.is_zero()) return {};
  PolyQ r;
  r.c.assign(c.size() + o.c.size() - 1, mpq_class(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.trim();
  return r;
}

PolyQ PolyQ::scaled(const mpq_class& v) const {
  if (v == 0) return {};
  PolyQ r = *this;
  for (auto& x : r.c) x *= v;
  return r;
}

void PolyQ::divmod(const PolyQ& a, const PolyQ& b, PolyQ& quo, PolyQ& rem) {
  assert(!b.is_zero());
  rem = a;
  quo = {};
  if (a.degree() >= b.degree()) quo.c.assign(a.degree() - b.degree() + 1, mpq_class(0));
  while (rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    mpq_class f = rem.c.back() / b.c.back();
    quo.c[shift] = f;
    for (size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= f * b.c[i];
    rem.trim();
  }
  quo.trim();
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  return scaled(1 / c.back());
}

std::string PolyQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    mpq_class v = c[e];
    if (v == 0) continue;
    if (first) {
      if (v < 0) os << "-", v = -v;
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (e == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {
bool square_root_of(long q, long& r) {
  long s = 0;
  while (s * s < q) ++s;
  if (s * s == q) {
    r = s;
    return true;
  }
  return false;
}
} // namespace

QSqrt::QSqrt(mpq_class a_, mpq_class b_, long base_) : a(std::move(a_)), b(std::move(b_)), base(base_) {
  long r;
  if (b != 0 && square_root_of(base, r)) {
    a += b * r;
    b = 0;
  }
}

QSqrt QSqrt::rational(const mpq_class& v, long base) { return QSqrt(v, 0, base); }

QSqrt QSqrt::root_pow(long base, long e) {
  assert(base >= 2);
  mpq_class even = 1;
  long half = e >= 0 ? e / 2 : -((-e + 1) / 2);
  // sqrt(base)^e = base^{floor(e/2)} * sqrt(base)^{e mod 2}, e mod 2 in {0,1}
  long rem = e - 2 * half;
  mpz_class num = 1, den = 1;
  for (long i = 0; i < (half >= 0 ? half : -half); ++i) (half >= 0 ? num : den) *= base;
  even = mpq_class(num, den);
  even.canonicalize();
  if (rem == 0) return QSqrt(even, 0, base);
  return QSqrt(0, even, base);
}

QSqrt QSqrt::operator+(const QSqrt& o) const {
  assert(base == o.base);
  return QSqrt(a + o.a, b + o.b, base);
}

QSqrt QSqrt::operator-(const QSqrt& o) const {
  assert(base == o.base);
  return QSqrt(a - o.a, b - o.b, base);
}

QSqrt QSqrt::operator*(const QSqrt& o) const {
  assert(base == o.base);
  return QSqrt(a * o.a + b * o.b * base, a * o.b + b * o.a, base);
}

QSqrt QSqrt::operator/(const QSqrt& o) const {
  assert(base == o.base);
  // (a+b r)^{-1} = (a - b r)/(a^2 - b^2 q)
  mpq_class n = o.a * o.a - o.b * o.b * base;
  if (n == 0) throw std::domain_error("division by zero in Q[sqrt q]");
  QSqrt conj(o.a / n, -o.b / n, base);
  return *this * conj;
}

bool QSqrt::operator==(const QSqrt& o) const { return base == o.base && a == o.a && b == o.b; }

std::string QSqrt::to_string() const {
  if (b == 0) return a.get_str();
  std::ostringstream os;
  if (a != 0) os << a.get_str() << (b > 0 ? " + " : " - ");
  else if (b < 0) os << "-";
  mpq_class ab = abs(b);
  if (ab != 1) os << ab.get_str() << "*";
  os << "sqrt(" << base << ")";
  return os.str();
}

RationalFunctionS::RationalFunctionS() : num(), den(PolyQ::constant(1)) {}

RationalFunctionS::RationalFunctionS(PolyQ n, PolyQ d) {
  if (d.is_zero()) throw std::domain_error("zero denominator");
  if (n.is_zero()) {
    num = {};
    den = PolyQ::constant(1);
    return;
  }
  PolyQ g = PolyQ::gcd(n, d);
  PolyQ q, r;
  PolyQ::divmod(n, g, q, r);
  assert(r.is_zero());
  n = q;
  PolyQ::divmod(d, g, q, r);
  assert(r.is_zero());
  d = q;
  mpq_class lead = d.c.back();
  num = n.scaled(1 / lead);
  den = d.scaled(1 / lead);
}

RationalFunctionS RationalFunctionS::constant(const mpq_class& v) {
  return RationalFunctionS(PolyQ::constant(v), PolyQ::constant(1));
}

RationalFunctionS RationalFunctionS::s_power(int e) {
  if (e >= 0) return RationalFunctionS(PolyQ::monomial(e), PolyQ::constant(1));
  return RationalFunctionS(PolyQ::constant(1), PolyQ::monomial(-e));
}

RationalFunctionS RationalFunctionS::operator+(const RationalFunctionS& o) const {
  return RationalFunctionS(num * o.den + o.num * den, den * o.den);
}

RationalFunctionS RationalFunctionS::operator-(const RationalFunctionS& o) const {
  return RationalFunctionS(num * o.den - o.num * den, den * o.den);
}

RationalFunctionS RationalFunctionS::operator*(const RationalFunctionS& o) const {
  return RationalFunctionS(num * o.num, den * o.den);
}

RationalFunctionS RationalFunctionS::operator/(const RationalFunctionS& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return RationalFunctionS(num * o.den, den * o.num);
}

bool RationalFunctionS::operator==(const RationalFunctionS& o) const {
  return num == o.num && den == o.den;
}

QSqrt RationalFunctionS::eval_at_sqrt(long q) const {
  auto eval_poly = [&](const PolyQ& p) {
    QSqrt acc = QSqrt::rational(0, q);
    for (int i = p.degree(); i >= 0; --i) {
      acc = acc * QSqrt::root_pow(q, 1) + QSqrt::rational(p.c[i], q);
    }
    return acc;
  };
  QSqrt d = eval_poly(den);
  if (d.is_zero()) throw std::domain_error("denominator vanishes at sqrt(q)");
  return eval_poly(num) / d;
}

std::string RationalFunctionS::to_string() const {
  if (den.degree() == 0 && den.c[0] == 1) return num.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

RationalFunctionS eval_laurent_at_z(const LaurentZ& p) {
  // z -> s - s^{-1} = (s^2 - 1)/s
  RationalFunctionS zsub(PolyQ::monomial(2) - PolyQ::constant(1), PolyQ::monomial(1));
  RationalFunctionS out;
  for (auto& [e, v] : p.c) {
    RationalFunctionS term = RationalFunctionS::constant(mpq_class(v));
    RationalFunctionS zp = RationalFunctionS::constant(1);
    long n = e >= 0 ? e : -e;
    for (long i = 0; i < n; ++i) zp = zp * zsub;
    if (e < 0) zp = RationalFunctionS::constant(1) / zp;
    out = out + term * zp;
  }
  return out;
}

RationalFunctionS color_normalizer(int n) {
  RationalFunctionS r = RationalFunctionS::s_power(n * (n - 1) / 2);
  RationalFunctionS d = RationalFunctionS::s_power(1) - RationalFunctionS::s_power(-1);
  for (int i = 1; i <= n; ++i) {
    RationalFunctionS f = RationalFunctionS::s_power(i) - RationalFunctionS::s_power(-i);
    r = r * (f / d);
  }
  return r;
}

} // namespace legrep
