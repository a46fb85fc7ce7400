#include "legrep/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace legrep {

namespace {

// Little-endian coefficient vectors over F_p, no trailing zeros.
using PPoly = std::vector<int>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = int((r[i + j] + long(a[i]) * b[j]) % p);
  ptrim(r);
  return r;
}

// Remainder of a mod b; b monic.
PPoly pmod(PPoly a, const PPoly& b, long p) {
  ptrim(a);
  while (a.size() >= b.size()) {
    long lead = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      long v = a[shift + i] - lead * b[i] % p;
      a[shift + i] = int(((v % p) + p) % p);
    }
    ptrim(a);
  }
  return a;
}

PPoly decode(long code, long p, int width) {
  PPoly c(width, 0);
  for (int i = 0; i < width && code; ++i) {
    c[i] = int(code % p);
    code /= p;
  }
  ptrim(c);
  return c;
}

long encode(const PPoly& c, long p) {
  long v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

bool divisible(const PPoly& a, const PPoly& b, long p) {
  return pmod(a, b, p).empty();
}

// Monic polynomial x^d + decode(code): irreducible iff no monic factor of
// degree 1..d/2 divides it.
bool irreducible(const PPoly& f, long p) {
  int d = int(f.size()) - 1;
  for (int k = 1; 2 * k <= d; ++k) {
    long nk = 1;
    for (int i = 0; i < k; ++i) nk *= p;
    for (long code = 0; code < nk; ++code) {
      PPoly g = decode(code, p, k);
      g.resize(k + 1, 0);
      g[k] = 1;
      if (divisible(f, g, p)) return false;
    }
  }
  return true;
}

std::string factorization_string(long n) {
  std::ostringstream os;
  os << n << " = ";
  bool first = true;
  for (long f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    int e = 0;
    while (n % f == 0) n /= f, ++e;
    if (!first) os << " * ";
    first = false;
    os << f;
    if (e > 1) os << "^" << e;
  }
  if (n > 1 || first) {
    if (!first) os << " * ";
    os << n;
  }
  return os.str();
}

} // namespace

bool is_prime_power(long q, long* p_out, int* d_out) {
  if (q < 2) return false;
  long p = 0;
  for (long f = 2; f * f <= q; ++f)
    if (q % f == 0) {
      p = f;
      break;
    }
  if (p == 0) p = q;
  long m = q;
  int d = 0;
  while (m % p == 0) m /= p, ++d;
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (d_out) *d_out = d;
  return true;
}

Field::Field(long q) : q_(q) {
  if (!is_prime_power(q, &p_, &d_))
    throw std::invalid_argument("not a prime power: " + factorization_string(q));
  if (q > (1L << 16)) throw std::invalid_argument("field size exceeds 2^16");

  if (d_ == 1) {
    mod_ = {0, 1};
  } else {
    for (long code = 0;; ++code) {
      PPoly f = decode(code, p_, d_);
      f.resize(d_ + 1, 0);
      f[d_] = 1;
      if (irreducible(f, p_)) {
        mod_.assign(f.begin(), f.end());
        break;
      }
    }
  }

  if (q_ <= 256) {
    multab_.assign(size_t(q_) * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b <= a; ++b) {
        int v = mul_generic(a, b);
        multab_[size_t(a) * q_ + b] = v;
        multab_[size_t(b) * q_ + a] = v;
      }
    invtab_.assign(q_, 0);
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (multab_[size_t(a) * q_ + b] == 1) {
          invtab_[a] = b;
          break;
        }
  }
}

int Field::add(int a, int b) const {
  if (d_ == 1) return int((a + b) % p_);
  long r = 0, mul = 1;
  for (int i = 0; i < d_; ++i) {
    r += (a % p_ + b % p_) % p_ * mul;
    a /= int(p_), b /= int(p_);
    mul *= p_;
  }
  return int(r);
}

int Field::neg(int a) const {
  if (d_ == 1) return int((p_ - a) % p_);
  long r = 0, mul = 1;
  for (int i = 0; i < d_; ++i) {
    r += (p_ - a % p_) % p_ * mul;
    a /= int(p_);
    mul *= p_;
  }
  return int(r);
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul_generic(int a, int b) const {
  if (d_ == 1) return int(long(a) * b % p_);
  PPoly pa = decode(a, p_, d_), pb = decode(b, p_, d_);
  PPoly m(mod_.begin(), mod_.end());
  return int(encode(pmod(pmul(pa, pb, p_), m, p_), p_));
}

int Field::mul(int a, int b) const {
  if (!multab_.empty()) return multab_[size_t(a) * q_ + b];
  return mul_generic(a, b);
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("division by zero in F_q");
  if (!invtab_.empty()) return invtab_[a];
  return pow(a, q_ - 2);
}

int Field::pow(int a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int Field::of_int(long v) const {
  long r = v % p_;
  if (r < 0) r += p_;
  return int(r);
}

Field make_field(long q) { return Field(q); }

} // namespace legrep
