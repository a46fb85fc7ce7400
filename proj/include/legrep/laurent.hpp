#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>

namespace legrep {

// Laurent polynomial over Z in one variable; zero coefficients are never
// stored.
struct LaurentZ {
  std::map<long, mpz_class> c; // exponent -> coefficient

  static LaurentZ monomial(long e, mpz_class coef = 1) {
    LaurentZ r;
    if (coef != 0) r.c[e] = std::move(coef);
    return r;
  }

  bool is_zero() const { return c.empty(); }

  void add(long e, const mpz_class& v) {
    if (v == 0) return;
    auto it = c.find(e);
    if (it == c.end()) {
      c.emplace(e, v);
    } else {
      it->second += v;
      if (it->second == 0) c.erase(it);
    }
  }

  LaurentZ& operator+=(const LaurentZ& o) {
    for (auto& [e, v] : o.c) add(e, v);
    return *this;
  }

  LaurentZ operator+(const LaurentZ& o) const {
    LaurentZ r = *this;
    r += o;
    return r;
  }

  LaurentZ operator*(const LaurentZ& o) const {
    LaurentZ r;
    for (auto& [e1, v1] : c)
      for (auto& [e2, v2] : o.c) r.add(e1 + e2, v1 * v2);
    return r;
  }

  bool operator==(const LaurentZ& o) const { return c == o.c; }

  // Descending powers: "z + 2z^-1"; the zero polynomial prints "0".
  std::string to_string(const std::string& var = "z") const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      mpz_class v = it->second;
      if (first) {
        if (v < 0) os << "-", v = -v;
      } else {
        os << (v < 0 ? " - " : " + ");
        if (v < 0) v = -v;
      }
      first = false;
      long e = it->first;
      if (e == 0) {
        os << v.get_str();
      } else {
        if (v != 1) os << v.get_str();
        os << var;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }
};

} // namespace legrep
