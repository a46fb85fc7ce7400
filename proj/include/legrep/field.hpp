#pragma once

#include <string>
#include <vector>

namespace legrep {

// Finite field F_q, q = p^d <= 2^16. Elements are integer codes in [0, q):
// the code of c_0 + c_1 x + ... + c_{d-1} x^{d-1} is sum_i c_i p^i. For
// d >= 2 arithmetic is mod the lexicographically smallest monic irreducible
// polynomial of degree d, comparing coefficient tuples high power first, so
// codes mean the same thing in every run. For q = 4 the modulus is
// x^2 + x + 1 and mul(2, 2) == 3.
class Field {
public:
  explicit Field(long q);

  long q() const { return q_; }
  long p() const { return p_; }
  int deg() const { return d_; }
  // Little-endian coefficients c_0..c_d of the modulus, c_d = 1. For d = 1
  // this is {0, 1}.
  const std::vector<int>& modulus() const { return mod_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const; // throws std::domain_error on 0
  int pow(int a, long e) const;
  // Image of an arbitrary integer in the prime subfield.
  int of_int(long v) const;

private:
  long q_ = 0, p_ = 0;
  int d_ = 0;
  std::vector<int> mod_;
  std::vector<int> multab_, invtab_; // filled when q <= 256

  int mul_generic(int a, int b) const;
};

// Factors q and constructs the field; throws std::invalid_argument with the
// offending factorization when q is not a prime power.
Field make_field(long q);

bool is_prime_power(long q, long* p_out = nullptr, int* d_out = nullptr);

} // namespace legrep
