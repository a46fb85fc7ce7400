#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace legrep {

// One letter of a noncommutative monomial. sym >= 0 is a generator id;
// sym = -i (i >= 1) is the i-th basepoint unit t_i with exponent tpow != 0.
// Generator letters keep tpow = 0.
struct Letter {
  int32_t sym = 0;
  int32_t tpow = 0;

  bool is_t() const { return sym < 0; }
  int t_index() const { return -sym - 1; } // 0-based copy index
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Letter gen_letter(int id) { return Letter{int32_t(id), 0}; }
inline Letter t_letter(int copy, int e) { return Letter{int32_t(-copy - 1), int32_t(e)}; }

// Concatenation with merging of adjacent powers of the same t_i; t^0 drops.
inline Word word_mul(const Word& u, const Word& v) {
  Word r = u;
  for (const Letter& l : v) {
    if (!r.empty() && l.is_t() && r.back().sym == l.sym) {
      r.back().tpow += l.tpow;
      if (r.back().tpow == 0) r.pop_back();
    } else {
      r.push_back(l);
    }
  }
  return r;
}

// Z-linear combination of words; zero coefficients are never stored.
struct Poly {
  std::map<Word, long long> terms;

  static Poly unit() {
    Poly p;
    p.terms[{}] = 1;
    return p;
  }
  static Poly of(Word w, long long c = 1) {
    Poly p;
    if (c) p.terms[std::move(w)] = c;
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  void add(const Word& w, long long c) {
    if (!c) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      it->second += c;
      if (!it->second) terms.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
  }
  Poly scaled(long long k) const {
    Poly r;
    if (k)
      for (auto& [w, c] : terms) r.terms[w] = c * k;
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (auto& [w1, c1] : terms)
      for (auto& [w2, c2] : o.terms) r.add(word_mul(w1, w2), c1 * c2);
    return r;
  }
  bool operator==(const Poly& o) const { return terms == o.terms; }
};

// Sum of letter gradings; t letters are grading 0.
inline long word_grading(const Word& w, const std::vector<int>& grading) {
  long g = 0;
  for (const Letter& l : w)
    if (!l.is_t()) g += grading[l.sym];
  return g;
}

// Leibniz extension of a generator-wise differential d to one word:
// sum over generator letters of (-1)^{|prefix|} pre * d(letter) * post.
inline Poly differentiate_word(const Word& w, const std::vector<Poly>& d,
                               const std::vector<int>& grading) {
  Poly out;
  long pre_grading = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_t()) {
      const Poly& dl = d[w[i].sym];
      if (!dl.is_zero()) {
        Word pre(w.begin(), w.begin() + i);
        Word post(w.begin() + i + 1, w.end());
        long long sign = (pre_grading % 2 == 0) ? 1 : -1;
        for (auto& [m, c] : dl.terms)
          out.add(word_mul(word_mul(pre, m), post), sign * c);
      }
      pre_grading += grading[w[i].sym];
    }
  }
  return out;
}

inline Poly differentiate(const Poly& p, const std::vector<Poly>& d,
                          const std::vector<int>& grading) {
  Poly out;
  for (auto& [w, c] : p.terms) out += differentiate_word(w, d, grading).scaled(c);
  return out;
}

} // namespace legrep
