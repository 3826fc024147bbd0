#pragma once

// Test-only reference implementations, written from the definitions with
// no shared code: blades are explicit generator lists multiplied by
// concatenation, adjacent transpositions and contraction of squares.

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "quatype/multivector.hpp"

namespace oracle {

using Indices = std::vector<int>;  // 1-based generator indices
using Coef = std::complex<double>;

struct NaiveBlade {
  int sign;
  Indices indices;
};

inline Indices indices_of(std::uint32_t mask) {
  Indices out;
  for (int i = 0; i < 32; ++i) {
    if (mask & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

inline std::uint32_t mask_of(const Indices& idx) {
  std::uint32_t m = 0;
  for (int i : idx) m |= 1u << (i - 1);
  return m;
}

// Squares: +1 for the first p generators, -1 for the remaining q.
inline int square_of(int index, int p) { return index <= p ? 1 : -1; }

// Sorts the word e^{w1} e^{w2} ... by adjacent swaps (each swap of distinct
// generators contributes -1) and contracts equal neighbours.
inline NaiveBlade reduce_word(Indices word, int p) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        sign *= square_of(word[i], p);
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return {sign, word};
}

inline NaiveBlade blade_product(const Indices& a, const Indices& b, int p) {
  Indices word = a;
  word.insert(word.end(), b.begin(), b.end());
  return reduce_word(word, p);
}

// Sign acquired by writing the generators of a blade in reverse order and
// sorting them back.
inline int reversal_sign(const Indices& a) {
  Indices word(a.rbegin(), a.rend());
  return reduce_word(word, 0).sign;
}

using NaiveMv = std::map<Indices, Coef>;

inline NaiveMv to_naive(const quatype::Multivector& u) {
  NaiveMv out;
  for (const auto& t : u.terms()) out[indices_of(t.blade.mask)] += t.coef;
  return out;
}

inline NaiveMv product(const NaiveMv& u, const NaiveMv& v, int p) {
  NaiveMv out;
  for (const auto& [a, x] : u) {
    for (const auto& [b, y] : v) {
      const NaiveBlade r = blade_product(a, b, p);
      out[r.indices] += double(r.sign) * x * y;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == Coef(0.0); });
  return out;
}

inline NaiveMv combine(const NaiveMv& u, const NaiveMv& v, double sv) {
  NaiveMv out = u;
  for (const auto& [b, y] : v) out[b] += sv * y;
  std::erase_if(out, [](const auto& kv) { return kv.second == Coef(0.0); });
  return out;
}

inline NaiveMv conjugate(const NaiveMv& u) {
  NaiveMv out;
  for (const auto& [a, x] : u) out[a] = double(reversal_sign(a)) * std::conj(x);
  return out;
}

inline quatype::Multivector from_naive(const NaiveMv& u, quatype::Signature sig,
                                        quatype::Field field) {
  std::vector<quatype::Term> terms;
  for (const auto& [a, x] : u) terms.push_back({quatype::Blade{mask_of(a)}, x});
  return quatype::Multivector(sig, field, std::move(terms));
}

// Blades e_A (grade k) and e_B (grade l) sharing c generators satisfy
// e_A e_B = (-1)^(kl - c) e_B e_A, and the product has grade k + l - 2c.
inline bool blades_commute(int k, int l, int c) { return ((k * l - c) % 2) == 0; }

}  // namespace oracle
