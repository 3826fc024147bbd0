#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace quatype {

inline constexpr int kMaxGenerators = 12;

// Metric signature (p, q) of a nondegenerate Clifford algebra Cl(p,q).
// Generators 1..p square to +1, generators p+1..n square to -1.
class Signature {
 public:
  // Throws SignatureError unless p >= 0, q >= 0 and 1 <= p+q <= 12.
  Signature(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return p_ + q_; }
  std::uint32_t blade_count() const noexcept { return 1u << n(); }

  // Metric value of a 1-based generator index.
  int metric(int generator) const;

  // Bit set for every generator squaring to -1.
  std::uint32_t negative_mask() const noexcept {
    return ((1u << n()) - 1u) & ~((1u << p_) - 1u);
  }

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

// Canonical basis blade e^{a1...ak}, a1 < ... < ak. Bit i-1 of the mask
// is set when generator e^i is present; mask 0 is the identity e.
struct Blade {
  std::uint32_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t m) : mask(m) {}

  static constexpr Blade identity() { return Blade{}; }
  static constexpr Blade generator(int index) { return Blade{1u << (index - 1)}; }

  // Strictly increasing 1-based indices; throws InvalidBlade otherwise.
  static Blade from_indices(std::span<const int> indices);
  std::vector<int> indices() const;

  bool valid_for(const Signature& sig) const noexcept {
    return mask < sig.blade_count();
  }

  friend constexpr bool operator==(Blade, Blade) = default;
  friend constexpr auto operator<=>(Blade, Blade) = default;
};

constexpr int grade(Blade b) noexcept { return std::popcount(b.mask); }

// Sign from sorting the generator sequence of E_a E_b into ascending order:
// (-1)^T, T = sum over generators i in b of #{ j in a : j > i }.
constexpr int reorder_sign(Blade a, Blade b) noexcept {
  int swaps = 0;
  for (std::uint32_t rest = b.mask; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    swaps += std::popcount(a.mask >> (i + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

// Product of the metric values of generators common to a and b.
inline int metric_sign(Blade a, Blade b, const Signature& sig) noexcept {
  return (std::popcount(a.mask & b.mask & sig.negative_mask()) & 1) ? -1 : 1;
}

struct BladeProduct {
  int sign;
  Blade result;

  friend constexpr bool operator==(const BladeProduct&, const BladeProduct&) = default;
};

// E_a E_b = sign * E_{a xor b}.
inline BladeProduct canonical_sign(Blade a, Blade b, const Signature& sig) noexcept {
  return {reorder_sign(a, b) * metric_sign(a, b, sig), Blade{a.mask ^ b.mask}};
}

// Sign of the reversed blade: e^{ak}...e^{a1} = (-1)^{g(g-1)/2} e^{a1...ak}.
constexpr int reversion_sign(Blade b) noexcept {
  const int g = grade(b);
  return ((g * (g - 1) / 2) & 1) ? -1 : 1;
}

// "e" for the identity, "e12" when every index is a single digit,
// otherwise "e{1,10,12}".
std::string blade_name(Blade b);

}  // namespace quatype
