#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "quatype/multivector.hpp"
#include "quatype/qtype.hpp"

namespace quatype {

// splitmix64 (Steele, Lea, Flood). The exact sequence is part of the
// reproducibility contract of verification reports:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // lo + next() mod (hi - lo + 1)
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  // (next() >> 11) * 2^-53, in [0, 1)
  double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // 2 * uniform01() - 1, in [-1, 1)
  double uniform_signed() noexcept { return 2.0 * uniform01() - 1.0; }

 private:
  std::uint64_t state_;
};

// Per-check seed: first splitmix64 output for state seed ^ fnv1a64(name).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) noexcept;

// Blades whose grade mod 4 lies in `type`, ascending by mask.
std::vector<Blade> blades_of_type(const Signature& sig, QType type);

// Real basis of a pattern subspace: E_b for real-allowed residues and i E_b
// for imaginary-allowed ones.
std::vector<Multivector> pattern_basis(const Signature& sig, const SubspacePattern& pattern,
                                       Field field);

// Independent integer coefficients in [-bound, bound] on every allowed
// (blade, real/imaginary) slot of the pattern.
Multivector random_integer_element(SplitMix64& rng, const Signature& sig, Field field,
                                   const SubspacePattern& pattern, int bound = 3);

// Same, with coefficients uniform in [-bound, bound). Complex slots split
// the bound so the inf-norm never exceeds it.
Multivector random_float_element(SplitMix64& rng, const Signature& sig, Field field,
                                 const SubspacePattern& pattern, double bound = 1.0);

// Integer-coefficient element of a single grade k.
Multivector random_grade_element(SplitMix64& rng, const Signature& sig, int k, int bound = 3);

}  // namespace quatype
