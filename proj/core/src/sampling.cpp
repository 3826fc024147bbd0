#include "quatype/sampling.hpp"

namespace quatype {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : name) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return SplitMix64(seed ^ hash).next();
}

std::vector<Blade> blades_of_type(const Signature& sig, QType type) {
  std::vector<Blade> out;
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m) {
    if (type.contains(grade(Blade{m}) % 4)) out.push_back(Blade{m});
  }
  return out;
}

std::vector<Multivector> pattern_basis(const Signature& sig, const SubspacePattern& pattern,
                                       Field field) {
  std::vector<Multivector> out;
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m) {
    const Blade b{m};
    const auto cls = std::uint8_t(pattern[grade(b) % 4]);
    if (cls & 1u) out.push_back(Multivector::basis(sig, b, {1.0, 0.0}, field));
    if (cls & 2u) out.push_back(Multivector::basis(sig, b, {0.0, 1.0}, field));
  }
  return out;
}

namespace {

template <typename Draw>
Multivector random_element(const Signature& sig, Field field, const SubspacePattern& pattern,
                           Draw draw) {
  std::vector<Term> terms;
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m) {
    const Blade b{m};
    const CoeffClass cls = pattern[grade(b) % 4];
    if (cls == CoeffClass::Zero) continue;
    const double scale = cls == CoeffClass::Complex ? 0.5 : 1.0;
    const double re = (std::uint8_t(cls) & 1u) ? draw(scale) : 0.0;
    const double im = (std::uint8_t(cls) & 2u) ? draw(scale) : 0.0;
    terms.push_back({b, Scalar(re, im)});
  }
  return Multivector(sig, field, std::move(terms));
}

}  // namespace

Multivector random_integer_element(SplitMix64& rng, const Signature& sig, Field field,
                                   const SubspacePattern& pattern, int bound) {
  return random_element(sig, field, pattern, [&](double) {
    return static_cast<double>(rng.uniform_int(-bound, bound));
  });
}

Multivector random_float_element(SplitMix64& rng, const Signature& sig, Field field,
                                 const SubspacePattern& pattern, double bound) {
  return random_element(sig, field, pattern,
                        [&](double scale) { return scale * bound * rng.uniform_signed(); });
}

Multivector random_grade_element(SplitMix64& rng, const Signature& sig, int k, int bound) {
  std::vector<Term> terms;
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m) {
    if (grade(Blade{m}) == k) {
      terms.push_back({Blade{m}, static_cast<double>(rng.uniform_int(-bound, bound))});
    }
  }
  return Multivector(sig, Field::Real, std::move(terms));
}

}  // namespace quatype
