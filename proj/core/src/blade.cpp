#include "quatype/blade.hpp"

#include "quatype/error.hpp"

namespace quatype {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0) {
    throw SignatureError("signature counts must be nonnegative, got (" +
                         std::to_string(p) + "," + std::to_string(q) + ")");
  }
  if (p + q < 1 || p + q > kMaxGenerators) {
    throw SignatureError("p+q must lie in [1, " + std::to_string(kMaxGenerators) +
                         "], got " + std::to_string(p + q));
  }
}

int Signature::metric(int generator) const {
  if (generator < 1 || generator > n()) {
    throw InvalidBlade("generator index " + std::to_string(generator) +
                       " out of range for " + to_string());
  }
  return generator <= p_ ? 1 : -1;
}

std::string Signature::to_string() const {
  return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

Blade Blade::from_indices(std::span<const int> indices) {
  std::uint32_t mask = 0;
  int previous = 0;
  for (int index : indices) {
    if (index < 1 || index > kMaxGenerators) {
      throw InvalidBlade("generator index " + std::to_string(index) + " out of range");
    }
    if (index <= previous) {
      throw InvalidBlade("blade indices must be strictly increasing");
    }
    mask |= 1u << (index - 1);
    previous = index;
  }
  return Blade{mask};
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string blade_name(Blade b) {
  const auto idx = b.indices();
  if (idx.empty()) return "e";
  const bool compact = idx.back() <= 9;
  std::string out = compact ? "e" : "e{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(idx[i]);
  }
  if (!compact) out += '}';
  return out;
}

}  // namespace quatype
