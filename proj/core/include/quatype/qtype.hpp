#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "quatype/multivector.hpp"

namespace quatype {

// Quaternion type: a subset of the residues {0,1,2,3} of grade mod 4.
// The empty set is the (minimal) type of the zero element. Ordered by
// inclusion; join is union.
class QType {
 public:
  constexpr QType() = default;
  static constexpr QType from_bits(std::uint8_t bits) { return QType(bits & 0xF); }
  static constexpr QType main(int residue) { return QType(std::uint8_t(1u << residue)); }
  static constexpr QType full() { return QType(0xF); }
  // "", "0", "02", "0123", ... Throws ParseError on anything else.
  static QType parse(std::string_view digits);

  constexpr std::uint8_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int residue) const noexcept { return (bits_ >> residue) & 1u; }
  constexpr bool subset_of(QType other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr QType operator|(QType other) const noexcept { return QType(bits_ | other.bits_); }
  constexpr QType& operator|=(QType other) noexcept {
    bits_ |= other.bits_;
    return *this;
  }

  // Member digits in ascending order; "" for the empty type.
  std::string to_string() const;

  friend constexpr bool operator==(QType, QType) = default;

 private:
  constexpr explicit QType(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

// Row/column order used by every 15x15 composition table.
inline constexpr std::array<QType, 15> kTableOrder = {
    QType::from_bits(0b0001), QType::from_bits(0b0010), QType::from_bits(0b0100),
    QType::from_bits(0b1000), QType::from_bits(0b0011), QType::from_bits(0b0101),
    QType::from_bits(0b1001), QType::from_bits(0b0110), QType::from_bits(0b1010),
    QType::from_bits(0b1100), QType::from_bits(0b0111), QType::from_bits(0b1011),
    QType::from_bits(0b1101), QType::from_bits(0b1110), QType::from_bits(0b1111),
};

// Coefficient class of one quaternion-type component of a subspace.
// Bit 0 = real part allowed, bit 1 = imaginary part allowed.
enum class CoeffClass : std::uint8_t { Zero = 0, Real = 1, Imaginary = 2, Complex = 3 };

constexpr CoeffClass join(CoeffClass a, CoeffClass b) noexcept {
  return CoeffClass(std::uint8_t(a) | std::uint8_t(b));
}

constexpr CoeffClass multiply(CoeffClass a, CoeffClass b) noexcept {
  if (a == CoeffClass::Zero || b == CoeffClass::Zero) return CoeffClass::Zero;
  if (a == CoeffClass::Complex || b == CoeffClass::Complex) return CoeffClass::Complex;
  return a == b ? CoeffClass::Real : CoeffClass::Imaginary;
}

constexpr bool leq(CoeffClass a, CoeffClass b) noexcept {
  return (std::uint8_t(a) & ~std::uint8_t(b)) == 0;
}

// Per-residue coefficient classes, e.g. 2̄ ⊕ i0̄ = {Imaginary, Zero, Real, Zero}.
struct SubspacePattern {
  std::array<CoeffClass, 4> classes{};

  static SubspacePattern real(QType t);
  static SubspacePattern imaginary(QType t);
  static SubspacePattern complex(QType t);
  // Real part on `re`, imaginary part on `im`.
  static SubspacePattern mixed(QType re, QType im);
  // "02", "2+i0", "02+i13", "i01", "0123"; "0" alone is the real 0̄ type.
  static SubspacePattern parse(std::string_view text);

  CoeffClass operator[](int residue) const noexcept { return classes[residue]; }
  QType real_part() const noexcept;
  QType imaginary_part() const noexcept;
  QType support() const noexcept { return real_part() | imaginary_part(); }
  bool has_imaginary() const noexcept { return !imaginary_part().empty(); }

  bool subset_of(const SubspacePattern& other) const noexcept;
  std::string to_string() const;

  friend bool operator==(const SubspacePattern&, const SubspacePattern&) = default;
};

enum class OpKind { Commutator, Anticommutator, GeometricProduct };

std::string_view op_name(OpKind op);

// Assignment of the residues 0̄..3̄ to the roles E, I, J, K of an algebra of
// quaternion type.
struct QuaternionRoles {
  std::array<int, 4> residue_of;  // indexed by role E=0, I=1, J=2, K=3

  int role_of(int residue) const;
};

// E = 0̄, I = 1̄, J = 2̄, K = 3̄
inline constexpr QuaternionRoles kAnticommutatorRoles{{0, 1, 2, 3}};
// E = 2̄, I = 3̄, J = 0̄, K = 1̄
inline constexpr QuaternionRoles kCommutatorRoles{{2, 3, 0, 1}};

// Role composition of an algebra of quaternion type (returns a role index):
// E∘X = X∘E = X, X∘X = E, and any two distinct non-E roles give the third.
int quaternion_role_product(int role_a, int role_b) noexcept;

// 4x4 map of main types a, b to the main type of the op result.
using MainTable = std::array<std::array<int, 4>, 4>;

MainTable quaternion_table(const QuaternionRoles& roles);
const MainTable& main_table(OpKind op);  // Commutator or Anticommutator

int main_compose(OpKind op, int a, int b);

// Upper bound on the type of op(U, V) for U of type t1 and V of type t2.
QType qtype_compose(OpKind op, QType t1, QType t2);
QType qtype_compose(const MainTable& table, QType t1, QType t2);

SubspacePattern pattern_compose(OpKind op, const SubspacePattern& p1,
                                const SubspacePattern& p2);

bool is_closed(OpKind op, const SubspacePattern& p);

using TypeTable = std::array<std::array<QType, 15>, 15>;

TypeTable emit_table(OpKind op);

// Minimal type containing U: residues whose projection exceeds
// tol * (1 + inf_norm(U)).
QType detect_qtype(const Multivector& u, double tol = 1e-12);

// Minimal pattern containing U at the same relative tolerance.
SubspacePattern detect_pattern(const Multivector& u, double tol = 1e-12);

// Largest coefficient part of U that the pattern forbids (absolute).
double pattern_leakage(const Multivector& u, const SubspacePattern& p);

inline bool matches(const Multivector& u, const SubspacePattern& p, double tol = 0.0) {
  return pattern_leakage(u, p) <= tol;
}

}  // namespace quatype
