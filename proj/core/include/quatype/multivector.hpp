#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "quatype/blade.hpp"

namespace quatype {

using Scalar = std::complex<double>;

enum class Field { Real, Complex };

struct Term {
  Blade blade;
  Scalar coef;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse element of Cl^R(p,q) or Cl^C(p,q).
//
// Terms are kept sorted by blade mask with no exact-zero coefficients.
// Near-zero coefficients are never dropped implicitly; use is_zero() or a
// tolerance-aware projection instead. Coefficients are finite, and a Real
// multivector has every imaginary part equal to zero.
class Multivector {
 public:
  explicit Multivector(Signature sig, Field field = Field::Real);

  // Duplicate blades are summed. Throws InvalidBlade / InvalidCoefficient.
  Multivector(Signature sig, Field field, std::vector<Term> terms);
  Multivector(Signature sig, Field field, std::initializer_list<Term> terms)
      : Multivector(sig, field, std::vector<Term>(terms)) {}

  static Multivector identity(Signature sig, Field field = Field::Real) {
    return Multivector(sig, field, {{Blade::identity(), 1.0}});
  }
  static Multivector basis(Signature sig, Blade b, Scalar coef = 1.0,
                           Field field = Field::Real) {
    return Multivector(sig, field, {{b, coef}});
  }

  const Signature& signature() const noexcept { return sig_; }
  Field field() const noexcept { return field_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  Scalar coefficient(Blade b) const noexcept;

  // Same terms, complex field. Converting to Real requires zero imaginary parts.
  Multivector with_field(Field field) const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(Scalar factor);

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  struct Normalized {};
  Multivector(Signature sig, Field field, std::vector<Term> terms, Normalized)
      : sig_(sig), field_(field), terms_(std::move(terms)) {}

  friend Multivector geometric_product(const Multivector&, const Multivector&);
  friend Multivector filter_terms_by_grade(const Multivector&, std::uint32_t);
  friend Multivector clifford_conjugate(const Multivector&);

  Signature sig_;
  Field field_;
  std::vector<Term> terms_;
};

Multivector add(const Multivector& u, const Multivector& v);
Multivector subtract(const Multivector& u, const Multivector& v);
Multivector scale(const Multivector& u, Scalar factor);

inline Multivector operator+(Multivector u, const Multivector& v) { return u += v; }
inline Multivector operator-(Multivector u, const Multivector& v) { return u -= v; }
inline Multivector operator*(Multivector u, Scalar s) { return u *= s; }
inline Multivector operator*(Scalar s, Multivector u) { return u *= s; }

// Bilinear extension of the blade product; throws SignatureMismatch or
// FieldMismatch on incompatible operands.
Multivector geometric_product(const Multivector& u, const Multivector& v);
inline Multivector operator*(const Multivector& u, const Multivector& v) {
  return geometric_product(u, v);
}

// [U,V] = UV - VU
Multivector commutator(const Multivector& u, const Multivector& v);
// {U,V} = UV + VU
Multivector anticommutator(const Multivector& u, const Multivector& v);

// Keeps the terms whose grade bit is set in `grade_mask` (bit k = grade k).
Multivector filter_terms_by_grade(const Multivector& u, std::uint32_t grade_mask);

// Rank-k part. Throws RankOutOfRange unless 0 <= k <= n.
Multivector grade_project(const Multivector& u, int k);
Multivector parity_project(const Multivector& u, bool even);
// Terms with grade = kbar (mod 4). kbar must be in 0..3.
Multivector qtype_project(const Multivector& u, int kbar);

// Reversion of generator order in every blade combined with complex
// conjugation of the coefficients: (λ e^{a1}...e^{ak})* = conj(λ) e^{ak}...e^{a1}.
Multivector clifford_conjugate(const Multivector& u);

// Exponential by truncated Taylor series with scaling and squaring. Throws
// ConvergenceFailure if the series needs more than `max_terms` terms.
Multivector mv_exp(const Multivector& u, double eps = 1e-14, int max_terms = 200);

// max over terms of |re| + |im|
double inf_norm(const Multivector& u) noexcept;
// sum over terms of |re| + |im|; submultiplicative under the geometric product
double l1_norm(const Multivector& u) noexcept;
inline bool is_zero(const Multivector& u, double tol = 0.0) noexcept {
  return inf_norm(u) <= tol;
}

// Largest |re| and |im| among the terms of u.
double max_real_part(const Multivector& u) noexcept;
double max_imag_part(const Multivector& u) noexcept;

}  // namespace quatype
