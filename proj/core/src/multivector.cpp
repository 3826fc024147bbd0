#include "quatype/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quatype/error.hpp"

namespace quatype {

namespace {

bool is_exact_zero(Scalar c) noexcept { return c.real() == 0.0 && c.imag() == 0.0; }

void check_coefficient(Scalar c, Field field) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw InvalidCoefficient("non-finite coefficient");
  }
  if (field == Field::Real && c.imag() != 0.0) {
    throw InvalidCoefficient("imaginary coefficient in a real multivector");
  }
}

void require_compatible(const Multivector& u, const Multivector& v) {
  if (!(u.signature() == v.signature())) throw SignatureMismatch();
  if (u.field() != v.field()) throw FieldMismatch();
}

// Merge two sorted term lists with `sign` applied to the second one.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, double sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].blade < b[j].blade)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].blade < a[i].blade) {
      out.push_back({b[j].blade, sign * b[j].coef});
      ++j;
    } else {
      const Scalar c = a[i].coef + sign * b[j].coef;
      if (!is_exact_zero(c)) out.push_back({a[i].blade, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Multivector::Multivector(Signature sig, Field field) : sig_(sig), field_(field) {}

Multivector::Multivector(Signature sig, Field field, std::vector<Term> terms)
    : sig_(sig), field_(field) {
  for (const Term& t : terms) {
    if (!t.blade.valid_for(sig)) {
      throw InvalidBlade("blade " + blade_name(t.blade) + " not in " + sig.to_string());
    }
    check_coefficient(t.coef, field);
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.blade < b.blade; });
  for (const Term& t : terms) {
    if (!terms_.empty() && terms_.back().blade == t.blade) {
      terms_.back().coef += t.coef;
    } else {
      terms_.push_back(t);
    }
  }
  std::erase_if(terms_, [](const Term& t) { return is_exact_zero(t.coef); });
  for (const Term& t : terms_) check_coefficient(t.coef, field);
}

Scalar Multivector::coefficient(Blade b) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const Term& t, Blade key) { return t.blade < key; });
  return (it != terms_.end() && it->blade == b) ? it->coef : Scalar{};
}

Multivector Multivector::with_field(Field field) const {
  if (field == Field::Real) {
    for (const Term& t : terms_) check_coefficient(t.coef, Field::Real);
  }
  return Multivector(sig_, field, terms_, Normalized{});
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (Term& t : out.terms_) t.coef = -t.coef;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& other) {
  require_compatible(*this, other);
  terms_ = merge_terms(terms_, other.terms_, 1.0);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  require_compatible(*this, other);
  terms_ = merge_terms(terms_, other.terms_, -1.0);
  return *this;
}

Multivector& Multivector::operator*=(Scalar factor) {
  check_coefficient(factor, field_);
  for (Term& t : terms_) t.coef *= factor;
  std::erase_if(terms_, [](const Term& t) { return is_exact_zero(t.coef); });
  for (const Term& t : terms_) check_coefficient(t.coef, field_);
  return *this;
}

Multivector add(const Multivector& u, const Multivector& v) { return u + v; }
Multivector subtract(const Multivector& u, const Multivector& v) { return u - v; }
Multivector scale(const Multivector& u, Scalar factor) { return u * factor; }

Multivector geometric_product(const Multivector& u, const Multivector& v) {
  require_compatible(u, v);
  const Signature& sig = u.sig_;
  if (u.empty() || v.empty()) return Multivector(sig, u.field_);

  std::vector<Scalar> acc(sig.blade_count());
  std::vector<char> touched(sig.blade_count(), 0);
  for (const Term& a : u.terms_) {
    for (const Term& b : v.terms_) {
      const BladeProduct bp = canonical_sign(a.blade, b.blade, sig);
      Scalar c = a.coef * b.coef;
      if (u.field_ == Field::Real) c = Scalar(a.coef.real() * b.coef.real(), 0.0);
      acc[bp.result.mask] += bp.sign > 0 ? c : -c;
      touched[bp.result.mask] = 1;
    }
  }
  std::vector<Term> out;
  for (std::uint32_t m = 0; m < acc.size(); ++m) {
    if (touched[m] && !is_exact_zero(acc[m])) out.push_back({Blade{m}, acc[m]});
  }
  for (const Term& t : out) check_coefficient(t.coef, u.field_);
  return Multivector(sig, u.field_, std::move(out), Multivector::Normalized{});
}

Multivector commutator(const Multivector& u, const Multivector& v) {
  return geometric_product(u, v) - geometric_product(v, u);
}

Multivector anticommutator(const Multivector& u, const Multivector& v) {
  return geometric_product(u, v) + geometric_product(v, u);
}

Multivector filter_terms_by_grade(const Multivector& u, std::uint32_t grade_mask) {
  std::vector<Term> out;
  for (const Term& t : u.terms_) {
    if ((grade_mask >> grade(t.blade)) & 1u) out.push_back(t);
  }
  return Multivector(u.sig_, u.field_, std::move(out), Multivector::Normalized{});
}

Multivector grade_project(const Multivector& u, int k) {
  if (k < 0 || k > u.signature().n()) {
    throw RankOutOfRange("rank " + std::to_string(k) + " outside [0, " +
                         std::to_string(u.signature().n()) + "]");
  }
  return filter_terms_by_grade(u, 1u << k);
}

Multivector parity_project(const Multivector& u, bool even) {
  return filter_terms_by_grade(u, even ? 0x55555555u : 0xAAAAAAAAu);
}

Multivector qtype_project(const Multivector& u, int kbar) {
  if (kbar < 0 || kbar > 3) {
    throw RankOutOfRange("quaternion type residue " + std::to_string(kbar) +
                         " outside [0, 3]");
  }
  return filter_terms_by_grade(u, 0x11111111u << kbar);
}

Multivector clifford_conjugate(const Multivector& u) {
  Multivector out = u;
  for (Term& t : out.terms_) {
    t.coef = std::conj(t.coef) * static_cast<double>(reversion_sign(t.blade));
    if (u.field_ == Field::Real) t.coef.imag(0.0);
  }
  return out;
}

double inf_norm(const Multivector& u) noexcept {
  double best = 0.0;
  for (const Term& t : u.terms()) {
    best = std::max(best, std::abs(t.coef.real()) + std::abs(t.coef.imag()));
  }
  return best;
}

double l1_norm(const Multivector& u) noexcept {
  double sum = 0.0;
  for (const Term& t : u.terms()) sum += std::abs(t.coef.real()) + std::abs(t.coef.imag());
  return sum;
}

double max_real_part(const Multivector& u) noexcept {
  double best = 0.0;
  for (const Term& t : u.terms()) best = std::max(best, std::abs(t.coef.real()));
  return best;
}

double max_imag_part(const Multivector& u) noexcept {
  double best = 0.0;
  for (const Term& t : u.terms()) best = std::max(best, std::abs(t.coef.imag()));
  return best;
}

Multivector mv_exp(const Multivector& u, double eps, int max_terms) {
  if (!(eps > 0.0)) throw std::invalid_argument("mv_exp: eps must be positive");
  if (max_terms < 1) throw std::invalid_argument("mv_exp: max_terms must be positive");

  // Halve until the l1 norm is at most 1. This also bounds the inf-norm by 1
  // and, since the l1 norm is submultiplicative, bounds every series term.
  int squarings = 0;
  double norm = l1_norm(u);
  while (norm > 1.0) {
    norm *= 0.5;
    ++squarings;
  }
  const Multivector x = u * Scalar(std::ldexp(1.0, -squarings), 0.0);

  Multivector sum = Multivector::identity(u.signature(), u.field());
  Multivector term = sum;
  for (int m = 1;; ++m) {
    if (m > max_terms) {
      throw ConvergenceFailure("exponential series did not converge within " +
                               std::to_string(max_terms) + " terms");
    }
    term = geometric_product(term, x) * Scalar(1.0 / m, 0.0);
    sum += term;
    if (inf_norm(term) < eps * (1.0 + inf_norm(sum))) break;
  }
  for (int i = 0; i < squarings; ++i) sum = geometric_product(sum, sum);
  return sum;
}

}  // namespace quatype
