#include "quatype/qtype.hpp"

#include <algorithm>

#include "quatype/error.hpp"

namespace quatype {

QType QType::parse(std::string_view digits) {
  std::uint8_t bits = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '3') throw ParseError("expected a residue digit 0-3", i);
    const auto bit = std::uint8_t(1u << (c - '0'));
    if (bits >= bit) throw ParseError("residue digits must be strictly increasing", i);
    bits |= bit;
  }
  return QType(bits);
}

std::string QType::to_string() const {
  std::string out;
  for (int r = 0; r < 4; ++r) {
    if (contains(r)) out += char('0' + r);
  }
  return out;
}

SubspacePattern SubspacePattern::real(QType t) { return mixed(t, QType{}); }
SubspacePattern SubspacePattern::imaginary(QType t) { return mixed(QType{}, t); }
SubspacePattern SubspacePattern::complex(QType t) { return mixed(t, t); }

SubspacePattern SubspacePattern::mixed(QType re, QType im) {
  SubspacePattern p;
  for (int r = 0; r < 4; ++r) {
    p.classes[r] = CoeffClass((re.contains(r) ? 1 : 0) | (im.contains(r) ? 2 : 0));
  }
  return p;
}

SubspacePattern SubspacePattern::parse(std::string_view text) {
  std::string_view re_text = text;
  std::string_view im_text;
  std::size_t im_offset = 0;
  if (const auto plus = text.find("+i"); plus != std::string_view::npos) {
    re_text = text.substr(0, plus);
    im_text = text.substr(plus + 2);
    im_offset = plus + 2;
  } else if (!text.empty() && text.front() == 'i') {
    re_text = {};
    im_text = text.substr(1);
    im_offset = 1;
  }
  QType re, im;
  try {
    re = QType::parse(re_text);
  } catch (const ParseError& e) {
    throw ParseError("bad subspace pattern '" + std::string(text) + "'", e.position());
  }
  try {
    im = QType::parse(im_text);
  } catch (const ParseError& e) {
    throw ParseError("bad subspace pattern '" + std::string(text) + "'",
                     im_offset + e.position());
  }
  return mixed(re, im);
}

QType SubspacePattern::real_part() const noexcept {
  std::uint8_t bits = 0;
  for (int r = 0; r < 4; ++r) {
    if (std::uint8_t(classes[r]) & 1u) bits |= std::uint8_t(1u << r);
  }
  return QType::from_bits(bits);
}

QType SubspacePattern::imaginary_part() const noexcept {
  std::uint8_t bits = 0;
  for (int r = 0; r < 4; ++r) {
    if (std::uint8_t(classes[r]) & 2u) bits |= std::uint8_t(1u << r);
  }
  return QType::from_bits(bits);
}

bool SubspacePattern::subset_of(const SubspacePattern& other) const noexcept {
  for (int r = 0; r < 4; ++r) {
    if (!leq(classes[r], other.classes[r])) return false;
  }
  return true;
}

std::string SubspacePattern::to_string() const {
  const QType re = real_part();
  const QType im = imaginary_part();
  if (im.empty()) return re.empty() ? std::string("{}") : re.to_string();
  if (re.empty()) return "i" + im.to_string();
  return re.to_string() + "+i" + im.to_string();
}

std::string_view op_name(OpKind op) {
  switch (op) {
    case OpKind::Commutator:
      return "commutator";
    case OpKind::Anticommutator:
      return "anticommutator";
    case OpKind::GeometricProduct:
      return "product";
  }
  return "?";
}

int QuaternionRoles::role_of(int residue) const {
  const auto it = std::find(residue_of.begin(), residue_of.end(), residue);
  if (it == residue_of.end()) throw std::invalid_argument("residue has no role");
  return int(it - residue_of.begin());
}

int quaternion_role_product(int a, int b) noexcept {
  constexpr int E = 0;
  if (a == E) return b;
  if (b == E) return a;
  if (a == b) return E;
  return 6 - a - b;  // the remaining one of I=1, J=2, K=3
}

MainTable quaternion_table(const QuaternionRoles& roles) {
  MainTable table{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      table[a][b] =
          roles.residue_of[quaternion_role_product(roles.role_of(a), roles.role_of(b))];
    }
  }
  return table;
}

const MainTable& main_table(OpKind op) {
  static const MainTable commutator = quaternion_table(kCommutatorRoles);
  static const MainTable anticommutator = quaternion_table(kAnticommutatorRoles);
  switch (op) {
    case OpKind::Commutator:
      return commutator;
    case OpKind::Anticommutator:
      return anticommutator;
    case OpKind::GeometricProduct:
      break;
  }
  throw std::invalid_argument("main_table: the geometric product has no single main type");
}

int main_compose(OpKind op, int a, int b) {
  if (a < 0 || a > 3 || b < 0 || b > 3) throw std::invalid_argument("main type out of range");
  return main_table(op)[a][b];
}

QType qtype_compose(const MainTable& table, QType t1, QType t2) {
  QType out;
  for (int a = 0; a < 4; ++a) {
    if (!t1.contains(a)) continue;
    for (int b = 0; b < 4; ++b) {
      if (t2.contains(b)) out |= QType::main(table[a][b]);
    }
  }
  return out;
}

QType qtype_compose(OpKind op, QType t1, QType t2) {
  if (op == OpKind::GeometricProduct) {
    return qtype_compose(OpKind::Commutator, t1, t2) |
           qtype_compose(OpKind::Anticommutator, t1, t2);
  }
  return qtype_compose(main_table(op), t1, t2);
}

SubspacePattern pattern_compose(OpKind op, const SubspacePattern& p1,
                                const SubspacePattern& p2) {
  if (op == OpKind::GeometricProduct) {
    const auto c = pattern_compose(OpKind::Commutator, p1, p2);
    const auto a = pattern_compose(OpKind::Anticommutator, p1, p2);
    SubspacePattern out;
    for (int r = 0; r < 4; ++r) out.classes[r] = join(c.classes[r], a.classes[r]);
    return out;
  }
  const MainTable& table = main_table(op);
  SubspacePattern out;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      CoeffClass& target = out.classes[table[a][b]];
      target = join(target, multiply(p1.classes[a], p2.classes[b]));
    }
  }
  return out;
}

bool is_closed(OpKind op, const SubspacePattern& p) {
  return pattern_compose(op, p, p).subset_of(p);
}

TypeTable emit_table(OpKind op) {
  TypeTable table{};
  for (std::size_t i = 0; i < kTableOrder.size(); ++i) {
    for (std::size_t j = 0; j < kTableOrder.size(); ++j) {
      table[i][j] = qtype_compose(op, kTableOrder[i], kTableOrder[j]);
    }
  }
  return table;
}

QType detect_qtype(const Multivector& u, double tol) {
  const double threshold = tol * (1.0 + inf_norm(u));
  std::array<double, 4> largest{};
  for (const Term& t : u.terms()) {
    double& slot = largest[grade(t.blade) % 4];
    slot = std::max(slot, std::abs(t.coef.real()) + std::abs(t.coef.imag()));
  }
  std::uint8_t bits = 0;
  for (int r = 0; r < 4; ++r) {
    if (largest[r] > threshold) bits |= std::uint8_t(1u << r);
  }
  return QType::from_bits(bits);
}

SubspacePattern detect_pattern(const Multivector& u, double tol) {
  const double threshold = tol * (1.0 + inf_norm(u));
  std::array<double, 4> re{}, im{};
  for (const Term& t : u.terms()) {
    const int r = grade(t.blade) % 4;
    re[r] = std::max(re[r], std::abs(t.coef.real()));
    im[r] = std::max(im[r], std::abs(t.coef.imag()));
  }
  SubspacePattern p;
  for (int r = 0; r < 4; ++r) {
    p.classes[r] = CoeffClass((re[r] > threshold ? 1 : 0) | (im[r] > threshold ? 2 : 0));
  }
  return p;
}

double pattern_leakage(const Multivector& u, const SubspacePattern& p) {
  double worst = 0.0;
  for (const Term& t : u.terms()) {
    const auto allowed = std::uint8_t(p.classes[grade(t.blade) % 4]);
    if (!(allowed & 1u)) worst = std::max(worst, std::abs(t.coef.real()));
    if (!(allowed & 2u)) worst = std::max(worst, std::abs(t.coef.imag()));
  }
  return worst;
}

}  // namespace quatype
