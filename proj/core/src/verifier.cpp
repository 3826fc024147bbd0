#include "quatype/verifier.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "quatype/error.hpp"
#include "quatype/expression.hpp"
#include "quatype/sampling.hpp"

namespace quatype {

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string name) { report_.name = std::move(name); }

  const std::string& name() const { return report_.name; }
  void count(std::uint64_t n = 1) { report_.cases_run += n; }
  bool failed() const { return report_.status == Status::Fail; }
  void observe(double residual) {
    report_.max_residual = std::max(report_.max_residual, residual);
  }

  void fail(Counterexample c) {
    if (!report_.counterexample) report_.counterexample = std::move(c);
    report_.status = Status::Fail;
  }

  void note(const std::string& text) {
    if (!report_.notes.empty()) report_.notes += "; ";
    report_.notes += text;
  }

  void skip(const std::string& why) {
    report_.status = Status::Skipped;
    note(why);
  }

  CheckReport finish() && { return std::move(report_); }

 private:
  CheckReport report_;
};

std::string sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

std::string fixed1(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

Multivector apply(OpKind op, const Multivector& u, const Multivector& v) {
  switch (op) {
    case OpKind::Commutator:
      return commutator(u, v);
    case OpKind::Anticommutator:
      return anticommutator(u, v);
    case OpKind::GeometricProduct:
      break;
  }
  return geometric_product(u, v);
}

struct Leak {
  double magnitude = 0.0;
  int where = -1;  // offending residue or grade
};

// Largest |re|+|im| among terms whose grade residue is outside `allowed`.
Leak residue_leak(const Multivector& r, QType allowed) {
  Leak leak;
  for (const Term& t : r.terms()) {
    const int res = grade(t.blade) % 4;
    if (allowed.contains(res)) continue;
    const double m = std::abs(t.coef.real()) + std::abs(t.coef.imag());
    if (m > leak.magnitude) leak = {m, res};
  }
  return leak;
}

// Largest |re|+|im| among terms whose grade is not congruent to `residue`.
Leak grade_leak(const Multivector& r, int residue) {
  Leak leak;
  for (const Term& t : r.terms()) {
    const int g = grade(t.blade);
    if (g % 4 == residue) continue;
    const double m = std::abs(t.coef.real()) + std::abs(t.coef.imag());
    if (m > leak.magnitude) leak = {m, g};
  }
  return leak;
}

Counterexample make_counterexample(const Multivector& u, const Multivector& v, OpKind op,
                                   std::string projection, double magnitude) {
  return {format_expression(u), format_expression(v), std::string(op_name(op)),
          std::move(projection), magnitude};
}

Multivector blade_element(const Signature& sig, std::uint32_t mask) {
  return Multivector::basis(sig, Blade{mask});
}

std::string roles_text(const QuaternionRoles& roles) {
  static constexpr char kNames[] = {'E', 'I', 'J', 'K'};
  std::string out;
  for (int role = 0; role < 4; ++role) {
    if (role) out += ',';
    out += kNames[role];
    out += '=';
    out += char('0' + roles.residue_of[role]);
  }
  return out;
}

constexpr const char* kBilinearNote =
    "exhaustive over basis pairs; complete by bilinearity of the operation and "
    "linearity of the projections";

}  // namespace

CheckConfig CheckConfig::defaults_for(const Signature& sig) {
  CheckConfig cfg;
  cfg.sig = sig;
  cfg.strategy = sig.n() <= 6 ? Strategy::Exhaustive : Strategy::Random;
  return cfg;
}

void CheckConfig::validate() const {
  if (strategy == Strategy::Random && samples < 1) {
    throw std::invalid_argument("random strategy needs samples >= 1");
  }
  if (samples < 0) throw std::invalid_argument("samples must be nonnegative");
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
  if (!(exp_eps > 0.0)) throw std::invalid_argument("exp_eps must be positive");
  if (exp_max_terms < 1) throw std::invalid_argument("exp_max_terms must be positive");
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Quaternion-type axioms

CheckReport check_quaternion_axioms(OpKind op, const CheckConfig& cfg, const MainTable* table) {
  cfg.validate();
  if (op == OpKind::GeometricProduct) {
    throw std::invalid_argument("the geometric product is not of quaternion type");
  }
  const MainTable& rules = table ? *table : main_table(op);
  ReportBuilder rb("axioms." + std::string(op_name(op)));
  rb.note(std::string("roles ") +
          roles_text(op == OpKind::Commutator ? kCommutatorRoles : kAnticommutatorRoles));

  const Signature& sig = cfg.sig;
  auto judge = [&](const Multivector& u, const Multivector& v, int ra, int rb_, double tol) {
    const Multivector r = apply(op, u, v);
    const Leak leak = residue_leak(r, QType::main(rules[ra][rb_]));
    rb.count();
    rb.observe(leak.magnitude);
    if (leak.magnitude > tol) {
      rb.fail(make_counterexample(u, v, op, "type " + std::to_string(leak.where),
                                  leak.magnitude));
    }
  };

  if (cfg.strategy == Strategy::Exhaustive) {
    for (std::uint32_t a = 0; a < sig.blade_count(); ++a) {
      for (std::uint32_t b = 0; b < sig.blade_count(); ++b) {
        judge(blade_element(sig, a), blade_element(sig, b), grade(Blade{a}) % 4,
              grade(Blade{b}) % 4, 0.0);
      }
    }
    rb.note(kBilinearNote);
  } else {
    SplitMix64 rng(derive_seed(cfg.seed, rb.name()));
    for (int ra = 0; ra < 4; ++ra) {
      for (int rb_ = 0; rb_ < 4; ++rb_) {
        const auto pa = SubspacePattern::real(QType::main(ra));
        const auto pb = SubspacePattern::real(QType::main(rb_));
        for (int s = 0; s < cfg.samples; ++s) {
          judge(random_integer_element(rng, sig, Field::Real, pa),
                random_integer_element(rng, sig, Field::Real, pb), ra, rb_, cfg.tol);
        }
      }
    }
    rb.note("random integer samples per main-type pair");
  }
  return std::move(rb).finish();
}

// ---------------------------------------------------------------------------
// Grade pattern of commutators and anticommutators

int grade_pattern_residue(OpKind op, int k, int l) {
  if (op == OpKind::GeometricProduct) {
    throw std::invalid_argument("grade pattern is defined for (anti)commutators only");
  }
  if (k < l) std::swap(k, l);
  const bool special = (k % 2 == 0) && (l % 2 == 1);
  int s = k - l;
  if ((op == OpKind::Commutator) != special) s += 2;
  return s % 4;
}

CheckReport check_grade_pattern(const CheckConfig& cfg) {
  cfg.validate();
  ReportBuilder rb("grades");
  const Signature& sig = cfg.sig;

  auto judge = [&](OpKind op, const Multivector& u, const Multivector& v, int k, int l,
                   double tol) {
    const Multivector r = apply(op, u, v);
    const Leak leak = grade_leak(r, grade_pattern_residue(op, k, l));
    rb.count();
    rb.observe(leak.magnitude);
    if (leak.magnitude > tol) {
      rb.fail(make_counterexample(u, v, op, "grade " + std::to_string(leak.where),
                                  leak.magnitude));
    }
  };

  for (OpKind op : {OpKind::Commutator, OpKind::Anticommutator}) {
    if (cfg.strategy == Strategy::Exhaustive) {
      for (std::uint32_t a = 0; a < sig.blade_count(); ++a) {
        for (std::uint32_t b = 0; b < sig.blade_count(); ++b) {
          judge(op, blade_element(sig, a), blade_element(sig, b), grade(Blade{a}),
                grade(Blade{b}), 0.0);
        }
      }
    } else {
      SplitMix64 rng(derive_seed(cfg.seed, rb.name() + "." + std::string(op_name(op))));
      for (int k = 0; k <= sig.n(); ++k) {
        for (int l = 0; l <= sig.n(); ++l) {
          for (int s = 0; s < cfg.samples; ++s) {
            judge(op, random_grade_element(rng, sig, k), random_grade_element(rng, sig, l), k,
                  l, cfg.tol);
          }
        }
      }
    }
  }
  rb.note(cfg.strategy == Strategy::Exhaustive ? kBilinearNote
                                               : "random integer samples per rank pair");
  return std::move(rb).finish();
}

// ---------------------------------------------------------------------------
// 15x15 composition tables

CheckReport check_type_table(OpKind op, const CheckConfig& cfg) {
  cfg.validate();
  ReportBuilder rb("tables." + std::string(op_name(op)));
  const Signature& sig = cfg.sig;
  const TypeTable derived = emit_table(op);
  std::array<std::array<QType, 15>, 15> observed{};

  if (cfg.strategy == Strategy::Exhaustive) {
    // Types realized by basis pairs of each pair of main types; a cell's
    // realized type is the union over its main components.
    std::array<std::array<QType, 4>, 4> by_main{};
    for (std::uint32_t a = 0; a < sig.blade_count(); ++a) {
      for (std::uint32_t b = 0; b < sig.blade_count(); ++b) {
        const int ra = grade(Blade{a}) % 4, rb_ = grade(Blade{b}) % 4;
        const Multivector u = blade_element(sig, a), v = blade_element(sig, b);
        const Multivector r = apply(op, u, v);
        const QType allowed = qtype_compose(op, QType::main(ra), QType::main(rb_));
        const Leak leak = residue_leak(r, allowed);
        rb.count();
        rb.observe(leak.magnitude);
        if (leak.magnitude > 0.0) {
          rb.fail(make_counterexample(u, v, op, "type " + std::to_string(leak.where),
                                      leak.magnitude));
        }
        by_main[ra][rb_] |= detect_qtype(r, 0.0);
      }
    }
    for (std::size_t i = 0; i < 15; ++i) {
      for (std::size_t j = 0; j < 15; ++j) {
        for (int ra = 0; ra < 4; ++ra) {
          for (int rb_ = 0; rb_ < 4; ++rb_) {
            if (kTableOrder[i].contains(ra) && kTableOrder[j].contains(rb_)) {
              observed[i][j] |= by_main[ra][rb_];
            }
          }
        }
      }
    }
    rb.note(kBilinearNote);
  } else {
    SplitMix64 rng(derive_seed(cfg.seed, rb.name()));
    const int per_cell = std::max(1, cfg.samples / 10);
    for (std::size_t i = 0; i < 15; ++i) {
      for (std::size_t j = 0; j < 15; ++j) {
        const auto pa = SubspacePattern::real(kTableOrder[i]);
        const auto pb = SubspacePattern::real(kTableOrder[j]);
        for (int s = 0; s < per_cell; ++s) {
          const Multivector u = random_integer_element(rng, sig, Field::Real, pa);
          const Multivector v = random_integer_element(rng, sig, Field::Real, pb);
          const Multivector r = apply(op, u, v);
          const Leak leak = residue_leak(r, derived[i][j]);
          rb.count();
          rb.observe(leak.magnitude);
          if (leak.magnitude > cfg.tol * (1.0 + inf_norm(r))) {
            rb.fail(make_counterexample(u, v, op, "type " + std::to_string(leak.where),
                                        leak.magnitude));
          }
          observed[i][j] |= detect_qtype(r, cfg.tol);
        }
      }
    }
    rb.note("random integer samples per cell");
  }

  int realized = 0, possible = 0, loose_cells = 0;
  for (std::size_t i = 0; i < 15; ++i) {
    for (std::size_t j = 0; j < 15; ++j) {
      const QType cell = derived[i][j];
      if (!observed[i][j].subset_of(cell) && !rb.failed()) {
        rb.fail({kTableOrder[i].to_string(), kTableOrder[j].to_string(),
                 std::string(op_name(op)), "cell type " + observed[i][j].to_string(), 1.0});
      }
      const int hit = std::popcount(unsigned(observed[i][j].bits() & cell.bits()));
      const int all = std::popcount(unsigned(cell.bits()));
      realized += hit;
      possible += all;
      if (hit < all) ++loose_cells;
    }
  }
  rb.note("tightness " + std::to_string(realized) + "/" + std::to_string(possible) +
          " residues realized (" + fixed1(100.0 * realized / possible) + "%), " +
          std::to_string(loose_cells) + " of 225 cells not tight");
  return std::move(rb).finish();
}

// ---------------------------------------------------------------------------
// Closed subspaces

const std::vector<ClosureClaim>& subalgebra_claims() {
  static const std::vector<ClosureClaim> claims = [] {
    std::vector<ClosureClaim> out;
    auto add = [&](OpKind op, Field field, std::initializer_list<const char*> patterns) {
      for (const char* text : patterns) {
        out.push_back({"closure." + std::string(op_name(op)) +
                           (field == Field::Real ? ".R[" : ".C[") + text + "]",
                       op, SubspacePattern::parse(text), field});
      }
    };
    add(OpKind::GeometricProduct, Field::Real, {"02"});
    add(OpKind::GeometricProduct, Field::Complex, {"02", "02+i02", "02+i13", "0123"});
    add(OpKind::Commutator, Field::Real, {"2", "02", "12", "23"});
    add(OpKind::Commutator, Field::Complex,
        {"2", "02", "12", "23", "0123", "02+i02", "12+i12", "23+i23", "2+i0", "2+i1", "2+i2",
         "2+i3", "02+i13", "12+i03", "23+i01"});
    add(OpKind::Anticommutator, Field::Real, {"0", "01", "02", "03"});
    add(OpKind::Anticommutator, Field::Complex,
        {"0", "01", "02", "03", "0123", "01+i01", "02+i02", "03+i03", "0+i0", "0+i1", "0+i2",
         "0+i3", "01+i23", "02+i13", "03+i12"});
    return out;
  }();
  return claims;
}

namespace {

// Pairs of elements from two pattern subspaces: basis pairs when
// exhaustive, random integer elements otherwise.
void for_each_pattern_pair(const CheckConfig& cfg, SplitMix64& rng, Field field,
                           const SubspacePattern& pa, const SubspacePattern& pb,
                           const std::function<void(const Multivector&, const Multivector&)>& visit) {
  if (cfg.strategy == Strategy::Exhaustive) {
    const auto basis_a = pattern_basis(cfg.sig, pa, field);
    const auto basis_b = pattern_basis(cfg.sig, pb, field);
    for (const auto& u : basis_a) {
      for (const auto& v : basis_b) visit(u, v);
    }
  } else {
    for (int s = 0; s < cfg.samples; ++s) {
      const Multivector u = random_integer_element(rng, cfg.sig, field, pa);
      const Multivector v = random_integer_element(rng, cfg.sig, field, pb);
      visit(u, v);
    }
  }
}

double judge_tolerance(const CheckConfig& cfg) {
  return cfg.strategy == Strategy::Exhaustive ? 0.0 : cfg.tol;
}

}  // namespace

CheckReport check_subspace_closure(const ClosureClaim& claim, const CheckConfig& cfg) {
  cfg.validate();
  ReportBuilder rb(claim.name);
  if (claim.field == Field::Real && claim.pattern.has_imaginary()) {
    throw std::invalid_argument("real closure claim with an imaginary component");
  }
  const SubspacePattern composed = pattern_compose(claim.op, claim.pattern, claim.pattern);
  const bool abstract_closed = composed.subset_of(claim.pattern);
  rb.note("abstract: " + std::string(op_name(claim.op)) + " of " + claim.pattern.to_string() +
          " lies in " + composed.to_string() + (abstract_closed ? " (closed)" : " (not closed)"));

  SplitMix64 rng(derive_seed(cfg.seed, claim.name));
  const double tol = judge_tolerance(cfg);
  for_each_pattern_pair(cfg, rng, claim.field, claim.pattern, claim.pattern,
                        [&](const Multivector& u, const Multivector& v) {
                          const Multivector r = apply(claim.op, u, v);
                          const double leak = pattern_leakage(r, claim.pattern);
                          rb.count();
                          rb.observe(leak);
                          if (leak > tol) {
                            rb.fail(make_counterexample(
                                u, v, claim.op,
                                "pattern " + detect_pattern(r, 0.0).to_string() + " outside " +
                                    claim.pattern.to_string(),
                                leak));
                          }
                        });
  if (!abstract_closed) {
    rb.fail({claim.pattern.to_string(), claim.pattern.to_string(), std::string(op_name(claim.op)),
             "abstract composition " + composed.to_string(), 1.0});
  }
  rb.note(cfg.strategy == Strategy::Exhaustive ? "concrete: all basis pairs"
                                               : "concrete: random integer samples");
  return std::move(rb).finish();
}

std::vector<CheckReport> check_subalgebra_theorems(const CheckConfig& cfg) {
  std::vector<CheckReport> out;
  for (const auto& claim : subalgebra_claims()) out.push_back(check_subspace_closure(claim, cfg));
  return out;
}

// ---------------------------------------------------------------------------
// Pseudo-unitary group and its Lie algebra

bool is_pseudo_unitary(const Multivector& u, double tol) {
  const Multivector defect =
      clifford_conjugate(u) * u - Multivector::identity(u.signature(), u.field());
  return inf_norm(defect) <= tol;
}

bool is_in_wc(const Multivector& u, double tol) {
  return inf_norm(clifford_conjugate(u) + u) <= tol;
}

SubspacePattern wc_pattern() { return SubspacePattern::parse("23+i01"); }

CheckReport check_lie_algebra_quaternion_type(const CheckConfig& cfg) {
  cfg.validate();
  ReportBuilder rb("lie_algebra_types");
  // Roles E, I, J, K.
  const std::array<SubspacePattern, 4> parts = {
      SubspacePattern::parse("2"), SubspacePattern::parse("3"), SubspacePattern::parse("i0"),
      SubspacePattern::parse("i1")};
  rb.note("roles E=2,I=3,J=i0,K=i1");

  SplitMix64 rng(derive_seed(cfg.seed, rb.name()));
  const double tol = judge_tolerance(cfg);
  int abstract_ok = 0;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      const SubspacePattern& target = parts[quaternion_role_product(x, y)];
      const SubspacePattern composed = pattern_compose(OpKind::Commutator, parts[x], parts[y]);
      if (composed.subset_of(target)) {
        ++abstract_ok;
      } else {
        rb.fail({parts[x].to_string(), parts[y].to_string(), "commutator",
                 "abstract composition " + composed.to_string() + " outside " +
                     target.to_string(),
                 1.0});
      }
      for_each_pattern_pair(cfg, rng, Field::Complex, parts[x], parts[y],
                            [&](const Multivector& u, const Multivector& v) {
                              const Multivector r = commutator(u, v);
                              const double leak = pattern_leakage(r, target);
                              rb.count();
                              rb.observe(leak);
                              if (leak > tol) {
                                rb.fail(make_counterexample(u, v, OpKind::Commutator,
                                                            "outside " + target.to_string(),
                                                            leak));
                              }
                            });
    }
  }
  rb.note("abstract relations reproduced " + std::to_string(abstract_ok) + "/16");
  return std::move(rb).finish();
}

const std::vector<LieGroupRow>& lie_group_rows() {
  static const std::vector<LieGroupRow> rows = {
      {"2", SubspacePattern::parse("2"), SubspacePattern::parse("02")},
      {"2+i0", SubspacePattern::parse("2+i0"), SubspacePattern::parse("02+i02")},
      {"2+i1", SubspacePattern::parse("2+i1"), SubspacePattern::parse("02+i13")},
      {"23", SubspacePattern::parse("23"), SubspacePattern::parse("0123")},
  };
  return rows;
}

std::vector<CheckReport> check_lie_subalgebras(const CheckConfig& cfg) {
  cfg.validate();
  std::vector<CheckReport> out;
  const SubspacePattern wc = wc_pattern();
  for (const LieGroupRow& row : lie_group_rows()) {
    ReportBuilder rb("lie_subalgebra[" + row.name + "]");
    const SubspacePattern& p = row.algebra;
    if (!is_closed(OpKind::Commutator, p)) {
      rb.fail({p.to_string(), p.to_string(), "commutator",
               "abstract composition " +
                   pattern_compose(OpKind::Commutator, p, p).to_string(),
               1.0});
    }
    if (!p.subset_of(wc)) {
      rb.fail({p.to_string(), "", "membership", "pattern outside " + wc.to_string(), 1.0});
    }

    SplitMix64 rng(derive_seed(cfg.seed, rb.name()));
    const double tol = judge_tolerance(cfg);
    // u* = -u and the pattern description of wC must agree on every element seen.
    auto in_algebra = [&](const Multivector& x, const Multivector& u, const Multivector& v) {
      const double by_conjugation = inf_norm(clifford_conjugate(x) + x);
      rb.observe(by_conjugation);
      const bool by_pattern = matches(x, wc, tol);
      if (by_conjugation > tol) {
        rb.fail(make_counterexample(u, v, OpKind::Commutator, "u* + u of " +
                                    format_expression(x), by_conjugation));
      } else if (!by_pattern) {
        rb.fail(make_counterexample(u, v, OpKind::Commutator,
                                    "membership criteria disagree on " + format_expression(x),
                                    pattern_leakage(x, wc)));
      }
    };
    for_each_pattern_pair(cfg, rng, Field::Complex, p, p,
                          [&](const Multivector& u, const Multivector& v) {
                            const Multivector r = commutator(u, v);
                            rb.count();
                            const double leak = pattern_leakage(r, p);
                            rb.observe(leak);
                            if (leak > tol) {
                              rb.fail(make_counterexample(u, v, OpKind::Commutator,
                                                          "outside " + p.to_string(), leak));
                            }
                            in_algebra(u, u, v);
                            in_algebra(r, u, v);
                          });
    rb.note("commutator-closed and inside " + wc.to_string());
    out.push_back(std::move(rb).finish());
  }
  return out;
}

std::vector<CheckReport> check_unitary_subgroups(const CheckConfig& cfg) {
  cfg.validate();
  std::vector<CheckReport> out;
  const Multivector zero(cfg.sig, Field::Complex);
  for (const LieGroupRow& row : lie_group_rows()) {
    ReportBuilder rb("unitary_subgroup[" + row.name + "]");
    SplitMix64 rng(derive_seed(cfg.seed, rb.name()));
    double worst_defect = 0.0, worst_leak = 0.0;
    const int samples = std::max(1, cfg.samples);
    for (int s = 0; s <= samples; ++s) {
      const Multivector u =
          s == 0 ? zero : random_float_element(rng, cfg.sig, Field::Complex, row.algebra, 1.0);
      rb.count();
      // First-order condition u* = -u holds exactly for these coefficients.
      const double first_order = inf_norm(clifford_conjugate(u) + u);
      rb.observe(first_order);
      if (first_order > 0.0) {
        rb.fail(make_counterexample(u, zero, OpKind::GeometricProduct, "u* + u", first_order));
      }
      const Multivector g = mv_exp(u, cfg.exp_eps, cfg.exp_max_terms);
      const double size = std::max(1.0, l1_norm(g));
      const double defect =
          inf_norm(clifford_conjugate(g) * g - Multivector::identity(cfg.sig, Field::Complex));
      const double leak = pattern_leakage(g, row.group);
      rb.observe(defect);
      rb.observe(leak);
      worst_defect = std::max(worst_defect, defect / (size * size));
      worst_leak = std::max(worst_leak, leak / size);
      if (defect > kGroupTolerance * size * size) {
        rb.fail(make_counterexample(u, zero, OpKind::GeometricProduct, "U*U - e for U = exp(u)",
                                    defect));
      }
      if (leak > kGroupTolerance * size) {
        rb.fail(make_counterexample(u, zero, OpKind::GeometricProduct,
                                    "exp(u) outside " + row.group.to_string(), leak));
      }
    }
    rb.note("group " + row.group.to_string() + "; max |U*U - e|/|U|^2 " + sci(worst_defect) +
            ", max leakage/|U| " + sci(worst_leak) + ", tolerance " + sci(kGroupTolerance) +
            " (|U| = max(1, l1 norm))");
    out.push_back(std::move(rb).finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degenerate small dimensions and sanity checks

CheckReport check_rank_coincidence(const CheckConfig& cfg) {
  cfg.validate();
  ReportBuilder rb("rank");
  const Signature& sig = cfg.sig;
  if (sig.n() >= 4) {
    rb.skip("n = " + std::to_string(sig.n()) + " >= 4: quaternion type and rank differ");
    return std::move(rb).finish();
  }
  auto compare = [&](const Multivector& u) {
    rb.count();
    for (int k = 0; k <= sig.n(); ++k) {
      const Multivector diff = qtype_project(u, k) - grade_project(u, k);
      rb.observe(inf_norm(diff));
      if (!diff.empty()) {
        rb.fail(make_counterexample(u, u, OpKind::GeometricProduct,
                                    "type " + std::to_string(k) + " vs rank " +
                                        std::to_string(k),
                                    inf_norm(diff)));
      }
    }
    for (int k = sig.n() + 1; k < 4; ++k) {
      const Multivector extra = qtype_project(u, k);
      if (!extra.empty()) {
        rb.fail(make_counterexample(u, u, OpKind::GeometricProduct,
                                    "type " + std::to_string(k) + " above n", inf_norm(extra)));
      }
    }
  };
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m) {
    const Multivector u = blade_element(sig, m);
    const QType detected = detect_qtype(u, 0.0);
    if (detected != QType::main(grade(Blade{m}))) {
      rb.fail(make_counterexample(u, u, OpKind::GeometricProduct,
                                  "detected type " + detected.to_string(), 1.0));
    }
    compare(u);
  }
  SplitMix64 rng(derive_seed(cfg.seed, rb.name()));
  for (int s = 0; s < cfg.samples; ++s) {
    compare(random_integer_element(rng, sig, Field::Real, SubspacePattern::real(QType::full())));
  }
  rb.note("every basis blade plus random integer elements");
  return std::move(rb).finish();
}

CheckReport check_quaternion_relations() {
  ReportBuilder rb("quaternions");
  const Signature sig(0, 2);
  const Multivector e = Multivector::identity(sig);
  const Multivector i = Multivector::basis(sig, Blade::generator(1));
  const Multivector j = Multivector::basis(sig, Blade::generator(2));
  const Multivector k = Multivector::basis(sig, Blade{0b11});
  struct Relation {
    const Multivector& a;
    const Multivector& b;
    Multivector expected;
  };
  const Relation relations[] = {
      {i, i, -e}, {j, j, -e}, {k, k, -e}, {i, j, k},  {j, i, -k},
      {j, k, i},  {k, j, -i}, {k, i, j},  {i, k, -j},
  };
  for (const Relation& rel : relations) {
    rb.count();
    const Multivector diff = rel.a * rel.b - rel.expected;
    rb.observe(inf_norm(diff));
    if (!diff.empty()) {
      rb.fail(make_counterexample(rel.a, rel.b, OpKind::GeometricProduct,
                                  "expected " + format_expression(rel.expected), inf_norm(diff)));
    }
  }
  rb.note("Cl(0,2) with i=e1, j=e2, k=e12");
  return std::move(rb).finish();
}

CheckReport check_structural_identities(const CheckConfig& cfg) {
  cfg.validate();
  ReportBuilder rb("structure");
  const Signature& sig = cfg.sig;
  const auto everything = SubspacePattern::complex(QType::full());
  SplitMix64 rng(derive_seed(cfg.seed, rb.name()));

  // Each identity yields a residual that must vanish, and the scale the
  // residual is measured against.
  struct Residual {
    const char* name;
    Multivector value;
    double scale;
  };
  auto identities = [&](const Multivector& u, const Multivector& v, const Multivector& w,
                        Scalar lambda) {
    const double nu = l1_norm(u), nv = l1_norm(v), nw = l1_norm(w);
    const Multivector uv = u * v;
    std::vector<Residual> out;
    out.push_back({"UV = [U,V]/2 + {U,V}/2",
                   uv - (commutator(u, v) + anticommutator(u, v)) * Scalar(0.5), nu * nv});
    out.push_back({"[U,V] = -[V,U]", commutator(u, v) + commutator(v, u), nu * nv});
    out.push_back({"{U,V} = {V,U}", anticommutator(u, v) - anticommutator(v, u), nu * nv});
    out.push_back({"Jacobi",
                   commutator(commutator(u, v), w) + commutator(commutator(v, w), u) +
                       commutator(commutator(w, u), v),
                   nu * nv * nw});
    out.push_back({"(UV)W = U(VW)", uv * w - u * (v * w), nu * nv * nw});
    out.push_back({"(U*)* = U", clifford_conjugate(clifford_conjugate(u)) - u, nu});
    out.push_back({"(UV)* = V*U*", clifford_conjugate(uv) - clifford_conjugate(v) * clifford_conjugate(u),
                   nu * nv});
    out.push_back({"(λU)* = conj(λ)U*",
                   clifford_conjugate(u * lambda) - clifford_conjugate(u) * std::conj(lambda),
                   std::abs(lambda) * nu});
    Multivector total(sig, u.field());
    for (int kb = 0; kb < 4; ++kb) {
      const Multivector part = qtype_project(u, kb);
      total += part;
      out.push_back({"idempotent projection", qtype_project(part, kb) - part, nu});
      for (int other = 0; other < 4; ++other) {
        if (other != kb) out.push_back({"orthogonal projections", qtype_project(part, other), nu});
      }
      Multivector by_grades(sig, u.field());
      for (int g = kb; g <= sig.n(); g += 4) by_grades += grade_project(u, g);
      out.push_back({"type = sum of ranks", part - by_grades, nu});
    }
    out.push_back({"sum of type projections", total - u, nu});
    return out;
  };

  auto judge = [&](const Multivector& u, const Multivector& v, const Multivector& w,
                   Scalar lambda, bool exact) {
    for (Residual& r : identities(u, v, w, lambda)) {
      rb.count();
      const double bound = exact ? 0.0 : cfg.tol * std::max(1.0, r.scale);
      const double size = inf_norm(r.value);
      rb.observe(size);
      if (size > bound) {
        rb.fail(make_counterexample(u, v, OpKind::GeometricProduct, r.name, size));
      }
    }
  };

  const int samples = std::max(1, cfg.samples);
  for (int s = 0; s < samples; ++s) {
    const Multivector u = random_integer_element(rng, sig, Field::Complex, everything);
    const Multivector v = random_integer_element(rng, sig, Field::Complex, everything);
    const Multivector w = random_integer_element(rng, sig, Field::Complex, everything);
    const Scalar lambda(double(rng.uniform_int(-3, 3)), double(rng.uniform_int(-3, 3)));
    judge(u, v, w, lambda, true);
  }
  for (int s = 0; s < samples; ++s) {
    const Multivector u = random_float_element(rng, sig, Field::Complex, everything);
    const Multivector v = random_float_element(rng, sig, Field::Complex, everything);
    const Multivector w = random_float_element(rng, sig, Field::Complex, everything);
    const Scalar lambda(rng.uniform_signed(), rng.uniform_signed());
    judge(u, v, w, lambda, false);
  }
  rb.note(std::to_string(samples) + " integer triples exact, " + std::to_string(samples) +
          " float triples at relative tolerance " + sci(cfg.tol));
  return std::move(rb).finish();
}

// ---------------------------------------------------------------------------
// Suite

namespace {

CheckReport merge(std::string name, std::vector<CheckReport> parts) {
  CheckReport out;
  out.name = std::move(name);
  for (CheckReport& part : parts) {
    out.cases_run += part.cases_run;
    out.max_residual = std::max(out.max_residual, part.max_residual);
    if (part.status == Status::Fail) {
      out.status = Status::Fail;
      if (!out.counterexample) out.counterexample = part.counterexample;
    }
    if (!out.notes.empty()) out.notes += " | ";
    out.notes += part.name + ": " + part.notes;
  }
  return out;
}

using Runner = std::function<std::vector<CheckReport>(const CheckConfig&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> checks = {
      {"axioms",
       [](const CheckConfig& cfg) {
         return std::vector{merge("axioms", {check_quaternion_axioms(OpKind::Commutator, cfg),
                                             check_quaternion_axioms(OpKind::Anticommutator, cfg)})};
       }},
      {"grades", [](const CheckConfig& cfg) { return std::vector{check_grade_pattern(cfg)}; }},
      {"tables",
       [](const CheckConfig& cfg) {
         return std::vector{check_type_table(OpKind::GeometricProduct, cfg),
                            check_type_table(OpKind::Commutator, cfg),
                            check_type_table(OpKind::Anticommutator, cfg)};
       }},
      {"subalgebras", check_subalgebra_theorems},
      {"lie_algebra_types",
       [](const CheckConfig& cfg) { return std::vector{check_lie_algebra_quaternion_type(cfg)}; }},
      {"lie_subalgebras", check_lie_subalgebras},
      {"unitary_subgroups", check_unitary_subgroups},
      {"rank", [](const CheckConfig& cfg) { return std::vector{check_rank_coincidence(cfg)}; }},
      {"quaternions", [](const CheckConfig&) { return std::vector{check_quaternion_relations()}; }},
      {"structure",
       [](const CheckConfig& cfg) { return std::vector{check_structural_identities(cfg)}; }},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckReport> run_suite(std::span<const std::string> names, const CheckConfig& cfg) {
  std::vector<const Runner*> plan;
  for (const std::string& name : names) {
    const auto& checks = registry();
    const auto it = std::find_if(checks.begin(), checks.end(),
                                 [&](const auto& entry) { return entry.first == name; });
    if (it == checks.end()) throw UnknownCheck(name);
    plan.push_back(&it->second);
  }
  cfg.validate();
  std::vector<CheckReport> out;
  for (const Runner* run : plan) {
    auto part = (*run)(cfg);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace quatype
