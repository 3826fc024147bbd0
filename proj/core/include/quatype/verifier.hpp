#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quatype/multivector.hpp"
#include "quatype/qtype.hpp"

namespace quatype {

enum class Strategy { Exhaustive, Random };

struct CheckConfig {
  Signature sig{2, 2};
  std::uint64_t seed = 0;
  int samples = 200;
  double tol = 1e-12;
  Strategy strategy = Strategy::Exhaustive;
  double exp_eps = 1e-14;
  int exp_max_terms = 200;

  // Exhaustive for n <= 6, Random otherwise; all other fields at defaults.
  static CheckConfig defaults_for(const Signature& sig);

  // Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

enum class Status { Pass, Fail, Skipped };

std::string_view status_name(Status s);

struct Counterexample {
  std::string lhs;
  std::string rhs;
  std::string operation;
  std::string projection;  // which forbidden part is nonzero
  double magnitude = 0.0;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

// A Fail always carries a counterexample whose magnitude exceeds the
// tolerance it was judged against.
struct CheckReport {
  std::string name;
  Status status = Status::Pass;
  std::uint64_t cases_run = 0;
  std::optional<Counterexample> counterexample;
  std::string notes;
  // Largest absolute residual or forbidden magnitude seen over all cases.
  double max_residual = 0.0;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

// Elements of the main types combine as the quaternion table of `op`
// prescribes: every op(E_a, E_b) has no component outside
// table[a mod 4][b mod 4]. `table` defaults to main_table(op); pass a
// different one to check a claimed composition rule.
CheckReport check_quaternion_axioms(OpKind op, const CheckConfig& cfg,
                                    const MainTable* table = nullptr);

// Residue mod 4 of the grades allowed in op(U^k, V^l):
//   commutator:      k-l   if k even and l odd, else k-l+2
//   anticommutator:  k-l+2 if k even and l odd, else k-l
// with (k, l) swapped first when k < l.
int grade_pattern_residue(OpKind op, int k, int l);

CheckReport check_grade_pattern(const CheckConfig& cfg);

// Soundness of every cell of emit_table(op); tightness is reported in the
// notes as a coverage percentage and never fails the check.
CheckReport check_type_table(OpKind op, const CheckConfig& cfg);

struct ClosureClaim {
  std::string name;
  OpKind op;
  SubspacePattern pattern;
  Field field;
};

// All subspaces claimed closed: under the product (real even subalgebra and
// the four complex subalgebras), under the commutator (4 real, 15 complex)
// and under the anticommutator (4 real, 15 complex).
const std::vector<ClosureClaim>& subalgebra_claims();

// Abstract (is_closed) and concrete (pattern-preserving results) closure.
CheckReport check_subspace_closure(const ClosureClaim& claim, const CheckConfig& cfg);

std::vector<CheckReport> check_subalgebra_theorems(const CheckConfig& cfg);

// inf_norm(U* U - e) <= tol
bool is_pseudo_unitary(const Multivector& u, double tol);

// inf_norm(u* + u) <= tol
bool is_in_wc(const Multivector& u, double tol);

// iC0 ⊕ iC1 ⊕ C2 ⊕ C3 as a pattern over quaternion types.
SubspacePattern wc_pattern();

// The Lie algebra iC0 ⊕ iC1 ⊕ C2 ⊕ C3 of the pseudo-unitary group is an
// algebra of quaternion type under the commutator with E = C2, I = C3,
// J = iC0, K = iC1.
CheckReport check_lie_algebra_quaternion_type(const CheckConfig& cfg);

struct LieGroupRow {
  std::string name;
  SubspacePattern algebra;  // Lie algebra inside wC
  SubspacePattern group;    // ambient subspace of the group
};

// 2 -> 02, 2+i0 -> 02+i02, 2+i1 -> 02+i13, 23 -> 0123
const std::vector<LieGroupRow>& lie_group_rows();

// Each algebra of lie_group_rows() is commutator-closed and inside wC.
std::vector<CheckReport> check_lie_subalgebras(const CheckConfig& cfg);

inline constexpr double kGroupTolerance = 1e-9;

// exp of sampled Lie algebra elements (inf-norm <= 1) is pseudo-unitary and
// lies in the group's ambient subspace. The groups are non-compact for
// indefinite signatures, so U*U cancels terms as large as |U|_1^2 and the
// defect is judged against kGroupTolerance * max(1, |U|_1^2); leakage
// against kGroupTolerance * max(1, |U|_1). max_residual holds the largest
// unscaled value. ConvergenceFailure from mv_exp propagates.
std::vector<CheckReport> check_unitary_subgroups(const CheckConfig& cfg);

// For n < 4: quaternion type and rank agree. Skipped for n >= 4.
CheckReport check_rank_coincidence(const CheckConfig& cfg);

// i = e1, j = e2, k = e12 in Cl(0,2) satisfy the quaternion relations.
CheckReport check_quaternion_relations();

// Product identity, (anti)symmetry, Jacobi, conjugation and projection
// identities: exact on integer inputs, 1e-12 relative on float inputs.
CheckReport check_structural_identities(const CheckConfig& cfg);

// Identifiers accepted by run_suite, in execution order.
const std::vector<std::string>& check_names();

// Runs the named checks. Each check seeds its generator from
// derive_seed(cfg.seed, report name), so results do not depend on which
// other checks run or in which order. Throws UnknownCheck before running
// anything if a name is not in check_names().
std::vector<CheckReport> run_suite(std::span<const std::string> names, const CheckConfig& cfg);

}  // namespace quatype
