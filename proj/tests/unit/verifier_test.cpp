#include <gtest/gtest.h>

#include <algorithm>

#include "naive_oracle.hpp"
#include "quatype/error.hpp"
#include "quatype/verifier.hpp"

namespace quatype {
namespace {

CheckConfig exhaustive(int p, int q) {
  auto cfg = CheckConfig::defaults_for(Signature(p, q));
  cfg.strategy = Strategy::Exhaustive;
  return cfg;
}

CheckConfig random_cfg(int p, int q, int samples = 50, std::uint64_t seed = 1) {
  auto cfg = CheckConfig::defaults_for(Signature(p, q));
  cfg.strategy = Strategy::Random;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

void expect_pass(const CheckReport& r) {
  EXPECT_EQ(r.status, Status::Pass) << r.name << ": " << r.notes
                                    << (r.counterexample ? " ce " + r.counterexample->projection : "");
  EXPECT_GT(r.cases_run, 0u) << r.name;
}

void expect_fail(const CheckReport& r, double tol) {
  ASSERT_EQ(r.status, Status::Fail) << r.name;
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_GT(r.counterexample->magnitude, tol);
}

TEST(CheckConfig, Defaults) {
  EXPECT_EQ(CheckConfig::defaults_for(Signature(3, 3)).strategy, Strategy::Exhaustive);
  EXPECT_EQ(CheckConfig::defaults_for(Signature(4, 3)).strategy, Strategy::Random);
  const CheckConfig cfg;
  EXPECT_EQ(cfg.samples, 200);
  EXPECT_EQ(cfg.seed, 0u);
  EXPECT_EQ(cfg.tol, 1e-12);
}

TEST(CheckConfig, Validation) {
  auto cfg = random_cfg(2, 0);
  cfg.samples = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = exhaustive(2, 0);
  cfg.tol = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Axioms, HoldForSmallSignatures) {
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (OpKind op : {OpKind::Commutator, OpKind::Anticommutator}) {
        const auto r = check_quaternion_axioms(op, exhaustive(p, n - p));
        expect_pass(r);
        EXPECT_EQ(r.cases_run, 1u << (2 * n));
      }
    }
  }
}

TEST(Axioms, RandomStrategyAtLargeSignature) {
  expect_pass(check_quaternion_axioms(OpKind::Commutator, random_cfg(5, 3, 4)));
  expect_pass(check_quaternion_axioms(OpKind::Anticommutator, random_cfg(5, 3, 4)));
}

TEST(Axioms, WrongTableFails) {
  MainTable wrong = main_table(OpKind::Anticommutator);
  std::swap(wrong[1][2], wrong[1][3]);
  expect_fail(check_quaternion_axioms(OpKind::Anticommutator, exhaustive(2, 1), &wrong), 0.0);
  // The commutator table does not describe anticommutators.
  expect_fail(check_quaternion_axioms(OpKind::Anticommutator, random_cfg(3, 0, 5),
                                      &main_table(OpKind::Commutator)),
              1e-12);
}

TEST(Axioms, ProductIsRejected) {
  EXPECT_THROW(check_quaternion_axioms(OpKind::GeometricProduct, exhaustive(2, 0)),
               std::invalid_argument);
}

// The closed form for allowed residues agrees with the blade oracle: for
// every overlap c that the op does not annihilate, k + l - 2c has that residue.
TEST(GradePattern, ResidueMatchesBladeOracle) {
  for (int k = 0; k <= 12; ++k) {
    for (int l = 0; l <= 12; ++l) {
      for (int c = 0; c <= std::min(k, l); ++c) {
        const int residue = (k + l - 2 * c) % 4;
        const OpKind op = oracle::blades_commute(k, l, c) ? OpKind::Anticommutator
                                                          : OpKind::Commutator;
        EXPECT_EQ(grade_pattern_residue(op, k, l), residue) << k << " " << l << " " << c;
      }
    }
  }
}

TEST(GradePattern, SymmetricInArguments) {
  for (int k = 0; k <= 12; ++k) {
    for (int l = 0; l <= 12; ++l) {
      EXPECT_EQ(grade_pattern_residue(OpKind::Commutator, k, l),
                grade_pattern_residue(OpKind::Commutator, l, k));
    }
  }
}

TEST(GradePattern, CheckPasses) {
  expect_pass(check_grade_pattern(exhaustive(2, 2)));
  expect_pass(check_grade_pattern(exhaustive(0, 5)));
  expect_pass(check_grade_pattern(random_cfg(4, 4, 2)));
}

TEST(TypeTables, SoundAndReportTightness) {
  for (OpKind op : {OpKind::Commutator, OpKind::Anticommutator, OpKind::GeometricProduct}) {
    const auto r = check_type_table(op, exhaustive(3, 2));
    expect_pass(r);
    EXPECT_NE(r.notes.find("tightness"), std::string::npos);
    expect_pass(check_type_table(op, random_cfg(2, 2, 10)));
  }
}

TEST(TypeTables, LowDimensionIsSoundButNotTight) {
  const auto r = check_type_table(OpKind::GeometricProduct, exhaustive(1, 0));
  expect_pass(r);
  EXPECT_EQ(r.notes.find("0 of 225 cells not tight"), std::string::npos);
}

TEST(Closure, ClaimsList) {
  const auto& claims = subalgebra_claims();
  EXPECT_EQ(claims.size(), 43u);
  auto count = [&](OpKind op, Field f) {
    return std::count_if(claims.begin(), claims.end(),
                         [&](const ClosureClaim& c) { return c.op == op && c.field == f; });
  };
  EXPECT_EQ(count(OpKind::GeometricProduct, Field::Real), 1);
  EXPECT_EQ(count(OpKind::GeometricProduct, Field::Complex), 4);
  EXPECT_EQ(count(OpKind::Commutator, Field::Real), 4);
  EXPECT_EQ(count(OpKind::Commutator, Field::Complex), 15);
  EXPECT_EQ(count(OpKind::Anticommutator, Field::Real), 4);
  EXPECT_EQ(count(OpKind::Anticommutator, Field::Complex), 15);
  std::vector<std::string> names;
  for (const auto& c : claims) names.push_back(c.name);
  std::sort(names.begin(), names.end());
  EXPECT_EQ(std::adjacent_find(names.begin(), names.end()), names.end());
}

TEST(Closure, AllClaimsHold) {
  for (const auto& r : check_subalgebra_theorems(exhaustive(2, 2))) expect_pass(r);
  for (const auto& r : check_subalgebra_theorems(random_cfg(3, 1, 20))) expect_pass(r);
}

TEST(Closure, NegativeControlsFail) {
  const ClosureClaim odd{"control.commutator.R[1]", OpKind::Commutator,
                         SubspacePattern::parse("1"), Field::Real};
  const ClosureClaim mixed{"control.anticommutator.R[12]", OpKind::Anticommutator,
                           SubspacePattern::parse("12"), Field::Real};
  for (const auto& cfg : {exhaustive(2, 2), random_cfg(4, 0, 20)}) {
    expect_fail(check_subspace_closure(odd, cfg), 0.0);
    expect_fail(check_subspace_closure(mixed, cfg), 0.0);
  }
  // Real odd part under the product.
  expect_fail(check_subspace_closure({"control.product.R[13]", OpKind::GeometricProduct,
                                      SubspacePattern::parse("13"), Field::Real},
                                     exhaustive(3, 0)),
              0.0);
}

TEST(Closure, ConcreteCounterexampleIsPreferred) {
  const ClosureClaim odd{"control", OpKind::Commutator, SubspacePattern::parse("1"), Field::Real};
  const auto r = check_subspace_closure(odd, exhaustive(2, 0));
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(r.counterexample->operation, "commutator");
  EXPECT_EQ(r.counterexample->lhs, "e1");
  EXPECT_EQ(r.counterexample->rhs, "e2");
  EXPECT_EQ(r.counterexample->magnitude, 2.0);
}

TEST(LieAlgebra, Membership) {
  const Signature sig(2, 2);
  EXPECT_TRUE(is_in_wc(Multivector::basis(sig, Blade{0b11}), 0.0));
  EXPECT_TRUE(is_in_wc(Multivector::basis(sig, Blade{}, Scalar(0, 1), Field::Complex), 0.0));
  EXPECT_FALSE(is_in_wc(Multivector::identity(sig), 0.0));
  EXPECT_FALSE(is_in_wc(Multivector::basis(sig, Blade{1}), 0.0));
  EXPECT_EQ(wc_pattern(), SubspacePattern::parse("23+i01"));
  EXPECT_TRUE(is_pseudo_unitary(Multivector::identity(sig), 0.0));
  EXPECT_TRUE(is_pseudo_unitary(Multivector::basis(sig, Blade{0b11}), 0.0));  // e12 e21 = 1
  EXPECT_FALSE(is_pseudo_unitary(Multivector::basis(sig, Blade{}, 2.0), 0.5));
}

TEST(LieAlgebra, QuaternionTypeOfCommutator) {
  expect_pass(check_lie_algebra_quaternion_type(exhaustive(2, 2)));
  expect_pass(check_lie_algebra_quaternion_type(random_cfg(4, 1, 20)));
}

TEST(LieAlgebra, SubalgebrasAndGroups) {
  ASSERT_EQ(lie_group_rows().size(), 4u);
  for (const auto& r : check_lie_subalgebras(exhaustive(4, 1))) expect_pass(r);
  auto cfg = random_cfg(2, 2, 30);
  for (const auto& r : check_unitary_subgroups(cfg)) expect_pass(r);
  cfg = random_cfg(4, 0, 30);
  for (const auto& r : check_unitary_subgroups(cfg)) expect_pass(r);
}

// Indefinite signatures give non-compact groups where exp(u) can be large;
// the defect is judged relative to |U|^2 and stays far below tolerance.
TEST(LieAlgebra, LargeGroupElementsInIndefiniteSignature) {
  auto cfg = random_cfg(5, 4, 5);
  for (const auto& r : check_unitary_subgroups(cfg)) {
    expect_pass(r);
    EXPECT_GT(r.max_residual, 0.0);
  }
}

TEST(LieAlgebra, AbsoluteResidualSmallInLowDimension) {
  for (const auto& r : check_unitary_subgroups(random_cfg(2, 2, 40))) {
    EXPECT_LE(r.max_residual, 1e-9) << r.name;
  }
}

TEST(LieAlgebra, ExponentialNonConvergencePropagates) {
  auto cfg = random_cfg(2, 2, 3);
  cfg.exp_max_terms = 2;
  EXPECT_THROW(check_unitary_subgroups(cfg), ConvergenceFailure);
}

TEST(Rank, CoincidesBelowFour) {
  for (int n = 1; n <= 3; ++n) {
    for (int p = 0; p <= n; ++p) expect_pass(check_rank_coincidence(exhaustive(p, n - p)));
  }
  EXPECT_EQ(check_rank_coincidence(exhaustive(2, 2)).status, Status::Skipped);
}

TEST(Quaternions, Relations) {
  const auto r = check_quaternion_relations();
  expect_pass(r);
  EXPECT_EQ(r.cases_run, 9u);
}

TEST(Structure, IdentitiesHold) {
  auto cfg = random_cfg(2, 2, 50);
  expect_pass(check_structural_identities(cfg));
  cfg = random_cfg(1, 4, 20);
  expect_pass(check_structural_identities(cfg));
}

TEST(Suite, NamesAndUnknownCheck) {
  const auto& names = check_names();
  EXPECT_EQ(names.front(), "axioms");
  EXPECT_EQ(names.size(), 10u);
  const std::vector<std::string> bad{"axioms", "nonsense"};
  try {
    run_suite(bad, exhaustive(2, 0));
    FAIL() << "expected UnknownCheck";
  } catch (const UnknownCheck& e) {
    EXPECT_EQ(e.name(), "nonsense");
  }
}

TEST(Suite, DeterministicAndOrderIndependent) {
  const auto cfg = random_cfg(3, 2, 10, 42);
  const auto all = run_suite(check_names(), cfg);
  EXPECT_EQ(all, run_suite(check_names(), cfg));
  const std::vector<std::string> only{"structure", "tables"};
  const auto part = run_suite(only, cfg);
  for (const auto& r : part) {
    const auto it = std::find_if(all.begin(), all.end(),
                                 [&](const CheckReport& x) { return x.name == r.name; });
    ASSERT_NE(it, all.end());
    EXPECT_EQ(*it, r);
  }
}

TEST(Suite, ExactChecksHaveZeroResidual) {
  const std::vector<std::string> exact{"axioms", "grades", "tables", "subalgebras", "quaternions"};
  for (const auto& r : run_suite(exact, exhaustive(2, 2))) EXPECT_EQ(r.max_residual, 0.0) << r.name;
}

TEST(Suite, FailuresCarryCounterexamples) {
  for (const auto& r : run_suite(check_names(), exhaustive(3, 1))) {
    if (r.status == Status::Fail) {
      ASSERT_TRUE(r.counterexample);
    } else {
      EXPECT_FALSE(r.counterexample) << r.name;
    }
  }
}

}  // namespace
}  // namespace quatype
