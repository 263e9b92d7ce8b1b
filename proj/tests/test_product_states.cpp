#include <gtest/gtest.h>

#include <cmath>

#include "wcs/product_state.hpp"

using namespace wcs;

namespace {

SlotVector basis_slot(std::size_t n, std::size_t i) {
  SlotVector v;
  v.entries.assign(n, Complex{});
  v.entries[i - 1] = 1.0;
  return v;
}

SlotVector superposition_slot() {
  const double r = 1.0 / std::sqrt(2.0);
  return SlotVector{{Complex(r), Complex(r)}};
}

// Level-k vector of a product state, by slotwise Kronecker product.
SlotVector level_vector(const ProductStateDesc& s, std::size_t k) {
  SlotVector v{{Complex{1.0}}};
  for (std::size_t l = 0; l < k; ++l) v = kron(v, s.slot(l));
  return v;
}

bool descs_agree(const ProductStateDesc& s, const ProductStateDesc& t, std::size_t horizon) {
  if (s.slot_dim != t.slot_dim) return false;
  for (std::size_t k = 0; k < horizon; ++k)
    if (!slots_equal(s.slot(k), t.slot(k))) return false;
  return true;
}

}  // namespace

TEST(DiagonalPureState, ExamplesAndFiniteLevel) {
  const auto s = diagonal_pure_state(2, 1);
  EXPECT_EQ(s.slot_dim, 2u);
  EXPECT_TRUE(s.prefix.empty());
  ASSERT_EQ(s.period.size(), 1u);
  EXPECT_TRUE(slots_equal(s.period[0], basis_slot(2, 1)));
  EXPECT_THROW(diagonal_pure_state(2, 3), std::invalid_argument);

  // Level-1 density is the matrix unit E_{1,1}; each level has trace 1.
  EXPECT_EQ(max_abs_diff(finite_level_state(s, 1), matrix_unit(2, 1, 1)), 0.0);
  for (std::size_t k = 1; k <= 3; ++k)
    EXPECT_NEAR(std::abs(trace(finite_level_state(s, k))), 1.0, 1e-12);
  EXPECT_THROW(finite_level_state(s, 1, 0), BudgetExceeded);
}

TEST(Canonicalize, ReducesToPrimitivePeriod) {
  ProductStateDesc s{2, {}, {basis_slot(2, 1), basis_slot(2, 1)}};
  const auto c = canonicalize(s);
  EXPECT_EQ(c.period.size(), 1u);
  ProductStateDesc t{2, {}, {basis_slot(2, 1), basis_slot(2, 2)}};
  EXPECT_EQ(canonicalize(t).period.size(), 2u);
}

TEST(Star, SlotOracleFromComultiplication) {
  // Evaluating the tensor-pair of the two diagonal states through the
  // comultiplication component on every matrix unit of M_4 must agree
  // with direct evaluation against the star state's slot vector.
  const auto left = star(diagonal_pure_state(2, 1), diagonal_pure_state(2, 2));
  ASSERT_EQ(left.period.size(), 1u);
  EXPECT_TRUE(slots_equal(left.period[0], basis_slot(4, 2)));
  const SlotVector& v = left.period[0];
  for (std::size_t u = 1; u <= 4; ++u)
    for (std::size_t w = 1; w <= 4; ++w) {
      const auto img = phi(2, 2, matrix_unit(4, u, w));
      // (omega_1 (x) omega_2)(Z) reads the (1,2)x(1,2) diagonal entry.
      const Complex via_phi = img(1, 1);
      const Complex via_slot = std::conj(v.entries[u - 1]) * v.entries[w - 1];
      EXPECT_EQ(via_phi, via_slot);
    }

  const auto right = star(diagonal_pure_state(2, 2), diagonal_pure_state(2, 1));
  ASSERT_EQ(right.period.size(), 1u);
  EXPECT_TRUE(slots_equal(right.period[0], basis_slot(4, 3)));
}

TEST(Star, TrivialFactorIsNeutral) {
  ProductStateDesc s{2, {superposition_slot()}, {basis_slot(2, 2), superposition_slot()}};
  const auto triv = diagonal_pure_state(1, 1);
  EXPECT_TRUE(descs_agree(star(s, triv), s, 12));
  EXPECT_TRUE(descs_agree(star(triv, s), s, 12));
}

TEST(Star, AssociativeOverAlignedPeriods) {
  ProductStateDesc s{2, {}, {superposition_slot()}};
  ProductStateDesc t{2, {basis_slot(2, 1)}, {basis_slot(2, 2), superposition_slot()}};
  ProductStateDesc u{3, {}, {basis_slot(3, 1), basis_slot(3, 3), basis_slot(3, 2)}};
  const auto lhs = star(star(s, t), u);
  const auto rhs = star(s, star(t, u));
  EXPECT_EQ(lhs.slot_dim, 12u);
  // Compare well past one aligned period (prefix 1, lcm of periods 6).
  EXPECT_TRUE(descs_agree(lhs, rhs, 16));
}

TEST(Star, FiniteLevelsFactorThroughPoweredComultiplication) {
  // The level-k vector of the star state is the interleave-relabelled
  // Kronecker product of the component level-k vectors.
  const auto s1 = diagonal_pure_state(2, 1), s2 = diagonal_pure_state(2, 2);
  const auto st = star(s1, s2);
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto t = phi_power_perm(2, 2, k);
    const auto vs = level_vector(st, k);
    const auto vp = kron(level_vector(s1, k), level_vector(s2, k));
    ASSERT_EQ(vs.dim(), t.size());
    for (std::size_t l = 0; l < vs.dim(); ++l) EXPECT_EQ(vs.entries[l], vp.entries[t(l)]);
  }
}

TEST(Equivalent, ReflexiveAndSymmetric) {
  ProductStateDesc s{2, {basis_slot(2, 1)}, {superposition_slot(), basis_slot(2, 2)}};
  const auto vs = equivalent(s, s);
  EXPECT_TRUE(vs.equivalent);
  EXPECT_FALSE(vs.diverges);
  for (double d : vs.period_deficits) EXPECT_LE(d, 1e-12);

  const auto t = diagonal_pure_state(2, 2);
  const auto ab = equivalent(s, t), ba = equivalent(t, s);
  EXPECT_EQ(ab.equivalent, ba.equivalent);
  ASSERT_EQ(ab.period_deficits.size(), ba.period_deficits.size());
  for (std::size_t k = 0; k < ab.period_deficits.size(); ++k)
    EXPECT_NEAR(ab.period_deficits[k], ba.period_deficits[k], 1e-12);
}

TEST(Equivalent, PrefixDifferenceIsHarmless) {
  // Finitely many disagreeing slots never obstruct equivalence.
  ProductStateDesc s{2, {basis_slot(2, 2), basis_slot(2, 2), basis_slot(2, 2)},
                     {superposition_slot()}};
  ProductStateDesc t{2, {}, {superposition_slot()}};
  const auto v = equivalent(s, t);
  EXPECT_TRUE(v.equivalent);
  EXPECT_GT(v.prefix_deficit_sum, 0.5);
}

TEST(Equivalent, OrthogonalPeriodsDivergeMaximally) {
  const auto left = star(diagonal_pure_state(2, 1), diagonal_pure_state(2, 2));
  const auto right = star(diagonal_pure_state(2, 2), diagonal_pure_state(2, 1));
  const auto v = equivalent(left, right);
  EXPECT_FALSE(v.equivalent);
  EXPECT_TRUE(v.diverges);
  ASSERT_FALSE(v.period_deficits.empty());
  // Slotwise the two vectors are orthogonal, so every deficit is exactly 1.
  for (double d : v.period_deficits) EXPECT_EQ(d, 1.0);
  // And the finite levels are orthogonal pure states: trace distance 1.
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(pure_trace_distance(left, right, k), 1.0);
  EXPECT_THROW(equivalent(left, diagonal_pure_state(2, 1)), std::invalid_argument);
}

TEST(Equivalent, SlotwisePhasesDoNotChangeTheVerdict) {
  ProductStateDesc s{2, {}, {superposition_slot(), basis_slot(2, 1)}};
  ProductStateDesc t = s;
  const Complex phases[] = {std::polar(1.0, 0.7), std::polar(1.0, -2.1)};
  for (std::size_t k = 0; k < t.period.size(); ++k)
    for (Complex& e : t.period[k].entries) e *= phases[k];
  const auto base = equivalent(s, s), phased = equivalent(s, t);
  EXPECT_TRUE(phased.equivalent);
  ASSERT_EQ(base.period_deficits.size(), phased.period_deficits.size());
  for (std::size_t k = 0; k < base.period_deficits.size(); ++k)
    EXPECT_NEAR(base.period_deficits[k], phased.period_deficits[k], 1e-12);
}

TEST(Certificate, EmittedForPassingStages) {
  const auto cert = build_obstruction_certificate({1, 2}, 4, 3);
  ASSERT_EQ(cert.stage_reports.size(), 2u);
  for (const auto& r : cert.stage_reports) {
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.max_deviation, 0.0);
  }
  EXPECT_FALSE(cert.verdict.equivalent);
  ASSERT_EQ(cert.level_trace_distances.size(), 3u);
  for (double d : cert.level_trace_distances) EXPECT_EQ(d, 1.0);
  EXPECT_EQ(cert.conclusion, Conclusion::NotQuasiCocommutative);
}

TEST(Certificate, DegenerateTowerStillObstructs) {
  const auto cert = build_obstruction_certificate({1}, 1, 1);
  ASSERT_EQ(cert.stage_reports.size(), 1u);
  EXPECT_TRUE(cert.stage_reports[0].pass);
  EXPECT_FALSE(cert.verdict.equivalent);
}

TEST(Certificate, RefusedWhenAStageFails) {
  CheckOptions opt;
  opt.tamper = RTamper{2, 2};
  try {
    build_obstruction_certificate({1}, 4, 2, opt);
    FAIL() << "expected CertificateRefused";
  } catch (const CertificateRefused& e) {
    EXPECT_FALSE(e.failing_report.pass);
    EXPECT_FALSE(e.failing_report.failures.empty());
  }
}

TEST(Certificate, JsonShape) {
  const auto j = to_json(build_obstruction_certificate({1, 2}, 4, 2));
  ASSERT_TRUE(j.contains("stages"));
  EXPECT_EQ(j["stages"].size(), 2u);
  ASSERT_TRUE(j.contains("state_pair"));
  EXPECT_TRUE(j["state_pair"].contains("left"));
  EXPECT_TRUE(j["state_pair"].contains("right"));
  EXPECT_EQ(j["state_pair"]["left"]["slot_dim"], 4u);
  ASSERT_TRUE(j.contains("verdict"));
  EXPECT_EQ(j["verdict"]["equivalent"], false);
  EXPECT_FALSE(j["verdict"]["period_deficits"].empty());
  EXPECT_FALSE(j["diagnostics"]["level_trace_distances"].empty());
  EXPECT_EQ(j["conclusion"], "NotQuasiCocommutative");
}

TEST(Validation, RejectsMalformedDescriptions) {
  ProductStateDesc no_period{2, {basis_slot(2, 1)}, {}};
  EXPECT_THROW(no_period.validate(), std::invalid_argument);
  ProductStateDesc bad_dim{3, {}, {basis_slot(2, 1)}};
  EXPECT_THROW(bad_dim.validate(), std::invalid_argument);
  ProductStateDesc not_unit{2, {}, {SlotVector{{Complex(0.5), Complex(0.5)}}}};
  EXPECT_THROW(not_unit.validate(), std::invalid_argument);
}
