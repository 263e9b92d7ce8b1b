#include <gtest/gtest.h>

#include "wcs/tensor_power.hpp"

using namespace wcs;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) { return wcs::detail::ipow(b, e); }

}  // namespace

TEST(Interleave, Examples) {
  EXPECT_EQ(interleave(2, 3, 1), IndexPermutation::identity(6));
  // a=b=2, n=2: matches the displayed reordering on all 16 basis vectors.
  const auto t = interleave(2, 2, 2);
  const Radices in{2, 2, 2, 2};
  for (std::size_t l = 0; l < 16; ++l) {
    const auto d = in.decode(l);  // (x1, y1, x2, y2)
    EXPECT_EQ(t(l), in.encode({d[0], d[2], d[1], d[3]}));
  }
  // Bijectivity for (a,b,n) = (2,3,2) is enforced by construction.
  EXPECT_NO_THROW(interleave(2, 3, 2).inverse());
  EXPECT_EQ(interleave(2, 3, 2).size(), 36u);
}

TEST(PhiPower, Examples) {
  for (std::size_t u = 1; u <= 6; ++u)
    for (std::size_t v = 1; v <= 6; ++v) {
      const auto x = matrix_unit(6, u, v);
      EXPECT_EQ(max_abs_diff(phi_power(2, 3, 1, x), phi(2, 3, x)), 0.0);
    }
  EXPECT_EQ(max_abs_diff(phi_power(2, 2, 2, ComplexMatrix::identity(16)),
                         kron(ComplexMatrix::identity(4), ComplexMatrix::identity(4))),
            0.0);
  EXPECT_THROW(phi_power(2, 2, 2, ComplexMatrix::identity(8)), std::invalid_argument);
}

TEST(PhiPower, FactorsThroughInterleave) {
  // phi^{(2)}(E (x) E') = T (phi(E) (x) phi(E')) T* for matrix units of M_4.
  const auto t = interleave(2, 2, 2);
  for (std::size_t u = 1; u <= 4; ++u)
    for (std::size_t v = 1; v <= 4; ++v)
      for (std::size_t up = 1; up <= 4; ++up)
        for (std::size_t vp = 1; vp <= 4; ++vp) {
          const auto e = matrix_unit(4, u, v), ep = matrix_unit(4, up, vp);
          EXPECT_EQ(max_abs_diff(phi_power(2, 2, 2, kron(e, ep)),
                                 conjugate(t, kron(phi(2, 2, e), phi(2, 2, ep)))),
                    0.0);
        }
}

TEST(RmatrixPower, NaturalityAndFlip) {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; a * b <= 12; ++b) {
      EXPECT_EQ(rmatrix_power(a, b, 1), rmatrix(a, b));
      EXPECT_EQ(interleave(a, b, 1), IndexPermutation::identity(a * b));
    }
  // (2,2,2): the flip of C^4 (x) C^4.
  EXPECT_EQ(rmatrix_power(2, 2, 2), flip_perm(4, 4));
}

TEST(RmatrixPower, BijectionSweep) {
  for (std::size_t a = 1; a <= 9; ++a)
    for (std::size_t b = 1; b <= 9; ++b)
      for (std::size_t n = 1; n <= 4 && ipow(a, n) * ipow(b, n) <= 81; ++n)
        EXPECT_EQ(rmatrix_power(a, b, n).size(), ipow(a, n) * ipow(b, n));
}

TEST(RmatrixPower, ConjugationCoincidesWithOperatorApplication) {
  // T(R^{(x)n}) read as a map on operators equals the basis-vector
  // conjugation T R^{(x)n} T*; asserted densely on small cases.
  for (auto [a, b, n] :
       std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{{2, 2, 2}, {2, 3, 1}, {3, 2, 1}}) {
    const auto t = permutation_to_matrix(interleave(a, b, n));
    ComplexMatrix rn = ComplexMatrix::identity(1);
    for (std::size_t k = 0; k < n; ++k) rn = kron(rn, permutation_to_matrix(rmatrix(a, b)));
    EXPECT_EQ(max_abs_diff(t * rn * t.adjoint(), permutation_to_matrix(rmatrix_power(a, b, n))),
              0.0);
  }
}

TEST(OpCompatibility, Examples) {
  EXPECT_TRUE(check_op_compatibility(2, 3, 1).pass);
  EXPECT_TRUE(check_op_compatibility(2, 2, 2).pass);
  {
    CheckOptions opt;
    opt.budget = 81;
    EXPECT_TRUE(check_op_compatibility(2, 3, 2, opt).pass);
  }
}

TEST(OpCompatibility, PermutationIdentitySweep) {
  // T . tau^{(x)n} = tau . T exactly for all a^n b^n <= 81.
  CheckOptions opt;
  opt.budget = 81;
  for (std::size_t a = 1; a <= 9; ++a)
    for (std::size_t b = 1; b <= 9; ++b)
      for (std::size_t n = 1; n <= 4 && ipow(a, n) * ipow(b, n) <= 81; ++n) {
        const auto lhs = compose(interleave(a, b, n), detail::kron_power(flip_perm(b, a), n));
        const auto rhs = compose(flip_perm(ipow(b, n), ipow(a, n)), interleave(b, a, n));
        EXPECT_EQ(lhs, rhs) << a << " " << b << " " << n;
      }
}

TEST(PoweredRRelation, ExamplesAndSweep) {
  EXPECT_TRUE(check_powered_r_relation(1, 3, 2).pass);
  EXPECT_TRUE(check_powered_r_relation(2, 2, 2).pass);
  EXPECT_TRUE(check_powered_r_relation(2, 3, 2).pass);
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = 1; a * b <= 6; ++b)
      for (std::size_t n = 1; n <= 5 && ipow(a * b, n) <= 36; ++n) {
        const auto r = check_powered_r_relation(a, b, n);
        EXPECT_TRUE(r.pass) << r.name;
        EXPECT_EQ(r.max_deviation, 0.0);
      }
}

TEST(PoweredTriangularity, ExamplesAndSweep) {
  EXPECT_TRUE(check_powered_triangularity(2, 3, 2, 1).pass);
  EXPECT_TRUE(check_powered_triangularity(2, 2, 2, 2).pass);
  EXPECT_TRUE(check_powered_triangularity(2, 3, 1, 2).pass);  // triangularity at size 36
  for (std::size_t a = 1; a <= 8; ++a)
    for (std::size_t b = 1; a * b <= 8; ++b)
      for (std::size_t c = 1; a * b * c <= 8; ++c)
        for (std::size_t n = 1; n <= 6 && ipow(a * b * c, n) <= 64; ++n)
          EXPECT_TRUE(check_powered_triangularity(a, b, c, n).pass)
              << a << " " << b << " " << c << " " << n;
}

TEST(PsiEmbed, Examples) {
  EXPECT_EQ(max_abs_diff(psi_embed(2, 1, ComplexMatrix::identity(2)), ComplexMatrix::identity(4)),
            0.0);
  EXPECT_EQ(max_abs_diff(psi_embed(2, 1, matrix_unit(2, 1, 2)),
                         kron(matrix_unit(2, 1, 2), ComplexMatrix::identity(2))),
            0.0);
  // Unital and multiplicative on matrix-unit pairs.
  for (std::size_t u = 1; u <= 3; ++u)
    for (std::size_t v = 1; v <= 3; ++v)
      for (std::size_t w = 1; w <= 3; ++w)
        EXPECT_EQ(max_abs_diff(psi_embed(3, 1, matrix_unit(3, u, v) * matrix_unit(3, v, w)),
                               psi_embed(3, 1, matrix_unit(3, u, v)) *
                                   psi_embed(3, 1, matrix_unit(3, v, w))),
                  0.0);
  EXPECT_THROW(psi_embed(2, 2, ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST(PsiCompatibility, ExamplesAndSweep) {
  EXPECT_TRUE(check_psi_compatibility(1, 1, 1).pass);
  EXPECT_TRUE(check_psi_compatibility(2, 2, 1).pass);
  EXPECT_TRUE(check_psi_compatibility(2, 3, 1).pass);
  for (std::size_t a = 1; a <= 8; ++a)
    for (std::size_t b = 1; a * b <= 8; ++b)
      for (std::size_t n = 1; n <= 5 && ipow(a * b, n + 1) <= 64; ++n) {
        const auto r = check_psi_compatibility(a, b, n);
        EXPECT_TRUE(r.pass) << r.name;
        EXPECT_EQ(r.max_deviation, 0.0);
      }
}

TEST(Checks, BudgetRefusal) {
  CheckOptions opt;
  opt.budget = 16;
  EXPECT_THROW(check_powered_r_relation(2, 3, 2, opt), BudgetExceeded);
  EXPECT_THROW(check_powered_triangularity(2, 2, 2, 2, opt), BudgetExceeded);
}
