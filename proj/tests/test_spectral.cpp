#include <gtest/gtest.h>

#include "hopfcyc/spectral.hpp"

using namespace hopfcyc;
using Q = Rational;

namespace {

Field<Q> QQ;
Field<Zp> F2(2);

void expect_ok(const AxiomReport& r)
{
  auto* f = r.first_failure();
  EXPECT_TRUE(f == nullptr) << (f ? f->name + ": " + f->detail : "");
}

std::size_t entry(const SSPage& pg, int degree, std::size_t p, std::size_t q)
{
  for (const auto& e : pg.entries)
    if (e.degree == degree && e.p == p && e.q == q) return e.dim;
  ADD_FAILURE() << "no entry at degree " << degree << " (" << p << "," << q << ")";
  return 0;
}

} // namespace

// Signing b̄ by the horizontal degree instead would give d² = ±2 b b̄ on X_{1,1}.
TEST(Total, SignMustComeFromTheOtherDegree)
{
  auto X = a_natural_h(self_comodule_algebra(build_sweedler_h4(QQ)));
  auto bv = vertical_boundary(X, 0, 1) * horizontal_boundary(X, 1, 1);
  auto vb = horizontal_boundary(X, 1, 0) * vertical_boundary(X, 1, 1);
  EXPECT_TRUE(bv == vb);
  EXPECT_FALSE(bv.is_zero_matrix());
  EXPECT_NO_THROW(total_complex(X, 2));
}

TEST(Total, SquareZeroAndFiltered)
{
  auto H = build_sweedler_h4(QQ);
  auto a = total_complex(a_natural_h(self_comodule_algebra(H)), 2);
  EXPECT_NO_THROW(check_filtration(a));
  auto c = total_complex(c_natural_h(self_module_coalgebra(H)), 2);
  EXPECT_NO_THROW(check_filtration(c));
}

// The diagonal of A♮H for kC2 is the cyclic module of k[C2 × C2]: HH = k⁴ in degree 0.
TEST(Total, EilenbergZilberKC2)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  for (const auto& row : ez_compare_hochschild(a_natural_h(self_comodule_algebra(H)), 2)) {
    EXPECT_EQ(row.total, row.diagonal) << "n=" << row.n;
    EXPECT_EQ(row.total, row.n == 0 ? 4u : 0u);
  }
  for (const auto& row : ez_compare_hochschild(c_natural_h(self_module_coalgebra(H)), 2))
    EXPECT_EQ(row.total, row.diagonal) << "n=" << row.n;
}

TEST(Total, EilenbergZilberCharTwoAndH4)
{
  for (const auto& row : ez_compare_hochschild(a_natural_h(self_comodule_algebra(build_cyclic_group_algebra(2, F2))), 2))
    EXPECT_EQ(row.total, row.diagonal) << "n=" << row.n;
  for (const auto& row : ez_compare_hochschild(a_natural_h(self_comodule_algebra(build_sweedler_h4(QQ))), 1))
    EXPECT_EQ(row.total, row.diagonal) << "n=" << row.n;
}

// Semisimple H: E¹ lives on the Hopf-degree-0 line, so the sequence stops at E¹.
TEST(Pages, SemisimpleCollapse)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  auto fc = total_complex(a_natural_h(self_comodule_algebra(H)), 3);
  auto ss = spectral_sequence(fc, 3);
  EXPECT_TRUE(ss.converged);
  EXPECT_TRUE(ss.monotone);
  for (const auto& e : ss.pages[1].entries) {
    if (e.p > 0) {
      EXPECT_EQ(e.dim, 0u) << e.p << "," << e.q;
    }
  }
  for (std::size_t r = 2; r < ss.pages.size(); ++r)
    for (std::size_t k = 0; k < ss.pages[r].entries.size(); ++k) EXPECT_EQ(ss.pages[r].entries[k].dim, ss.infinity.entries[k].dim);
  EXPECT_EQ(entry(ss.infinity, 0, 0, 0), 4u);
}

TEST(Pages, CoalgebraSemisimple)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  auto fc = total_complex(c_natural_h(self_module_coalgebra(H)), 3);
  auto ss = spectral_sequence(fc, 2);
  EXPECT_TRUE(ss.converged);
  EXPECT_TRUE(ss.monotone);
  for (const auto& e : ss.pages[1].entries) {
    if (e.p > 0) {
      EXPECT_EQ(e.dim, 0u) << e.p << "," << e.q;
    }
  }
}

// Over F2 the group algebra is not semisimple and E¹ carries group homology off the q-axis.
TEST(Pages, CharTwoDoesNotCollapseAtE1)
{
  auto H = build_cyclic_group_algebra(2, F2);
  auto fc = total_complex(a_natural_h(self_comodule_algebra(H)), 3);
  auto ss = spectral_sequence(fc, 2);
  EXPECT_TRUE(ss.converged);
  EXPECT_TRUE(ss.monotone);
  std::size_t off = 0;
  for (const auto& e : ss.pages[1].entries)
    if (e.p > 0) off += e.dim;
  EXPECT_GT(off, 0u);
}

TEST(Pages, E0IsFiltrationQuotient)
{
  auto H = build_sweedler_h4(QQ);
  auto fc = total_complex(a_natural_h(self_comodule_algebra(H)), 2);
  auto ss = spectral_sequence(fc, 1);
  for (const auto& e : ss.pages[0].entries) EXPECT_EQ(e.dim, fc.size(e.degree, e.p, e.q));
  EXPECT_TRUE(ss.converged);
}

TEST(CrossCheck, E0AgainstHopfBoundary)
{
  expect_ok(e0_crosscheck_algebra(self_comodule_algebra(build_cyclic_group_algebra(2, QQ)), 3));
  expect_ok(e0_crosscheck_algebra(self_comodule_algebra(build_sweedler_h4(QQ)), 2));
  expect_ok(e0_crosscheck_coalgebra(self_module_coalgebra(build_cyclic_group_algebra(2, QQ)), 3));
  expect_ok(e0_crosscheck_coalgebra(self_module_coalgebra(build_sweedler_h4(QQ)), 2));
}
