#include <gtest/gtest.h>

#include "hopfcyc/cylindrical.hpp"

using namespace hopfcyc;
using Q = Rational;

namespace {

Field<Q> QQ;

template <class K> void expect_ok(const AxiomReport& r)
{
  auto* f = r.first_failure();
  EXPECT_TRUE(f == nullptr) << (f ? f->name + ": " + f->detail : "");
}

} // namespace

TEST(Cylindrical, H4SelfComoduleAlgebraIsCylindrical)
{
  auto H = build_sweedler_h4(QQ);
  auto X = a_natural_h(self_comodule_algebra(H));
  expect_ok<Q>(cylindrical_suite(X, 2, 2));
}

TEST(Cylindrical, H4SelfModuleCoalgebraIsCocylindrical)
{
  auto H = build_sweedler_h4(QQ);
  auto X = c_natural_h(self_module_coalgebra(H));
  expect_ok<Q>(cylindrical_suite(X, 2, 2));
}

TEST(Cylindrical, AlgebraIsoH4)
{
  auto H = build_sweedler_h4(QQ);
  auto A = self_comodule_algebra(H);
  auto R = crossed_product_algebra(A);
  auto r = iso_suite<Q>(
      cyclic_module_of_algebra(R), a_natural_h(A).diagonal(), [&](std::size_t n) { return phi_algebra(A, n); },
      [&](std::size_t n) { return psi_algebra(A, n); }, 2);
  expect_ok<Q>(r);
}

TEST(Cylindrical, CoalgebraIsoH4)
{
  auto H = build_sweedler_h4(QQ);
  auto C = self_module_coalgebra(H);
  auto R = crossed_product_coalgebra(C);
  auto r = iso_suite<Q>(
      cocyclic_module_of_coalgebra(R), c_natural_h(C).diagonal(), [&](std::size_t n) { return phi_coalgebra(C, n); },
      [&](std::size_t n) { return psi_coalgebra(C, n); }, 2);
  expect_ok<Q>(r);
  for (std::size_t n = 0; n <= 1; ++n) EXPECT_EQ(psi_coalgebra_display(C, n), psi_coalgebra(C, n));
}

TEST(Cylindrical, FirstColumnModules)
{
  auto H = build_sweedler_h4(QQ);
  for (std::size_t q = 0; q <= 1; ++q) {
    expect_ok<Q>(check_module(first_column_module(self_comodule_algebra(H), q)));
    expect_ok<Q>(check_comodule(first_column_comodule(self_module_coalgebra(H), q)));
  }
}
