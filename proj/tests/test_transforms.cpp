#include <gtest/gtest.h>

#include "hopfcyc/transforms.hpp"

using namespace hopfcyc;
using Q = Rational;

namespace {

Field<Q> QQ;

void expect_ok(const AxiomReport& r)
{
  auto* f = r.first_failure();
  EXPECT_TRUE(f == nullptr) << (f ? f->name + ": " + f->detail : "");
}

bool passed(const AxiomReport& r, const std::string& name)
{
  for (const auto& c : r.checks)
    if (c.name == name) return c.passed;
  ADD_FAILURE() << "no check named " << name;
  return false;
}

void show_informational(const AxiomReport& r)
{
  for (const auto& c : r.checks)
    if (!c.passed) std::cout << "  informational: " << c.name << " " << c.detail << "\n";
}

} // namespace

TEST(Transforms, KC2AlgebraSide)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  auto r = transform_suite_algebra(self_comodule_algebra(H), 2, 2);
  expect_ok(r);
  EXPECT_TRUE(passed(r, "𝔟̄ = δ (Hopf-module boundary)"));
}

TEST(Transforms, KC2CoalgebraSide)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  auto r = transform_suite_coalgebra(self_module_coalgebra(H), 2, 2);
  expect_ok(r);
  EXPECT_TRUE(passed(r, "𝔟̄ = 𝛅 (Hopf-comodule coboundary)"));
}

TEST(Transforms, H4AlgebraSide)
{
  auto H = build_sweedler_h4(QQ);
  auto r = transform_suite_algebra(self_comodule_algebra(H), 2, 1);
  expect_ok(r);
  show_informational(r);
  EXPECT_FALSE(passed(r, "𝔱̄ displayed closed form"));
}

TEST(Transforms, H4CoalgebraSide)
{
  auto H = build_sweedler_h4(QQ);
  auto r = transform_suite_coalgebra(self_module_coalgebra(H), 1, 1);
  expect_ok(r);
  show_informational(r);
}

TEST(Transforms, S3BothSides)
{
  auto H = build_s3_group_algebra(QQ);
  auto ra = transform_suite_algebra(self_comodule_algebra(H), 1, 1);
  expect_ok(ra);
  auto rc = transform_suite_coalgebra(self_module_coalgebra(H), 1, 1);
  expect_ok(rc);
  show_informational(ra);
  show_informational(rc);
}
