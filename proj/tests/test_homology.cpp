#include <gtest/gtest.h>

#include "hopfcyc/coinvariants.hpp"
#include "hopfcyc/hopf_homology.hpp"
#include "hopfcyc/mixed.hpp"

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

template <class Fn> Errc code_of(Fn&& fn)
{
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::ParseError;
}

using Dims = std::vector<std::size_t>;

} // namespace

// k is smooth of dimension 0: HH = k in degree 0, HC = k in even degrees.
TEST(Mixed, GroundField)
{
  auto mc = mixed_complex(cyclic_module_of_algebra(ground_algebra(QQ)), 4);
  expect_ok(mixed_identities(mc));
  EXPECT_EQ(hochschild_dims(mc, 3), (Dims{1, 0, 0, 0}));
  EXPECT_EQ(cyclic_dims(mc, 3), (Dims{1, 0, 1, 0}));
}

// kC2 over Q is k × k: HH = k² in degree 0, HC = k² in even degrees.
TEST(Mixed, KC2Rationals)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  auto mc = mixed_complex(cyclic_module_of_algebra(H.algebra()), 4);
  expect_ok(mixed_identities(mc));
  EXPECT_EQ(hochschild_dims(mc, 3), (Dims{2, 0, 0, 0}));
  EXPECT_EQ(cyclic_dims(mc, 3), (Dims{2, 0, 2, 0}));
}

// F2[C2] = F2[x]/(x²): every map in the periodic resolution vanishes, so HH_n = 2 for all n.
TEST(Mixed, KC2CharTwo)
{
  auto H = build_cyclic_group_algebra(2, F2);
  auto mc = mixed_complex(cyclic_module_of_algebra(H.algebra()), 4);
  expect_ok(mixed_identities(mc));
  EXPECT_EQ(hochschild_dims(mc, 3), (Dims{2, 2, 2, 2}));
}

// The coalgebra k^{C2} dual to kC2 is cocommutative and the cocyclic side reads its cohomology.
TEST(Mixed, CocyclicThroughTranspose)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  auto mc = mixed_complex(cocyclic_module_of_coalgebra(H.coalgebra()), 3);
  expect_ok(mixed_identities(mc));
  EXPECT_EQ(hochschild_dims(mc, 2).size(), 3u);
}

TEST(Mixed, H4Identities)
{
  auto H = build_sweedler_h4(QQ);
  expect_ok(mixed_identities(mixed_complex(cyclic_module_of_algebra(H.algebra()), 3)));
  expect_ok(mixed_identities(mixed_complex(cocyclic_module_of_coalgebra(H.coalgebra()), 3)));
}

TEST(Mixed, TruncationTooShallow)
{
  auto mc = mixed_complex(cyclic_module_of_algebra(ground_algebra(QQ)), 2);
  EXPECT_EQ(code_of([&] { hochschild_dims(mc, 2); }), Errc::TruncationTooShallow);
  EXPECT_EQ(code_of([&] { cyclic_dims(mc, 2); }), Errc::TruncationTooShallow);
}

// Group homology of C2 with trivial coefficients.
TEST(HopfHomology, KC2Trivial)
{
  EXPECT_EQ(hopf_module_homology(trivial_module(build_cyclic_group_algebra(2, F2)), 3), (Dims{1, 1, 1, 1}));
  EXPECT_EQ(hopf_module_homology(trivial_module(build_cyclic_group_algebra(2, QQ)), 3), (Dims{1, 0, 0, 0}));
}

// kC2-comodules are C2-graded spaces; that category is semisimple in every characteristic.
TEST(HopfHomology, KC2ComoduleTrivial)
{
  EXPECT_EQ(hopf_comodule_cohomology(trivial_comodule(build_cyclic_group_algebra(2, F2)), 3), (Dims{1, 0, 0, 0}));
  EXPECT_EQ(hopf_comodule_cohomology(trivial_comodule(build_cyclic_group_algebra(2, QQ)), 3), (Dims{1, 0, 0, 0}));
}

// Tor^H(k, H) and Cotor^H(k, H) are k in degree 0, even for non-semisimple H.
TEST(HopfHomology, RegularIsAcyclic)
{
  auto H = build_sweedler_h4(QQ);
  EXPECT_EQ(hopf_module_homology(ModuleData<Q>{H, H.dim, H.mult}, 2), (Dims{1, 0, 0}));
  EXPECT_EQ(hopf_comodule_cohomology(ComoduleData<Q>{H, H.dim, H.comult}, 2), (Dims{1, 0, 0}));
  // H4 = k[x]/(x²) ⋊ kC2; Tor_n over k[x]/(x²) is k with g acting by (-1)^n, and C2 is averaged out.
  EXPECT_EQ(hopf_module_homology(trivial_module(H), 3), (Dims{1, 0, 1, 0}));
}

TEST(HopfHomology, Integrals)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  auto t = find_right_integral(H);
  EXPECT_EQ(t.get(0, 0, Q(0)), Q(1, 2));
  EXPECT_EQ(t.get(1, 0, Q(0)), Q(1, 2));
  auto x = find_dual_left_integral(H);
  EXPECT_EQ(x.get(0, 0, Q(0)), Q(1));
  EXPECT_EQ(x.get(0, 1, Q(0)), Q(0));

  EXPECT_EQ(code_of([] { find_right_integral(build_cyclic_group_algebra(2, F2)); }), Errc::NotSemisimple);
  EXPECT_NO_THROW(find_dual_left_integral(build_cyclic_group_algebra(2, F2)));
  EXPECT_EQ(code_of([] { find_right_integral(build_sweedler_h4(QQ)); }), Errc::NotSemisimple);
  EXPECT_EQ(code_of([] { find_dual_left_integral(build_sweedler_h4(QQ)); }), Errc::NotCosemisimple);
}

TEST(HopfHomology, Homotopies)
{
  auto H = build_s3_group_algebra(QQ);
  auto M = first_column_module(self_comodule_algebra(H), 0);
  auto r = semisimple_homotopy_check(M, find_right_integral(H), 2);
  expect_ok(r);
  EXPECT_NO_THROW(require_homotopy(r));
  auto C = first_column_comodule(self_module_coalgebra(H), 0);
  expect_ok(cosemisimple_homotopy_check(C, find_dual_left_integral(H), 2));
}

TEST(HopfHomology, HomotopyDetectsWrongIntegral)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  SparseMatrix<Q> bogus(2, 1);
  bogus.set_col(0, {{0, Q(1)}});
  auto r = semisimple_homotopy_check(trivial_module(H), bogus, 1);
  EXPECT_EQ(code_of([&] { require_homotopy(r); }), Errc::HomotopyFailure);
}

// For abelian G the first-column action of kG is trivial, so nothing is divided out.
TEST(Coinvariants, AbelianHasNoRelations)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  auto A = coinvariants_algebra(self_comodule_algebra(H), 2);
  auto C = coinvariants_coalgebra(self_module_coalgebra(H), 2);
  for (std::size_t n = 0; n <= 2; ++n) {
    EXPECT_EQ(A.object.dim(n), ipow(2, n + 2));
    EXPECT_EQ(C.object.dim(n), ipow(2, n + 2));
  }
  expect_ok(cyclic_suite(A.object, 2));
  expect_ok(cyclic_suite(C.object, 2));
}

// kC2 with its regular coaction: the crossed product is the commutative semisimple k[C2 × C2],
// so HC is k⁴ in even degrees on both sides.
TEST(Coinvariants, KC2MatchesCrossedProduct)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  auto A = self_comodule_algebra(H);
  EXPECT_EQ(cyclic_dims(mixed_complex(coinvariants_algebra(A, 3).object, 3), 2), (Dims{4, 0, 4}));
  EXPECT_EQ(cyclic_dims(mixed_complex(cyclic_module_of_algebra(crossed_product_algebra(A)), 3), 2), (Dims{4, 0, 4}));
  auto C = self_module_coalgebra(H);
  EXPECT_EQ(cyclic_dims(mixed_complex(coinvariants_coalgebra(C, 3).object, 3), 2), (Dims{4, 0, 4}));
}

TEST(Coinvariants, H4Operators)
{
  auto H = build_sweedler_h4(QQ);
  auto A = coinvariants_algebra(self_comodule_algebra(H), 2);
  auto C = coinvariants_coalgebra(self_module_coalgebra(H), 2);
  EXPECT_EQ(A.object.dim(0), 8u);
  EXPECT_EQ(C.object.dim(0), 8u);
  expect_ok(cyclic_suite(A.object, 2));
  expect_ok(cyclic_suite(C.object, 2));
}

// Trivial coaction over abelian G: one untwisted copy of C(A) per group element.
TEST(Coinvariants, TrivialCoactionKeepsAlgebra)
{
  auto H = build_cyclic_group_algebra(2, QQ);
  auto R = trivial_comodule_algebra(H, build_cyclic_group_algebra(3, QQ).algebra());
  auto co = coinvariants_algebra(R, 3);
  auto mc = mixed_complex(co.object, 3);
  expect_ok(mixed_identities(mc));
  // kC3 over Q is k³
  EXPECT_EQ(cyclic_dims(mc, 2), (Dims{6, 0, 6}));
}
