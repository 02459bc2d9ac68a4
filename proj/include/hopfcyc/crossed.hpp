#ifndef HOPFCYC_CROSSED_HPP
#define HOPFCYC_CROSSED_HPP

#include <string>
#include <vector>

#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/hopf.hpp"
#include "hopfcyc/legs.hpp"
#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

inline std::size_t ipow(std::size_t b, std::size_t e)
{
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

namespace detail {
inline std::vector<std::string> pair_names(const std::vector<std::string>& a, const std::vector<std::string>& h)
{
  std::vector<std::string> out;
  for (const auto& x : a)
    for (const auto& y : h) out.push_back(x + "⊗" + y);
  return out;
}
} // namespace detail

/// A⋊H on A⊗H: (a⊗g)(b⊗h) = a b^(0̄) ⊗ S⁻¹(b^(1̄)) g b^(2̄) h, where b ↦ b^(2̄)⊗b^(1̄)⊗b^(0̄)
/// is the iterated coaction (the H-leg next to A carries the label 1̄).
template <class K> AlgebraData<K> crossed_product_algebra(const ComoduleAlgebraData<K>& A, bool validate = true)
{
  const auto& H = A.hopf;
  const auto& f = H.field;
  const std::size_t dA = A.algebra.dim, dH = H.dim;
  Shape in;
  in.add("a", dA).add("g", dH).add("b", dA).add("h", dH);
  Shape out;
  out.add("ab", dA).add("t", dH);
  auto mult = materialize(f, in, out, [&](Tensor<K>& t) {
    legs::coact(t, A, "b", "x", "b'");
    legs::comult(t, H, "x", "x2", "x1"); // x2 = b^(2̄), x1 = b^(1̄)
    legs::antipode_inv(t, H, "x1");
    legs::prod(t, H, {"x1", "g", "x2", "h"}, "t");
    legs::mul(t, A.algebra, "a", "b'", "ab");
  });
  AlgebraData<K> R{f, dA * dH, detail::pair_names(A.algebra.basis, H.basis), mult, kron(A.algebra.unit, H.unit)};
  if (validate) {
    auto rep = check_algebra(R, "crossed product ");
    if (auto* bad = rep.first_failure()) throw Error(Errc::AxiomFailure, bad->name + " (" + bad->detail + ")");
  }
  return R;
}

/// C>◄H on C⊗H: Δ(a⊗g) = (a^(0)⊗g^(1)) ⊗ (S⁻¹(g^(0) S(g^(2)))·a^(1) ⊗ g^(3)), ε = ε_C⊗ε_H.
template <class K> CoalgebraData<K> crossed_product_coalgebra(const ModuleCoalgebraData<K>& C, bool validate = true)
{
  const auto& H = C.hopf;
  const auto& f = H.field;
  const std::size_t dC = C.coalgebra.dim, dH = H.dim;
  Shape in;
  in.add("a", dC).add("g", dH);
  Shape out;
  out.add("a0", dC).add("g1", dH).add("b", dC).add("g3", dH);
  auto comult = materialize(f, in, out, [&](Tensor<K>& t) {
    legs::comult(t, C.coalgebra, "a", "a0", "a1");
    legs::comult_iter(t, H, "g", {"g0", "g1", "g2", "g3"});
    legs::antipode(t, H, "g2");
    legs::mul(t, H, "g0", "g2", "y");
    legs::antipode_inv(t, H, "y");
    legs::act(t, C, "y", "a1", "b");
  });
  CoalgebraData<K> R{f, dC * dH, detail::pair_names(C.coalgebra.basis, H.basis), comult, kron(C.coalgebra.counit, H.counit)};
  if (validate) {
    auto rep = check_coalgebra(R, "crossed product ");
    if (auto* bad = rep.first_failure()) throw Error(Errc::AxiomFailure, bad->name + " (" + bad->detail + ")");
  }
  return R;
}

namespace detail {

/// (r_0,...,r_n) -> (r_n, r_0, ..., r_{n-1}) on d^{n+1}.
template <class K> SparseMatrix<K> rotate_last_to_front(std::size_t d, std::size_t n, const K& one)
{
  const std::size_t N = ipow(d, n + 1), top = ipow(d, n);
  SparseMatrix<K> m(N, N);
  for (std::size_t j = 0; j < N; ++j) m.set_col(j, {{(j % d) * top + j / d, one}});
  return m;
}

/// (a_0,...,a_n) -> (a_1, ..., a_n, a_0) on d^{n+1}.
template <class K> SparseMatrix<K> rotate_first_to_back(std::size_t d, std::size_t n, const K& one)
{
  const std::size_t N = ipow(d, n + 1), top = ipow(d, n);
  SparseMatrix<K> m(N, N);
  for (std::size_t j = 0; j < N; ++j) m.set_col(j, {{(j % top) * d + j / top, one}});
  return m;
}

template <class K> SparseMatrix<K> sandwich(const Field<K>& f, std::size_t left, const SparseMatrix<K>& mid, std::size_t right)
{
  return kron(kron(id_map(f, left), mid), id_map(f, right));
}

} // namespace detail

/// C_n(R) = R^{⊗(n+1)}: d_i multiplies r_i r_{i+1} (i < n), d_n(r) = (r_n r_0, r_1, ..., r_{n-1}),
/// s_i inserts 1 after r_i, t(r) = (r_n, r_0, ..., r_{n-1}).
template <class K> CyclicObject<K> cyclic_module_of_algebra(const AlgebraData<K>& R)
{
  const auto f = R.field;
  const std::size_t d = R.dim;
  return CyclicObject<K>(
      f, Variance::Chain, [d](std::size_t n) { return ipow(d, n + 1); },
      [f, d, R](CyclicOp op, std::size_t n, std::size_t i) {
        const K one = f.one();
        switch (op) {
        case CyclicOp::Cyc: return detail::rotate_last_to_front(d, n, one);
        case CyclicOp::Face:
          if (i < n) return detail::sandwich(f, ipow(d, i), R.mult, ipow(d, n - 1 - i));
          return detail::sandwich(f, 1, R.mult, ipow(d, n - 1)) * detail::rotate_last_to_front(d, n, one);
        case CyclicOp::Degen: return detail::sandwich(f, ipow(d, i + 1), R.unit, ipow(d, n - i));
        }
        throw std::logic_error("bad cyclic operator");
      });
}

/// C^n(C) = C^{⊗(n+1)}: ∂^i splits a_i (i <= n), ∂^{n+1}(a) = (a_0^(1), a_1, ..., a_n, a_0^(0)),
/// σ^i applies ε to a_{i+1}, τ(a) = (a_1, ..., a_n, a_0).
template <class K> CyclicObject<K> cocyclic_module_of_coalgebra(const CoalgebraData<K>& C)
{
  const auto f = C.field;
  const std::size_t d = C.dim;
  return CyclicObject<K>(
      f, Variance::Cochain, [d](std::size_t n) { return ipow(d, n + 1); },
      [f, d, C](CyclicOp op, std::size_t n, std::size_t i) {
        const K one = f.one();
        switch (op) {
        case CyclicOp::Cyc: return detail::rotate_first_to_back(d, n, one);
        case CyclicOp::Face:
          if (i <= n) return detail::sandwich(f, ipow(d, i), C.comult, ipow(d, n - i));
          return detail::rotate_first_to_back(d, n + 1, one) * detail::sandwich(f, 1, C.comult, ipow(d, n));
        case CyclicOp::Degen: return detail::sandwich(f, ipow(d, i + 1), C.counit, ipow(d, n - 1 - i));
        }
        throw std::logic_error("bad cyclic operator");
      });
}

} // namespace hopfcyc

#endif // HOPFCYC_CROSSED_HPP
