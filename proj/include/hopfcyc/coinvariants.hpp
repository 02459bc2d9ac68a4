#ifndef HOPFCYC_COINVARIANTS_HPP
#define HOPFCYC_COINVARIANTS_HPP

#include <memory>
#include <string>
#include <vector>

#include "hopfcyc/cylindrical.hpp"
#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

namespace detail {

/// Walks every operator of X with source degree <= top and target degree <= top.
template <class K, class Fn> void for_each_op(const CyclicObject<K>& X, std::size_t top, Fn&& fn)
{
  const bool chain = X.variance() == Variance::Chain;
  for (std::size_t n = 0; n <= top; ++n) {
    fn(std::string("t"), n, n, X.cyc(n));
    for (std::size_t i = 0; i < X.face_count(n); ++i) {
      std::size_t m = chain ? n - 1 : n + 1;
      if (m <= top) fn("d_" + std::to_string(i), n, m, X.face(n, i));
    }
    for (std::size_t i = 0; i < X.degen_count(n); ++i) {
      std::size_t m = chain ? n + 1 : n - 1;
      if (m <= top) fn("s_" + std::to_string(i), n, m, X.degen(n, i));
    }
  }
}

/// Row k picks the k-th pivot coordinate: coordinates of vectors lying in the subspace.
template <class K> SparseMatrix<K> pivot_coordinates(const Subspace<K>& s, const K& one)
{
  SparseMatrix<K> m(s.dim(), s.ambient_dim());
  for (std::size_t k = 0; k < s.dim(); ++k) m.set_col(s.pivots()[k], {{k, one}});
  return m;
}

} // namespace detail

/// C_n^H(A) = (H ⊗ A^{⊗(n+1)}) / span{h·x - ε(h)x}, with the cyclic operators induced from
/// the first column of A♮H (where β and γ are identities).
template <class K> struct AlgebraCoinvariants {
  std::shared_ptr<std::vector<Quotient<K>>> quotients;
  CyclicObject<K> object;
};

template <class K> AlgebraCoinvariants<K> coinvariants_algebra(const ComoduleAlgebraData<K>& A, std::size_t top)
{
  const auto& f = A.hopf.field;
  const K one = f.one();
  auto qs = std::make_shared<std::vector<Quotient<K>>>();
  for (std::size_t n = 0; n <= top; ++n) {
    auto M = first_column_module(A, n);
    auto rel = M.action - kron(A.hopf.counit, id_map(f, M.dim));
    qs->push_back(Quotient<K>(image(rel)));
  }
  auto X = a_natural_h(A).vertical(0);
  // well defined: every relation maps into the target's relations
  detail::for_each_op(X, top, [&](const std::string& name, std::size_t n, std::size_t m, const SparseMatrix<K>& op) {
    const auto& src = (*qs)[n].relations();
    const auto& dst = (*qs)[m];
    for (std::size_t k = 0; k < src.dim(); ++k)
      if (!dst.project(op.apply(src.basis()[k])).empty())
        throw Error(Errc::NotWellDefined, name + " at n=" + std::to_string(n) + " does not preserve the relations");
  });
  auto obj = X.induced([qs](std::size_t n) { return (*qs).at(n).dim(); },
                       [qs, one](std::size_t m) { return (*qs).at(m).projection(one); },
                       [qs, one](std::size_t n) { return (*qs).at(n).lift(one); });
  return {qs, obj};
}

/// C^n_H(C) = {x in H ⊗ C^{⊗(n+1)} : 𝚫x = 1 ⊗ x}, with the cocyclic operators restricted from
/// the first column of C♮H.
template <class K> struct CoalgebraCoinvariants {
  std::shared_ptr<std::vector<Subspace<K>>> subspaces;
  CyclicObject<K> object;
};

template <class K> CoalgebraCoinvariants<K> coinvariants_coalgebra(const ModuleCoalgebraData<K>& C, std::size_t top)
{
  const auto& f = C.hopf.field;
  const K one = f.one();
  auto ss = std::make_shared<std::vector<Subspace<K>>>();
  for (std::size_t n = 0; n <= top; ++n) {
    auto M = first_column_comodule(C, n);
    ss->push_back(kernel(M.coaction - kron(C.hopf.unit, id_map(f, M.dim)), one));
  }
  auto X = c_natural_h(C).vertical(0);
  detail::for_each_op(X, top, [&](const std::string& name, std::size_t n, std::size_t m, const SparseMatrix<K>& op) {
    const auto& src = (*ss)[n];
    for (std::size_t k = 0; k < src.dim(); ++k)
      if (!(*ss)[m].contains(op.apply(src.basis()[k])))
        throw Error(Errc::NotRestricting, name + " at n=" + std::to_string(n) + " leaves the coinvariants");
  });
  auto obj = X.induced([ss](std::size_t n) { return (*ss).at(n).dim(); },
                       [ss, one](std::size_t m) { return detail::pivot_coordinates((*ss).at(m), one); },
                       [ss](std::size_t n) { return (*ss).at(n).basis_matrix(); });
  return {ss, obj};
}

} // namespace hopfcyc

#endif // HOPFCYC_COINVARIANTS_HPP
