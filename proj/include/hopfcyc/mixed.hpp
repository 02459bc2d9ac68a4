#ifndef HOPFCYC_MIXED_HPP
#define HOPFCYC_MIXED_HPP

#include <string>
#include <vector>

#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/hopf.hpp"
#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

/// Truncated mixed complex M_0..M_top. b[n]: M_n -> M_{n-1} (b[0] is the map to 0),
/// B[n]: M_n -> M_{n+1} for n < top.
template <class K> struct MixedComplex {
  Field<K> field;
  std::size_t top = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix<K>> b;
  std::vector<SparseMatrix<K>> B;
};

/// b = Σ(-1)^i d_i and B = (1 - λ) s_{-1} N with λ = (-1)^n t, N = Σ_i λ^i and the extra
/// degeneracy s_{-1} = t_{n+1} s_n. A cocyclic object is read through transposes, so the
/// dimensions reported are those of its cohomology.
template <class K> MixedComplex<K> mixed_complex(const CyclicObject<K>& input, std::size_t top)
{
  const CyclicObject<K> X = input.variance() == Variance::Chain ? input : input.transposed();
  const auto& f = X.field();
  const K one = f.one();
  MixedComplex<K> mc{f, top, {}, {}, {}};
  for (std::size_t n = 0; n <= top; ++n) mc.dims.push_back(X.dim(n));
  mc.b.push_back(SparseMatrix<K>(0, mc.dims[0]));
  for (std::size_t n = 1; n <= top; ++n) {
    SparseMatrix<K> b(mc.dims[n - 1], mc.dims[n]);
    K sign = one;
    for (std::size_t i = 0; i <= n; ++i) {
      b = b + sign * X.face(n, i);
      sign = -sign;
    }
    mc.b.push_back(std::move(b));
  }
  auto lambda = [&](std::size_t n) { return (n % 2 == 0 ? one : K(-one)) * X.cyc(n); };
  for (std::size_t n = 0; n < top; ++n) {
    auto I = SparseMatrix<K>::identity(mc.dims[n], one);
    auto l = lambda(n);
    SparseMatrix<K> norm = I, pw = I;
    for (std::size_t i = 1; i <= n; ++i) {
      pw = l * pw;
      norm = norm + pw;
    }
    auto extra = X.cyc(n + 1) * X.degen(n, n);
    auto I1 = SparseMatrix<K>::identity(mc.dims[n + 1], one);
    mc.B.push_back((I1 - lambda(n + 1)) * extra * norm);
  }
  return mc;
}

/// b² = 0, B² = 0 and bB + Bb = 0 in every degree the truncation sees.
template <class K> AxiomReport mixed_identities(const MixedComplex<K>& mc)
{
  Suite s;
  for (std::size_t n = 0; n <= mc.top; ++n) {
    const std::string w = "n=" + std::to_string(n);
    if (n + 1 <= mc.top) s.expect("b² = 0", w, mc.b[n] * mc.b[n + 1], SparseMatrix<K>(mc.b[n].rows(), mc.dims[n + 1]));
    if (n + 2 <= mc.top) s.expect("B² = 0", w, mc.B[n + 1] * mc.B[n], SparseMatrix<K>(mc.dims[n + 2], mc.dims[n]));
    if (n + 1 <= mc.top) {
      // on M_n: b_{n+1} B_n + B_{n-1} b_n
      auto lhs = mc.b[n + 1] * mc.B[n];
      if (n > 0) lhs = lhs + mc.B[n - 1] * mc.b[n];
      s.expect("bB + Bb = 0", w, lhs, SparseMatrix<K>(mc.dims[n], mc.dims[n]));
    }
  }
  return s.report();
}

inline void require_mixed(const AxiomReport& r)
{
  if (auto* f = r.first_failure()) throw Error(Errc::MixedIdentityFailure, f->name + " (" + f->detail + ")");
}

namespace detail {
inline void check_depth(std::size_t nmax, std::size_t top)
{
  if (nmax + 1 > top)
    throw Error(Errc::TruncationTooShallow,
                "degree " + std::to_string(nmax) + " needs the complex up to degree " + std::to_string(nmax + 1) + ", have " + std::to_string(top));
}
} // namespace detail

/// dim HH_n = dim H_n(M, b) for n <= nmax (needs nmax <= top - 1).
template <class K> std::vector<std::size_t> hochschild_dims(const MixedComplex<K>& mc, std::size_t nmax)
{
  detail::check_depth(nmax, mc.top);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= nmax; ++n) out.push_back(homology_dim(mc.b[n], mc.b[n + 1]));
  return out;
}

/// Differential of Tot_n = ⊕_{i>=0} M_{n-2i} with b + B, as a map Tot_n -> Tot_{n-1}.
template <class K> SparseMatrix<K> total_bB(const MixedComplex<K>& mc, std::size_t n)
{
  auto offsets = [&](std::size_t m) {
    std::vector<std::size_t> off{0};
    for (std::size_t k = m + 2; k >= 2; k -= 2) off.push_back(off.back() + mc.dims[k - 2]);
    return off; // block i holds M_{m-2i}; off[i] is its start
  };
  auto src = offsets(n);
  if (n == 0) return SparseMatrix<K>(0, src.back());
  auto dst = offsets(n - 1);
  std::vector<std::tuple<std::size_t, std::size_t, K>> t;
  for (std::size_t i = 0; 2 * i <= n; ++i) {
    const std::size_t deg = n - 2 * i;
    if (deg >= 1)
      for (auto [r, c, v] : mc.b[deg].triplets()) t.emplace_back(dst[i] + r, src[i] + c, v);
    if (i >= 1)
      for (auto [r, c, v] : mc.B[deg].triplets()) t.emplace_back(dst[i - 1] + r, src[i] + c, v);
  }
  return SparseMatrix<K>::from_triplets(dst.back(), src.back(), t);
}

/// dim HC_n from the (b, B) total complex, n <= nmax (needs nmax <= top - 1).
template <class K> std::vector<std::size_t> cyclic_dims(const MixedComplex<K>& mc, std::size_t nmax)
{
  detail::check_depth(nmax, mc.top);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= nmax; ++n) out.push_back(homology_dim(total_bB(mc, n), total_bB(mc, n + 1)));
  return out;
}

} // namespace hopfcyc

#endif // HOPFCYC_MIXED_HPP
