#ifndef HOPFCYC_HOPF_HOMOLOGY_HPP
#define HOPFCYC_HOPF_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "hopfcyc/crossed.hpp"
#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/hopf.hpp"
#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

/// δ: H^{⊗p} ⊗ M -> H^{⊗(p-1)} ⊗ M,
/// δ(g_1..g_p, m) = ε(g_1)(g_2..g_p, m) + Σ_{0<i<p} (-1)^i (.., g_i g_{i+1}, .., m) + (-1)^p (g_1..g_{p-1}, g_p·m).
/// For p = 0 this is the zero map to the zero space.
template <class K> SparseMatrix<K> hopf_module_boundary(const ModuleData<K>& M, std::size_t p)
{
  const auto& H = M.hopf;
  const auto& f = H.field;
  const std::size_t d = H.dim;
  if (p == 0) return SparseMatrix<K>(0, M.dim);
  const std::size_t tail = ipow(d, p - 1) * M.dim;
  SparseMatrix<K> out = kron(H.counit, id_map(f, tail));
  K sign = f.one();
  for (std::size_t i = 1; i < p; ++i) {
    sign = -sign;
    out = out + sign * detail::sandwich(f, ipow(d, i - 1), H.mult, ipow(d, p - i - 1) * M.dim);
  }
  sign = -sign;
  return out + sign * kron(id_map(f, ipow(d, p - 1)), M.action);
}

/// 𝛅: H^{⊗p} ⊗ M -> H^{⊗(p+1)} ⊗ M,
/// 𝛅(g_1..g_p, m) = (1, g_1..g_p, m) + Σ_{i=1}^{p} (-1)^i (.., g_i^(0), g_i^(1), .., m) + (-1)^{p+1} (g_1..g_p, Δ_M m).
template <class K> SparseMatrix<K> hopf_comodule_coboundary(const ComoduleData<K>& M, std::size_t p)
{
  const auto& H = M.hopf;
  const auto& f = H.field;
  const std::size_t d = H.dim;
  SparseMatrix<K> out = kron(H.unit, id_map(f, ipow(d, p) * M.dim));
  K sign = f.one();
  for (std::size_t i = 1; i <= p; ++i) {
    sign = -sign;
    out = out + sign * detail::sandwich(f, ipow(d, i - 1), H.comult, ipow(d, p - i) * M.dim);
  }
  sign = -sign;
  return out + sign * kron(id_map(f, ipow(d, p)), M.coaction);
}

/// dim H_q(H, M) for q = 0..qmax.
template <class K> std::vector<std::size_t> hopf_module_homology(const ModuleData<K>& M, std::size_t qmax)
{
  std::vector<SparseMatrix<K>> d;
  for (std::size_t q = 0; q <= qmax + 1; ++q) d.push_back(hopf_module_boundary(M, q));
  std::vector<std::size_t> dims;
  for (std::size_t q = 0; q <= qmax; ++q) {
    if (!(d[q] * d[q + 1]).is_zero_matrix())
      throw Error(Errc::BoundaryNotSquareZero, "δ∘δ != 0 at degree " + std::to_string(q + 1));
    dims.push_back(homology_dim(d[q], d[q + 1]));
  }
  return dims;
}

/// dim H^p(H, M) for p = 0..pmax.
template <class K> std::vector<std::size_t> hopf_comodule_cohomology(const ComoduleData<K>& M, std::size_t pmax)
{
  std::vector<SparseMatrix<K>> d;
  for (std::size_t p = 0; p <= pmax; ++p) d.push_back(hopf_comodule_coboundary(M, p));
  std::vector<std::size_t> dims;
  for (std::size_t p = 0; p <= pmax; ++p) {
    if (p > 0 && !(d[p] * d[p - 1]).is_zero_matrix())
      throw Error(Errc::CoboundaryNotSquareZero, "𝛅∘𝛅 != 0 at degree " + std::to_string(p - 1));
    SparseMatrix<K> in = p == 0 ? SparseMatrix<K>(M.dim, 0) : d[p - 1];
    dims.push_back(homology_dim(d[p], in));
  }
  return dims;
}

namespace detail {
template <class K> K dot(const SparseMatrix<K>& covector, const SparseVector<K>& v, const K& zero)
{
  K s = zero;
  for (const auto& [i, c] : v) s += covector.get(0, i, zero) * c;
  return s;
}
} // namespace detail

/// Right integral t (t h = ε(h) t for all h) normalized to ε(t) = 1, as an H x 1 column.
template <class K> SparseMatrix<K> find_right_integral(const HopfData<K>& H)
{
  const auto& f = H.field;
  const std::size_t d = H.dim;
  std::vector<std::tuple<std::size_t, std::size_t, K>> rows;
  for (std::size_t j = 0; j < d; ++j) {
    SparseMatrix<K> e(d, 1);
    e.set_col(0, {{j, f.one()}});
    auto R = H.mult * kron(id_map(f, d), e) - H.counit.get(0, j, f.zero()) * id_map(f, d);
    for (auto [r, c, v] : R.triplets()) rows.emplace_back(j * d + r, c, v);
  }
  auto system = SparseMatrix<K>::from_triplets(d * d, d, rows);
  auto ker = kernel(system, f.one());
  for (const auto& v : ker.basis()) {
    K e = detail::dot(H.counit, v, f.zero());
    if (is_zero(e)) continue;
    SparseMatrix<K> t(d, 1);
    t.set_col(0, scaled(v, K(f.one() / e)));
    return t;
  }
  if (ker.dim() == 0) throw Error(Errc::NotSemisimple, "no nonzero right integral");
  throw Error(Errc::NotSemisimple, "ε vanishes on the right integrals");
}

/// Left integral x in H* (h^(0) x(h^(1)) = x(h) 1) normalized to x(1) = 1, as a 1 x H row.
template <class K> SparseMatrix<K> find_dual_left_integral(const HopfData<K>& H)
{
  const auto& f = H.field;
  const std::size_t d = H.dim;
  // row (j, a): Σ_b c_{j,a,b} x_b - u_a x_j = 0, with Δ e_j = Σ c_{j,a,b} e_a ⊗ e_b and 1 = Σ u_a e_a
  std::vector<std::tuple<std::size_t, std::size_t, K>> rows;
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& [ab, c] : H.comult.col(j)) rows.emplace_back(j * d + ab / d, ab % d, c);
    for (const auto& [a, u] : H.unit.col(0)) rows.emplace_back(j * d + a, j, K(-u));
  }
  auto system = SparseMatrix<K>::from_triplets(d * d, d, rows);
  auto ker = kernel(system, f.one());
  for (const auto& v : ker.basis()) {
    K at_one = f.zero();
    for (const auto& [i, c] : v) at_one += H.unit.get(i, 0, f.zero()) * c;
    if (is_zero(at_one)) continue;
    SparseMatrix<K> x(1, d);
    for (const auto& [i, c] : v) {
      SparseVector<K> col{{0, K(c / at_one)}};
      x.set_col(i, col);
    }
    return x;
  }
  if (ker.dim() == 0) throw Error(Errc::NotCosemisimple, "no nonzero left integral in the dual");
  throw Error(Errc::NotCosemisimple, "every left integral in the dual vanishes at 1");
}

/// h(g_1..g_q, m) = (t, g_1..g_q, m) against δ: δh + hδ = ε(t) id for q >= 1 and
/// δh = id - t·(-) on M at q = 0.
template <class K> AxiomReport semisimple_homotopy_check(const ModuleData<K>& M, const SparseMatrix<K>& t, std::size_t qmax)
{
  const auto& H = M.hopf;
  const auto& f = H.field;
  Suite s;
  auto h = [&](std::size_t q) { return kron(t, id_map(f, ipow(H.dim, q) * M.dim)); };
  const K eps_t = (H.counit * t).get(0, 0, f.zero());
  for (std::size_t q = 0; q <= qmax; ++q) {
    const std::size_t n = ipow(H.dim, q) * M.dim;
    auto w = "q=" + std::to_string(q);
    if (q == 0) {
      s.expect("δh = id - t·(-) at degree 0", w, hopf_module_boundary(M, 1) * h(0), id_map(f, n) - M.action * kron(t, id_map(f, n)));
    } else {
      auto lhs = hopf_module_boundary(M, q + 1) * h(q) + h(q - 1) * hopf_module_boundary(M, q);
      s.expect("δh + hδ = id", w, lhs, eps_t * id_map(f, n));
      s.note("δh + hδ = id", eps_t == f.one(), w + ": ε(t) != 1");
    }
  }
  return s.report();
}

/// h(g_1..g_p, m) = x(g_1)(g_2..g_p, m) against 𝛅: 𝛅h + h𝛅 = x(1) id for p >= 1 and
/// h𝛅 = id - (x⊗id)Δ_M at p = 0.
template <class K> AxiomReport cosemisimple_homotopy_check(const ComoduleData<K>& M, const SparseMatrix<K>& x, std::size_t pmax)
{
  const auto& H = M.hopf;
  const auto& f = H.field;
  Suite s;
  auto h = [&](std::size_t p) { return kron(x, id_map(f, ipow(H.dim, p - 1) * M.dim)); };
  const K x_one = (x * H.unit).get(0, 0, f.zero());
  for (std::size_t p = 0; p <= pmax; ++p) {
    const std::size_t n = ipow(H.dim, p) * M.dim;
    auto w = "p=" + std::to_string(p);
    if (p == 0) {
      s.expect("h𝛅 = id - (x⊗id)Δ_M at degree 0", w, h(1) * hopf_comodule_coboundary(M, 0),
               id_map(f, n) - kron(x, id_map(f, n)) * M.coaction);
    } else {
      auto lhs = hopf_comodule_coboundary(M, p - 1) * h(p) + h(p + 1) * hopf_comodule_coboundary(M, p);
      s.expect("𝛅h + h𝛅 = id", w, lhs, x_one * id_map(f, n));
      s.note("𝛅h + h𝛅 = id", x_one == f.one(), w + ": x(1) != 1");
    }
  }
  return s.report();
}

inline void require_homotopy(const AxiomReport& r)
{
  if (auto* f = r.first_failure()) throw Error(Errc::HomotopyFailure, f->name + " (" + f->detail + ")");
}

} // namespace hopfcyc

#endif // HOPFCYC_HOPF_HOMOLOGY_HPP
