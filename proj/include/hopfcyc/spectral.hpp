#ifndef HOPFCYC_SPECTRAL_HPP
#define HOPFCYC_SPECTRAL_HPP

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcyc/mixed.hpp"
#include "hopfcyc/transforms.hpp"

namespace hopfcyc {

/// One summand of a filtered degree: filtration index s, plus the bidegree it came from.
struct FBlock {
  int s = 0;
  std::size_t p = 0; // Hopf degree
  std::size_t q = 0; // A (or C) degree
  std::size_t size = 0;
};

/// A chain complex d[n]: T_n -> T_{n-1} with F_s T_n the span of the blocks of index <= s
/// (blocks are stored in increasing s, so each F_s is a coordinate prefix).
template <class K> struct FilteredComplex {
  Field<K> field;
  std::map<int, std::vector<FBlock>> blocks;
  std::map<int, SparseMatrix<K>> d;

  std::size_t dim(int n) const
  {
    auto it = blocks.find(n);
    if (it == blocks.end()) return 0;
    std::size_t s = 0;
    for (const auto& b : it->second) s += b.size;
    return s;
  }
  std::size_t prefix(int n, int s) const
  {
    auto it = blocks.find(n);
    if (it == blocks.end()) return 0;
    std::size_t len = 0;
    for (const auto& b : it->second)
      if (b.s <= s) len += b.size;
    return len;
  }
  std::size_t offset(int n, std::size_t p, std::size_t q) const
  {
    std::size_t off = 0;
    for (const auto& b : blocks.at(n)) {
      if (b.p == p && b.q == q) return off;
      off += b.size;
    }
    throw std::logic_error("no such block");
  }
  std::size_t size(int n, std::size_t p, std::size_t q) const
  {
    for (const auto& b : blocks.at(n))
      if (b.p == p && b.q == q) return b.size;
    throw std::logic_error("no such block");
  }
  /// Degrees whose homology the truncation determines (both d[n] and d[n+1] known).
  std::vector<int> degrees() const
  {
    std::vector<int> out;
    for (const auto& [n, m] : d)
      if (d.count(n + 1)) out.push_back(n);
    return out;
  }
};

template <class K> SparseMatrix<K> submatrix(const SparseMatrix<K>& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1)
{
  SparseMatrix<K> out(r1 - r0, c1 - c0);
  for (std::size_t j = c0; j < c1; ++j) {
    SparseVector<K> col;
    for (const auto& [i, v] : m.col(j))
      if (i >= r0 && i < r1) col.emplace_back(i - r0, v);
    out.set_col(j - c0, std::move(col));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Total complexes of the bi-objects

template <class K> SparseMatrix<K> vertical_boundary(const BiObject<K>& X, std::size_t p, std::size_t q)
{
  const auto& f = X.field();
  const std::size_t count = X.variance() == Variance::Chain ? q + 1 : q + 2;
  auto [tp, tq] = detail::target(X.variance(), BiOp::VFace, p, q);
  SparseMatrix<K> b(X.dim(tp, tq), X.dim(p, q));
  K sign = f.one();
  for (std::size_t i = 0; i < count; ++i) {
    b = b + sign * X.op(BiOp::VFace, p, q, i);
    sign = -sign;
  }
  return b;
}

/// Tot(X) on the cells p + q <= top with d = b + (-1)^q b̄.
///
/// Chain objects: T_n = ⊕_{p+q=n} X_{p,q}, filtered by A-degree (s = q).
/// Cochain objects: T^n sits in chain degree -n and is filtered by q >= -s (s = -q).
template <class K> FilteredComplex<K> total_complex(const BiObject<K>& X, std::size_t top)
{
  const auto& f = X.field();
  const bool chain = X.variance() == Variance::Chain;
  FilteredComplex<K> fc{f, {}, {}};
  auto deg = [chain](std::size_t n) { return chain ? static_cast<int>(n) : -static_cast<int>(n); };
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<FBlock> bl;
    for (std::size_t q = 0; q <= n; ++q) {
      std::size_t p = n - q;
      bl.push_back({chain ? static_cast<int>(q) : -static_cast<int>(q), p, q, X.dim(p, q)});
    }
    std::sort(bl.begin(), bl.end(), [](const FBlock& a, const FBlock& b) { return a.s < b.s; });
    fc.blocks[deg(n)] = bl;
  }
  const K one = f.one();
  // differential out of cochain/chain degree n into n -/+ 1
  auto build = [&](std::size_t n, std::size_t m) {
    std::vector<std::tuple<std::size_t, std::size_t, K>> t;
    for (const auto& b : fc.blocks[deg(n)]) {
      const std::size_t c0 = fc.offset(deg(n), b.p, b.q);
      auto put = [&](const SparseMatrix<K>& mat, std::size_t tp, std::size_t tq, const K& sign) {
        const std::size_t r0 = fc.offset(deg(m), tp, tq);
        for (auto [r, c, v] : mat.triplets()) t.emplace_back(r0 + r, c0 + c, sign * v);
      };
      const K sq = b.q % 2 == 0 ? one : K(-one);
      if (chain) {
        if (b.q >= 1) put(vertical_boundary(X, b.p, b.q), b.p, b.q - 1, one);
        if (b.p >= 1) put(horizontal_boundary(X, b.p, b.q), b.p - 1, b.q, sq);
      } else {
        put(vertical_boundary(X, b.p, b.q), b.p, b.q + 1, one);
        put(horizontal_boundary(X, b.p, b.q), b.p + 1, b.q, sq);
      }
    }
    return SparseMatrix<K>::from_triplets(fc.dim(deg(m)), fc.dim(deg(n)), t);
  };
  if (chain) {
    fc.d[0] = SparseMatrix<K>(0, fc.dim(0));
    for (std::size_t n = 1; n <= top; ++n) fc.d[static_cast<int>(n)] = build(n, n - 1);
  } else {
    fc.d[1] = SparseMatrix<K>(fc.dim(0), 0);
    for (std::size_t n = 0; n < top; ++n) fc.d[-static_cast<int>(n)] = build(n, n + 1);
  }
  for (const auto& [n, m] : fc.d)
    if (fc.d.count(n - 1) && !(fc.d.at(n - 1) * m).is_zero_matrix())
      throw Error(Errc::TotalNotSquareZero, "d∘d != 0 out of degree " + std::to_string(n));
  return fc;
}

/// d(F_s) ⊆ F_s in every degree.
template <class K> void check_filtration(const FilteredComplex<K>& fc)
{
  for (const auto& [n, m] : fc.d) {
    if (!fc.blocks.count(n) || !fc.blocks.count(n - 1)) continue;
    for (const auto& b : fc.blocks.at(n)) {
      const std::size_t c0 = fc.offset(n, b.p, b.q);
      const std::size_t lim = fc.prefix(n - 1, b.s);
      for (std::size_t j = c0; j < c0 + b.size; ++j)
        for (const auto& [i, v] : m.col(j))
          if (i >= lim)
            throw Error(Errc::FiltrationViolation, "d leaves F_" + std::to_string(b.s) + " in degree " + std::to_string(n));
    }
  }
}

template <class K> std::map<int, std::size_t> total_homology(const FilteredComplex<K>& fc)
{
  std::map<int, std::size_t> out;
  for (int n : fc.degrees()) out[n] = homology_dim(fc.d.at(n), fc.d.at(n + 1));
  return out;
}

// ---------------------------------------------------------------------------
// Pages

struct SSEntry {
  int degree = 0;
  int s = 0;
  std::size_t p = 0, q = 0;
  std::size_t dim = 0;
  std::size_t rank_out = 0; // rank of d_r leaving this entry
};

struct SSPage {
  int r = 0;
  std::vector<SSEntry> entries;
};

struct SSResult {
  std::vector<SSPage> pages;
  SSPage infinity;
  std::map<int, std::size_t> homology;
  bool converged = true;
  bool monotone = true;
};

/// E^r_s = Z^r_s / (Z^{r-1}_{s-1} + d Z^{r-1}_{s+r-1}), Z^r_s = {x in F_s : dx in F_{s-r}}.
template <class K> class PageEngine {
public:
  explicit PageEngine(const FilteredComplex<K>& fc) : fc_(fc) {}

  const Subspace<K>& Z(int n, int r, int s)
  {
    auto key = std::make_tuple(n, r, s);
    auto it = z_.find(key);
    if (it != z_.end()) return it->second;
    const K one = fc_.field.one();
    const std::size_t cols = fc_.prefix(n, s);
    const auto& d = fc_.d.at(n);
    const std::size_t r0 = fc_.prefix(n - 1, s - r);
    auto ker = kernel(submatrix(d, r0, d.rows(), 0, cols), one);
    return z_.emplace(key, Subspace<K>::span(fc_.dim(n), ker.basis())).first->second;
  }

  std::size_t E(int n, int r, int s)
  {
    auto& z = Z(n, r, s);
    std::vector<SparseVector<K>> gens = Z(n, r - 1, s - 1).basis();
    const auto& up = Z(n + 1, r - 1, s + r - 1);
    const auto& d = fc_.d.at(n + 1);
    for (const auto& v : up.basis()) gens.push_back(d.apply(v));
    return z.dim() - Subspace<K>::span(fc_.dim(n), gens).dim();
  }

  std::size_t rank_d(int n, int r, int s)
  {
    std::vector<SparseVector<K>> gens = Z(n, r + 1, s).basis();
    const auto& low = Z(n, r - 1, s - 1).basis();
    gens.insert(gens.end(), low.begin(), low.end());
    return Z(n, r, s).dim() - Subspace<K>::span(fc_.dim(n), gens).dim();
  }

private:
  const FilteredComplex<K>& fc_;
  std::map<std::tuple<int, int, int>, Subspace<K>> z_;
};

/// Pages E^0..E^rmax and E^∞ on every degree the truncation determines.
template <class K> SSResult spectral_sequence(const FilteredComplex<K>& fc, int rmax)
{
  check_filtration(fc);
  PageEngine<K> eng(fc);
  SSResult res;
  int smin = 0, smax = 0;
  for (const auto& [n, bl] : fc.blocks)
    for (const auto& b : bl) {
      smin = std::min(smin, b.s);
      smax = std::max(smax, b.s);
    }
  const int rinf = std::max(rmax + 1, smax - smin + 2);
  auto page = [&](int r) {
    SSPage pg{r, {}};
    for (int n : fc.degrees())
      for (const auto& b : fc.blocks.at(n)) pg.entries.push_back({n, b.s, b.p, b.q, eng.E(n, r, b.s), eng.rank_d(n, r, b.s)});
    return pg;
  };
  for (int r = 0; r <= rmax; ++r) res.pages.push_back(page(r));
  res.infinity = page(rinf);
  res.homology = total_homology(fc);
  for (int n : fc.degrees()) {
    std::size_t tot = 0;
    for (const auto& e : res.infinity.entries)
      if (e.degree == n) tot += e.dim;
    if (tot != res.homology[n]) res.converged = false;
  }
  std::vector<SSPage> all = res.pages;
  all.push_back(res.infinity);
  for (std::size_t k = 1; k < all.size(); ++k)
    for (std::size_t e = 0; e < all[k].entries.size(); ++e)
      if (all[k].entries[e].dim > all[k - 1].entries[e].dim) res.monotone = false;
  return res;
}

// ---------------------------------------------------------------------------
// Cross-checks

/// The page-0 differential restricted to X_{p,q}, transported by β/γ, against (-1)^q δ
/// (algebra side) or (-1)^q 𝛅 (coalgebra side), for p + q <= top.
template <class K> AxiomReport e0_crosscheck_algebra(const ComoduleAlgebraData<K>& A, std::size_t top)
{
  const auto& H = A.hopf;
  const auto& f = H.field;
  auto fc = total_complex(a_natural_h(A), top);
  Suite s;
  for (std::size_t n = 1; n <= top; ++n)
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t p = n - q;
      const int N = static_cast<int>(n);
      const auto& d = fc.d.at(N);
      const std::size_t r0 = fc.offset(N - 1, p - 1, q), c0 = fc.offset(N, p, q);
      auto blk = submatrix(d, r0, r0 + fc.size(N - 1, p - 1, q), c0, c0 + fc.size(N, p, q));
      auto lhs = beta_algebra(H, A.algebra.dim, p - 1, q) * blk * gamma_algebra(H, A.algebra.dim, p, q);
      const K sign = q % 2 == 0 ? f.one() : K(-f.one());
      s.expect("β E⁰ γ = ±δ", "p=" + std::to_string(p) + " q=" + std::to_string(q), lhs,
               sign * hopf_module_boundary(first_column_module(A, q), p));
    }
  return s.report();
}

template <class K> AxiomReport e0_crosscheck_coalgebra(const ModuleCoalgebraData<K>& C, std::size_t top)
{
  const auto& H = C.hopf;
  const auto& f = H.field;
  auto fc = total_complex(c_natural_h(C), top);
  Suite s;
  for (std::size_t n = 0; n < top; ++n)
    for (std::size_t q = 0; q <= n; ++q) {
      const std::size_t p = n - q;
      const int N = -static_cast<int>(n);
      const auto& d = fc.d.at(N);
      const std::size_t r0 = fc.offset(N - 1, p + 1, q), c0 = fc.offset(N, p, q);
      auto blk = submatrix(d, r0, r0 + fc.size(N - 1, p + 1, q), c0, c0 + fc.size(N, p, q));
      auto lhs = beta_coalgebra(H, C.coalgebra.dim, p + 1, q) * blk * gamma_coalgebra(H, C.coalgebra.dim, p, q);
      const K sign = q % 2 == 0 ? f.one() : K(-f.one());
      s.expect("β E⁰ γ = ±𝛅", "p=" + std::to_string(p) + " q=" + std::to_string(q), lhs,
               sign * hopf_comodule_coboundary(first_column_comodule(C, q), p));
    }
  return s.report();
}

/// dim H_n(Tot, b ± b̄) against dim H_n(diagonal, b) for n <= nmax.
struct EZRow {
  std::size_t n = 0;
  std::size_t total = 0;
  std::size_t diagonal = 0;
};

template <class K> std::vector<EZRow> ez_compare_hochschild(const BiObject<K>& X, std::size_t nmax)
{
  auto fc = total_complex(X, nmax + 1);
  auto tot = total_homology(fc);
  auto hh = hochschild_dims(mixed_complex(X.diagonal(), nmax + 1), nmax);
  std::vector<EZRow> rows;
  const bool chain = X.variance() == Variance::Chain;
  for (std::size_t n = 0; n <= nmax; ++n) rows.push_back({n, tot.at(chain ? static_cast<int>(n) : -static_cast<int>(n)), hh[n]});
  return rows;
}

} // namespace hopfcyc

#endif // HOPFCYC_SPECTRAL_HPP
