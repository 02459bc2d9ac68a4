#ifndef HOPFCYC_CYLINDRICAL_HPP
#define HOPFCYC_CYLINDRICAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "hopfcyc/crossed.hpp"
#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/legs.hpp"
#include "hopfcyc/linalg.hpp"
#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

namespace detail {

inline std::vector<std::string> gl(std::size_t p) { return legs::names("g", p + 1); }
inline std::vector<std::string> al(std::size_t q) { return legs::names("a", q + 1); }

/// Slots g0..gp (H) then a0..aq (A or C).
inline Shape cell(std::size_t dH, std::size_t dA, std::size_t p, std::size_t q)
{
  Shape s;
  s.add("g", p + 1, dH).add("a", q + 1, dA);
  return s;
}

template <class T> std::vector<T> erase_at(std::vector<T> v, std::size_t i, std::size_t count = 1)
{
  v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i + count));
  return v;
}
template <class T> std::vector<T> insert_at(std::vector<T> v, std::size_t i, std::vector<T> items)
{
  v.insert(v.begin() + static_cast<long>(i), items.begin(), items.end());
  return v;
}

/// Orders the slots, then renames them positionally to the target cell's labels.
template <class K> void finish(Tensor<K>& t, const std::vector<std::string>& order, const Shape& target)
{
  t.order(order);
  t.relabel(target.labels);
}

} // namespace detail

// ---------------------------------------------------------------------------
// A♮H

/// The cylindrical module of a left H-comodule algebra A on X_{p,q} = H^{⊗(p+1)} ⊗ A^{⊗(q+1)}.
///
///   τ(g|a)     = (a_q^(1̄)·(g_0..g_p) | a_q^(0̄), a_0, ..., a_{q-1})
///   ∂_i        multiplies a_i a_{i+1};  ∂_q(g|a) = (a_q^(1̄)·g | a_q^(0̄) a_0, a_1, ..., a_{q-1})
///   σ_i        inserts 1 after a_i
///   τ̄(g|a)     = (z·g_p, g_0, ..., g_{p-1} | a^(0̄)),  z = S⁻¹(a_0^(1̄)⋯a_q^(1̄))
///   ∂̄_i        multiplies g_i g_{i+1};  ∂̄_p(g|a) = ((z·g_p) g_0, g_1, ..., g_{p-1} | a^(0̄))
///   σ̄_i        inserts 1 after g_i
///
/// h·(g_0..g_p) is the diagonal conjugation action h^(0) g_0 S(h^(1)), h^(2) g_1 S(h^(3)), ...
template <class K> BiObject<K> a_natural_h(const ComoduleAlgebraData<K>& A)
{
  const auto f = A.hopf.field;
  const std::size_t dH = A.hopf.dim, dA = A.algebra.dim;
  auto dim = [dH, dA](std::size_t p, std::size_t q) { return ipow(dH, p + 1) * ipow(dA, q + 1); };
  auto make = [f, dH, dA, A](BiOp op, std::size_t p, std::size_t q, std::size_t i) -> SparseMatrix<K> {
    using namespace detail;
    const auto& H = A.hopf;
    const Shape in = cell(dH, dA, p, q);
    const auto g = gl(p), a = al(q);

    // z = S⁻¹(a_0^(1̄)⋯a_q^(1̄)), with every a_i replaced by a_i^(0̄)
    auto coinvariant_leg = [&](Tensor<K>& t) {
      std::vector<std::string> hs;
      for (std::size_t k = 0; k <= q; ++k) {
        hs.push_back("h" + std::to_string(k));
        legs::coact(t, A, a[k], hs.back(), "a'");
        t.rename("a'", a[k]);
      }
      legs::prod(t, H, hs, "z");
      legs::antipode_inv(t, H, "z");
    };

    switch (op) {
    case BiOp::VCyc:
      return materialize(f, in, in, [&](Tensor<K>& t) {
        legs::coact(t, A, a[q], "h", "aq");
        legs::diag_conj(t, H, "h", g);
        finish(t, legs::cat(g, insert_at(erase_at(a, q), 0, {"aq"})), in);
      });
    case BiOp::VFace: {
      const Shape out = cell(dH, dA, p, q - 1);
      return materialize(f, in, out, [&](Tensor<K>& t) {
        if (i < q) {
          legs::mul(t, A.algebra, a[i], a[i + 1], "x");
          finish(t, legs::cat(g, insert_at(erase_at(a, i, 2), i, {"x"})), out);
          return;
        }
        legs::coact(t, A, a[q], "h", "aq");
        legs::diag_conj(t, H, "h", g);
        legs::mul(t, A.algebra, "aq", a[0], "x");
        finish(t, legs::cat(g, insert_at(erase_at(erase_at(a, q), 0), 0, {"x"})), out);
      });
    }
    case BiOp::VDegen: {
      const Shape out = cell(dH, dA, p, q + 1);
      return materialize(f, in, out, [&](Tensor<K>& t) {
        legs::unit(t, A.algebra, "u");
        finish(t, legs::cat(g, insert_at(a, i + 1, {"u"})), out);
      });
    }
    case BiOp::HCyc:
      return materialize(f, in, in, [&](Tensor<K>& t) {
        coinvariant_leg(t);
        legs::conj(t, H, "z", g[p], "gp");
        finish(t, legs::cat(insert_at(erase_at(g, p), 0, {"gp"}), a), in);
      });
    case BiOp::HFace: {
      const Shape out = cell(dH, dA, p - 1, q);
      return materialize(f, in, out, [&](Tensor<K>& t) {
        if (i < p) {
          legs::mul(t, H, g[i], g[i + 1], "x");
          finish(t, legs::cat(insert_at(erase_at(g, i, 2), i, {"x"}), a), out);
          return;
        }
        coinvariant_leg(t);
        legs::conj(t, H, "z", g[p], "gp");
        legs::mul(t, H, "gp", g[0], "x");
        finish(t, legs::cat(insert_at(erase_at(erase_at(g, p), 0), 0, {"x"}), a), out);
      });
    }
    case BiOp::HDegen: {
      const Shape out = cell(dH, dA, p + 1, q);
      return materialize(f, in, out, [&](Tensor<K>& t) {
        legs::unit(t, H, "u");
        finish(t, legs::cat(insert_at(g, i + 1, {"u"}), a), out);
      });
    }
    }
    throw std::logic_error("bad operator");
  };
  return BiObject<K>(f, Variance::Chain, dim, make);
}

// ---------------------------------------------------------------------------
// C♮H

/// The cocylindrical module of a left H-module coalgebra C on X_{p,q} = H^{⊗(p+1)} ⊗ C^{⊗(q+1)}.
///
///   τ(g|a)      = (g_0^(1), ..., g_p^(1) | a_1, ..., a_q, y·a_0),  y = g_0^(0)S(g_0^(2)) ⋯ g_p^(0)S(g_p^(2))
///   ∂^i         splits a_i (i <= q);  ∂^{q+1}(g|a) = (g^(1) | a_0^(1), a_1, ..., a_q, y·a_0^(0))
///   σ^i         applies ε to a_{i+1}
///   τ̄(g|a)      = (g_1, ..., g_p, g_0^(1) | S⁻¹(g_0^(0)S(g_0^(2)))·(a_0, ..., a_q))
///   ∂̄^i         splits g_i (i <= p);  ∂̄^{p+1}(g|a) = (g_0^(3), g_1, ..., g_p, g_0^(1) | S⁻¹(g_0^(0)S(g_0^(2)))·a)
///   σ̄^i         applies ε to g_{i+1}
template <class K> BiObject<K> c_natural_h(const ModuleCoalgebraData<K>& C)
{
  const auto f = C.hopf.field;
  const std::size_t dH = C.hopf.dim, dC = C.coalgebra.dim;
  auto dim = [dH, dC](std::size_t p, std::size_t q) { return ipow(dH, p + 1) * ipow(dC, q + 1); };
  auto make = [f, dH, dC, C](BiOp op, std::size_t p, std::size_t q, std::size_t i) -> SparseMatrix<K> {
    using namespace detail;
    const auto& H = C.hopf;
    const Shape in = cell(dH, dC, p, q);
    const auto g = gl(p), a = al(q);

    // y = Π_i g_i^(0) S(g_i^(2)); each g_i is replaced by its middle leg
    auto twist = [&](Tensor<K>& t) {
      std::vector<std::string> ys;
      for (std::size_t k = 0; k <= p; ++k) {
        std::string l = "l" + std::to_string(k), r = "r" + std::to_string(k), y = "y" + std::to_string(k);
        legs::comult_iter(t, H, g[k], {l, "m", r});
        t.rename("m", g[k]);
        legs::antipode(t, H, r);
        legs::mul(t, H, l, r, y);
        ys.push_back(y);
      }
      legs::prod(t, H, ys, "y");
    };
    // g_0 -> legs; y = S⁻¹(g_0^(0) S(g_0^(2))) acts diagonally on the a's
    auto bar_twist = [&](Tensor<K>& t, std::vector<std::string> g0legs) {
      legs::comult_iter(t, H, g[0], g0legs);
      legs::antipode(t, H, g0legs[2]);
      legs::mul(t, H, g0legs[0], g0legs[2], "y");
      legs::antipode_inv(t, H, "y");
      legs::diag_act(t, C, "y", a);
    };

    switch (op) {
    case BiOp::VCyc:
      return materialize(f, in, in, [&](Tensor<K>& t) {
        twist(t);
        legs::act(t, C, "y", a[0], "z");
        finish(t, legs::cat(g, legs::cat(erase_at(a, 0), {"z"})), in);
      });
    case BiOp::VFace: {
      const Shape out = cell(dH, dC, p, q + 1);
      return materialize(f, in, out, [&](Tensor<K>& t) {
        if (i <= q) {
          legs::comult(t, C.coalgebra, a[i], "x", "x'");
          finish(t, legs::cat(g, insert_at(erase_at(a, i), i, {"x", "x'"})), out);
          return;
        }
        twist(t);
        legs::comult(t, C.coalgebra, a[0], "b0", "b1");
        legs::act(t, C, "y", "b0", "z");
        finish(t, legs::cat(g, legs::cat(insert_at(erase_at(a, 0), 0, {"b1"}), {"z"})), out);
      });
    }
    case BiOp::VDegen: {
      const Shape out = cell(dH, dC, p, q - 1);
      return materialize(f, in, out, [&](Tensor<K>& t) {
        legs::counit(t, C.coalgebra, a[i + 1]);
        finish(t, legs::cat(g, erase_at(a, i + 1)), out);
      });
    }
    case BiOp::HCyc:
      return materialize(f, in, in, [&](Tensor<K>& t) {
        bar_twist(t, {"c0", "c1", "c2"});
        finish(t, legs::cat(legs::cat(erase_at(g, 0), {"c1"}), a), in);
      });
    case BiOp::HFace: {
      const Shape out = cell(dH, dC, p + 1, q);
      return materialize(f, in, out, [&](Tensor<K>& t) {
        if (i <= p) {
          legs::comult(t, H, g[i], "x", "x'");
          finish(t, legs::cat(insert_at(erase_at(g, i), i, {"x", "x'"}), a), out);
          return;
        }
        bar_twist(t, {"c0", "c1", "c2", "c3"});
        finish(t, legs::cat(legs::cat(insert_at(erase_at(g, 0), 0, {"c3"}), {"c1"}), a), out);
      });
    }
    case BiOp::HDegen: {
      const Shape out = cell(dH, dC, p - 1, q);
      return materialize(f, in, out, [&](Tensor<K>& t) {
        legs::counit(t, H, g[i + 1]);
        finish(t, legs::cat(erase_at(g, i + 1), a), out);
      });
    }
    }
    throw std::logic_error("bad operator");
  };
  return BiObject<K>(f, Variance::Cochain, dim, make);
}

// ---------------------------------------------------------------------------
// The isomorphisms between the crossed products and the diagonals

namespace detail {

/// Input shape r_0..r_n of a crossed product, each r_i = a_i ⊗ g_i.
inline Shape crossed_shape(std::size_t dA, std::size_t dH, std::size_t n)
{
  Shape s;
  s.add("r", n + 1, dA * dH);
  return s;
}

template <class K> void split_pairs(Tensor<K>& t, const Field<K>& f, std::size_t dA, std::size_t dH, std::size_t n)
{
  const auto id = id_map(f, dA * dH);
  for (std::size_t i = 0; i <= n; ++i)
    t.apply(id, {"r" + std::to_string(i)}, {"a" + std::to_string(i), "g" + std::to_string(i)}, {dA, dH});
}

template <class K> void join_pairs(Tensor<K>& t, const Field<K>& f, std::size_t dA, std::size_t dH, std::size_t n)
{
  const auto id = id_map(f, dA * dH);
  for (std::size_t i = 0; i <= n; ++i)
    t.apply(id, {"a" + std::to_string(i), "g" + std::to_string(i)}, {"r" + std::to_string(i)}, {dA * dH});
}

/// For j = 1..n: coacts a_j and splits its H-leg into j legs; legs[j][k-1] is the leg
/// carrying the label k (k = 1 is the one next to A).
template <class K>
std::vector<std::vector<std::string>> coaction_legs(Tensor<K>& t, const ComoduleAlgebraData<K>& A, std::size_t n)
{
  std::vector<std::vector<std::string>> out(n + 1);
  for (std::size_t j = 1; j <= n; ++j) {
    std::string a = "a" + std::to_string(j), x = "x" + std::to_string(j);
    legs::coact(t, A, a, x, "a'");
    t.rename("a'", a);
    std::vector<std::string> lr;
    for (std::size_t m = 0; m < j; ++m) lr.push_back(x + "L" + std::to_string(m));
    legs::comult_iter(t, A.hopf, x, lr);
    for (std::size_t k = 1; k <= j; ++k) out[j].push_back(lr[j - k]);
  }
  return out;
}

} // namespace detail

/// φ_n: C_n(A⋊H) -> X_{n,n}, (a_0⊗g_0, ..., a_n⊗g_n) ↦ (y_0·g_0, ..., y_{n-1}·g_{n-1}, g_n | a^(0̄)),
/// y_i = S⁻¹(a_{i+1}^(i+1) ⋯ a_n^(i+1)) with labels counted from the A factor.
template <class K> SparseMatrix<K> phi_algebra(const ComoduleAlgebraData<K>& A, std::size_t n)
{
  const auto& H = A.hopf;
  const std::size_t dA = A.algebra.dim, dH = H.dim;
  return materialize(H.field, detail::crossed_shape(dA, dH, n), detail::cell(dH, dA, n, n), [&](Tensor<K>& t) {
    detail::split_pairs(t, H.field, dA, dH, n);
    auto L = detail::coaction_legs(t, A, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> ls;
      for (std::size_t j = i + 1; j <= n; ++j) ls.push_back(L[j][i]);
      std::string y = "y" + std::to_string(i), g = "g" + std::to_string(i);
      legs::prod(t, H, ls, y);
      legs::antipode_inv(t, H, y);
      legs::conj(t, H, y, g, "G");
      t.rename("G", g);
    }
  });
}

/// ψ_n: X_{n,n} -> C_n(A⋊H), (g | a) ↦ (a_0^(0̄) ⊗ w_0·g_0, ..., a_n ⊗ g_n), w_i = a_{i+1}^(1) a_{i+2}^(2) ⋯ a_n^(n-i).
template <class K> SparseMatrix<K> psi_algebra(const ComoduleAlgebraData<K>& A, std::size_t n)
{
  const auto& H = A.hopf;
  const std::size_t dA = A.algebra.dim, dH = H.dim;
  return materialize(H.field, detail::cell(dH, dA, n, n), detail::crossed_shape(dA, dH, n), [&](Tensor<K>& t) {
    auto L = detail::coaction_legs(t, A, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> ls;
      for (std::size_t j = i + 1; j <= n; ++j) ls.push_back(L[j][j - i - 1]);
      std::string y = "y" + std::to_string(i), g = "g" + std::to_string(i);
      legs::prod(t, H, ls, y);
      legs::conj(t, H, y, g, "G");
      t.rename("G", g);
    }
    std::vector<std::string> inter;
    for (std::size_t i = 0; i <= n; ++i) {
      inter.push_back("a" + std::to_string(i));
      inter.push_back("g" + std::to_string(i));
    }
    t.order(inter);
    detail::join_pairs(t, H.field, dA, dH, n);
  });
}

/// φ_n: C^n(C>◄H) -> X_{n,n}. Each g_i (i < n) is split into 2(n-i)+1 legs L_i; g_i keeps the
/// middle leg, and a_j is acted on by Π_{i<j} L_i[j-1-i] S(L_i[2(n-i)-(j-1-i)]), factors in
/// increasing i.
template <class K> SparseMatrix<K> phi_coalgebra(const ModuleCoalgebraData<K>& C, std::size_t n)
{
  const auto& H = C.hopf;
  const std::size_t dC = C.coalgebra.dim, dH = H.dim;
  return materialize(H.field, detail::crossed_shape(dC, dH, n), detail::cell(dH, dC, n, n), [&](Tensor<K>& t) {
    detail::split_pairs(t, H.field, dC, dH, n);
    std::vector<std::vector<std::string>> L(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = n - i;
      for (std::size_t k = 0; k <= 2 * m; ++k) L[i].push_back("g" + std::to_string(i) + "#" + std::to_string(k));
      legs::comult_iter(t, H, "g" + std::to_string(i), L[i]);
      t.rename(L[i][m], "g" + std::to_string(i));
    }
    for (std::size_t j = 1; j <= n; ++j) {
      std::vector<std::string> fac;
      for (std::size_t i = 0; i < j; ++i) {
        const std::size_t m = n - i, lx = j - 1 - i, rx = 2 * m - lx;
        legs::antipode(t, H, L[i][rx]);
        fac.push_back(L[i][lx]);
        fac.push_back(L[i][rx]);
      }
      std::string y = "y" + std::to_string(j), a = "a" + std::to_string(j);
      legs::prod(t, H, fac, y);
      legs::act(t, C, y, a, "b");
      t.rename("b", a);
    }
  });
}

/// ψ on the coalgebra side is the exact inverse of φ.
template <class K> SparseMatrix<K> psi_coalgebra(const ModuleCoalgebraData<K>& C, std::size_t n)
{
  return inverse(phi_coalgebra(C, n), C.hopf.field.one());
}

/// The displayed inverse for n <= 1: ψ(g_0|a_0) = a_0⊗g_0 and
/// ψ(g_0,g_1|a_0,a_1) = (a_0⊗g_0^(1), S⁻¹(g_0^(0)S(g_0^(2)))·a_1⊗g_1).
template <class K> SparseMatrix<K> psi_coalgebra_display(const ModuleCoalgebraData<K>& C, std::size_t n)
{
  if (n > 1) throw std::logic_error("the displayed inverse is only used for n <= 1");
  const auto& H = C.hopf;
  const std::size_t dC = C.coalgebra.dim, dH = H.dim;
  return materialize(H.field, detail::cell(dH, dC, n, n), detail::crossed_shape(dC, dH, n), [&](Tensor<K>& t) {
    if (n == 1) {
      legs::comult_iter(t, H, "g0", {"l", "m", "r"});
      t.rename("m", "g0");
      legs::antipode(t, H, "r");
      legs::mul(t, H, "l", "r", "y");
      legs::antipode_inv(t, H, "y");
      legs::act(t, C, "y", "a1", "b");
      t.rename("b", "a1");
      t.order({"a0", "g0", "a1", "g1"});
    } else {
      t.order({"a0", "g0"});
    }
    detail::join_pairs(t, H.field, dC, dH, n);
  });
}

/// φ and ψ mutually inverse and φ intertwining faces, degeneracies and the cyclic operator,
/// for degrees 0..top (identities leaving the range are skipped).
template <class K>
AxiomReport iso_suite(const CyclicObject<K>& X, const CyclicObject<K>& Y, const std::function<SparseMatrix<K>(std::size_t)>& phi,
                      const std::function<SparseMatrix<K>(std::size_t)>& psi, std::size_t top)
{
  Suite s;
  const K one = X.field().one();
  std::vector<SparseMatrix<K>> ph, ps;
  for (std::size_t n = 0; n <= top; ++n) {
    ph.push_back(phi(n));
    ps.push_back(psi(n));
    std::string w = "n=" + std::to_string(n);
    s.expect("ψφ = id", w, ps[n] * ph[n], SparseMatrix<K>::identity(X.dim(n), one));
    s.expect("φψ = id", w, ph[n] * ps[n], SparseMatrix<K>::identity(Y.dim(n), one));
  }
  const bool chain = X.variance() == Variance::Chain;
  for (std::size_t n = 0; n <= top; ++n) {
    std::string w = "n=" + std::to_string(n);
    s.expect("φ t = t φ", w, ph[n] * X.cyc(n), Y.cyc(n) * ph[n]);
    for (std::size_t i = 0; i < X.face_count(n); ++i) {
      std::size_t m = chain ? n - 1 : n + 1;
      if (m > top) continue;
      s.expect("φ d_i = d_i φ", w + " i=" + std::to_string(i), ph[m] * X.face(n, i), Y.face(n, i) * ph[n]);
    }
    for (std::size_t i = 0; i < X.degen_count(n); ++i) {
      std::size_t m = chain ? n + 1 : n - 1;
      if (m > top) continue;
      s.expect("φ s_i = s_i φ", w + " i=" + std::to_string(i), ph[m] * X.degen(n, i), Y.degen(n, i) * ph[n]);
    }
  }
  return s.report();
}

/// Throws NotInverse or NotIntertwining for the first failing check of an iso_suite report.
inline void require_iso(const AxiomReport& r)
{
  auto* f = r.first_failure();
  if (!f) return;
  bool inv = f->name.find("= id") != std::string::npos;
  throw Error(inv ? Errc::NotInverse : Errc::NotIntertwining, f->name + " (" + f->detail + ")");
}

// ---------------------------------------------------------------------------
// First column: H-action (algebra side) and H-coaction (coalgebra side)

/// H ⊗ (H ⊗ A^{⊗(q+1)}) -> H ⊗ A^{⊗(q+1)}:
/// h·(g | a) = ((z·h^(0)) g S⁻¹(h^(1)) | a^(0̄)), z = S⁻¹(a_0^(1̄)⋯a_q^(1̄)).
template <class K> SparseMatrix<K> first_column_action(const ComoduleAlgebraData<K>& A, std::size_t q)
{
  const auto& H = A.hopf;
  const std::size_t dA = A.algebra.dim, dH = H.dim;
  Shape in;
  in.add("h", dH).add("g", dH).add("a", q + 1, dA);
  Shape out;
  out.add("g", dH).add("a", q + 1, dA);
  return materialize(H.field, in, out, [&](Tensor<K>& t) {
    std::vector<std::string> zs;
    for (std::size_t k = 0; k <= q; ++k) {
      std::string a = "a" + std::to_string(k);
      zs.push_back("z" + std::to_string(k));
      legs::coact(t, A, a, zs.back(), "a'");
      t.rename("a'", a);
    }
    legs::prod(t, H, zs, "z");
    legs::antipode_inv(t, H, "z");
    legs::comult(t, H, "h", "h0", "h1");
    legs::antipode_inv(t, H, "h1");
    legs::conj(t, H, "z", "h0", "w");
    legs::prod(t, H, {"w", "g", "h1"}, "g'");
    t.rename("g'", "g");
  });
}

/// H ⊗ C^{⊗(q+1)} -> H ⊗ H ⊗ C^{⊗(q+1)}:
/// 𝚫(g | a) = (S(g^(4)) g^(1) | g^(3) | (g^(2) S⁻¹(g^(0)))·a).
template <class K> SparseMatrix<K> first_column_coaction(const ModuleCoalgebraData<K>& C, std::size_t q)
{
  const auto& H = C.hopf;
  const std::size_t dC = C.coalgebra.dim, dH = H.dim;
  Shape in;
  in.add("g", dH).add("a", q + 1, dC);
  Shape out;
  out.add("h", dH).add("g", dH).add("a", q + 1, dC);
  return materialize(H.field, in, out, [&](Tensor<K>& t) {
    legs::comult_iter(t, H, "g", {"c0", "c1", "c2", "c3", "c4"});
    legs::antipode(t, H, "c4");
    legs::mul(t, H, "c4", "c1", "h");
    legs::antipode_inv(t, H, "c0");
    legs::mul(t, H, "c2", "c0", "y");
    legs::diag_act(t, C, "y", legs::names("a", q + 1));
    t.rename("c3", "g");
  });
}

template <class K> ModuleData<K> first_column_module(const ComoduleAlgebraData<K>& A, std::size_t q)
{
  return {A.hopf, A.hopf.dim * ipow(A.algebra.dim, q + 1), first_column_action(A, q)};
}

template <class K> ComoduleData<K> first_column_comodule(const ModuleCoalgebraData<K>& C, std::size_t q)
{
  return {C.hopf, C.hopf.dim * ipow(C.coalgebra.dim, q + 1), first_column_coaction(C, q)};
}

} // namespace hopfcyc

#endif // HOPFCYC_CYLINDRICAL_HPP
