#ifndef HOPFCYC_TRANSFORMS_HPP
#define HOPFCYC_TRANSFORMS_HPP

#include <string>
#include <vector>

#include "hopfcyc/cylindrical.hpp"
#include "hopfcyc/hopf_homology.hpp"

// β/γ change of variables X_{p,q} ≅ H^{⊗p} ⊗ (H ⊗ A^{⊗(q+1)}) and the operators it induces.
// Transformed cells carry the slots k_1..k_p | g | a_0..a_q.
namespace hopfcyc {

template <class K> bool is_cocommutative(const HopfData<K>& H)
{
  return H.comult == swap_map(H.dim, H.dim, H.field.one()) * H.comult;
}

namespace detail {

inline Shape transformed(std::size_t dH, std::size_t dA, std::size_t p, std::size_t q)
{
  Shape s;
  s.add("k", p, dH, 1).add("g", dH).add("a", q + 1, dA);
  return s;
}
inline std::vector<std::string> kl(std::size_t p) { return legs::names("k", p, 1); }

/// The cell an operator lands in.
inline std::pair<std::size_t, std::size_t> target(Variance v, BiOp o, std::size_t p, std::size_t q)
{
  const bool chain = v == Variance::Chain;
  switch (o) {
  case BiOp::VFace: return {p, chain ? q - 1 : q + 1};
  case BiOp::VDegen: return {p, chain ? q + 1 : q - 1};
  case BiOp::HFace: return {chain ? p - 1 : p + 1, q};
  case BiOp::HDegen: return {chain ? p + 1 : p - 1, q};
  default: return {p, q};
  }
}

} // namespace detail

/// β(g_0..g_p | a) = (g_1^(0), ..., g_p^(0) | g_0 g_1^(1) ⋯ g_p^(1) | a).
template <class K> SparseMatrix<K> beta_algebra(const HopfData<K>& H, std::size_t dA, std::size_t p, std::size_t q)
{
  return materialize(H.field, detail::cell(H.dim, dA, p, q), detail::transformed(H.dim, dA, p, q), [&](Tensor<K>& t) {
    std::vector<std::string> ys{"g0"};
    for (std::size_t i = 1; i <= p; ++i) {
      ys.push_back("y" + std::to_string(i));
      legs::comult(t, H, "g" + std::to_string(i), "k" + std::to_string(i), ys.back());
    }
    legs::prod(t, H, ys, "g");
  });
}

/// γ(k_1..k_p | g | a) = (g S⁻¹(k_1^(1) ⋯ k_p^(1)), k_1^(0), ..., k_p^(0) | a).
template <class K> SparseMatrix<K> gamma_algebra(const HopfData<K>& H, std::size_t dA, std::size_t p, std::size_t q)
{
  return materialize(H.field, detail::transformed(H.dim, dA, p, q), detail::cell(H.dim, dA, p, q), [&](Tensor<K>& t) {
    std::vector<std::string> ys;
    for (std::size_t i = 1; i <= p; ++i) {
      ys.push_back("y" + std::to_string(i));
      legs::comult(t, H, "k" + std::to_string(i), "g" + std::to_string(i), ys.back());
    }
    legs::prod(t, H, ys, "y");
    legs::antipode_inv(t, H, "y");
    legs::mul(t, H, "g", "y", "g0");
  });
}

/// β(g_0..g_p | a) = (S(g_0^(1))·(g_1, ..., g_p) | g_0^(0) | a), H acting on the k's by diagonal left multiplication.
template <class K> SparseMatrix<K> beta_coalgebra(const HopfData<K>& H, std::size_t dC, std::size_t p, std::size_t q)
{
  return materialize(H.field, detail::cell(H.dim, dC, p, q), detail::transformed(H.dim, dC, p, q), [&](Tensor<K>& t) {
    legs::comult(t, H, "g0", "g", "y");
    legs::antipode(t, H, "y");
    auto gs = legs::names("g", p, 1);
    legs::diag_lmul(t, H, "y", gs);
    for (std::size_t i = 1; i <= p; ++i) t.rename(gs[i - 1], "k" + std::to_string(i));
  });
}

/// γ(k_1..k_p | g | a) = (g^(0), g^(1)·(k_1, ..., k_p) | a).
template <class K> SparseMatrix<K> gamma_coalgebra(const HopfData<K>& H, std::size_t dC, std::size_t p, std::size_t q)
{
  return materialize(H.field, detail::transformed(H.dim, dC, p, q), detail::cell(H.dim, dC, p, q), [&](Tensor<K>& t) {
    legs::comult(t, H, "g", "g0", "y");
    auto ks = detail::kl(p);
    legs::diag_lmul(t, H, "y", ks);
    for (std::size_t i = 1; i <= p; ++i) t.rename(ks[i - 1], "g" + std::to_string(i));
  });
}

/// The bi-object with every operator replaced by β∘op∘γ.
template <class K>
BiObject<K> conjugate(const BiObject<K>& X, std::function<SparseMatrix<K>(std::size_t, std::size_t)> beta,
                      std::function<SparseMatrix<K>(std::size_t, std::size_t)> gamma)
{
  Variance v = X.variance();
  auto make = [X, beta, gamma, v](BiOp o, std::size_t p, std::size_t q, std::size_t i) {
    auto [tp, tq] = detail::target(v, o, p, q);
    return beta(tp, tq) * X.op(o, p, q, i) * gamma(p, q);
  };
  return BiObject<K>(X.field(), v, [X](std::size_t p, std::size_t q) { return X.dim(p, q); }, make);
}

template <class K> BiObject<K> transformed_a_natural_h(const ComoduleAlgebraData<K>& A)
{
  const auto H = A.hopf;
  const std::size_t dA = A.algebra.dim;
  return conjugate<K>(
      a_natural_h(A), [H, dA](std::size_t p, std::size_t q) { return beta_algebra(H, dA, p, q); },
      [H, dA](std::size_t p, std::size_t q) { return gamma_algebra(H, dA, p, q); });
}

template <class K> BiObject<K> transformed_c_natural_h(const ModuleCoalgebraData<K>& C)
{
  const auto H = C.hopf;
  const std::size_t dC = C.coalgebra.dim;
  return conjugate<K>(
      c_natural_h(C), [H, dC](std::size_t p, std::size_t q) { return beta_coalgebra(H, dC, p, q); },
      [H, dC](std::size_t p, std::size_t q) { return gamma_coalgebra(H, dC, p, q); });
}

/// Σ (-1)^i of the horizontal faces of X at (p, q).
template <class K> SparseMatrix<K> horizontal_boundary(const BiObject<K>& X, std::size_t p, std::size_t q)
{
  const auto& f = X.field();
  const std::size_t count = X.variance() == Variance::Chain ? p + 1 : p + 2;
  auto [tp, tq] = detail::target(X.variance(), BiOp::HFace, p, q);
  SparseMatrix<K> b(X.dim(tp, tq), X.dim(p, q));
  K sign = f.one();
  for (std::size_t i = 0; i < count; ++i) {
    b = b + sign * X.op(BiOp::HFace, p, q, i);
    sign = -sign;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Closed forms, algebra side

namespace closed {

/// 𝔱 and 𝔡_q as displayed: (a_q^(2̄)·(k_1..k_p) | a_q^(1̄)·g | a_q^(0̄), a_0, ...), resp. a_q^(0̄) a_0.
template <class K> SparseMatrix<K> t_algebra(const ComoduleAlgebraData<K>& A, std::size_t p, std::size_t q, bool face)
{
  const auto& H = A.hopf;
  const std::size_t dA = A.algebra.dim;
  const Shape in = detail::transformed(H.dim, dA, p, q);
  const Shape out = detail::transformed(H.dim, dA, p, face ? q - 1 : q);
  return materialize(H.field, in, out, [&](Tensor<K>& t) {
    auto a = legs::names("a", q + 1);
    legs::coact(t, A, a[q], "x", "aq");
    legs::comult(t, H, "x", "x2", "x1");
    legs::diag_conj(t, H, "x2", detail::kl(p));
    legs::conj(t, H, "x1", "g", "G");
    a.pop_back();
    if (face) {
      legs::mul(t, A.algebra, "aq", a[0], "b");
      a.erase(a.begin());
      detail::finish(t, legs::cat(legs::cat(detail::kl(p), {"G", "b"}), a), out);
    } else {
      detail::finish(t, legs::cat(legs::cat(detail::kl(p), {"G", "aq"}), a), out);
    }
  });
}

/// 𝔱̄ as displayed: (k^(0) | (z·(g S⁻¹(k_1^(2) ⋯ k_p^(2)))) k_1^(1) ⋯ k_p^(1) | a^(0̄)), z = S⁻¹(Π a_i^(1̄)).
template <class K> SparseMatrix<K> tbar_algebra_display(const ComoduleAlgebraData<K>& A, std::size_t p, std::size_t q)
{
  const auto& H = A.hopf;
  const Shape s = detail::transformed(H.dim, A.algebra.dim, p, q);
  return materialize(H.field, s, s, [&](Tensor<K>& t) {
    std::vector<std::string> zs, l1, l2;
    for (std::size_t i = 0; i <= q; ++i) {
      zs.push_back("z" + std::to_string(i));
      legs::coact(t, A, "a" + std::to_string(i), zs.back(), "a'");
      t.rename("a'", "a" + std::to_string(i));
    }
    legs::prod(t, H, zs, "z");
    legs::antipode_inv(t, H, "z");
    for (std::size_t i = 1; i <= p; ++i) {
      std::string k = "k" + std::to_string(i);
      l1.push_back("u" + std::to_string(i));
      l2.push_back("w" + std::to_string(i));
      legs::comult_iter(t, H, k, {k + "'", l1.back(), l2.back()});
      t.rename(k + "'", k);
    }
    legs::prod(t, H, l2, "w");
    legs::antipode_inv(t, H, "w");
    legs::mul(t, H, "g", "w", "gw");
    legs::conj(t, H, "z", "gw", "c");
    legs::prod(t, H, legs::cat({"c"}, l1), "g");
  });
}

/// β τ̄ γ in closed form: with Δg = G_0⊗G_1, Δk_i = k_i⊗u_i (i < p) and Δ²k_p = κ_0⊗κ_1⊗κ_2,
/// 𝔱̄(k | g | a) = (G_0 S⁻¹(u_1 ⋯ u_{p-1} κ_2), k_1, ..., k_{p-1} | (z·κ_0) G_1 S⁻¹(κ_1) | a^(0̄));
/// for p = 0 it is (z·g | a^(0̄)).
template <class K> SparseMatrix<K> tbar_algebra(const ComoduleAlgebraData<K>& A, std::size_t p, std::size_t q)
{
  const auto& H = A.hopf;
  const Shape s = detail::transformed(H.dim, A.algebra.dim, p, q);
  return materialize(H.field, s, s, [&](Tensor<K>& t) {
    std::vector<std::string> zs;
    for (std::size_t i = 0; i <= q; ++i) {
      zs.push_back("z" + std::to_string(i));
      legs::coact(t, A, "a" + std::to_string(i), zs.back(), "a'");
      t.rename("a'", "a" + std::to_string(i));
    }
    legs::prod(t, H, zs, "z");
    legs::antipode_inv(t, H, "z");
    if (p == 0) {
      legs::conj(t, H, "z", "g", "G");
      t.rename("G", "g");
      return;
    }
    legs::comult(t, H, "g", "G0", "G1");
    std::vector<std::string> us;
    for (std::size_t i = 1; i < p; ++i) {
      std::string k = "k" + std::to_string(i);
      us.push_back("u" + std::to_string(i));
      legs::comult(t, H, k, "k'", us.back());
      t.rename("k'", k);
    }
    legs::comult_iter(t, H, "k" + std::to_string(p), {"c0", "c1", "c2"});
    us.push_back("c2");
    legs::prod(t, H, us, "w");
    legs::antipode_inv(t, H, "w");
    legs::mul(t, H, "G0", "w", "N");
    legs::conj(t, H, "z", "c0", "y");
    legs::antipode_inv(t, H, "c1");
    legs::prod(t, H, {"y", "G1", "c1"}, "gn");
    auto ks = detail::kl(p - 1);
    detail::finish(t, legs::cat(legs::cat({"N"}, ks), legs::cat({"gn"}, legs::names("a", q + 1))), s);
  });
}

// ---------------------------------------------------------------------------
// Closed forms, coalgebra side

/// 𝔱 and 𝔡^{q+1} as displayed: y = g^(0) k_1^(0) S(k_1^(2)) ⋯ k_p^(0) S(k_p^(2)) S(g^(2)),
/// 𝔱(k | g | a) = (k^(1) | g^(1) | a_1, ..., a_q, y·a_0), 𝔡^{q+1}(k | g | a) = (k^(1) | g^(1) | a_0^(1), a_1, ..., a_q, y·a_0^(0)).
template <class K> SparseMatrix<K> t_coalgebra(const ModuleCoalgebraData<K>& C, std::size_t p, std::size_t q, bool face)
{
  const auto& H = C.hopf;
  const std::size_t dC = C.coalgebra.dim;
  const Shape in = detail::transformed(H.dim, dC, p, q);
  const Shape out = detail::transformed(H.dim, dC, p, face ? q + 1 : q);
  return materialize(H.field, in, out, [&](Tensor<K>& t) {
    legs::comult_iter(t, H, "g", {"G0", "G1", "G2"});
    std::vector<std::string> fac{"G0"};
    for (std::size_t i = 1; i <= p; ++i) {
      std::string k = "k" + std::to_string(i), l = "l" + std::to_string(i), r = "r" + std::to_string(i);
      legs::comult_iter(t, H, k, {l, k + "'", r});
      t.rename(k + "'", k);
      legs::antipode(t, H, r);
      fac.push_back(l);
      fac.push_back(r);
    }
    legs::antipode(t, H, "G2");
    fac.push_back("G2");
    legs::prod(t, H, fac, "y");
    auto a = legs::names("a", q + 1);
    std::vector<std::string> rest(a.begin() + 1, a.end());
    if (face) {
      legs::comult(t, C.coalgebra, "a0", "b0", "b1");
      legs::act(t, C, "y", "b0", "z");
      detail::finish(t, legs::cat(legs::cat(detail::kl(p), {"G1", "b1"}), legs::cat(rest, {"z"})), out);
    } else {
      legs::act(t, C, "y", "a0", "z");
      detail::finish(t, legs::cat(legs::cat(detail::kl(p), {"G1"}), legs::cat(rest, {"z"})), out);
    }
  });
}

/// 𝔱̄ as displayed (p >= 1):
/// (S(k_1^(2))·(k_2, ..., k_p), S(g^(4) k_1^(1)) g^(1) | g^(3) k_1^(0) | S⁻¹(g^(0) S(g^(2)))·a).
template <class K> SparseMatrix<K> tbar_coalgebra_display(const ModuleCoalgebraData<K>& C, std::size_t p, std::size_t q)
{
  const auto& H = C.hopf;
  const Shape s = detail::transformed(H.dim, C.coalgebra.dim, p, q);
  return materialize(H.field, s, s, [&](Tensor<K>& t) {
    legs::comult_iter(t, H, "g", {"c0", "c1", "c2", "c3", "c4"});
    legs::comult_iter(t, H, "k1", {"m0", "m1", "m2"});
    legs::antipode(t, H, "m2");
    auto ks = legs::names("k", p - 1, 2);
    legs::diag_lmul(t, H, "m2", ks);
    legs::mul(t, H, "c4", "m1", "w");
    legs::antipode(t, H, "w");
    legs::mul(t, H, "w", "c1", "kn");
    legs::mul(t, H, "c3", "m0", "gn");
    legs::antipode(t, H, "c2");
    legs::mul(t, H, "c0", "c2", "y");
    legs::antipode_inv(t, H, "y");
    legs::diag_act(t, C, "y", legs::names("a", q + 1));
    detail::finish(t, legs::cat(legs::cat(ks, {"kn", "gn"}), legs::names("a", q + 1)), s);
  });
}

} // namespace closed

// ---------------------------------------------------------------------------
// Suites

/// βγ = γβ = id, 𝔟̄ = δ and every transformed operator against its closed form on p <= P, q <= Q.
/// The displayed 𝔱, 𝔡_q count only for cocommutative H; the displayed 𝔱̄ is informational.
template <class K> AxiomReport transform_suite_algebra(const ComoduleAlgebraData<K>& A, std::size_t P, std::size_t Q)
{
  const auto& H = A.hopf;
  const auto& f = H.field;
  const std::size_t d = H.dim, dA = A.algebra.dim;
  const bool cocomm = is_cocommutative(H);
  auto T = transformed_a_natural_h(A);
  Suite s;
  for (std::size_t p = 0; p <= P; ++p)
    for (std::size_t q = 0; q <= Q; ++q) {
      const std::string w = "p=" + std::to_string(p) + " q=" + std::to_string(q);
      const std::size_t N = T.dim(p, q);
      const std::size_t m = d * ipow(dA, q + 1); // H ⊗ A^{⊗(q+1)}
      auto be = beta_algebra(H, dA, p, q), ga = gamma_algebra(H, dA, p, q);
      s.expect("β∘γ = id", w, be * ga, id_map(f, N));
      s.expect("γ∘β = id", w, ga * be, id_map(f, N));
      auto M = first_column_module(A, q);
      if (p >= 1) {
        s.expect("𝔟̄ = δ (Hopf-module boundary)", w, horizontal_boundary(T, p, q), hopf_module_boundary(M, p));
        s.expect("𝔡̄_0 = ε(k_1)(k_2..k_p | g | a)", w, T.op(BiOp::HFace, p, q, 0), kron(H.counit, id_map(f, ipow(d, p - 1) * m)));
        for (std::size_t i = 1; i < p; ++i)
          s.expect("𝔡̄_i multiplies k_i k_{i+1}", w + " i=" + std::to_string(i), T.op(BiOp::HFace, p, q, i),
                   detail::sandwich(f, ipow(d, i - 1), H.mult, ipow(d, p - i - 1) * m));
        s.expect("𝔡̄_p = k_p·(g | a)", w, T.op(BiOp::HFace, p, q, p), kron(id_map(f, ipow(d, p - 1)), M.action));
      }
      for (std::size_t i = 0; i <= p; ++i)
        s.expect("𝔰̄_i inserts 1 among the k's", w + " i=" + std::to_string(i), T.op(BiOp::HDegen, p, q, i),
                 detail::sandwich(f, ipow(d, i), H.unit, ipow(d, p - i) * m));
      for (std::size_t i = 0; i < q; ++i)
        s.expect("𝔡_i multiplies a_i a_{i+1}", w + " i=" + std::to_string(i), T.op(BiOp::VFace, p, q, i),
                 detail::sandwich(f, ipow(d, p + 1) * ipow(dA, i), A.algebra.mult, ipow(dA, q - 1 - i)));
      for (std::size_t i = 0; i <= q; ++i)
        s.expect("𝔰_i inserts 1 among the a's", w + " i=" + std::to_string(i), T.op(BiOp::VDegen, p, q, i),
                 detail::sandwich(f, ipow(d, p + 1) * ipow(dA, i + 1), A.algebra.unit, ipow(dA, q - i)));
      s.expect("𝔱 displayed closed form", w, T.op(BiOp::VCyc, p, q), closed::t_algebra(A, p, q, false));
      if (q >= 1) s.expect("𝔡_q displayed closed form", w, T.op(BiOp::VFace, p, q, q), closed::t_algebra(A, p, q, true));
      s.expect("𝔱̄ = βτ̄γ closed form", w, T.op(BiOp::HCyc, p, q), closed::tbar_algebra(A, p, q));
      s.expect("𝔱̄ displayed closed form", w, T.op(BiOp::HCyc, p, q), closed::tbar_algebra_display(A, p, q));
    }
  if (!cocomm) {
    s.informational("𝔱 displayed closed form");
    s.informational("𝔡_q displayed closed form");
  }
  s.informational("𝔱̄ displayed closed form");
  return s.report();
}

/// βγ = γβ = id, 𝔟̄ = 𝛅 and the transformed operators against their closed forms on p <= P, q <= Q.
template <class K> AxiomReport transform_suite_coalgebra(const ModuleCoalgebraData<K>& C, std::size_t P, std::size_t Q)
{
  const auto& H = C.hopf;
  const auto& f = H.field;
  const std::size_t d = H.dim, dC = C.coalgebra.dim;
  auto T = transformed_c_natural_h(C);
  Suite s;
  for (std::size_t p = 0; p <= P; ++p)
    for (std::size_t q = 0; q <= Q; ++q) {
      const std::string w = "p=" + std::to_string(p) + " q=" + std::to_string(q);
      const std::size_t N = T.dim(p, q);
      const std::size_t m = d * ipow(dC, q + 1);
      auto be = beta_coalgebra(H, dC, p, q), ga = gamma_coalgebra(H, dC, p, q);
      s.expect("β∘γ = id", w, be * ga, id_map(f, N));
      s.expect("γ∘β = id", w, ga * be, id_map(f, N));
      auto M = first_column_comodule(C, q);
      s.expect("𝔟̄ = 𝛅 (Hopf-comodule coboundary)", w, horizontal_boundary(T, p, q), hopf_comodule_coboundary(M, p));
      s.expect("𝔡̄^0 = (1, k | g | a)", w, T.op(BiOp::HFace, p, q, 0), kron(H.unit, id_map(f, ipow(d, p) * m)));
      for (std::size_t i = 1; i <= p; ++i)
        s.expect("𝔡̄^i splits k_i", w + " i=" + std::to_string(i), T.op(BiOp::HFace, p, q, i),
                 detail::sandwich(f, ipow(d, i - 1), H.comult, ipow(d, p - i) * m));
      s.expect("𝔡̄^{p+1} = (k | 𝚫(g | a))", w, T.op(BiOp::HFace, p, q, p + 1), kron(id_map(f, ipow(d, p)), M.coaction));
      for (std::size_t i = 0; i < p; ++i)
        s.expect("𝔰̄^i applies ε to k_{i+1}", w + " i=" + std::to_string(i), T.op(BiOp::HDegen, p, q, i),
                 detail::sandwich(f, ipow(d, i), H.counit, ipow(d, p - i - 1) * m));
      for (std::size_t i = 0; i <= q; ++i)
        s.expect("𝔡^i splits a_i", w + " i=" + std::to_string(i), T.op(BiOp::VFace, p, q, i),
                 detail::sandwich(f, ipow(d, p + 1) * ipow(dC, i), C.coalgebra.comult, ipow(dC, q - i)));
      for (std::size_t i = 0; i < q; ++i)
        s.expect("𝔰^i applies ε to a_{i+1}", w + " i=" + std::to_string(i), T.op(BiOp::VDegen, p, q, i),
                 detail::sandwich(f, ipow(d, p + 1) * ipow(dC, i + 1), C.coalgebra.counit, ipow(dC, q - i - 1)));
      s.expect("𝔱 displayed closed form", w, T.op(BiOp::VCyc, p, q), closed::t_coalgebra(C, p, q, false));
      s.expect("𝔡^{q+1} displayed closed form", w, T.op(BiOp::VFace, p, q, q + 1), closed::t_coalgebra(C, p, q, true));
      if (p >= 1) s.expect("𝔱̄ displayed closed form", w, T.op(BiOp::HCyc, p, q), closed::tbar_coalgebra_display(C, p, q));
    }
  return s.report();
}

/// Throws ClosedFormMismatch for the first counted failure.
inline void require_closed_forms(const AxiomReport& r)
{
  if (auto* f = r.first_failure()) throw Error(Errc::ClosedFormMismatch, f->name + " (" + f->detail + ")");
}

} // namespace hopfcyc

#endif // HOPFCYC_TRANSFORMS_HPP
