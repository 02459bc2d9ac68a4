#ifndef HOPFCYC_LEGS_HPP
#define HOPFCYC_LEGS_HPP

#include <string>
#include <vector>

#include "hopfcyc/hopf.hpp"
#include "hopfcyc/tensor.hpp"

// Slot-level structure maps. Each helper rewrites named slots of a Tensor in place;
// formulas in Sweedler notation are transcribed leg by leg on top of these.
namespace hopfcyc::legs {

template <class K> void mul(Tensor<K>& t, const AlgebraData<K>& a, const std::string& x, const std::string& y, const std::string& out)
{
  t.apply(a.mult, {x, y}, {out}, {a.dim});
}

template <class K> void mul(Tensor<K>& t, const HopfData<K>& h, const std::string& x, const std::string& y, const std::string& out)
{
  t.apply(h.mult, {x, y}, {out}, {h.dim});
}

/// Multiplies the slots left to right into `out`.
template <class K> void prod(Tensor<K>& t, const HopfData<K>& h, const std::vector<std::string>& slots, const std::string& out)
{
  if (slots.empty()) {
    t.apply(h.unit, {}, {out}, {h.dim});
    return;
  }
  std::string cur = slots[0];
  for (std::size_t i = 1; i < slots.size(); ++i) {
    std::string next = t.fresh("prod");
    mul(t, h, cur, slots[i], next);
    cur = next;
  }
  t.rename(cur, out);
}

template <class K> void comult(Tensor<K>& t, const CoalgebraData<K>& c, const std::string& x, const std::string& l, const std::string& r)
{
  t.apply(c.comult, {x}, {l, r}, {c.dim, c.dim});
}

template <class K> void comult(Tensor<K>& t, const HopfData<K>& h, const std::string& x, const std::string& l, const std::string& r)
{
  t.apply(h.comult, {x}, {l, r}, {h.dim, h.dim});
}

/// x -> x^(0) ⊗ ... ⊗ x^(k) into the given leg slots (k+1 of them).
template <class K> void comult_iter(Tensor<K>& t, const HopfData<K>& h, const std::string& x, const std::vector<std::string>& out)
{
  std::string cur = x;
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    std::string rest = t.fresh("rest");
    comult(t, h, cur, out[i], rest);
    cur = rest;
  }
  t.rename(cur, out.back());
}

template <class K> void antipode(Tensor<K>& t, const HopfData<K>& h, const std::string& x) { t.apply(h.antipode, {x}, {x}, {h.dim}); }
template <class K> void antipode_inv(Tensor<K>& t, const HopfData<K>& h, const std::string& x)
{
  t.apply(h.antipode_inv, {x}, {x}, {h.dim});
}

template <class K> void counit(Tensor<K>& t, const HopfData<K>& h, const std::string& x) { t.apply(h.counit, {x}, {}, {}); }
template <class K> void counit(Tensor<K>& t, const CoalgebraData<K>& c, const std::string& x) { t.apply(c.counit, {x}, {}, {}); }

/// Evaluates a covector (1 x dim matrix) on slot x.
template <class K> void evaluate(Tensor<K>& t, const SparseMatrix<K>& covector, const std::string& x) { t.apply(covector, {x}, {}, {}); }

template <class K> void unit(Tensor<K>& t, const HopfData<K>& h, const std::string& out) { t.apply(h.unit, {}, {out}, {h.dim}); }
template <class K> void unit(Tensor<K>& t, const AlgebraData<K>& a, const std::string& out) { t.apply(a.unit, {}, {out}, {a.dim}); }

/// x -> x^(1̄) ⊗ x^(0̄) into slots (h, a).
template <class K> void coact(Tensor<K>& t, const ComoduleAlgebraData<K>& a, const std::string& x, const std::string& h, const std::string& out)
{
  t.apply(a.coaction, {x}, {h, out}, {a.hopf.dim, a.algebra.dim});
}

template <class K> void coact(Tensor<K>& t, const ComoduleData<K>& m, const std::string& x, const std::string& h, const std::string& out)
{
  t.apply(m.coaction, {x}, {h, out}, {m.hopf.dim, m.dim});
}

/// h·c into slot out.
template <class K> void act(Tensor<K>& t, const ModuleCoalgebraData<K>& c, const std::string& h, const std::string& x, const std::string& out)
{
  t.apply(c.action, {h, x}, {out}, {c.coalgebra.dim});
}

template <class K> void act(Tensor<K>& t, const ModuleData<K>& m, const std::string& h, const std::string& x, const std::string& out)
{
  t.apply(m.action, {h, x}, {out}, {m.dim});
}

/// Conjugation h·g = h^(0) g S(h^(1)).
template <class K> void conj(Tensor<K>& t, const HopfData<K>& H, const std::string& h, const std::string& g, const std::string& out)
{
  auto h0 = t.fresh("c0"), h1 = t.fresh("c1"), gs = t.fresh("gs");
  comult(t, H, h, h0, h1);
  antipode(t, H, h1);
  mul(t, H, g, h1, gs);
  mul(t, H, h0, gs, out);
}

/// Diagonal conjugation h·(g_0,...,g_p) using consecutive legs of h; results replace the g slots.
template <class K> void diag_conj(Tensor<K>& t, const HopfData<K>& H, const std::string& h, const std::vector<std::string>& gs)
{
  if (gs.empty()) {
    counit(t, H, h);
    return;
  }
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < gs.size(); ++i) ls.push_back(t.fresh("d"));
  comult_iter(t, H, h, ls);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    auto o = t.fresh("o");
    conj(t, H, ls[i], gs[i], o);
    t.rename(o, gs[i]);
  }
}

/// Diagonal left multiplication (h^(0) k_1, h^(1) k_2, ...).
template <class K> void diag_lmul(Tensor<K>& t, const HopfData<K>& H, const std::string& h, const std::vector<std::string>& ks)
{
  if (ks.empty()) {
    counit(t, H, h);
    return;
  }
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < ks.size(); ++i) ls.push_back(t.fresh("d"));
  comult_iter(t, H, h, ls);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    auto o = t.fresh("o");
    mul(t, H, ls[i], ks[i], o);
    t.rename(o, ks[i]);
  }
}

/// Diagonal module action of h on the slots cs of a module coalgebra.
template <class K> void diag_act(Tensor<K>& t, const ModuleCoalgebraData<K>& C, const std::string& h, const std::vector<std::string>& cs)
{
  if (cs.empty()) {
    counit(t, C.hopf, h);
    return;
  }
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < cs.size(); ++i) ls.push_back(t.fresh("d"));
  comult_iter(t, C.hopf, h, ls);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto o = t.fresh("o");
    act(t, C, ls[i], cs[i], o);
    t.rename(o, cs[i]);
  }
}

/// Slot names stem0..stem{n-1} (or starting at `first`).
inline std::vector<std::string> names(const std::string& stem, std::size_t n, std::size_t first = 0)
{
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(first + i));
  return v;
}

inline std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b)
{
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

} // namespace hopfcyc::legs

#endif // HOPFCYC_LEGS_HPP
