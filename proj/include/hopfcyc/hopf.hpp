#ifndef HOPFCYC_HOPF_HPP
#define HOPFCYC_HOPF_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/linalg.hpp"
#include "hopfcyc/sparse.hpp"

namespace hopfcyc {

// Conventions: mult is dim x dim^2, unit dim x 1, comult dim^2 x dim, counit 1 x dim.
// A coaction is a map A -> H⊗A (H factor first); an action is a map H⊗C -> C.

template <class K> struct AlgebraData {
  Field<K> field;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  SparseMatrix<K> mult;
  SparseMatrix<K> unit;
};

template <class K> struct CoalgebraData {
  Field<K> field;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  SparseMatrix<K> comult;
  SparseMatrix<K> counit;
};

template <class K> struct HopfData {
  Field<K> field;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  SparseMatrix<K> mult, unit, comult, counit, antipode, antipode_inv;

  AlgebraData<K> algebra() const { return {field, dim, basis, mult, unit}; }
  CoalgebraData<K> coalgebra() const { return {field, dim, basis, comult, counit}; }
};

template <class K> struct ComoduleAlgebraData {
  HopfData<K> hopf;
  AlgebraData<K> algebra;
  SparseMatrix<K> coaction;
};

template <class K> struct ModuleCoalgebraData {
  HopfData<K> hopf;
  CoalgebraData<K> coalgebra;
  SparseMatrix<K> action;
};

/// Left module H⊗M -> M.
template <class K> struct ModuleData {
  HopfData<K> hopf;
  std::size_t dim = 0;
  SparseMatrix<K> action;
};

/// Left comodule M -> H⊗M.
template <class K> struct ComoduleData {
  HopfData<K> hopf;
  std::size_t dim = 0;
  SparseMatrix<K> coaction;
};

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string detail; // first failing basis tuple
  bool informational = false; // reported, but not part of the verdict
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool ok() const
  {
    for (const auto& c : checks)
      if (!c.passed && !c.informational) return false;
    return true;
  }
  const AxiomCheck* first_failure() const
  {
    for (const auto& c : checks)
      if (!c.passed && !c.informational) return &c;
    return nullptr;
  }
  void append(const AxiomReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

namespace detail {

inline std::string tuple_name(std::size_t flat, const std::vector<const std::vector<std::string>*>& factors)
{
  std::vector<std::size_t> dims;
  for (auto* f : factors) dims.push_back(f->size());
  auto digits = unflatten(flat, dims);
  std::string s = "(";
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k) s += ",";
    s += (*factors[k])[digits[k]];
  }
  return s + ")";
}

template <class K>
void compare(AxiomReport& r, std::string name, const SparseMatrix<K>& lhs, const SparseMatrix<K>& rhs,
             const std::vector<const std::vector<std::string>*>& factors)
{
  AxiomCheck c{std::move(name), true, ""};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    c.passed = false;
    c.detail = "shape " + lhs.shape() + " vs " + rhs.shape();
  } else {
    std::size_t j = first_difference(lhs, rhs);
    if (j < lhs.cols()) {
      c.passed = false;
      c.detail = "first failing basis tuple " + tuple_name(j, factors);
    }
  }
  r.checks.push_back(std::move(c));
}

inline std::vector<std::string> default_names(const std::string& stem, std::size_t n)
{
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

template <class K> bool shaped(const SparseMatrix<K>& m, std::size_t r, std::size_t c) { return m.rows() == r && m.cols() == c; }

} // namespace detail

template <class K> SparseMatrix<K> id_map(const Field<K>& f, std::size_t n) { return SparseMatrix<K>::identity(n, f.one()); }

template <class K> AxiomReport check_algebra(const AlgebraData<K>& a, const std::string& prefix = "")
{
  AxiomReport r;
  const auto n = a.dim;
  const auto& b = a.basis;
  if (!detail::shaped(a.mult, n, n * n) || !detail::shaped(a.unit, n, 1)) {
    r.checks.push_back({prefix + "structure map shapes", false, "mult " + a.mult.shape() + ", unit " + a.unit.shape()});
    return r;
  }
  auto I = id_map(a.field, n);
  detail::compare(r, prefix + "associativity", a.mult * kron(a.mult, I), a.mult * kron(I, a.mult), {&b, &b, &b});
  detail::compare(r, prefix + "left unit", a.mult * kron(a.unit, I), I, {&b});
  detail::compare(r, prefix + "right unit", a.mult * kron(I, a.unit), I, {&b});
  return r;
}

template <class K> AxiomReport check_coalgebra(const CoalgebraData<K>& c, const std::string& prefix = "")
{
  AxiomReport r;
  const auto n = c.dim;
  const auto& b = c.basis;
  if (!detail::shaped(c.comult, n * n, n) || !detail::shaped(c.counit, 1, n)) {
    r.checks.push_back({prefix + "structure map shapes", false, "comult " + c.comult.shape() + ", counit " + c.counit.shape()});
    return r;
  }
  auto I = id_map(c.field, n);
  detail::compare(r, prefix + "coassociativity", kron(c.comult, I) * c.comult, kron(I, c.comult) * c.comult, {&b});
  detail::compare(r, prefix + "left counit", kron(c.counit, I) * c.comult, I, {&b});
  detail::compare(r, prefix + "right counit", kron(I, c.counit) * c.comult, I, {&b});
  return r;
}

/// Every Hopf algebra axiom, evaluated exhaustively on basis tuples.
template <class K> AxiomReport check_hopf(const HopfData<K>& h)
{
  AxiomReport r = check_algebra(h.algebra());
  r.append(check_coalgebra(h.coalgebra()));
  const auto n = h.dim;
  const auto& b = h.basis;
  if (!r.ok() && r.first_failure()->name.find("shapes") != std::string::npos) return r;
  if (!detail::shaped(h.antipode, n, n) || !detail::shaped(h.antipode_inv, n, n)) {
    r.checks.push_back({"antipode shapes", false, h.antipode.shape() + ", " + h.antipode_inv.shape()});
    return r;
  }
  auto I = id_map(h.field, n);
  auto one = SparseMatrix<K>::identity(1, h.field.one());
  auto tw = kron(kron(I, swap_map(n, n, h.field.one())), I);
  detail::compare(r, "comultiplication multiplicative", h.comult * h.mult, kron(h.mult, h.mult) * tw * kron(h.comult, h.comult), {&b, &b});
  detail::compare(r, "comultiplication unital", h.comult * h.unit, kron(h.unit, h.unit), {});
  detail::compare(r, "counit multiplicative", h.counit * h.mult, kron(h.counit, h.counit), {&b, &b});
  detail::compare(r, "counit unital", h.counit * h.unit, one, {});
  auto eta_eps = h.unit * h.counit;
  detail::compare(r, "antipode: m(S⊗id)Δ = ηε", h.mult * kron(h.antipode, I) * h.comult, eta_eps, {&b});
  detail::compare(r, "antipode: m(id⊗S)Δ = ηε", h.mult * kron(I, h.antipode) * h.comult, eta_eps, {&b});
  detail::compare(r, "antipode inverse: S⁻¹S = id", h.antipode_inv * h.antipode, I, {&b});
  detail::compare(r, "antipode inverse: SS⁻¹ = id", h.antipode * h.antipode_inv, I, {&b});
  return r;
}

template <class K> AxiomReport check_comodule_algebra(const ComoduleAlgebraData<K>& a)
{
  const auto& H = a.hopf;
  const auto& A = a.algebra;
  AxiomReport r = check_algebra(A, "algebra ");
  const auto n = A.dim, m = H.dim;
  if (!detail::shaped(a.coaction, m * n, n)) {
    r.checks.push_back({"coaction shape", false, a.coaction.shape()});
    return r;
  }
  const auto& b = A.basis;
  auto IA = id_map(A.field, n);
  auto IH = id_map(H.field, m);
  detail::compare(r, "coaction coassociative", kron(H.comult, IA) * a.coaction, kron(IH, a.coaction) * a.coaction, {&b});
  detail::compare(r, "coaction counital", kron(H.counit, IA) * a.coaction, IA, {&b});
  auto tw = kron(kron(IH, swap_map(n, m, H.field.one())), IA);
  detail::compare(r, "coaction multiplicative", a.coaction * A.mult, kron(H.mult, A.mult) * tw * kron(a.coaction, a.coaction), {&b, &b});
  detail::compare(r, "coaction unital", a.coaction * A.unit, kron(H.unit, A.unit), {});
  return r;
}

template <class K> AxiomReport check_module_coalgebra(const ModuleCoalgebraData<K>& c)
{
  const auto& H = c.hopf;
  const auto& C = c.coalgebra;
  AxiomReport r = check_coalgebra(C, "coalgebra ");
  const auto n = C.dim, m = H.dim;
  if (!detail::shaped(c.action, n, m * n)) {
    r.checks.push_back({"action shape", false, c.action.shape()});
    return r;
  }
  const auto& b = C.basis;
  const auto& hb = H.basis;
  auto IC = id_map(C.field, n);
  auto IH = id_map(H.field, m);
  detail::compare(r, "action associative", c.action * kron(H.mult, IC), c.action * kron(IH, c.action), {&hb, &hb, &b});
  detail::compare(r, "action unital", c.action * kron(H.unit, IC), IC, {&b});
  auto tw = kron(kron(IH, swap_map(m, n, H.field.one())), IC);
  detail::compare(r, "action comultiplicative", C.comult * c.action, kron(c.action, c.action) * tw * kron(H.comult, C.comult), {&hb, &b});
  detail::compare(r, "action counital", C.counit * c.action, kron(H.counit, C.counit), {&hb, &b});
  return r;
}

template <class K> AxiomReport check_module(const ModuleData<K>& M)
{
  AxiomReport r;
  const auto& H = M.hopf;
  if (!detail::shaped(M.action, M.dim, H.dim * M.dim)) {
    r.checks.push_back({"module action shape", false, M.action.shape()});
    return r;
  }
  auto names = detail::default_names("m", M.dim);
  auto I = id_map(H.field, M.dim);
  auto IH = id_map(H.field, H.dim);
  detail::compare(r, "module associative", M.action * kron(H.mult, I), M.action * kron(IH, M.action), {&H.basis, &H.basis, &names});
  detail::compare(r, "module unital", M.action * kron(H.unit, I), I, {&names});
  return r;
}

template <class K> AxiomReport check_comodule(const ComoduleData<K>& M)
{
  AxiomReport r;
  const auto& H = M.hopf;
  if (!detail::shaped(M.coaction, H.dim * M.dim, M.dim)) {
    r.checks.push_back({"comodule coaction shape", false, M.coaction.shape()});
    return r;
  }
  auto names = detail::default_names("m", M.dim);
  auto I = id_map(H.field, M.dim);
  auto IH = id_map(H.field, H.dim);
  detail::compare(r, "comodule coassociative", kron(H.comult, I) * M.coaction, kron(IH, M.coaction) * M.coaction, {&names});
  detail::compare(r, "comodule counital", kron(H.counit, I) * M.coaction, I, {&names});
  return r;
}

template <class K> SparseMatrix<K> antipode_inverse(const SparseMatrix<K>& S, const Field<K>& f) { return inverse(S, f.one()); }

/// H -> H^{⊗(k+1)}, built as (id^{⊗(k-1)}⊗Δ)∘Δ^{k-1}.
template <class K> SparseMatrix<K> iterate_comult(const HopfData<K>& h, std::size_t k)
{
  auto r = id_map(h.field, h.dim);
  std::size_t left = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r = kron(id_map(h.field, left), h.comult) * r;
    left *= h.dim;
  }
  return r;
}

/// Same map, associated the other way: (Δ⊗id^{⊗(k-1)})∘Δ^{k-1}.
template <class K> SparseMatrix<K> iterate_comult_left(const HopfData<K>& h, std::size_t k)
{
  auto r = id_map(h.field, h.dim);
  std::size_t right = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r = kron(h.comult, id_map(h.field, right)) * r;
    right *= h.dim;
  }
  return r;
}

/// kG from a multiplication table (table[i][j] = index of g_i g_j).
template <class K>
HopfData<K> build_group_algebra(const std::vector<std::vector<std::size_t>>& table, const Field<K>& f,
                                std::vector<std::string> names = {})
{
  const std::size_t n = table.size();
  if (n == 0) throw Error(Errc::NotAGroup, "empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(Errc::NotAGroup, "table is not square");
    for (auto v : row)
      if (v >= n) throw Error(Errc::NotAGroup, "table entry out of range");
  }
  std::optional<std::size_t> e;
  for (std::size_t i = 0; i < n && !e; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) ok = ok && table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (!e) throw Error(Errc::NotAGroup, "no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(Errc::NotAGroup, "not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == *e && table[b][a] == *e) inv[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inv[a] == n) throw Error(Errc::NotAGroup, "element " + std::to_string(a) + " has no inverse");

  if (names.empty()) names = detail::default_names("g", n);
  if (names.size() != n) throw Error(Errc::DimensionMismatch, "wrong number of basis names");
  const K one = f.one();
  HopfData<K> h{f, n, names, {}, {}, {}, {}, {}, {}};
  h.mult = SparseMatrix<K>(n, n * n);
  h.comult = SparseMatrix<K>(n * n, n);
  h.counit = SparseMatrix<K>(1, n);
  h.antipode = SparseMatrix<K>(n, n);
  h.unit = SparseMatrix<K>(n, 1);
  h.unit.set_col(0, {{*e, one}});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.mult.set_col(a * n + b, {{table[a][b], one}});
    h.comult.set_col(a, {{a * n + a, one}});
    h.counit.set_col(a, {{0, one}});
    h.antipode.set_col(a, {{inv[a], one}});
  }
  h.antipode_inv = h.antipode; // S^2 = id for group algebras
  return h;
}

template <class K> HopfData<K> build_trivial_hopf(const Field<K>& f) { return build_group_algebra<K>({{0}}, f, {"1"}); }

template <class K> HopfData<K> build_cyclic_group_algebra(std::size_t n, const Field<K>& f)
{
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return build_group_algebra(t, f, names);
}

/// kS3 with elements listed as permutations of {0,1,2} in lexicographic order.
template <class K> HopfData<K> build_s3_group_algebra(const Field<K>& f)
{
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<int>& q) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return i;
    return perms.size();
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < 6; ++a) {
    names.push_back("[" + std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]) + "]");
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int k = 0; k < 3; ++k) c[k] = perms[a][perms[b][k]];
      t[a][b] = index(c);
    }
  }
  return build_group_algebra(t, f, names);
}

/// Sweedler's 4-dimensional Hopf algebra, basis {1, g, x, gx}.
template <class K> HopfData<K> build_sweedler_h4(const Field<K>& f)
{
  if (f.spec().characteristic() == 2) throw Error(Errc::CharTwo, "Sweedler's H4 needs characteristic other than 2");
  const K one = f.one(), mone = -f.one();
  HopfData<K> h{f, 4, {"1", "g", "x", "gx"}, {}, {}, {}, {}, {}, {}};
  using T = std::tuple<std::size_t, std::size_t, K>;
  // mult: column a*4+b holds a·b
  std::vector<T> m = {{0, 0, one},  {1, 1, one},  {2, 2, one},  {3, 3, one},  {1, 4, one},       {0, 5, one},
                      {3, 6, one},  {2, 7, one},  {2, 8, one},  {3, 9, mone}, {3, 12, one},      {2, 13, mone}};
  h.mult = SparseMatrix<K>::from_triplets(4, 16, m);
  h.unit = SparseMatrix<K>::from_triplets(4, 1, {{0, 0, one}});
  std::vector<T> c = {{0, 0, one}, {5, 1, one}, {2 * 4 + 0, 2, one}, {1 * 4 + 2, 2, one}, {3 * 4 + 1, 3, one}, {0 * 4 + 3, 3, one}};
  h.comult = SparseMatrix<K>::from_triplets(16, 4, c);
  h.counit = SparseMatrix<K>::from_triplets(1, 4, {{0, 0, one}, {0, 1, one}});
  h.antipode = SparseMatrix<K>::from_triplets(4, 4, {{0, 0, one}, {1, 1, one}, {3, 2, mone}, {2, 3, one}});
  h.antipode_inv = antipode_inverse(h.antipode, f);
  return h;
}

template <class K> AlgebraData<K> ground_algebra(const Field<K>& f)
{
  auto one = SparseMatrix<K>::identity(1, f.one());
  return {f, 1, {"1"}, one, one};
}

template <class K> CoalgebraData<K> ground_coalgebra(const Field<K>& f)
{
  auto one = SparseMatrix<K>::identity(1, f.one());
  return {f, 1, {"1"}, one, one};
}

/// A = H with α = Δ.
template <class K> ComoduleAlgebraData<K> self_comodule_algebra(const HopfData<K>& h) { return {h, h.algebra(), h.comult}; }

/// α(a) = 1⊗a.
template <class K> ComoduleAlgebraData<K> trivial_comodule_algebra(const HopfData<K>& h, const AlgebraData<K>& a)
{
  SparseMatrix<K> alpha(h.dim * a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) {
    SparseVector<K> col;
    for (const auto& [i, c] : h.unit.col(0)) col.emplace_back(i * a.dim + j, c);
    alpha.set_col(j, col);
  }
  return {h, a, alpha};
}

/// C = H with action = multiplication.
template <class K> ModuleCoalgebraData<K> self_module_coalgebra(const HopfData<K>& h) { return {h, h.coalgebra(), h.mult}; }

/// h·c = ε(h)c.
template <class K> ModuleCoalgebraData<K> trivial_module_coalgebra(const HopfData<K>& h, const CoalgebraData<K>& c)
{
  SparseMatrix<K> mu(c.dim, h.dim * c.dim);
  for (std::size_t g = 0; g < h.dim; ++g) {
    auto e = h.counit.get(0, g, h.field.zero());
    if (is_zero(e)) continue;
    for (std::size_t j = 0; j < c.dim; ++j) mu.set_col(g * c.dim + j, {{j, e}});
  }
  return {h, c, mu};
}

template <class K> ModuleData<K> trivial_module(const HopfData<K>& h) { return {h, 1, h.counit}; }
template <class K> ComoduleData<K> trivial_comodule(const HopfData<K>& h) { return {h, 1, h.unit}; }

} // namespace hopfcyc

#endif // HOPFCYC_HOPF_HPP
