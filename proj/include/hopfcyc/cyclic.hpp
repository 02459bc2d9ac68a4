#ifndef HOPFCYC_CYCLIC_HPP
#define HOPFCYC_CYCLIC_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

/// Chain: faces lower the degree (simplicial). Cochain: cofaces raise it (cosimplicial).
enum class Variance { Chain, Cochain };

enum class CyclicOp { Face, Degen, Cyc };

/// A (para)cyclic or (para)cocyclic object whose operators are materialized on demand.
///
/// Chain:   face(n,i): X_n -> X_{n-1}, 0 <= i <= n;   degen(n,i): X_n -> X_{n+1}, 0 <= i <= n.
/// Cochain: face(n,i): X_n -> X_{n+1}, 0 <= i <= n+1; degen(n,i): X_n -> X_{n-1}, 0 <= i <= n-1.
/// cyc(n) acts on X_n in both cases.
template <class K> class CyclicObject {
public:
  using Maker = std::function<SparseMatrix<K>(CyclicOp, std::size_t, std::size_t)>;

  CyclicObject(Field<K> f, Variance v, std::function<std::size_t(std::size_t)> dim, Maker make)
      : field_(std::move(f)), variance_(v), dim_(std::move(dim)), make_(std::move(make)),
        cache_(std::make_shared<std::map<std::tuple<int, std::size_t, std::size_t>, SparseMatrix<K>>>())
  {
  }

  const Field<K>& field() const { return field_; }
  Variance variance() const { return variance_; }
  std::size_t dim(std::size_t n) const { return dim_(n); }

  const SparseMatrix<K>& face(std::size_t n, std::size_t i) const { return get(CyclicOp::Face, n, i); }
  const SparseMatrix<K>& degen(std::size_t n, std::size_t i) const { return get(CyclicOp::Degen, n, i); }
  const SparseMatrix<K>& cyc(std::size_t n) const { return get(CyclicOp::Cyc, n, 0); }

  /// Number of faces (resp. degeneracies) with source degree n.
  std::size_t face_count(std::size_t n) const
  {
    return variance_ == Variance::Chain ? (n == 0 ? 0 : n + 1) : n + 2;
  }
  std::size_t degen_count(std::size_t n) const { return variance_ == Variance::Chain ? n + 1 : n; }

  /// The same object with every operator conjugated: T' = R_target * T * L_source.
  /// Used for transport along isomorphisms and for induced operators on (co)invariants.
  CyclicObject induced(std::function<std::size_t(std::size_t)> dim, std::function<SparseMatrix<K>(std::size_t)> into,
                       std::function<SparseMatrix<K>(std::size_t)> from) const
  {
    auto self = *this;
    Variance v = variance_;
    Maker mk = [self, v, into, from](CyclicOp op, std::size_t n, std::size_t i) {
      std::size_t m = n;
      if (op == CyclicOp::Face) m = (v == Variance::Chain) ? n - 1 : n + 1;
      if (op == CyclicOp::Degen) m = (v == Variance::Chain) ? n + 1 : n - 1;
      const SparseMatrix<K>& t = op == CyclicOp::Face ? self.face(n, i) : op == CyclicOp::Degen ? self.degen(n, i) : self.cyc(n);
      return into(m) * t * from(n);
    };
    return CyclicObject(field_, v, std::move(dim), std::move(mk));
  }

  /// A cochain object read as a chain object via transposes; the cocyclic relations
  /// turn into the cyclic ones (τ∂^i = ∂^{i-1}τ becomes d_i t = t d_{i-1}, and so on).
  CyclicObject transposed() const
  {
    auto self = *this;
    Variance v = variance_ == Variance::Chain ? Variance::Cochain : Variance::Chain;
    Maker mk = [self, v](CyclicOp op, std::size_t n, std::size_t i) {
      if (op == CyclicOp::Cyc) return self.cyc(n).transpose();
      if (v == Variance::Chain) {
        if (op == CyclicOp::Face) return self.face(n - 1, i).transpose();
        return self.degen(n + 1, i).transpose();
      }
      if (op == CyclicOp::Face) return self.face(n + 1, i).transpose();
      return self.degen(n - 1, i).transpose();
    };
    auto d = dim_;
    return CyclicObject(field_, v, d, std::move(mk));
  }

private:
  const SparseMatrix<K>& get(CyclicOp op, std::size_t n, std::size_t i) const
  {
    auto key = std::make_tuple(static_cast<int>(op), n, i);
    auto it = cache_->find(key);
    if (it != cache_->end()) return it->second;
    return cache_->emplace(key, make_(op, n, i)).first->second;
  }

  Field<K> field_;
  Variance variance_;
  std::function<std::size_t(std::size_t)> dim_;
  Maker make_;
  std::shared_ptr<std::map<std::tuple<int, std::size_t, std::size_t>, SparseMatrix<K>>> cache_;
};

/// Collects identity checks by family name; one report entry per family, with the first
/// failing location.
class Suite {
public:
  template <class K>
  void expect(const std::string& family, const std::string& where, const SparseMatrix<K>& lhs, const SparseMatrix<K>& rhs)
  {
    AxiomCheck& c = entry(family);
    if (!c.passed) return;
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
      c.passed = false;
      c.detail = where + ": shape " + lhs.shape() + " vs " + rhs.shape();
      return;
    }
    std::size_t j = first_difference(lhs, rhs);
    if (j < lhs.cols()) {
      c.passed = false;
      c.detail = where + ": first differing column " + std::to_string(j);
    }
  }

  void note(const std::string& family, bool ok, const std::string& detail)
  {
    AxiomCheck& c = entry(family);
    if (c.passed && !ok) {
      c.passed = false;
      c.detail = detail;
    }
  }

  /// Failures of this family are reported but do not affect the verdict.
  void informational(const std::string& family) { entry(family).informational = true; }

  AxiomReport report() const { return report_; }

private:
  AxiomCheck& entry(const std::string& family)
  {
    auto it = index_.find(family);
    if (it == index_.end()) {
      it = index_.emplace(family, report_.checks.size()).first;
      report_.checks.push_back({family, true, ""});
    }
    return report_.checks[it->second];
  }

  AxiomReport report_;
  std::map<std::string, std::size_t> index_;
};

/// Throws IdentityFailure naming the first failing identity.
inline void require(const AxiomReport& r)
{
  if (auto* f = r.first_failure()) throw Error(Errc::IdentityFailure, f->name + " (" + f->detail + ")");
}

namespace detail {
inline std::string at(std::size_t n) { return "n=" + std::to_string(n); }
inline std::string at(std::size_t n, std::size_t i) { return "n=" + std::to_string(n) + " i=" + std::to_string(i); }
inline std::string at(std::size_t n, std::size_t i, std::size_t j)
{
  return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
}
} // namespace detail

/// Simplicial (or cosimplicial) and (para)cyclic relations on degrees 0..top.
/// Every identity whose composite stays inside degrees 0..top is checked.
/// With `cyclic` false, t^{n+1} = id is not asked for.
template <class K>
void check_cyclic_object(Suite& s, const CyclicObject<K>& X, std::size_t top, bool cyclic, const std::string& prefix = "")
{
  using detail::at;
  const K one = X.field().one();
  auto I = [&](std::size_t n) { return SparseMatrix<K>::identity(X.dim(n), one); };
  const std::string P = prefix;

  if (X.variance() == Variance::Chain) {
    for (std::size_t n = 0; n <= top; ++n) {
      for (std::size_t j = 0; n >= 2 && j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          s.expect(P + "d_i d_j = d_{j-1} d_i (i<j)", at(n, i, j), X.face(n - 1, i) * X.face(n, j), X.face(n - 1, j - 1) * X.face(n, i));
      if (n + 2 <= top)
        for (std::size_t j = 0; j <= n; ++j)
          for (std::size_t i = 0; i <= j; ++i)
            s.expect(P + "s_i s_j = s_{j+1} s_i (i<=j)", at(n, i, j), X.degen(n + 1, i) * X.degen(n, j), X.degen(n + 1, j + 1) * X.degen(n, i));
      if (n + 1 <= top)
        for (std::size_t j = 0; j <= n; ++j)
          for (std::size_t i = 0; i <= n + 1; ++i) {
            auto lhs = X.face(n + 1, i) * X.degen(n, j);
            if (i < j)
              s.expect(P + "d_i s_j = s_{j-1} d_i (i<j)", at(n, i, j), lhs, X.degen(n - 1, j - 1) * X.face(n, i));
            else if (i == j || i == j + 1)
              s.expect(P + "d_j s_j = d_{j+1} s_j = id", at(n, i, j), lhs, I(n));
            else
              s.expect(P + "d_i s_j = s_j d_{i-1} (i>j+1)", at(n, i, j), lhs, X.degen(n - 1, j) * X.face(n, i - 1));
          }
      if (n >= 1) {
        for (std::size_t i = 1; i <= n; ++i)
          s.expect(P + "d_i t = t d_{i-1}", at(n, i), X.face(n, i) * X.cyc(n), X.cyc(n - 1) * X.face(n, i - 1));
        s.expect(P + "d_0 t = d_n", at(n), X.face(n, 0) * X.cyc(n), X.face(n, n));
      }
      if (n + 1 <= top) {
        for (std::size_t i = 1; i <= n; ++i)
          s.expect(P + "s_i t = t s_{i-1}", at(n, i), X.degen(n, i) * X.cyc(n), X.cyc(n + 1) * X.degen(n, i - 1));
        s.expect(P + "s_0 t = t^2 s_n", at(n), X.degen(n, 0) * X.cyc(n), X.cyc(n + 1) * X.cyc(n + 1) * X.degen(n, n));
      }
      if (cyclic) s.expect(P + "t^{n+1} = id", at(n), power(X.cyc(n), n + 1, one), I(n));
    }
    return;
  }

  for (std::size_t n = 0; n <= top; ++n) {
    if (n + 2 <= top)
      for (std::size_t j = 0; j <= n + 2; ++j)
        for (std::size_t i = 0; i < j; ++i)
          s.expect(P + "∂^j ∂^i = ∂^i ∂^{j-1} (i<j)", at(n, i, j), X.face(n + 1, j) * X.face(n, i), X.face(n + 1, i) * X.face(n, j - 1));
    if (n >= 2)
      for (std::size_t j = 0; j + 2 <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          s.expect(P + "σ^j σ^i = σ^i σ^{j+1} (i<=j)", at(n, i, j), X.degen(n - 1, j) * X.degen(n, i), X.degen(n - 1, i) * X.degen(n, j + 1));
    if (n + 1 <= top)
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n + 1; ++i) {
          auto lhs = X.degen(n + 1, j) * X.face(n, i);
          if (i < j)
            s.expect(P + "σ^j ∂^i = ∂^i σ^{j-1} (i<j)", at(n, i, j), lhs, X.face(n - 1, i) * X.degen(n, j - 1));
          else if (i == j || i == j + 1)
            s.expect(P + "σ^j ∂^j = σ^j ∂^{j+1} = id", at(n, i, j), lhs, I(n));
          else
            s.expect(P + "σ^j ∂^i = ∂^{i-1} σ^j (i>j+1)", at(n, i, j), lhs, X.face(n - 1, i - 1) * X.degen(n, j));
        }
    if (n + 1 <= top) {
      for (std::size_t i = 1; i <= n + 1; ++i)
        s.expect(P + "τ ∂^i = ∂^{i-1} τ", at(n, i), X.cyc(n + 1) * X.face(n, i), X.face(n, i - 1) * X.cyc(n));
      s.expect(P + "τ ∂^0 = ∂^{n+1}", at(n), X.cyc(n + 1) * X.face(n, 0), X.face(n, n + 1));
    }
    if (n >= 1) {
      for (std::size_t i = 1; i + 1 <= n; ++i)
        s.expect(P + "τ σ^i = σ^{i-1} τ", at(n, i), X.cyc(n - 1) * X.degen(n, i), X.degen(n, i - 1) * X.cyc(n));
      s.expect(P + "τ σ^0 = σ^{n-1} τ^2", at(n), X.cyc(n - 1) * X.degen(n, 0), X.degen(n, n - 1) * X.cyc(n) * X.cyc(n));
    }
    if (cyclic) s.expect(P + "τ^{n+1} = id", at(n), power(X.cyc(n), n + 1, one), I(n));
  }
}

template <class K> AxiomReport cyclic_suite(const CyclicObject<K>& X, std::size_t top, bool cyclic = true)
{
  Suite s;
  check_cyclic_object(s, X, top, cyclic);
  return s.report();
}

// ---------------------------------------------------------------------------
// Bi-(para)cyclic objects

enum class BiOp { VFace, VDegen, VCyc, HFace, HDegen, HCyc };

/// X_{p,q}: p counts the horizontal (barred) direction, q the vertical one.
template <class K> class BiObject {
public:
  using Maker = std::function<SparseMatrix<K>(BiOp, std::size_t p, std::size_t q, std::size_t i)>;

  BiObject(Field<K> f, Variance v, std::function<std::size_t(std::size_t, std::size_t)> dim, Maker make)
      : field_(std::move(f)), variance_(v), dim_(std::move(dim)), make_(std::move(make)),
        cache_(std::make_shared<std::map<std::tuple<int, std::size_t, std::size_t, std::size_t>, SparseMatrix<K>>>())
  {
  }

  const Field<K>& field() const { return field_; }
  Variance variance() const { return variance_; }
  std::size_t dim(std::size_t p, std::size_t q) const { return dim_(p, q); }

  const SparseMatrix<K>& op(BiOp o, std::size_t p, std::size_t q, std::size_t i = 0) const
  {
    auto key = std::make_tuple(static_cast<int>(o), p, q, i);
    auto it = cache_->find(key);
    if (it != cache_->end()) return it->second;
    return cache_->emplace(key, make_(o, p, q, i)).first->second;
  }

  /// The column p = const (vertical direction) as a one-directional object.
  CyclicObject<K> vertical(std::size_t p) const
  {
    auto self = *this;
    return CyclicObject<K>(
        field_, variance_, [self, p](std::size_t q) { return self.dim(p, q); },
        [self, p](CyclicOp o, std::size_t q, std::size_t i) {
          return self.op(o == CyclicOp::Face ? BiOp::VFace : o == CyclicOp::Degen ? BiOp::VDegen : BiOp::VCyc, p, q, i);
        });
  }

  CyclicObject<K> horizontal(std::size_t q) const
  {
    auto self = *this;
    return CyclicObject<K>(
        field_, variance_, [self, q](std::size_t p) { return self.dim(p, q); },
        [self, q](CyclicOp o, std::size_t p, std::size_t i) {
          return self.op(o == CyclicOp::Face ? BiOp::HFace : o == CyclicOp::Degen ? BiOp::HDegen : BiOp::HCyc, p, q, i);
        });
  }

  /// The diagonal X_{n,n} with d_i = ∂_i ∂̄_i, s_i = σ_i σ̄_i, t = τ τ̄.
  CyclicObject<K> diagonal() const
  {
    auto self = *this;
    Variance v = variance_;
    return CyclicObject<K>(
        field_, v, [self](std::size_t n) { return self.dim(n, n); },
        [self, v](CyclicOp o, std::size_t n, std::size_t i) {
          if (o == CyclicOp::Cyc) return self.op(BiOp::VCyc, n, n) * self.op(BiOp::HCyc, n, n);
          bool down = (o == CyclicOp::Face) == (v == Variance::Chain);
          std::size_t m = down ? n - 1 : n + 1;
          if (o == CyclicOp::Face) return self.op(BiOp::VFace, m, n, i) * self.op(BiOp::HFace, n, n, i);
          return self.op(BiOp::VDegen, m, n, i) * self.op(BiOp::HDegen, n, n, i);
        });
  }

private:
  Field<K> field_;
  Variance variance_;
  std::function<std::size_t(std::size_t, std::size_t)> dim_;
  Maker make_;
  std::shared_ptr<std::map<std::tuple<int, std::size_t, std::size_t, std::size_t>, SparseMatrix<K>>> cache_;
};

namespace detail {

struct Move {
  const char* name;
  BiOp op;
  int step;          // change of degree in its own direction
  std::size_t count; // number of indices at the source degree
};

inline std::vector<Move> moves(Variance v, bool vertical, std::size_t deg)
{
  BiOp f = vertical ? BiOp::VFace : BiOp::HFace, s = vertical ? BiOp::VDegen : BiOp::HDegen, t = vertical ? BiOp::VCyc : BiOp::HCyc;
  const char* fn = vertical ? (v == Variance::Chain ? "∂_i" : "∂^i") : (v == Variance::Chain ? "∂̄_j" : "∂̄^j");
  const char* sn = vertical ? (v == Variance::Chain ? "σ_i" : "σ^i") : (v == Variance::Chain ? "σ̄_j" : "σ̄^j");
  const char* tn = vertical ? "τ" : "τ̄";
  std::vector<Move> out;
  if (v == Variance::Chain) {
    if (deg >= 1) out.push_back({fn, f, -1, deg + 1});
    out.push_back({sn, s, +1, deg + 1});
  } else {
    out.push_back({fn, f, +1, deg + 2});
    if (deg >= 1) out.push_back({sn, s, -1, deg});
  }
  out.push_back({tn, t, 0, 1});
  return out;
}

} // namespace detail

/// Identity suite of a cylindrical (or cocylindrical) object on the window p <= P, q <= Q:
/// both directions para(co)cyclic, all vertical operators commute with all horizontal
/// ones, and τ̄^{p+1} τ^{q+1} = τ^{q+1} τ̄^{p+1} = id.
template <class K> AxiomReport cylindrical_suite(const BiObject<K>& X, std::size_t P, std::size_t Q)
{
  Suite s;
  for (std::size_t p = 0; p <= P; ++p) check_cyclic_object(s, X.vertical(p), Q, false, "vertical: ");
  for (std::size_t q = 0; q <= Q; ++q) check_cyclic_object(s, X.horizontal(q), P, false, "horizontal: ");

  const K one = X.field().one();
  for (std::size_t p = 0; p <= P; ++p)
    for (std::size_t q = 0; q <= Q; ++q) {
      for (const auto& vm : detail::moves(X.variance(), true, q)) {
        long q2 = static_cast<long>(q) + vm.step;
        if (q2 < 0 || q2 > static_cast<long>(Q)) continue;
        for (const auto& hm : detail::moves(X.variance(), false, p)) {
          long p2 = static_cast<long>(p) + hm.step;
          if (p2 < 0 || p2 > static_cast<long>(P)) continue;
          std::string fam = std::string("commute: ") + vm.name + " " + hm.name + " = " + hm.name + " " + vm.name;
          for (std::size_t i = 0; i < vm.count; ++i)
            for (std::size_t j = 0; j < hm.count; ++j) {
              auto lhs = X.op(vm.op, static_cast<std::size_t>(p2), q, i) * X.op(hm.op, p, q, j);
              auto rhs = X.op(hm.op, p, static_cast<std::size_t>(q2), j) * X.op(vm.op, p, q, i);
              s.expect(fam, "p=" + std::to_string(p) + " q=" + std::to_string(q) + " i=" + std::to_string(i) + " j=" + std::to_string(j), lhs, rhs);
            }
        }
      }
      auto T = power(X.op(BiOp::VCyc, p, q), q + 1, one), Tb = power(X.op(BiOp::HCyc, p, q), p + 1, one);
      auto I = SparseMatrix<K>::identity(X.dim(p, q), one);
      std::string where = "p=" + std::to_string(p) + " q=" + std::to_string(q);
      s.expect("cylindrical: τ̄^{p+1} τ^{q+1} = id", where, Tb * T, I);
      s.expect("cylindrical: τ^{q+1} τ̄^{p+1} = id", where, T * Tb, I);
    }
  return s.report();
}

} // namespace hopfcyc

#endif // HOPFCYC_CYCLIC_HPP
