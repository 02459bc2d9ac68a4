#ifndef HOPFCYC_LINALG_HPP
#define HOPFCYC_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hopfcyc/sparse.hpp"

namespace hopfcyc {

/// Row echelon form keyed by leading index; each stored row has leading entry 1.
/// Reduction walks indices left to right, so the remainder vanishes at every pivot.
template <class K> class Echelon {
public:
  explicit Echelon(std::size_t ambient) : n_(ambient) {}

  std::size_t ambient_dim() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, SparseVector<K>>& rows() const { return rows_; }

  SparseVector<K> reduce(SparseVector<K> v) const
  {
    std::size_t k = 0;
    while (k < v.size()) {
      auto it = rows_.find(v[k].first);
      if (it == rows_.end()) {
        ++k;
        continue;
      }
      K c = -v[k].second;
      v = axpy(v, c, it->second);
    }
    return v;
  }

  bool insert(SparseVector<K> v)
  {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    K inv = inverse(v.front().second);
    std::size_t p = v.front().first;
    rows_.emplace(p, scaled(v, inv));
    return true;
  }

private:
  std::size_t n_;
  std::map<std::size_t, SparseVector<K>> rows_;
};

/// Echelon form that remembers, for every stored row v, a combination w with v = M w.
template <class K> class TrackedEchelon {
public:
  struct Row {
    SparseVector<K> v, w;
  };

  /// Returns the remainder of v and the updated combination.
  std::pair<SparseVector<K>, SparseVector<K>> reduce(SparseVector<K> v, SparseVector<K> w) const
  {
    std::size_t k = 0;
    while (k < v.size()) {
      auto it = rows_.find(v[k].first);
      if (it == rows_.end()) {
        ++k;
        continue;
      }
      K c = -v[k].second;
      v = axpy(v, c, it->second.v);
      w = axpy(w, c, it->second.w);
    }
    return {std::move(v), std::move(w)};
  }

  /// Inserts v (with combination w); returns the combination if v was dependent.
  std::optional<SparseVector<K>> insert(SparseVector<K> v, SparseVector<K> w)
  {
    auto [r, c] = reduce(std::move(v), std::move(w));
    if (r.empty()) return c;
    K inv = inverse(r.front().second);
    std::size_t p = r.front().first;
    rows_.emplace(p, Row{scaled(r, inv), scaled(c, inv)});
    return std::nullopt;
  }

  /// Makes every stored v equal to its unit pivot vector (pivot columns cleared).
  void fully_reduce()
  {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      Row& row = it->second;
      SparseVector<K> head(row.v.begin(), row.v.begin() + 1);
      SparseVector<K> tail(row.v.begin() + 1, row.v.end());
      SparseVector<K> w = row.w;
      std::size_t k = 0;
      while (k < tail.size()) {
        auto jt = rows_.find(tail[k].first);
        if (jt == rows_.end()) {
          ++k;
          continue;
        }
        K c = -tail[k].second;
        tail = axpy(tail, c, jt->second.v);
        w = axpy(w, c, jt->second.w);
      }
      head.insert(head.end(), tail.begin(), tail.end());
      row.v = std::move(head);
      row.w = std::move(w);
    }
  }

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, Row>& rows() const { return rows_; }

private:
  std::map<std::size_t, Row> rows_;
};

/// Subspace of k^n held as a reduced row echelon basis: pivots strictly increasing,
/// each basis vector is 1 at its own pivot and 0 at every other pivot.
template <class K> class Subspace {
public:
  explicit Subspace(std::size_t ambient = 0) : n_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<SparseVector<K>>& vectors)
  {
    Echelon<K> e(ambient);
    for (const auto& v : vectors) e.insert(v);
    return from_echelon(e);
  }

  static Subspace from_echelon(const Echelon<K>& e)
  {
    Subspace s(e.ambient_dim());
    // back substitution, largest pivot first
    std::map<std::size_t, SparseVector<K>> done;
    for (auto it = e.rows().rbegin(); it != e.rows().rend(); ++it) {
      SparseVector<K> tail(it->second.begin() + 1, it->second.end());
      std::size_t k = 0;
      while (k < tail.size()) {
        auto jt = done.find(tail[k].first);
        if (jt == done.end()) {
          ++k;
          continue;
        }
        K c = -tail[k].second;
        tail = axpy(tail, c, jt->second);
      }
      SparseVector<K> row{it->second.front()};
      row.insert(row.end(), tail.begin(), tail.end());
      done.emplace(it->first, std::move(row));
    }
    for (auto& [p, v] : done) {
      s.pivots_.push_back(p);
      s.basis_.push_back(std::move(v));
    }
    return s;
  }

  static Subspace full(std::size_t n, const K& one)
  {
    Subspace s(n);
    for (std::size_t i = 0; i < n; ++i) {
      s.pivots_.push_back(i);
      s.basis_.push_back({{i, one}});
    }
    return s;
  }

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector<K>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  SparseVector<K> reduce(SparseVector<K> v) const
  {
    std::size_t k = 0;
    while (k < v.size()) {
      auto it = std::lower_bound(pivots_.begin(), pivots_.end(), v[k].first);
      if (it == pivots_.end() || *it != v[k].first) {
        ++k;
        continue;
      }
      K c = -v[k].second;
      v = axpy(v, c, basis_[static_cast<std::size_t>(it - pivots_.begin())]);
    }
    return v;
  }

  bool contains(const SparseVector<K>& v) const { return reduce(v).empty(); }

  bool contains(const Subspace& other) const
  {
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const auto& v) { return contains(v); });
  }

  /// Coordinates in this basis, provided v lies in the subspace.
  std::optional<SparseVector<K>> coordinates(const SparseVector<K>& v) const
  {
    if (!contains(v)) return std::nullopt;
    SparseVector<K> c;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      auto it = std::lower_bound(v.begin(), v.end(), pivots_[k], [](const auto& e, std::size_t i) { return e.first < i; });
      if (it != v.end() && it->first == pivots_[k]) c.emplace_back(k, it->second);
    }
    return c;
  }

  /// The n x dim matrix whose columns are the basis vectors.
  SparseMatrix<K> basis_matrix() const
  {
    SparseMatrix<K> m(n_, basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) m.set_col(k, basis_[k]);
    return m;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b)
  {
    if (a.n_ != b.n_) throw Error(Errc::DimensionMismatch, "sum of subspaces in different ambient spaces");
    std::vector<SparseVector<K>> all = a.basis_;
    all.insert(all.end(), b.basis_.begin(), b.basis_.end());
    return span(a.n_, all);
  }

  friend bool operator==(const Subspace& a, const Subspace& b)
  {
    return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

private:
  std::size_t n_;
  std::vector<std::size_t> pivots_;
  std::vector<SparseVector<K>> basis_;
};

template <class K> std::size_t rank(const SparseMatrix<K>& m)
{
  Echelon<K> e(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.col(j));
  return e.rank();
}

template <class K> Subspace<K> image(const SparseMatrix<K>& m)
{
  Echelon<K> e(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.col(j));
  return Subspace<K>::from_echelon(e);
}

template <class K> Subspace<K> kernel(const SparseMatrix<K>& m, const K& one)
{
  TrackedEchelon<K> e;
  std::vector<SparseVector<K>> null;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (auto dep = e.insert(m.col(j), SparseVector<K>{{j, one}})) null.push_back(std::move(*dep));
  }
  return Subspace<K>::span(m.cols(), null);
}

/// dim ker(d_out) - rank(d_in) for C_{n+1} --d_in--> C_n --d_out--> C_{n-1}.
template <class K> std::size_t homology_dim(const SparseMatrix<K>& d_out, const SparseMatrix<K>& d_in)
{
  if (d_out.cols() != d_in.rows())
    throw Error(Errc::DimensionMismatch, "homology_dim: " + d_out.shape() + " after " + d_in.shape());
  if (!(d_out * d_in).is_zero_matrix()) throw Error(Errc::CompositionNotZero, "d_out * d_in != 0");
  return d_out.cols() - rank(d_out) - rank(d_in);
}

template <class K> SparseMatrix<K> inverse(const SparseMatrix<K>& m, const K& one)
{
  if (m.rows() != m.cols()) throw Error(Errc::Singular, "non-square matrix " + m.shape());
  TrackedEchelon<K> e;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (e.insert(m.col(j), SparseVector<K>{{j, one}})) throw Error(Errc::Singular, "matrix " + m.shape() + " is singular");
  e.fully_reduce();
  SparseMatrix<K> inv(m.cols(), m.rows());
  for (const auto& [p, row] : e.rows()) inv.set_col(p, row.w);
  return inv;
}

/// Presentation of k^n / R: the quotient basis is the set of non-pivot coordinates of R.
template <class K> class Quotient {
public:
  Quotient(Subspace<K> relations) : rel_(std::move(relations))
  {
    std::vector<char> is_pivot(rel_.ambient_dim(), 0);
    for (auto p : rel_.pivots()) is_pivot[p] = 1;
    index_.assign(rel_.ambient_dim(), npos);
    for (std::size_t i = 0; i < rel_.ambient_dim(); ++i)
      if (!is_pivot[i]) {
        index_[i] = free_.size();
        free_.push_back(i);
      }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t ambient_dim() const { return rel_.ambient_dim(); }
  std::size_t dim() const { return free_.size(); }
  const Subspace<K>& relations() const { return rel_; }

  SparseVector<K> project(const SparseVector<K>& v) const
  {
    SparseVector<K> r = rel_.reduce(v), out;
    for (auto& [i, c] : r) out.emplace_back(index_[i], c);
    return out;
  }

  /// Matrix of the projection k^n -> k^n / R in the quotient basis.
  SparseMatrix<K> projection(const K& one) const
  {
    SparseMatrix<K> m(dim(), ambient_dim());
    for (std::size_t k = 0; k < free_.size(); ++k) m.set_col(free_[k], {{k, one}});
    for (std::size_t k = 0; k < rel_.dim(); ++k) {
      // basis_k = e_p + (free part), so e_p is congruent to minus the free part
      const auto& b = rel_.basis()[k];
      SparseVector<K> out;
      for (std::size_t t = 1; t < b.size(); ++t) out.emplace_back(index_[b[t].first], -b[t].second);
      m.set_col(rel_.pivots()[k], std::move(out));
    }
    return m;
  }

  /// Section sending quotient basis vector k to the coordinate vector it came from.
  SparseMatrix<K> lift(const K& one) const
  {
    SparseMatrix<K> m(ambient_dim(), dim());
    for (std::size_t k = 0; k < free_.size(); ++k) m.set_col(k, {{free_[k], one}});
    return m;
  }

private:
  Subspace<K> rel_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> index_;
};

} // namespace hopfcyc

#endif // HOPFCYC_LINALG_HPP
