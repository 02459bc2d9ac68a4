#ifndef HOPFCYC_SPARSE_HPP
#define HOPFCYC_SPARSE_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfcyc/error.hpp"
#include "hopfcyc/scalar.hpp"

namespace hopfcyc {

/// Sorted by index, no stored zeros.
template <class K> using SparseVector = std::vector<std::pair<std::size_t, K>>;

template <class K> SparseVector<K> axpy(const SparseVector<K>& x, const K& c, const SparseVector<K>& y)
{
  // x + c*y
  SparseVector<K> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      K v = c * y[j].second;
      if (!is_zero(v)) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      K v = x[i].second + c * y[j].second;
      if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// x + y or x - y.
template <class K> SparseVector<K> merge(const SparseVector<K>& x, const SparseVector<K>& y, bool plus)
{
  SparseVector<K> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, plus ? y[j].second : K(-y[j].second));
      ++j;
    } else {
      K v = plus ? K(x[i].second + y[j].second) : K(x[i].second - y[j].second);
      if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K> SparseVector<K> scaled(const SparseVector<K>& x, const K& c)
{
  SparseVector<K> out;
  if (is_zero(c)) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, v * c);
  return out;
}

/// Builds a sparse vector from unsorted (index, value) pairs, summing repeats.
template <class K> SparseVector<K> collect(std::vector<std::pair<std::size_t, K>> entries)
{
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector<K> out;
  for (auto& [i, v] : entries) {
    if (!out.empty() && out.back().first == i)
      out.back().second += v;
    else
      out.emplace_back(i, std::move(v));
  }
  std::erase_if(out, [](const auto& e) { return is_zero(e.second); });
  return out;
}

/// Column-major sparse matrix; column j is the image of basis vector j.
template <class K> class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

  static SparseMatrix identity(std::size_t n, const K& one)
  {
    SparseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.data_[j].emplace_back(j, one);
    return m;
  }

  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, const std::vector<std::tuple<std::size_t, std::size_t, K>>& t)
  {
    std::vector<std::vector<std::pair<std::size_t, K>>> tmp(cols);
    for (const auto& [i, j, v] : t) {
      if (i >= rows || j >= cols)
        throw Error(Errc::DimensionMismatch, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                                                 std::to_string(rows) + "x" + std::to_string(cols));
      tmp[j].emplace_back(i, v);
    }
    SparseMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) m.data_[j] = collect(std::move(tmp[j]));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVector<K>& col(std::size_t j) const { return data_[j]; }

  void set_col(std::size_t j, SparseVector<K> v)
  {
    if (!v.empty() && v.back().first >= rows_) throw Error(Errc::DimensionMismatch, "column entry out of range");
    data_[j] = std::move(v);
  }

  std::size_t nnz() const
  {
    std::size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
  }
  bool is_zero_matrix() const
  {
    return std::all_of(data_.begin(), data_.end(), [](const auto& c) { return c.empty(); });
  }

  /// Entry lookup; `zero` is returned for absent entries.
  K get(std::size_t i, std::size_t j, const K& zero) const
  {
    const auto& c = data_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, std::size_t k) { return e.first < k; });
    return (it != c.end() && it->first == i) ? it->second : zero;
  }

  std::vector<std::tuple<std::size_t, std::size_t, K>> triplets() const
  {
    std::vector<std::tuple<std::size_t, std::size_t, K>> t;
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) t.emplace_back(i, j, v);
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    return t;
  }

  SparseMatrix transpose() const
  {
    SparseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) t.data_[i].emplace_back(j, v);
    return t;
  }

  SparseVector<K> apply(const SparseVector<K>& x) const
  {
    check_index(x, cols_);
    SparseVector<K> acc;
    for (const auto& [j, c] : x) acc = axpy(acc, c, data_[j]);
    return acc;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b)
  {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }

  friend SparseMatrix operator*(const K& c, const SparseMatrix& a)
  {
    SparseMatrix out(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) out.data_[j] = scaled(a.data_[j], c);
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
  {
    if (a.cols_ != b.rows_)
      throw Error(Errc::DimensionMismatch, "product of " + a.shape() + " and " + b.shape());
    SparseMatrix out(a.rows_, b.cols_);
    std::vector<K> acc(a.rows_);
    std::vector<char> touched(a.rows_, 0);
    std::vector<std::size_t> hit;
    for (std::size_t j = 0; j < b.cols_; ++j) {
      hit.clear();
      for (const auto& [k, bkj] : b.data_[j]) {
        for (const auto& [i, aik] : a.data_[k]) {
          if (!touched[i]) {
            touched[i] = 1;
            acc[i] = aik * bkj;
            hit.push_back(i);
          } else {
            acc[i] += aik * bkj;
          }
        }
      }
      std::sort(hit.begin(), hit.end());
      auto& col = out.data_[j];
      for (std::size_t i : hit) {
        if (!is_zero(acc[i])) col.emplace_back(i, acc[i]);
        touched[i] = 0;
      }
    }
    return out;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
  static void check_index(const SparseVector<K>& x, std::size_t n)
  {
    if (!x.empty() && x.back().first >= n) throw Error(Errc::DimensionMismatch, "vector index out of range");
  }
  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool plus)
  {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(Errc::DimensionMismatch, "sum of " + a.shape() + " and " + b.shape());
    SparseMatrix out(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (b.data_[j].empty()) {
        out.data_[j] = a.data_[j];
        continue;
      }
      out.data_[j] = merge(a.data_[j], b.data_[j], plus);
    }
    return out;
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVector<K>> data_;
};

/// Tensor product of maps, leftmost factor slowest: (A⊗B)(e_i⊗e_j) = Ae_i ⊗ Be_j.
template <class K> SparseMatrix<K> kron(const SparseMatrix<K>& a, const SparseMatrix<K>& b)
{
  SparseMatrix<K> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SparseVector<K> col;
      col.reserve(a.col(i).size() * b.col(j).size());
      for (const auto& [r, x] : a.col(i))
        for (const auto& [s, y] : b.col(j)) col.emplace_back(r * b.rows() + s, x * y);
      out.set_col(i * b.cols() + j, std::move(col));
    }
  return out;
}

/// The flip V⊗W → W⊗V.
template <class K> SparseMatrix<K> swap_map(std::size_t dv, std::size_t dw, const K& one)
{
  SparseMatrix<K> out(dv * dw, dv * dw);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) out.set_col(i * dw + j, {{j * dv + i, one}});
  return out;
}

template <class K> SparseMatrix<K> power(const SparseMatrix<K>& m, std::size_t k, const K& one)
{
  SparseMatrix<K> r = SparseMatrix<K>::identity(m.cols(), one);
  for (std::size_t i = 0; i < k; ++i) r = m * r;
  return r;
}

/// Index of the first column where a and b differ, or cols() if none.
template <class K> std::size_t first_difference(const SparseMatrix<K>& a, const SparseMatrix<K>& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 0;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.col(j) != b.col(j)) return j;
  return a.cols();
}

/// Mixed-radix decoding, leftmost digit slowest.
inline std::vector<std::size_t> unflatten(std::size_t flat, const std::vector<std::size_t>& dims)
{
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = flat % dims[k];
    flat /= dims[k];
  }
  return digits;
}

inline std::size_t product(const std::vector<std::size_t>& dims)
{
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

} // namespace hopfcyc

#endif // HOPFCYC_SPARSE_HPP
