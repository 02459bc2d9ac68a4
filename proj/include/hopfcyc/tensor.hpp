#ifndef HOPFCYC_TENSOR_HPP
#define HOPFCYC_TENSOR_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcyc/sparse.hpp"

namespace hopfcyc {

/// Labelled tensor factors with their dimensions; the label order is the basis order
/// (leftmost factor varies slowest).
struct Shape {
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;

  std::size_t size() const { return product(dims); }
  Shape& add(const std::string& label, std::size_t dim)
  {
    labels.push_back(label);
    dims.push_back(dim);
    return *this;
  }
  Shape& add(const std::string& stem, std::size_t count, std::size_t dim, std::size_t first = 0)
  {
    for (std::size_t i = 0; i < count; ++i) add(stem + std::to_string(first + i), dim);
    return *this;
  }
};

/// An element of a tensor product of finite-dimensional spaces, stored as a sum of
/// labelled basis tensors. Structure maps act on named slots, so operator formulas
/// written with Sweedler legs translate slot by slot.
template <class K> class Tensor {
public:
  using Key = std::vector<std::uint16_t>;

  Tensor(Field<K> f, Shape shape) : f_(std::move(f)), shape_(std::move(shape)) {}

  static Tensor basis(const Field<K>& f, const Shape& shape, const std::vector<std::size_t>& digits)
  {
    Tensor t(f, shape);
    Key k(digits.begin(), digits.end());
    t.terms_.emplace(std::move(k), f.one());
    return t;
  }

  const Shape& shape() const { return shape_; }
  const std::map<Key, K>& terms() const { return terms_; }
  const Field<K>& field() const { return f_; }
  bool empty() const { return terms_.empty(); }

  std::size_t position(const std::string& label) const
  {
    auto it = std::find(shape_.labels.begin(), shape_.labels.end(), label);
    if (it == shape_.labels.end()) throw std::logic_error("tensor has no slot '" + label + "'");
    return static_cast<std::size_t>(it - shape_.labels.begin());
  }
  bool has(const std::string& label) const
  {
    return std::find(shape_.labels.begin(), shape_.labels.end(), label) != shape_.labels.end();
  }
  std::size_t dim_of(const std::string& label) const { return shape_.dims[position(label)]; }

  /// A slot label not used before in this tensor.
  std::string fresh(const std::string& stem) { return stem + "~" + std::to_string(counter_++); }

  /// Applies the linear map m: ⊗in -> ⊗out. The new slots take the place of the first
  /// input slot; with no inputs they are inserted at `at` (default: the end).
  Tensor& apply(const SparseMatrix<K>& m, const std::vector<std::string>& in, const std::vector<std::string>& out,
                const std::vector<std::size_t>& out_dims, std::optional<std::size_t> at = std::nullopt)
  {
    std::vector<std::size_t> pos;
    std::size_t in_size = 1;
    for (const auto& l : in) {
      pos.push_back(position(l));
      in_size *= shape_.dims[pos.back()];
    }
    if (in_size != m.cols() || product(out_dims) != m.rows() || out.size() != out_dims.size())
      throw std::logic_error("slot map shape mismatch (" + m.shape() + ")");
    std::vector<char> consumed(shape_.labels.size(), 0);
    for (auto p : pos) consumed[p] = 1;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < shape_.labels.size(); ++i)
      if (!consumed[i]) keep.push_back(i);
    std::size_t insert_at;
    if (!pos.empty())
      insert_at = static_cast<std::size_t>(std::count_if(keep.begin(), keep.end(), [&](std::size_t i) { return i < pos[0]; }));
    else
      insert_at = at ? *at : keep.size();

    Shape next;
    for (std::size_t k = 0; k <= keep.size(); ++k) {
      if (k == insert_at)
        for (std::size_t o = 0; o < out.size(); ++o) next.add(out[o], out_dims[o]);
      if (k < keep.size()) next.add(shape_.labels[keep[k]], shape_.dims[keep[k]]);
    }
    {
      auto sorted = next.labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw std::logic_error("duplicate slot label");
    }

    std::map<Key, K> acc;
    Key key(next.labels.size());
    for (const auto& [k, c] : terms_) {
      std::size_t flat = 0;
      for (auto p : pos) flat = flat * shape_.dims[p] + k[p];
      for (const auto& [row, v] : m.col(flat)) {
        std::size_t r = row;
        for (std::size_t o = out.size(); o-- > 0;) {
          key[insert_at + o] = static_cast<std::uint16_t>(r % out_dims[o]);
          r /= out_dims[o];
        }
        for (std::size_t t = 0; t < keep.size(); ++t) key[t < insert_at ? t : t + out.size()] = k[keep[t]];
        auto [it, inserted] = acc.try_emplace(key, c * v);
        if (!inserted) it->second += c * v;
      }
    }
    std::erase_if(acc, [](const auto& e) { return is_zero(e.second); });
    terms_ = std::move(acc);
    shape_ = std::move(next);
    return *this;
  }

  Tensor& rename(const std::string& from, const std::string& to)
  {
    if (from == to) return *this;
    if (has(to)) throw std::logic_error("slot '" + to + "' already present");
    shape_.labels[position(from)] = to;
    return *this;
  }

  /// Renames all slots positionally.
  Tensor& relabel(const std::vector<std::string>& labels)
  {
    if (labels.size() != shape_.labels.size()) throw std::logic_error("relabel(): slot count mismatch");
    shape_.labels = labels;
    return *this;
  }

  /// Permutes the slots into the given order (which must list every slot once).
  Tensor& order(const std::vector<std::string>& labels)
  {
    if (labels.size() != shape_.labels.size()) throw std::logic_error("order(): slot count mismatch");
    std::vector<std::size_t> perm;
    for (const auto& l : labels) perm.push_back(position(l));
    Shape next;
    for (auto p : perm) next.add(shape_.labels[p], shape_.dims[p]);
    std::map<Key, K> acc;
    for (const auto& [k, c] : terms_) {
      Key nk(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) nk[i] = k[perm[i]];
      acc.emplace(std::move(nk), c);
    }
    terms_ = std::move(acc);
    shape_ = std::move(next);
    return *this;
  }

  Tensor& scale(const K& c)
  {
    if (is_zero(c)) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  /// this += c * other; other is first brought into this slot order.
  Tensor& add(Tensor other, const K& c)
  {
    other.order(shape_.labels);
    if (other.shape_.dims != shape_.dims) throw std::logic_error("add(): dimension mismatch");
    for (const auto& [k, v] : other.terms_) {
      auto [it, inserted] = terms_.try_emplace(k, c * v);
      if (!inserted) it->second += c * v;
    }
    std::erase_if(terms_, [](const auto& e) { return is_zero(e.second); });
    return *this;
  }

  SparseVector<K> flatten() const
  {
    std::vector<std::pair<std::size_t, K>> out;
    for (const auto& [k, c] : terms_) {
      std::size_t flat = 0;
      for (std::size_t i = 0; i < k.size(); ++i) flat = flat * shape_.dims[i] + k[i];
      out.emplace_back(flat, c);
    }
    return collect(std::move(out));
  }

private:
  Field<K> f_;
  Shape shape_;
  std::map<Key, K> terms_;
  std::size_t counter_ = 0;
};

/// Builds the matrix of a slot program: column j is prog applied to the j-th basis tensor
/// of `in`, read back in the slot order of `out`.
template <class K, class Program>
SparseMatrix<K> materialize(const Field<K>& f, const Shape& in, const Shape& out, Program&& prog)
{
  const std::size_t n = in.size();
  SparseMatrix<K> m(out.size(), n);
  for (std::size_t j = 0; j < n; ++j) {
    Tensor<K> t = Tensor<K>::basis(f, in, unflatten(j, in.dims));
    prog(t);
    t.order(out.labels);
    if (t.shape().dims != out.dims) throw std::logic_error("materialize: output dims differ from declared shape");
    m.set_col(j, t.flatten());
  }
  return m;
}

} // namespace hopfcyc

#endif // HOPFCYC_TENSOR_HPP
