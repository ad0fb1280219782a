#pragma once

// Element-level kernels shared by the dense algorithms. Each field gets an
// ops struct; algorithms are templates over it and dispatch once per call.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "fig/linalg.hpp"

namespace fig::detail {

struct ModP {
  using T = std::uint32_t;
  std::uint32_t p;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T mul(T a, T b) const {
    return static_cast<T>(static_cast<std::uint64_t>(a) * b % p);
  }
  T inv(T a) const {
    std::uint64_t base = a, result = 1;
    std::uint32_t e = p - 2;
    while (e) {
      if (e & 1)
        result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<T>(result);
  }
  /// y += c·x over n entries.
  void axpy(T* y, const T* x, T c, std::size_t n) const {
    if (c == 0)
      return;
    if (p < (1u << 16)) {
      for (std::size_t j = 0; j < n; ++j)
        y[j] = (y[j] + c * x[j]) % p;
    } else {
      for (std::size_t j = 0; j < n; ++j)
        y[j] = static_cast<T>((y[j] + static_cast<std::uint64_t>(c) * x[j]) % p);
    }
  }
  void scale(T* x, T c, std::size_t n) const {
    for (std::size_t j = 0; j < n; ++j)
      x[j] = mul(x[j], c);
  }

  static std::vector<T>& data(Matrix& m) { return m.residues(); }
  static const std::vector<T>& data(const Matrix& m) { return m.residues(); }
};

struct Rat {
  using T = mpq_class;

  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  void axpy(T* y, const T* x, const T& c, std::size_t n) const {
    if (sgn(c) == 0)
      return;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(x[j]) != 0)
        y[j] += c * x[j];
  }
  void scale(T* x, const T& c, std::size_t n) const {
    for (std::size_t j = 0; j < n; ++j)
      x[j] *= c;
  }

  static std::vector<T>& data(Matrix& m) { return m.rationals(); }
  static const std::vector<T>& data(const Matrix& m) { return m.rationals(); }
};

template <class Fn>
decltype(auto) with_ops(const Field& field, Fn&& fn) {
  if (field.is_prime())
    return fn(ModP{field.characteristic()});
  return fn(Rat{});
}

/// In-place Gaussian elimination of a row-major rows×cols block. Returns the
/// pivot columns; with `reduced` the result is the reduced echelon form.
template <class Ops>
std::vector<std::size_t> eliminate(const Ops& ops, typename Ops::T* a, std::size_t rows,
                                   std::size_t cols, bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.is_zero(a[i * cols + c])) {
        found = i;
        break;
      }
    if (found == rows)
      continue;
    if (found != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(a[found * cols + j], a[r * cols + j]);
    typename Ops::T* pivot_row = a + r * cols;
    ops.scale(pivot_row + c, ops.inv(pivot_row[c]), cols - c);
    for (std::size_t i = reduced ? 0 : r + 1; i < rows; ++i) {
      if (i == r)
        continue;
      typename Ops::T* row = a + i * cols;
      if (!ops.is_zero(row[c])) {
        auto f = ops.neg(row[c]);
        ops.axpy(row + c, pivot_row + c, f, cols - c);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Compressed sparse rows, used to apply operators that are mostly
/// permutation-like (free modules) without paying for a dense product.
template <class Ops>
struct Csr {
  std::size_t rows = 0, cols = 0;
  std::vector<std::size_t> start;
  std::vector<std::size_t> index;
  std::vector<typename Ops::T> value;

  Csr(const Ops& ops, const Matrix& m) : rows(m.rows()), cols(m.cols()) {
    const auto& d = Ops::data(m);
    start.reserve(rows + 1);
    start.push_back(0);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j)
        if (!ops.is_zero(d[i * cols + j])) {
          index.push_back(j);
          value.push_back(d[i * cols + j]);
        }
      start.push_back(index.size());
    }
  }

  void apply(const Ops& ops, const typename Ops::T* x, typename Ops::T* y) const {
    for (std::size_t i = 0; i < rows; ++i) {
      typename Ops::T acc = ops.zero();
      for (std::size_t k = start[i]; k < start[i + 1]; ++k)
        acc = ops.add(acc, ops.mul(value[k], x[index[k]]));
      y[i] = acc;
    }
  }
};

/// Reduced echelon basis grown one vector at a time.
template <class Ops>
class IncrementalBasis {
 public:
  using T = typename Ops::T;

  IncrementalBasis(const Ops& ops, std::size_t dim) : ops_(ops), dim_(dim) {}

  std::size_t size() const { return rows_.size(); }

  /// Reduces v in place; if it is new, normalizes it, inserts it and returns true.
  bool insert(std::vector<T>& v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::size_t c = pivots_[k];
      if (!ops_.is_zero(v[c]))
        ops_.axpy(v.data() + c, rows_[k].data() + c, ops_.neg(v[c]), dim_ - c);
    }
    std::size_t c = 0;
    while (c < dim_ && ops_.is_zero(v[c]))
      ++c;
    if (c == dim_)
      return false;
    ops_.scale(v.data() + c, ops_.inv(v[c]), dim_ - c);
    for (auto& row : rows_)
      if (!ops_.is_zero(row[c]))
        ops_.axpy(row.data() + c, v.data() + c, ops_.neg(row[c]), dim_ - c);
    rows_.push_back(v);
    pivots_.push_back(c);
    return true;
  }

  /// Rows sorted by pivot: the reduced echelon form.
  void export_to(Matrix& out, std::vector<std::size_t>& pivots) const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    auto& d = Ops::data(out);
    pivots.clear();
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::copy(rows_[order[i]].begin(), rows_[order[i]].end(), d.begin() + i * dim_);
      pivots.push_back(pivots_[order[i]]);
    }
  }

 private:
  Ops ops_;
  std::size_t dim_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace fig::detail
