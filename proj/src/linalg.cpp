#include "fig/linalg.hpp"

#include <algorithm>
#include <string>

#include "detail/field_ops.hpp"

namespace fig {

using detail::ModP;
using detail::Rat;
using detail::with_ops;

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_prime())
    mod_.assign(rows * cols, 0);
  else
    rat_.assign(rows * cols, mpq_class(0));
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, 1L);
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                         const std::vector<long>& entries) {
  if (entries.size() != rows * cols)
    throw AmbientMismatch("from_ints: expected " + std::to_string(rows * cols) + " entries");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, entries[i * cols + j]);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (field_.is_prime())
    return Scalar(static_cast<unsigned long>(mod_[r * cols_ + c]));
  return rat_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, long value) {
  if (field_.is_prime()) {
    long p = static_cast<long>(field_.characteristic());
    mod_[r * cols_ + c] = static_cast<std::uint32_t>(((value % p) + p) % p);
  } else {
    rat_[r * cols_ + c] = value;
  }
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  Scalar v = field_.normalize(value);
  if (field_.is_prime())
    mod_[r * cols_ + c] = static_cast<std::uint32_t>(v.get_num().get_ui());
  else
    rat_[r * cols_ + c] = v;
}

bool Matrix::is_zero_at(std::size_t r, std::size_t c) const {
  return field_.is_prime() ? mod_[r * cols_ + c] == 0 : sgn(rat_[r * cols_ + c]) == 0;
}

bool Matrix::is_zero() const { return nonzeros() == 0; }

std::size_t Matrix::nonzeros() const {
  if (field_.is_prime())
    return static_cast<std::size_t>(
        std::count_if(mod_.begin(), mod_.end(), [](std::uint32_t x) { return x != 0; }));
  return static_cast<std::size_t>(
      std::count_if(rat_.begin(), rat_.end(), [](const mpq_class& x) { return sgn(x) != 0; }));
}

void Matrix::require_same_shape(const Matrix& other, const char* what) const {
  if (!(field_ == other.field_) || rows_ != other.rows_ || cols_ != other.cols_)
    throw AmbientMismatch(std::string(what) + ": shape or field mismatch");
}

namespace {

Matrix multiply_modp(const ModP& ops, const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows(), b.cols());
  const auto& x = a.residues();
  const auto& y = b.residues();
  auto& z = out.residues();
  const std::size_t n = b.cols(), inner = a.cols();
  const bool small = ops.p < (1u << 16);
  std::vector<std::uint64_t> acc(n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < inner; ++k) {
      std::uint64_t f = x[i * inner + k];
      if (f == 0)
        continue;
      const std::uint32_t* row = y.data() + k * n;
      if (small) {
        for (std::size_t j = 0; j < n; ++j)
          acc[j] += f * row[j];
      } else {
        for (std::size_t j = 0; j < n; ++j)
          acc[j] = (acc[j] + f * row[j]) % ops.p;
      }
    }
    for (std::size_t j = 0; j < n; ++j)
      z[i * n + j] = static_cast<std::uint32_t>(acc[j] % ops.p);
  }
  return out;
}

Matrix multiply_rat(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows(), b.cols());
  const auto& x = a.rationals();
  const auto& y = b.rationals();
  auto& z = out.rationals();
  const std::size_t n = b.cols(), inner = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      const mpq_class& f = x[i * inner + k];
      if (sgn(f) == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(y[k * n + j]) != 0)
          z[i * n + j] += f * y[k * n + j];
    }
  return out;
}

}  // namespace

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (!(field_ == rhs.field_) || cols_ != rhs.rows_)
    throw AmbientMismatch("multiply: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                          " by " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  if (field_.is_prime())
    return multiply_modp(ModP{field_.characteristic()}, *this, rhs);
  return multiply_rat(*this, rhs);
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_shape(rhs, "add");
  Matrix out = *this;
  with_ops(field_, [&](const auto& ops) {
    auto& z = std::decay_t<decltype(ops)>::data(out);
    const auto& y = std::decay_t<decltype(ops)>::data(rhs);
    for (std::size_t i = 0; i < z.size(); ++i)
      z[i] = ops.add(z[i], y[i]);
  });
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const {
  Matrix out = *this;
  with_ops(field_, [&](const auto& ops) {
    for (auto& v : std::decay_t<decltype(ops)>::data(out))
      v = ops.neg(v);
  });
  return out;
}

Matrix Matrix::scaled(const Scalar& factor) const {
  Matrix out = *this;
  Scalar f = field_.normalize(factor);
  if (field_.is_prime()) {
    ModP ops{field_.characteristic()};
    ops.scale(out.mod_.data(), static_cast<std::uint32_t>(f.get_num().get_ui()), out.mod_.size());
  } else {
    Rat{}.scale(out.rat_.data(), f, out.rat_.size());
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        out.mod_[j * rows_ + i] = mod_[i * cols_ + j];
      else
        out.rat_[j * rows_ + i] = rat_[i * cols_ + j];
    }
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& which) const {
  Matrix out(field_, which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        out.mod_[i * cols_ + j] = mod_[which[i] * cols_ + j];
      else
        out.rat_[i * cols_ + j] = rat_[which[i] * cols_ + j];
    }
  return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& which) const {
  Matrix out(field_, rows_, which.size());
  const std::size_t n = which.size();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (field_.is_prime())
        out.mod_[i * n + j] = mod_[i * cols_ + which[j]];
      else
        out.rat_[i * n + j] = rat_[i * cols_ + which[j]];
    }
  return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (!(top.field_ == bottom.field_) || top.cols_ != bottom.cols_)
    throw AmbientMismatch("vstack: column mismatch");
  Matrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
  if (top.field_.is_prime()) {
    std::copy(top.mod_.begin(), top.mod_.end(), out.mod_.begin());
    std::copy(bottom.mod_.begin(), bottom.mod_.end(), out.mod_.begin() + top.mod_.size());
  } else {
    std::copy(top.rat_.begin(), top.rat_.end(), out.rat_.begin());
    std::copy(bottom.rat_.begin(), bottom.rat_.end(), out.rat_.begin() + top.rat_.size());
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  return vstack(left.transpose(), right.transpose()).transpose();
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_))
    throw AmbientMismatch("block_diag: field mismatch");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  const std::size_t n = out.cols_;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a.field_.is_prime())
        out.mod_[i * n + j] = a.mod_[i * a.cols_ + j];
      else
        out.rat_[i * n + j] = a.rat_[i * a.cols_ + j];
    }
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::size_t at = (a.rows_ + i) * n + a.cols_ + j;
      if (a.field_.is_prime())
        out.mod_[at] = b.mod_[i * b.cols_ + j];
      else
        out.rat_[at] = b.rat_[i * b.cols_ + j];
    }
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         mod_ == other.mod_ && rat_ == other.rat_;
}

// ---------------------------------------------------------------------------

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  e.pivots = with_ops(m.field(), [&](const auto& ops) {
    auto& d = std::decay_t<decltype(ops)>::data(e.reduced);
    return detail::eliminate(ops, d.data(), m.rows(), m.cols(), true);
  });
  return e;
}

namespace {

// GF(2) rank on packed rows; the dominant cost in homology computations.
std::size_t rank_gf2(const Matrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::uint64_t> bits(m.rows() * words, 0);
  const auto& d = m.residues();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (d[i * m.cols() + j])
        bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t found = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (bits[i * words + w] & mask) {
        found = i;
        break;
      }
    if (found == m.rows())
      continue;
    if (found != r)
      std::swap_ranges(bits.begin() + found * words + w, bits.begin() + (found + 1) * words,
                       bits.begin() + r * words + w);
    const std::uint64_t* pivot = bits.data() + r * words;
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      std::uint64_t* row = bits.data() + i * words;
      if (row[w] & mask)
        for (std::size_t k = w; k < words; ++k)
          row[k] ^= pivot[k];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  if (m.field().is_prime() && m.field().characteristic() == 2)
    return rank_gf2(m);
  // Eliminate along the shorter side.
  Matrix work = m.rows() <= m.cols() ? m : m.transpose();
  return with_ops(m.field(), [&](const auto& ops) {
    auto& d = std::decay_t<decltype(ops)>::data(work);
    return detail::eliminate(ops, d.data(), work.rows(), work.cols(), false).size();
  });
}

// ---------------------------------------------------------------------------

SubspaceBasis::SubspaceBasis(const Field& field, std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(field, 0, ambient_dim) {}

SubspaceBasis SubspaceBasis::full(const Field& field, std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i)
    piv[i] = i;
  return SubspaceBasis(ambient_dim, Matrix::identity(field, ambient_dim), std::move(piv));
}

SubspaceBasis SubspaceBasis::span_rows(const Matrix& rows) {
  Echelon e = rref(rows);
  std::vector<std::size_t> keep(e.rank());
  for (std::size_t i = 0; i < keep.size(); ++i)
    keep[i] = i;
  return SubspaceBasis(rows.cols(), e.reduced.select_rows(keep), std::move(e.pivots));
}

SubspaceBasis SubspaceBasis::span_columns(const Matrix& columns) {
  return span_rows(columns.transpose());
}

std::vector<std::size_t> SubspaceBasis::complement() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c)
      ++k;
    else
      out.push_back(c);
  }
  return out;
}

Matrix SubspaceBasis::reduce(const Matrix& columns) const {
  if (columns.rows() != ambient_)
    throw AmbientMismatch("reduce: vectors of length " + std::to_string(columns.rows()) +
                          " in ambient " + std::to_string(ambient_));
  if (pivots_.empty())
    return columns;
  // Rows of the echelon basis are unit vectors on the pivot columns, so
  // subtracting basisᵀ·(pivot entries) clears every pivot entry at once.
  return columns - basis_.transpose() * columns.select_rows(pivots_);
}

bool SubspaceBasis::contains(const Matrix& columns) const { return reduce(columns).is_zero(); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_)
    throw AmbientMismatch("contains: ambient mismatch");
  return contains(other.columns());
}

Matrix SubspaceBasis::quotient_projection() const {
  const auto comp = complement();
  std::vector<std::size_t> slot(ambient_, 0);
  for (std::size_t i = 0; i < comp.size(); ++i)
    slot[comp[i]] = i;
  Matrix q(field(), comp.size(), ambient_);
  for (std::size_t i = 0; i < comp.size(); ++i)
    q.set(i, comp[i], 1L);
  // e_pivot ≡ e_pivot − row = −(row restricted to the complement).
  for (std::size_t r = 0; r < pivots_.size(); ++r)
    for (std::size_t c : comp)
      if (!basis_.is_zero_at(r, c))
        q.set(slot[c], pivots_[r], -basis_.at(r, c));
  return q;
}

Matrix SubspaceBasis::complement_lift() const {
  const auto comp = complement();
  Matrix l(field(), ambient_, comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i)
    l.set(comp[i], i, 1L);
  return l;
}

bool SubspaceBasis::operator==(const SubspaceBasis& other) const {
  return ambient_ == other.ambient_ && pivots_ == other.pivots_ && basis_ == other.basis_;
}

// ---------------------------------------------------------------------------

SubspaceBasis kernel_basis(const Matrix& m) {
  // Eliminating with the columns reversed makes the free-column kernel vectors
  // come out already reduced: each has a 1 at its free column and every other
  // entry at a later pivot column.
  const std::size_t n = m.cols();
  std::vector<std::size_t> reversed(n);
  for (std::size_t c = 0; c < n; ++c)
    reversed[c] = n - 1 - c;
  Echelon e = rref(m.select_cols(reversed));
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots)
    is_pivot[n - 1 - c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c])
      free_cols.push_back(c);
  Matrix vectors(m.field(), free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    vectors.set(k, f, 1L);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.reduced.is_zero_at(r, n - 1 - f))
        vectors.set(k, n - 1 - e.pivots[r], -e.reduced.at(r, n - 1 - f));
  }
  return SubspaceBasis(n, std::move(vectors), std::move(free_cols));
}

SubspaceBasis image_basis(const Matrix& m) { return SubspaceBasis::span_columns(m); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw AmbientMismatch("solve: row mismatch");
  Echelon e = rref(Matrix::hstack(a, b));
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t c = e.pivots[r];
    if (c >= a.cols())
      return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.set(c, j, e.reduced.at(r, a.cols() + j));
  }
  return x;
}

SubspaceBasis saturate_subspace(const SubspaceBasis& seed, const std::vector<Matrix>& operators) {
  const std::size_t d = seed.ambient_dim();
  for (const auto& op : operators)
    if (op.rows() != d || op.cols() != d)
      throw AmbientMismatch("saturate_subspace: operator is not " + std::to_string(d) + "-square");
  if (seed.is_zero() || operators.empty())
    return seed;
  return with_ops(seed.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    using T = typename Ops::T;
    std::vector<detail::Csr<Ops>> sparse;
    for (const auto& op : operators)
      sparse.emplace_back(ops, op);
    detail::IncrementalBasis<Ops> basis(ops, d);
    std::vector<std::vector<T>> queue;
    const auto& seed_rows = Ops::data(seed.basis());
    for (std::size_t i = 0; i < seed.dim(); ++i) {
      std::vector<T> v(seed_rows.begin() + i * d, seed_rows.begin() + (i + 1) * d);
      queue.push_back(v);
      basis.insert(v);
    }
    std::vector<T> image(d);
    while (!queue.empty() && basis.size() < d) {
      std::vector<T> v = std::move(queue.back());
      queue.pop_back();
      for (const auto& op : sparse) {
        op.apply(ops, v.data(), image.data());
        std::vector<T> w = image;
        if (basis.insert(w))
          queue.push_back(std::move(w));
      }
    }
    Matrix rows(seed.field(), basis.size(), d);
    std::vector<std::size_t> pivots;
    basis.export_to(rows, pivots);
    return SubspaceBasis::span_rows(rows);
  });
}

SubspaceBasis intersect_subspaces(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw AmbientMismatch("intersect_subspaces: ambient " + std::to_string(a.ambient_dim()) +
                          " vs " + std::to_string(b.ambient_dim()));
  if (a.is_zero() || b.is_zero())
    return SubspaceBasis(a.field(), a.ambient_dim());
  Matrix cols = a.columns();
  SubspaceBasis coeffs = kernel_basis(b.reduce(cols));
  return SubspaceBasis::span_columns(cols * coeffs.columns());
}

SubspaceBasis sum_subspaces(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw AmbientMismatch("sum_subspaces: ambient mismatch");
  return SubspaceBasis::span_rows(Matrix::vstack(a.basis(), b.basis()));
}

SubspaceBasis preimage(const Matrix& m, const SubspaceBasis& target) {
  if (m.rows() != target.ambient_dim())
    throw AmbientMismatch("preimage: codomain mismatch");
  return kernel_basis(target.reduce(m));
}

SubspaceBasis image_of(const Matrix& m, const SubspaceBasis& source) {
  if (m.cols() != source.ambient_dim())
    throw AmbientMismatch("image_of: domain mismatch");
  return SubspaceBasis::span_columns(m * source.columns());
}

}  // namespace fig
