#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lcass/errors.hpp"
#include "lcass/freemod/module_vector.hpp"

namespace lcass {

/// Dense matrix over R0. Indices in the public interface are 1-based;
/// column j is the image of e_j.
template <Coefficient C>
class PolyMatrix {
 public:
  using Poly = Polynomial<C>;
  using Vector = ModuleVector<C>;

  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw ArgumentError("matrix dimensions must be positive");
  }

  static PolyMatrix identity(std::size_t n) { return scaled_identity(n, Poly(1)); }

  static PolyMatrix scaled_identity(std::size_t n, const Poly& scale) {
    PolyMatrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) = scale;
    return m;
  }

  /// Row-major nested initializer, e.g. {{Z, Y, 0}, {0, Z, Y}}.
  static PolyMatrix from_rows(const std::vector<std::vector<Poly>>& rows) {
    if (rows.empty() || rows.front().empty()) throw ArgumentError("empty matrix");
    PolyMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw ShapeError("ragged row in matrix literal");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i + 1, j + 1) = rows[i][j];
    }
    return m;
  }

  static PolyMatrix from_columns(std::size_t rank, const std::vector<Vector>& cols) {
    if (cols.empty()) throw ArgumentError("from_columns: no columns");
    PolyMatrix m(rank, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].rank() != rank) throw ShapeError("from_columns: column rank mismatch");
      const auto entries = cols[j].entries();
      for (std::size_t i = 0; i < rank; ++i) m(i + 1, j + 1) = entries[i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }

  Vector column(std::size_t j) const {
    if (j < 1 || j > cols_) throw ShapeError("column index out of range");
    std::vector<Poly> entries(rows_);
    for (std::size_t i = 1; i <= rows_; ++i) entries[i - 1] = (*this)(i, j);
    return Vector::from_entries(entries);
  }

  std::vector<Vector> columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t j = 1; j <= cols_; ++j) out.push_back(column(j));
    return out;
  }

  bool involves_x() const {
    for (const auto& p : data_) {
      if (p.involves_x()) return true;
    }
    return false;
  }

  bool is_zero() const {
    for (const auto& p : data_) {
      if (!p.is_zero()) return false;
    }
    return true;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw ShapeError("mat_mul: inner dimensions " + std::to_string(a.cols_) + " and " +
                       std::to_string(b.rows_) + " differ");
    }
    PolyMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 1; i <= a.rows_; ++i) {
      for (std::size_t l = 1; l <= a.cols_; ++l) {
        const Poly& ail = a(i, l);
        if (ail.is_zero()) continue;
        for (std::size_t j = 1; j <= b.cols_; ++j) {
          if (!b(l, j).is_zero()) out(i, j) += ail * b(l, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      throw ShapeError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                       ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return (i - 1) * cols_ + (j - 1);
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> data_;
};

template <Coefficient C>
PolyMatrix<C> mat_mul(const PolyMatrix<C>& a, const PolyMatrix<C>& b) {
  return a * b;
}

/// C * v
template <Coefficient C>
ModuleVector<C> apply(const PolyMatrix<C>& m, const ModuleVector<C>& v) {
  if (v.rank() != m.cols()) {
    throw ShapeError("apply: vector rank " + std::to_string(v.rank()) + " vs " +
                     std::to_string(m.cols()) + " columns");
  }
  std::vector<Polynomial<C>> out(m.rows());
  const auto entries = v.entries();
  for (std::size_t j = 1; j <= m.cols(); ++j) {
    if (entries[j - 1].is_zero()) continue;
    for (std::size_t i = 1; i <= m.rows(); ++i) {
      if (!m(i, j).is_zero()) out[i - 1] += m(i, j) * entries[j - 1];
    }
  }
  return ModuleVector<C>::from_entries(out);
}

/// A_n: the n x (n+1) matrix with Z on the diagonal and Y on the
/// superdiagonal.
template <Coefficient C>
PolyMatrix<C> build_A(std::size_t n) {
  if (n == 0) throw ArgumentError("build_A: n must be at least 1");
  PolyMatrix<C> a(n, n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    a(i, i) = Polynomial<C>::Z();
    a(i, i + 1) = Polynomial<C>::Y();
  }
  return a;
}

// ---------------------------------------------------------------------------
// Block assembly

/// A zero block. Missing dimensions are inferred from the other blocks in the
/// same block row / block column (a "slot").
struct ZeroBlock {
  std::optional<std::size_t> rows;
  std::optional<std::size_t> cols;
};

template <Coefficient C>
struct ScaledIdentityBlock {
  std::size_t n;
  Polynomial<C> scale;
};

template <Coefficient C>
using Block = std::variant<PolyMatrix<C>, ZeroBlock, ScaledIdentityBlock<C>>;

template <Coefficient C>
Block<C> x_identity(std::size_t n) {
  return ScaledIdentityBlock<C>{n, Polynomial<C>::X()};
}

template <Coefficient C>
Block<C> identity_block(std::size_t n) {
  return ScaledIdentityBlock<C>{n, Polynomial<C>(1)};
}

inline ZeroBlock zero_block(std::size_t rows, std::size_t cols) { return {rows, cols}; }
inline ZeroBlock slot() { return {}; }

template <Coefficient C>
PolyMatrix<C> block_assemble(const std::vector<std::vector<Block<C>>>& layout) {
  if (layout.empty() || layout.front().empty()) throw ShapeError("block_assemble: empty layout");
  const std::size_t br = layout.size();
  const std::size_t bc = layout.front().size();
  std::vector<std::optional<std::size_t>> heights(br), widths(bc);

  auto fix = [](std::optional<std::size_t>& slot_dim, std::size_t value, const char* what) {
    if (slot_dim && *slot_dim != value) {
      throw ShapeError(std::string("block_assemble: inconsistent block ") + what);
    }
    slot_dim = value;
  };

  for (std::size_t i = 0; i < br; ++i) {
    if (layout[i].size() != bc) throw ShapeError("block_assemble: ragged block row");
    for (std::size_t j = 0; j < bc; ++j) {
      std::visit(
          [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, PolyMatrix<C>>) {
              fix(heights[i], b.rows(), "height");
              fix(widths[j], b.cols(), "width");
            } else if constexpr (std::is_same_v<T, ZeroBlock>) {
              if (b.rows) fix(heights[i], *b.rows, "height");
              if (b.cols) fix(widths[j], *b.cols, "width");
            } else {
              fix(heights[i], b.n, "height");
              fix(widths[j], b.n, "width");
            }
          },
          layout[i][j]);
    }
  }

  std::vector<std::size_t> row_off(br + 1, 0), col_off(bc + 1, 0);
  for (std::size_t i = 0; i < br; ++i) {
    if (!heights[i]) throw ShapeError("block_assemble: cannot infer height of block row");
    row_off[i + 1] = row_off[i] + *heights[i];
  }
  for (std::size_t j = 0; j < bc; ++j) {
    if (!widths[j]) throw ShapeError("block_assemble: cannot infer width of block column");
    col_off[j + 1] = col_off[j] + *widths[j];
  }

  PolyMatrix<C> out(row_off[br], col_off[bc]);
  for (std::size_t i = 0; i < br; ++i) {
    for (std::size_t j = 0; j < bc; ++j) {
      std::visit(
          [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, PolyMatrix<C>>) {
              for (std::size_t r = 1; r <= b.rows(); ++r) {
                for (std::size_t c = 1; c <= b.cols(); ++c) {
                  out(row_off[i] + r, col_off[j] + c) = b(r, c);
                }
              }
            } else if constexpr (std::is_same_v<T, ScaledIdentityBlock<C>>) {
              for (std::size_t r = 1; r <= b.n; ++r) out(row_off[i] + r, col_off[j] + r) = b.scale;
            }
          },
          layout[i][j]);
    }
  }
  return out;
}

/// Block-diagonal matrix from the given blocks.
template <Coefficient C>
PolyMatrix<C> block_diagonal(const std::vector<PolyMatrix<C>>& blocks) {
  std::vector<std::vector<Block<C>>> layout;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<Block<C>> row;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i == j) {
        row.emplace_back(blocks[i]);
      } else {
        row.emplace_back(zero_block(blocks[i].rows(), blocks[j].cols()));
      }
    }
    layout.push_back(std::move(row));
  }
  return block_assemble<C>(layout);
}

}  // namespace lcass
