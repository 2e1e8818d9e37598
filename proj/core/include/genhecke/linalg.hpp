#pragma once

// Small exact linear algebra over Z and Q. Matrices here are tiny (rank of a
// root datum, at most a few dozen rows), so everything is dense and naive.

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "genhecke/rational.hpp"

namespace genhecke {

using IntVector = boost::container::small_vector<std::int64_t, 4>;

std::int64_t dot(const IntVector& a, const IntVector& b);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Builds from a list of rows; all rows must have equal length.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty = 0);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  IntVector apply(const IntVector& v) const;
  const std::vector<std::int64_t>& data() const { return data_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const IntMatrix& m);
Rational determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const IntMatrix& m);
/// Some solution of m * x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const IntMatrix& m, const std::vector<Rational>& b);

/// Hermite-style Z-basis (nonzero rows of an echelon form) of the lattice
/// spanned by the given integer rows.
std::vector<IntVector> lattice_basis(std::vector<IntVector> rows);

/// Incremental Gaussian elimination for sparse vectors indexed by an ordered
/// key. Used for rank/independence checks of algebra elements.
template <class Key>
class SparseEliminator {
 public:
  using Vector = std::map<Key, Rational>;

  /// Reduces v against the stored pivots; if a nonzero remainder is left it
  /// becomes a new pivot and true is returned (v was independent).
  bool insert(Vector v) {
    reduce(v);
    if (v.empty()) return false;
    auto lead = v.begin()->first;
    Rational inv = 1 / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    pivots_.emplace(lead, std::move(v));
    return true;
  }

  /// True when v lies in the span of the inserted vectors.
  bool in_span(Vector v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  void reduce(Vector& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      Rational factor = it->second;
      Key key = it->first;
      for (const auto& [k, c] : p->second) {
        auto& slot = v[k];
        slot -= factor * c;
        if (slot == 0) v.erase(k);
      }
      it = v.upper_bound(key);
    }
  }

  std::map<Key, Vector> pivots_;
};

}  // namespace genhecke
