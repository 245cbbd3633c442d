#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace vfilt {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;

/// Sparse vector over a fixed ordered index set.
///
/// Entries are kept sorted by index and zero coefficients are never stored,
/// so two vectors are equal iff their entry lists are equal.
class SparseVector {
public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;

  static SparseVector unit(std::size_t index, const Scalar& value = 1);

  /// Builds a vector from unsorted entries; repeated indices are summed.
  static SparseVector from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  std::size_t leading_index() const { return entries_.front().first; }
  const Scalar& leading_value() const { return entries_.front().second; }

  Scalar coefficient(std::size_t index) const;

  void add(std::size_t index, const Scalar& value);

  /// this += alpha * x
  void axpy(const Scalar& alpha, const SparseVector& x);

  SparseVector& operator*=(const Scalar& alpha);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
  std::vector<Entry> entries_;
};

/// Reduced row-echelon basis of a subspace.
///
/// Rows are sorted by pivot, every pivot entry is 1, and every pivot column is
/// zero in all other rows. Pivots are the first nonzero index of each row.
class RowBasis {
public:
  RowBasis() = default;

  std::size_t rank() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  std::vector<std::size_t> pivots() const;

  /// Residual of v after elimination against the rows. The residual is zero
  /// iff v lies in the span, and it has no entries on pivot columns.
  SparseVector reduce(SparseVector v) const;

  /// Adds v to the span, keeping the echelon form. Returns true iff the rank
  /// grew.
  bool insert(const SparseVector& v);

  friend bool operator==(const RowBasis&, const RowBasis&) = default;

private:
  std::vector<SparseVector> rows_;
};

RowBasis row_reduce(std::span<const SparseVector> vectors);

bool contains(const RowBasis& basis, const SparseVector& v);

bool subspace_equal(const RowBasis& a, const RowBasis& b);

/// True iff span(a) is contained in span(b).
bool is_subspace(const RowBasis& a, const RowBasis& b);

/// Echelon basis of span(a) + span(b).
RowBasis span_sum(const RowBasis& a, const RowBasis& b);

/// ambient_dim - rank(sub). Throws std::logic_error when the rank exceeds the
/// ambient dimension, which can only come from an indexing bug upstream.
std::size_t quotient_dim(std::size_t ambient_dim, const RowBasis& sub);

}  // namespace vfilt
