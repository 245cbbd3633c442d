#include "vfilt/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vfilt {

SparseVector SparseVector::unit(std::size_t index, const Scalar& value) {
  SparseVector v;
  if (sgn(value) != 0) v.entries_.emplace_back(index, value);
  return v;
}

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector v;
  for (auto& [index, value] : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == index) {
      v.entries_.back().second += value;
      if (sgn(v.entries_.back().second) == 0) v.entries_.pop_back();
    } else if (sgn(value) != 0) {
      v.entries_.emplace_back(index, std::move(value));
    }
  }
  return v;
}

Scalar SparseVector::coefficient(std::size_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVector::add(std::size_t index, const Scalar& value) {
  if (sgn(value) == 0) return;
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    it->second += value;
    if (sgn(it->second) == 0) entries_.erase(it);
  } else {
    entries_.insert(it, Entry{index, value});
  }
}

void SparseVector::axpy(const Scalar& alpha, const SparseVector& x) {
  if (sgn(alpha) == 0 || x.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + x.entries_.size());
  auto a = entries_.begin();
  auto b = x.entries_.begin();
  while (a != entries_.end() || b != x.entries_.end()) {
    if (b == x.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, alpha * b->second);
      ++b;
    } else {
      Scalar sum = a->second + alpha * b->second;
      if (sgn(sum) != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

SparseVector& SparseVector::operator*=(const Scalar& alpha) {
  if (sgn(alpha) == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= alpha;
  return *this;
}

std::vector<std::size_t> RowBasis::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.leading_index());
  return out;
}

SparseVector RowBasis::reduce(SparseVector v) const {
  if (rows_.empty() || v.empty()) return v;
  // Pivot columns are zero in every other row, so the coefficients of v on
  // pivot columns can be read off before any subtraction.
  std::vector<std::pair<const SparseVector*, Scalar>> hits;
  auto row = rows_.begin();
  for (const auto& [index, value] : v.entries()) {
    row = std::lower_bound(row, rows_.end(), index,
                           [](const SparseVector& r, std::size_t i) {
                             return r.leading_index() < i;
                           });
    if (row == rows_.end()) break;
    if (row->leading_index() == index) hits.emplace_back(&*row, value);
  }
  for (const auto& [r, c] : hits) v.axpy(-c, *r);
  return v;
}

bool RowBasis::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  r *= Scalar(1) / r.leading_value();
  const std::size_t pivot = r.leading_index();
  for (auto& row : rows_) {
    Scalar c = row.coefficient(pivot);
    if (sgn(c) != 0) row.axpy(-c, r);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const SparseVector& x, std::size_t i) {
                                return x.leading_index() < i;
                              });
  rows_.insert(pos, std::move(r));
  return true;
}

RowBasis row_reduce(std::span<const SparseVector> vectors) {
  RowBasis basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis;
}

bool contains(const RowBasis& basis, const SparseVector& v) {
  return basis.reduce(v).empty();
}

bool subspace_equal(const RowBasis& a, const RowBasis& b) { return a == b; }

bool is_subspace(const RowBasis& a, const RowBasis& b) {
  if (a.rank() > b.rank()) return false;
  return std::all_of(a.rows().begin(), a.rows().end(),
                     [&](const SparseVector& r) { return contains(b, r); });
}

RowBasis span_sum(const RowBasis& a, const RowBasis& b) {
  RowBasis out = a.rank() >= b.rank() ? a : b;
  const RowBasis& other = a.rank() >= b.rank() ? b : a;
  for (const auto& r : other.rows()) out.insert(r);
  return out;
}

std::size_t quotient_dim(std::size_t ambient_dim, const RowBasis& sub) {
  if (sub.rank() > ambient_dim) {
    throw std::logic_error("subspace rank " + std::to_string(sub.rank()) +
                           " exceeds ambient dimension " +
                           std::to_string(ambient_dim));
  }
  return ambient_dim - sub.rank();
}

}  // namespace vfilt
