#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace linarr {

template <class Field>
using Vec = std::vector<typename Field::Element>;

/// Row space kept in fully reduced row echelon form: every stored row has a
/// pivot column where all other rows vanish. Columns are ordered by
/// decreasing monomial, so a row's pivot is its leading monomial.
template <class Field>
class Echelon {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Echelon(const Field& field, std::size_t columns)
      : field_(&field), columns_(columns), pivot_row_(columns, npos) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }
  const Field& field() const { return *field_; }

  bool is_pivot(std::size_t col) const { return pivot_row_[col] != npos; }
  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < columns_; ++c) {
      if (is_pivot(c)) out.push_back(c);
    }
    return out;
  }

  /// Reduces v modulo the row space; returns its first nonzero column or npos.
  std::size_t reduce(Vec<Field>& v) const {
    std::size_t lead = npos;
    for (std::size_t c = 0; c < columns_; ++c) {
      if (field_->is_zero(v[c])) continue;
      const std::size_t r = pivot_row_[c];
      if (r == npos) {
        if (lead == npos) lead = c;
        continue;
      }
      field_->eliminate(v, rows_[r], c);
    }
    return lead;
  }

  bool contains(Vec<Field> v) const { return reduce(v) == npos; }

  /// Adds v to the row space. Returns false (and leaves the space unchanged)
  /// when v is already in it.
  bool insert(Vec<Field> v) {
    const std::size_t c = reduce(v);
    if (c == npos) return false;
    field_->normalize_pivot(v, c);
    for (auto& row : rows_) {
      if (!field_->is_zero(row[c])) field_->eliminate(row, v, c);
    }
    pivot_row_[c] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
  }

  /// Canonical basis: rows scaled to pivot 1, sorted by pivot column.
  std::vector<Vec<Field>> reduced_rows() const {
    std::vector<Vec<Field>> out;
    out.reserve(rows_.size());
    for (std::size_t c = 0; c < columns_; ++c) {
      if (pivot_row_[c] == npos) continue;
      out.push_back(scaled(rows_[pivot_row_[c]], c));
    }
    return out;
  }

  /// Basis of {w : row . w = 0 for every row}: one vector per free column f,
  /// with w[f] = 1 and zeros at the other free columns.
  std::vector<Vec<Field>> nullspace() const {
    std::vector<Vec<Field>> normalized(rows_.size());
    std::vector<std::size_t> pivot_of(rows_.size());
    for (std::size_t c = 0; c < columns_; ++c) {
      if (pivot_row_[c] == npos) continue;
      normalized[pivot_row_[c]] = scaled(rows_[pivot_row_[c]], c);
      pivot_of[pivot_row_[c]] = c;
    }
    std::vector<Vec<Field>> basis;
    for (std::size_t f = 0; f < columns_; ++f) {
      if (pivot_row_[f] != npos) continue;
      Vec<Field> w(columns_, field_->zero());
      w[f] = field_->one();
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!field_->is_zero(normalized[r][f])) w[pivot_of[r]] = field_->neg(normalized[r][f]);
      }
      basis.push_back(std::move(w));
    }
    return basis;
  }

 private:
  Vec<Field> scaled(const Vec<Field>& row, std::size_t c) const {
    Vec<Field> out = row;
    const auto inv = field_->inv(row[c]);
    for (auto& a : out) {
      if (!field_->is_zero(a)) a = field_->mul(a, inv);
    }
    return out;
  }

  const Field* field_;
  std::size_t columns_;
  std::vector<std::size_t> pivot_row_;
  std::vector<Vec<Field>> rows_;
};

}  // namespace linarr
