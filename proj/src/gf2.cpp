#include "cosys/gf2.hpp"

#include <bit>

#include "cosys/errors.hpp"

namespace cosys {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows, 0), cols_(cols) {
  if (rows > 64 || cols > 64)
    throw Error(ErrorKind::OutOfRange, "Gf2Matrix limited to 64x64");
}

Gf2Matrix Gf2Matrix::from_rows(std::vector<BitRow> rows, std::size_t cols) {
  Gf2Matrix m(rows.size(), cols);
  BitRow mask = cols == 64 ? ~BitRow(0) : (BitRow(1) << cols) - 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] & ~mask)
      throw Error(ErrorKind::OutOfRange, "row has bits beyond col_count");
    m.rows_[i] = rows[i];
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorKind::Parse, "ragged 0/1 rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] != '0' && rows[i][j] != '1')
        throw Error(ErrorKind::Parse, "row characters must be 0/1");
      if (rows[i][j] == '1') m.rows_[i] |= BitRow(1) << j;
    }
  }
  return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  if (v)
    rows_[r] |= BitRow(1) << c;
  else
    rows_[r] &= ~(BitRow(1) << c);
}

std::string Gf2Matrix::row_string(std::size_t r) const {
  std::string s(cols_, '0');
  for (std::size_t j = 0; j < cols_; ++j)
    if (get(r, j)) s[j] = '1';
  return s;
}

Rref rref(const Gf2Matrix& a) {
  std::vector<BitRow> rows = a.row_words();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && !((rows[piv] >> c) & 1)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);  // drop zero rows
  return Rref{Gf2Matrix::from_rows(rows, a.cols()), pivots, r};
}

std::vector<BitRow> row_space_vectors(const Gf2Matrix& a) {
  Rref rr = rref(a);
  std::size_t r = rr.rank;
  std::vector<BitRow> out;
  out.reserve((std::size_t(1) << r) - 1);
  BitRow v = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t(1) << r); ++i) {
    v ^= rr.matrix.row(std::countr_zero(i));  // Gray step flips one basis row
    out.push_back(v);
  }
  return out;
}

StandardForm standard_form(const Gf2Matrix& a) {
  Rref rr = rref(a);
  if (rr.rank < a.rows())
    throw Error(ErrorKind::RankDeficient, "standard_form needs full row rank");
  std::vector<std::size_t> perm = rr.pivot_cols;
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) perm.push_back(c);
  Gf2Matrix b(rr.rank, a.cols());
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (rr.matrix.get(i, perm[j])) b.set(i, j, true);
  return StandardForm{std::move(b), std::move(perm)};
}

Gf2Matrix dual_representation(const Gf2Matrix& a) {
  StandardForm sf = standard_form(a);  // throws RankDeficient
  std::size_t r = a.rows(), n = a.cols();
  // dual of [I|D] is [D^T|I]; then undo the column permutation
  Gf2Matrix b(n - r, n);
  for (std::size_t i = 0; i < n - r; ++i) {
    for (std::size_t j = 0; j < r; ++j)
      if (sf.matrix.get(j, r + i)) b.set(i, sf.col_perm[j], true);
    b.set(i, sf.col_perm[r + i], true);
  }
  return b;
}

}  // namespace cosys
