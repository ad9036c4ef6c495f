#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cosys {

// Bit-packed row: bit j holds column j; rendered strings put column 0 first.
using BitRow = std::uint64_t;

inline int popcount(BitRow r) { return __builtin_popcountll(r); }

class Gf2Matrix {
 public:
  Gf2Matrix() : cols_(0) {}
  Gf2Matrix(std::size_t rows, std::size_t cols);  // zero-filled; dims <= 64
  static Gf2Matrix from_rows(std::vector<BitRow> rows, std::size_t cols);
  static Gf2Matrix from_strings(const std::vector<std::string>& rows);  // "0110..."

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return (rows_[r] >> c) & 1; }
  void set(std::size_t r, std::size_t c, bool v);
  BitRow row(std::size_t r) const { return rows_[r]; }
  const std::vector<BitRow>& row_words() const { return rows_; }
  std::string row_string(std::size_t r) const;

  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<BitRow> rows_;
  std::size_t cols_;
};

struct Rref {
  Gf2Matrix matrix;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank;
};
Rref rref(const Gf2Matrix& a);

// All 2^rank - 1 distinct nonzero row-space vectors, each exactly once,
// by Gray-code iteration over combinations of an rref row basis.
std::vector<BitRow> row_space_vectors(const Gf2Matrix& a);

struct StandardForm {
  Gf2Matrix matrix;                   // [ I | D ]
  std::vector<std::size_t> col_perm;  // col_perm[new] = old column index
};
StandardForm standard_form(const Gf2Matrix& a);  // throws RankDeficient

// B with n-r rows and B * A^T = 0; if A = [I|D] then B = [D^T|I].
Gf2Matrix dual_representation(const Gf2Matrix& a);  // throws RankDeficient

}  // namespace cosys
