#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tg/rational.hpp"

namespace tg {

// Invertible upper triangular matrix with exact rational entries; 1-based
// indexing, diagonal entries must be units of the configured ring.
class UTMatrix {
 public:
  explicit UTMatrix(int n);  // identity
  static UTMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int size() const { return n_; }
  const Rat& at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, const Rat& v);

  friend UTMatrix operator*(const UTMatrix& a, const UTMatrix& b);
  UTMatrix inverse() const;
  UTMatrix scaled(const Rat& r) const;

  bool operator==(const UTMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const UTMatrix& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_upper_triangular() const;

  std::string to_string() const;  // rows ';'-separated, entries space-separated
  static UTMatrix parse(std::string_view text);

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }
  int n_;
  std::vector<Rat> e_;
};

// Blow up the (k,k) entry to a d-by-d scalar block: the d-1 new columns
// duplicate column k above the block, the d-1 new rows are zero off the
// block, and the last block row carries row k's entries right of the block.
UTMatrix mtx_clone(int arity, int k, const UTMatrix& a);

// Preimage under mtx_clone: collapse the block and certify by re-cloning.
std::optional<UTMatrix> mtx_unclone(int arity, int k, const UTMatrix& m);

}  // namespace tg
