#include "tg/ut_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace tg {

UTMatrix::UTMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  for (int i = 1; i <= n; ++i) e_[idx(i, i)] = Rat(1);
}

UTMatrix UTMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  const int n = static_cast<int>(rows.size());
  UTMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != n)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 1; j <= n; ++j)
      m.e_[m.idx(i, j)] = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  if (!m.is_upper_triangular()) throw std::invalid_argument("matrix is not upper triangular");
  return m;
}

void UTMatrix::set(int i, int j, const Rat& v) {
  if (i > j && !v.is_zero()) throw std::invalid_argument("entry below the diagonal");
  e_[idx(i, j)] = v;
}

bool UTMatrix::is_upper_triangular() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool UTMatrix::is_identity() const { return *this == UTMatrix(n_); }

UTMatrix operator*(const UTMatrix& a, const UTMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  UTMatrix m(a.n_);
  for (int i = 1; i <= a.n_; ++i) {
    for (int j = 1; j <= a.n_; ++j) {
      Rat s(0);
      for (int t = i; t <= j; ++t) s = s + a.at(i, t) * b.at(t, j);
      m.e_[m.idx(i, j)] = s;
    }
  }
  return m;
}

UTMatrix UTMatrix::inverse() const {
  // back substitution column by column
  UTMatrix inv(n_);
  for (int j = n_; j >= 1; --j) {
    for (int i = j; i >= 1; --i) {
      if (at(i, i).is_zero()) throw std::domain_error("singular diagonal");
      if (i == j) {
        inv.e_[idx(i, j)] = Rat(1) / at(i, i);
      } else {
        Rat s(0);
        for (int t = i + 1; t <= j; ++t) s = s + at(i, t) * inv.at(t, j);
        inv.e_[idx(i, j)] = -s / at(i, i);
      }
    }
  }
  return inv;
}

UTMatrix UTMatrix::scaled(const Rat& r) const {
  UTMatrix m = *this;
  for (Rat& v : m.e_) v = v * r;
  return m;
}

std::string UTMatrix::to_string() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += ';';
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) out += ' ';
      out += at(i, j).to_string();
    }
  }
  return out;
}

UTMatrix UTMatrix::parse(std::string_view text) {
  std::vector<std::vector<Rat>> rows;
  std::string row_text;
  std::istringstream in{std::string(text)};
  while (std::getline(in, row_text, ';')) {
    std::istringstream rin(row_text);
    std::vector<Rat> row;
    std::string tok;
    while (rin >> tok) row.push_back(Rat::parse(tok));
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

UTMatrix mtx_clone(int arity, int k, const UTMatrix& a) {
  const int n = a.size();
  if (k < 1 || k > n) throw std::out_of_range("clone index out of range");
  const int d = arity;
  const int m = n + d - 1;
  const auto in_block = [&](int x) { return x >= k && x <= k + d - 1; };
  const auto old_index = [&](int x) { return x < k ? x : (in_block(x) ? k : x - d + 1); };
  UTMatrix out(m);
  for (int r = 1; r <= m; ++r) {
    for (int c = r; c <= m; ++c) {
      Rat v(0);
      if (in_block(r) && in_block(c)) {
        v = (r == c) ? a.at(k, k) : Rat(0);
      } else if (in_block(r) && r < k + d - 1) {
        v = Rat(0);  // the non-final block rows vanish off the block
      } else {
        v = a.at(old_index(r), old_index(c));
      }
      out.set(r, c, v);
    }
  }
  return out;
}

std::optional<UTMatrix> mtx_unclone(int arity, int k, const UTMatrix& m) {
  const int d = arity;
  const int n = m.size() - d + 1;
  if (k < 1 || k > n) throw std::out_of_range("clone index out of range");
  // collapse the block, reading row/column k from the last block row/first
  // block column, then certify by re-cloning
  const auto new_index = [&](int x) { return x < k ? x : x + d - 1; };
  UTMatrix a(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      Rat v(0);
      if (i == k && j == k)
        v = m.at(k, k);
      else if (i == k)
        v = m.at(k + d - 1, new_index(j));  // row k survives in the last block row
      else if (j == k)
        v = m.at(i, k);  // column k survives in the first block column
      else
        v = m.at(new_index(i), new_index(j));
      a.set(i, j, v);
    }
  }
  if (mtx_clone(arity, k, a) != m) return std::nullopt;
  return a;
}

}  // namespace tg
