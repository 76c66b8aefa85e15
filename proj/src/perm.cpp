#include "tg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tg {

Perm::Perm(int n) : img_(static_cast<std::size_t>(n)) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::iota(img_.begin(), img_.end(), 1);
}

Perm Perm::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
  Perm p(0);
  p.img_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 1; i <= degree(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
  return from_images(std::move(inv));
}

Perm Perm::transposition(int n, int i, int j) {
  Perm p(n);
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(j - 1)]);
  return p;
}

std::string Perm::to_string() const {
  std::string out;
  for (int i = 1; i <= degree(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string((*this)(i));
  }
  return out;
}

Perm Perm::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> images;
  int v;
  while (in >> v) images.push_back(v);
  if (!in.eof()) throw std::invalid_argument("bad permutation text");
  return from_images(std::move(images));
}

Perm compose(const Perm& f, const Perm& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) images[static_cast<std::size_t>(i - 1)] = f(g(i));
  return Perm::from_images(std::move(images));
}

Perm sigma_clone(int arity, int k, const Perm& s) {
  const int n = s.degree();
  if (k < 1 || k > n) throw std::out_of_range("clone index out of range");
  const int a = s(k);
  const auto shift = [&](int y) { return y < a ? y : y + arity - 1; };
  std::vector<int> images(static_cast<std::size_t>(n + arity - 1));
  for (int j = 1; j <= n + arity - 1; ++j) {
    int v;
    if (j < k)
      v = shift(s(j));
    else if (j <= k + arity - 1)
      v = a + (j - k);
    else
      v = shift(s(j - arity + 1));
    images[static_cast<std::size_t>(j - 1)] = v;
  }
  return Perm::from_images(std::move(images));
}

std::optional<Perm> sigma_unclone(int arity, int k, const Perm& cloned) {
  const int n = cloned.degree() - arity + 1;
  if (k < 1 || k > n) throw std::out_of_range("clone index out of range");
  const int a = cloned(k);
  for (int i = 0; i < arity; ++i)
    if (cloned(k + i) != a + i) return std::nullopt;
  const auto unshift = [&](int y) { return y < a ? y : y - arity + 1; };
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    if (j < k)
      images[static_cast<std::size_t>(j - 1)] = unshift(cloned(j));
    else if (j == k)
      images[static_cast<std::size_t>(j - 1)] = a;
    else
      images[static_cast<std::size_t>(j - 1)] = unshift(cloned(j + arity - 1));
  }
  Perm s = Perm::from_images(std::move(images));
  if (sigma_clone(arity, k, s) != cloned) return std::nullopt;
  return s;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace tg
