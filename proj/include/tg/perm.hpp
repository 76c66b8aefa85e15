#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tg {

// Permutation of {1..n} in one-line notation: entry i is the image of i.
// Composition is fixed project-wide as (f*g)(i) = f(g(i)).
class Perm {
 public:
  explicit Perm(int n);  // identity
  static Perm from_images(std::vector<int> images);  // 1-based images

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

  static Perm transposition(int n, int i, int j);

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }

  std::string to_string() const;  // "3 1 2 4"
  static Perm parse(std::string_view text);

 private:
  std::vector<int> img_;
};

Perm compose(const Perm& f, const Perm& g);  // apply g first

// Standard d-ary cloning map on symmetric groups: duplicates point k into the
// block k..k+d-1 and shifts everything else out of the way.
Perm sigma_clone(int arity, int k, const Perm& s);

// Preimage under sigma_clone, present iff the block condition
// s'(k+i) = s'(k)+i holds for 0 <= i <= d-1.
std::optional<Perm> sigma_unclone(int arity, int k, const Perm& cloned);

std::vector<Perm> all_perms(int n);

}  // namespace tg
