#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tg/perm.hpp"
#include "tg/rng.hpp"

namespace tg {

// Freely reduced word in generators x_1, x_2, ...; letters are signed indices.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord generator(int i) { return FreeWord(std::vector<int>{i}); }

  void push(int letter) {
    if (!letters_.empty() && letters_.back() == -letter)
      letters_.pop_back();
    else
      letters_.push_back(letter);
  }
  void push_word(const FreeWord& w) {
    for (int l : w.letters_) push(l);
  }
  void push_inverse(const FreeWord& w) {
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(-*it);
  }

  const std::vector<int>& letters() const { return letters_; }
  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const FreeWord& o) const { return letters_ != o.letters_; }

 private:
  explicit FreeWord(std::vector<int> letters) : letters_(std::move(letters)) {}
  std::vector<int> letters_;
};

// Word in the Artin generators of the braid group on `strands` strands.
// Letters are signed indices (i or -i, 1 <= i <= strands-1), read left to
// right as crossings from the bottom of the diagram to the top; positive i
// crosses the strand at position i over position i+1. Strands are numbered
// left to right at the bottom.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }

  BraidWord inverse() const;
  // Diagram of `bottom` with `top` stacked above it.
  static BraidWord stack(const BraidWord& bottom, const BraidWord& top);

  bool operator==(const BraidWord& o) const {  // literal word equality only
    return strands_ == o.strands_ && letters_ == o.letters_;
  }

  std::string to_string() const;  // "2 1 -3"; empty word prints "e"
  static BraidWord parse(int strands, std::string_view text);

 private:
  int strands_;
  std::vector<int> letters_;
};

// Images of the free generators x_1..x_n under the automorphism induced by
// the braid via the standard faithful action on the free group. Serves as the
// equality oracle.
std::vector<FreeWord> artin_images(const BraidWord& b);

bool braid_eq(const BraidWord& a, const BraidWord& b);

// Where each bottom strand ends up at the top.
Perm strand_perm(const BraidWord& b);

// Replace the strand at bottom position k with d parallel strands.
BraidWord braid_clone(int arity, int k, const BraidWord& b);

// Delete the strand at bottom position j, dropping its crossings.
BraidWord delete_strand(const BraidWord& b, int j);

bool is_pure(const BraidWord& b);

// Standard generators A_{ij} of the pure braid group, i < j.
std::vector<BraidWord> pure_braid_generators(int n);

}  // namespace tg
