#include "tg/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace tg {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int l : letters_) {
    const int i = l < 0 ? -l : l;
    if (l == 0 || i > strands_ - 1) throw std::invalid_argument("braid letter out of range");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> rev(letters_.rbegin(), letters_.rend());
  for (int& l : rev) l = -l;
  return BraidWord(strands_, std::move(rev));
}

BraidWord BraidWord::stack(const BraidWord& bottom, const BraidWord& top) {
  if (bottom.strands_ != top.strands_) throw std::invalid_argument("strand count mismatch");
  std::vector<int> letters = bottom.letters_;
  letters.insert(letters.end(), top.letters_.begin(), top.letters_.end());
  return BraidWord(bottom.strands_, std::move(letters));
}

std::string BraidWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    try {
      letters.push_back(std::stoi(tok));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad braid letter: " + tok);
    }
  }
  return BraidWord(strands, std::move(letters));
}

std::vector<FreeWord> artin_images(const BraidWord& b) {
  const int n = b.strands();
  std::vector<FreeWord> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = FreeWord::generator(i);

  // Process crossings bottom to top. A later crossing acts on the images
  // accumulated so far, so each step rewrites every image word through the
  // single-letter substitution.
  for (int letter : b.letters()) {
    const int i = letter < 0 ? -letter : letter;
    std::vector<FreeWord> next(img.size());
    for (std::size_t t = 0; t < img.size(); ++t) {
      FreeWord w;
      for (int l : img[t].letters()) {
        const int gen = l < 0 ? -l : l;
        const bool inv = l < 0;
        FreeWord piece;
        if (letter > 0) {
          // x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
          if (gen == i) {
            piece.push(i);
            piece.push(i + 1);
            piece.push(-i);
          } else if (gen == i + 1) {
            piece.push(i);
          } else {
            piece.push(gen);
          }
        } else {
          // inverse substitution: x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
          if (gen == i) {
            piece.push(i + 1);
          } else if (gen == i + 1) {
            piece.push(-(i + 1));
            piece.push(i);
            piece.push(i + 1);
          } else {
            piece.push(gen);
          }
        }
        if (inv)
          w.push_inverse(piece);
        else
          w.push_word(piece);
      }
      next[t] = std::move(w);
    }
    img = std::move(next);
  }
  return img;
}

bool braid_eq(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
  return artin_images(a) == artin_images(b);
}

Perm strand_perm(const BraidWord& b) {
  const int n = b.strands();
  // pos[s] = current position of the strand that starts at bottom position s+1
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) pos[static_cast<std::size_t>(s)] = s + 1;
  for (int letter : b.letters()) {
    const int i = letter < 0 ? -letter : letter;
    for (int s = 0; s < n; ++s) {
      if (pos[static_cast<std::size_t>(s)] == i)
        pos[static_cast<std::size_t>(s)] = i + 1;
      else if (pos[static_cast<std::size_t>(s)] == i + 1)
        pos[static_cast<std::size_t>(s)] = i;
    }
  }
  return Perm::from_images(std::move(pos));
}

BraidWord braid_clone(int arity, int k, const BraidWord& b) {
  const int n = b.strands();
  if (k < 1 || k > n) throw std::out_of_range("clone index out of range");
  const int d = arity;
  std::vector<int> out;
  int c = k;  // current position of the cloned strand in the original diagram
  for (int letter : b.letters()) {
    const int i = letter < 0 ? -letter : letter;
    const int sign = letter < 0 ? -1 : 1;
    if (i + 1 < c) {
      out.push_back(letter);  // entirely left of the ribbon
    } else if (i > c) {
      out.push_back(sign * (i + d - 1));  // entirely right of the ribbon
    } else if (i + 1 == c) {
      // single strand at c-1 crosses the whole ribbon; the ribbon moves left
      for (int t = 0; t < d; ++t) out.push_back(sign * (c - 1 + t));
      c = c - 1;
    } else {
      // i == c: ribbon crosses the single strand at c+1, moving right
      for (int t = d - 1; t >= 0; --t) out.push_back(sign * (c + t));
      c = c + 1;
    }
  }
  return BraidWord(n + d - 1, std::move(out));
}

BraidWord delete_strand(const BraidWord& b, int j) {
  const int n = b.strands();
  if (j < 1 || j > n) throw std::out_of_range("strand index out of range");
  if (n == 1) return BraidWord(1);
  std::vector<int> out;
  int c = j;
  for (int letter : b.letters()) {
    const int i = letter < 0 ? -letter : letter;
    const int sign = letter < 0 ? -1 : 1;
    if (i == c) {
      c = c + 1;  // our strand crosses its right neighbour; drop the letter
    } else if (i + 1 == c) {
      c = c - 1;
    } else if (i + 1 < c) {
      out.push_back(letter);
    } else {
      out.push_back(sign * (i - 1));
    }
  }
  return BraidWord(n - 1, std::move(out));
}

bool is_pure(const BraidWord& b) { return strand_perm(b).is_identity(); }

std::vector<BraidWord> pure_braid_generators(int n) {
  // A_{ij} = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1)
  std::vector<BraidWord> gens;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> w;
      for (int t = j - 1; t > i; --t) w.push_back(t);
      w.push_back(i);
      w.push_back(i);
      for (int t = i + 1; t <= j - 1; ++t) w.push_back(-t);
      gens.emplace_back(n, std::move(w));
    }
  }
  return gens;
}

}  // namespace tg
