#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sds {

// Bijection on 1..n, stored as the sequence of images of 1,2,...,n.
class VertexPermutation {
 public:
  VertexPermutation() = default;

  explicit VertexPermutation(std::vector<int> images) : img_(std::move(images)) {
    int n = static_cast<int>(img_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : img_) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("VertexPermutation: images are not a permutation of 1.." +
                                    std::to_string(n));
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static VertexPermutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return VertexPermutation(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }

  int operator()(int v) const { return img_[static_cast<std::size_t>(v - 1)]; }

  const std::vector<int>& images() const { return img_; }

  VertexPermutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int v = 1; v <= size(); ++v) inv[static_cast<std::size_t>((*this)(v)) - 1] = v;
    return VertexPermutation(std::move(inv));
  }

  bool operator==(const VertexPermutation&) const = default;

 private:
  std::vector<int> img_;
};

// (a then b read right-to-left): compose(a,b)(v) = a(b(v)).
inline VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compose: permutation sizes differ");
  std::vector<int> img(static_cast<std::size_t>(a.size()));
  for (int v = 1; v <= a.size(); ++v) img[static_cast<std::size_t>(v - 1)] = a(b(v));
  return VertexPermutation(std::move(img));
}

// Checks that a sequence visits each of 1..n exactly once (a permutation
// update order, as opposed to a general word).
inline bool is_permutation_word(const std::vector<int>& w, int n) {
  if (static_cast<int>(w.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : w) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

}  // namespace sds
