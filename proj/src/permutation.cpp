#include "specht/permutation.hpp"

#include <numeric>

#include "specht/errors.hpp"

namespace specht {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = static_cast<int>(img_.size());
  std::vector<bool> seen(n, false);
  for (int v : img_) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw PreconditionError("not a permutation of 1..n");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || a > n || b < 1 || b > n) throw PreconditionError("transposition index out of range");
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (size() != inner.size()) throw PreconditionError("permutation size mismatch");
  std::vector<int> img(img_.size());
  for (int i = 1; i <= size(); ++i) img[i - 1] = image(inner.image(i));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 1; i <= size(); ++i) img[img_[i - 1] - 1] = i;
  return Permutation(std::move(img));
}

int Permutation::sign() const {
  // Parity from the cycle decomposition.
  const int n = size();
  std::vector<bool> seen(n, false);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j] - 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if (image(i) != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

}  // namespace specht
