#pragma once

#include <string>
#include <vector>

namespace specht {

// Element of S_n; img_[i-1] is the image of i (1-based values).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(img_.size()); }
  int image(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }

  // (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& inner) const;
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::string to_string() const;

 private:
  std::vector<int> img_;
};

}  // namespace specht
