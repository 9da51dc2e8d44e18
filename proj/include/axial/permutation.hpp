#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "axial/error.hpp"

namespace axial {

/// Permutation of {0..m-1}; one-line notation on 1..m at the boundary.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.map_.resize(degree);
    std::iota(p.map_.begin(), p.map_.end(), std::size_t{0});
    return p;
  }

  /// Errors: ParseError when the images are not a bijection of 1..m.
  static Permutation from_one_line(const std::vector<std::size_t>& images) {
    Permutation p;
    std::vector<bool> seen(images.size(), false);
    for (auto x : images) {
      if (x < 1 || x > images.size() || seen[x - 1])
        throw Error(ErrorKind::ParseError, "one-line notation is not a bijection of 1.." + std::to_string(images.size()));
      seen[x - 1] = true;
      p.map_.push_back(x - 1);
    }
    return p;
  }

  /// The transposition (i j), points 1-based.
  static Permutation transposition(std::size_t degree, std::size_t i, std::size_t j) {
    Permutation p = identity(degree);
    std::swap(p.map_.at(i - 1), p.map_.at(j - 1));
    return p;
  }

  std::size_t degree() const noexcept { return map_.size(); }
  std::size_t operator()(std::size_t point) const { return map_.at(point); }

  std::vector<std::size_t> one_line() const {
    std::vector<std::size_t> out;
    for (auto x : map_) out.push_back(x + 1);
    return out;
  }

  // (p * q)(x) = p(q(x))
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw Error(ErrorKind::DimensionMismatch, "permutations of different degrees");
    Permutation r;
    for (std::size_t i = 0; i < q.degree(); ++i) r.map_.push_back(p.map_[q.map_[i]]);
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  Permutation inverse() const {
    Permutation r;
    r.map_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.map_[map_[i]] = i;
    return r;
  }

  bool is_identity() const { return *this == identity(degree()); }

  std::size_t order() const {
    std::size_t k = 1;
    for (Permutation p = *this; !p.is_identity(); p = p * *this) ++k;
    return k;
  }

  /// c^d = d^-1 c d
  Permutation conjugate_by(const Permutation& d) const { return d.inverse() * *this * d; }

  std::string cycles() const {
    std::string out;
    std::vector<bool> done(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (done[i] || map_[i] == i) continue;
      out += "(";
      for (std::size_t j = i; !done[j]; j = map_[j]) {
        done[j] = true;
        out += (j == i ? "" : " ") + std::to_string(j + 1);
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::vector<std::size_t> map_;
};

}  // namespace axial
