#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/error.hpp"
#include "axial/linalg.hpp"
#include "axial/rational.hpp"

namespace axial {

/// Dense rank-3 tensor c[i][j][k]: coordinate of e_i e_j on e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), data_(dim * dim * dim, Rational(0)) {}

  std::size_t dim() const noexcept { return dim_; }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets both e_i e_j and e_j e_i.
  void set_product(std::size_t i, std::size_t j, const Vector& product) {
    if (product.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "product vector length differs from dimension");
    for (std::size_t k = 0; k < dim_; ++k) {
      (*this)(i, j, k) = product[k];
      (*this)(j, i, k) = product[k];
    }
  }

  Vector product(std::size_t i, std::size_t j) const {
    return Vector(data_.begin() + (i * dim_ + j) * dim_, data_.begin() + (i * dim_ + j + 1) * dim_);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

class Element;

namespace detail {

struct SparseTerm {
  std::size_t index;
  Rational coeff;
};

struct AlgebraData {
  std::string name;
  std::vector<std::string> basis_names;
  StructureConstants structure;
  // nonzero coordinates of e_i e_j, indexed i * dim + j
  std::vector<std::vector<SparseTerm>> sparse;
  std::vector<Vector> axes;
  std::vector<Vector> generators;
};

}  // namespace detail

/// A finite-dimensional commutative algebra over Q given by structure
/// constants. Immutable; copies share the same underlying table, and two
/// handles denote the same algebra only if they share it.
class Algebra {
 public:
  Algebra() = default;

  std::size_t dim() const noexcept { return data_ ? data_->basis_names.size() : 0; }
  const std::string& name() const { return data_->name; }
  const std::vector<std::string>& basis_names() const { return data_->basis_names; }
  const StructureConstants& structure() const { return data_->structure; }
  const std::vector<detail::SparseTerm>& basis_product(std::size_t i, std::size_t j) const {
    return data_->sparse[i * dim() + j];
  }

  inline std::vector<Element> axes() const;
  /// Declared generating axes; empty if the file/factory did not specify any.
  inline std::vector<Element> generators() const;
  inline Element basis(std::size_t i) const;
  inline Element zero() const;
  inline Element element(Vector coords) const;

  bool same_as(const Algebra& other) const noexcept { return data_ == other.data_; }

 private:
  friend Algebra make_algebra(std::string, std::vector<std::string>, StructureConstants, std::vector<Vector>,
                              std::vector<Vector>);
  explicit Algebra(std::shared_ptr<const detail::AlgebraData> d) : data_(std::move(d)) {}

  std::shared_ptr<const detail::AlgebraData> data_;
};

/// An exact coordinate vector in an algebra's basis.
class Element {
 public:
  Element(Algebra algebra, Vector coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (coords_.size() != algebra_.dim())
      throw Error(ErrorKind::DimensionMismatch, "element has " + std::to_string(coords_.size()) +
                                                    " coordinates, algebra dimension is " +
                                                    std::to_string(algebra_.dim()));
  }

  const Algebra& algebra() const noexcept { return algebra_; }
  const Vector& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_.at(i); }
  bool is_zero() const { return axial::is_zero(coords_); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_.same_as(b.algebra_) && a.coords_ == b.coords_;
  }

  friend Element operator+(const Element& a, const Element& b) {
    check_same(a, b);
    return Element(a.algebra_, add(a.coords_, b.coords_));
  }
  friend Element operator-(const Element& a, const Element& b) {
    check_same(a, b);
    return Element(a.algebra_, sub(a.coords_, b.coords_));
  }
  friend Element operator-(const Element& a) { return Element(a.algebra_, scale(-1, a.coords_)); }
  friend Element operator*(const Rational& s, const Element& a) { return Element(a.algebra_, scale(s, a.coords_)); }
  friend Element operator/(const Element& a, const Rational& s) {
    return Element(a.algebra_, scale(Rational(1 / s), a.coords_));
  }
  inline friend Element operator*(const Element& a, const Element& b);

  static void check_same(const Element& a, const Element& b) {
    if (!a.algebra_.same_as(b.algebra_)) throw Error(ErrorKind::AlgebraMismatch, "elements belong to different algebras");
  }

 private:
  Algebra algebra_;
  Vector coords_;
};

inline Element Algebra::basis(std::size_t i) const { return Element(*this, unit_vector(dim(), i)); }
inline Element Algebra::zero() const { return Element(*this, zero_vector(dim())); }
inline Element Algebra::element(Vector coords) const { return Element(*this, std::move(coords)); }

inline std::vector<Element> Algebra::axes() const {
  std::vector<Element> out;
  for (const auto& v : data_->axes) out.emplace_back(*this, v);
  return out;
}

inline std::vector<Element> Algebra::generators() const {
  std::vector<Element> out;
  for (const auto& v : data_->generators) out.emplace_back(*this, v);
  return out;
}

namespace detail {

inline Vector multiply_coords(const Algebra& alg, const Vector& x, const Vector& y) {
  const std::size_t n = alg.dim();
  Vector r = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational xy = x[i] * y[j];
      for (const auto& t : alg.basis_product(i, j)) r[t.index] += xy * t.coeff;
    }
  }
  return r;
}

}  // namespace detail

/// Bilinear product from the structure constants.
inline Element multiply(const Element& x, const Element& y) {
  Element::check_same(x, y);
  return Element(x.algebra(), detail::multiply_coords(x.algebra(), x.coords(), y.coords()));
}

inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

inline bool is_idempotent(const Element& e) { return e * e == e; }

/// Validates and freezes an algebra. Errors: DimensionMismatch,
/// CommutativityViolation, NotIdempotent (a designated axis or generator).
inline Algebra make_algebra(std::string name, std::vector<std::string> basis_names, StructureConstants structure,
                            std::vector<Vector> axes = {}, std::vector<Vector> generators = {}) {
  const std::size_t n = basis_names.size();
  if (structure.dim() != n)
    throw Error(ErrorKind::DimensionMismatch, "structure constants have dimension " + std::to_string(structure.dim()) +
                                                  ", basis has " + std::to_string(n) + " names");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (structure(i, j, k) != structure(j, i, k))
          throw Error(ErrorKind::CommutativityViolation, "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                                             std::to_string(k) + "] = " + to_string(structure(i, j, k)) +
                                                             " but c[" + std::to_string(j) + "][" + std::to_string(i) +
                                                             "][" + std::to_string(k) + "] = " +
                                                             to_string(structure(j, i, k)));
  auto data = std::make_shared<detail::AlgebraData>();
  data->name = std::move(name);
  data->basis_names = std::move(basis_names);
  data->sparse.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(structure(i, j, k)) != 0) data->sparse[i * n + j].push_back({k, structure(i, j, k)});
  data->structure = std::move(structure);
  for (const auto* list : {&axes, &generators})
    for (const auto& v : *list)
      if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "axis vector length differs from dimension");
  data->axes = std::move(axes);
  data->generators = std::move(generators);

  Algebra alg(std::shared_ptr<const detail::AlgebraData>(std::move(data)));
  for (const auto& e : alg.axes())
    if (!is_idempotent(e)) throw Error(ErrorKind::NotIdempotent, "designated axis is not idempotent");
  for (const auto& e : alg.generators())
    if (!is_idempotent(e)) throw Error(ErrorKind::NotIdempotent, "generator is not idempotent");
  return alg;
}

/// Matrix of x -> a x; column j holds the coordinates of a e_j.
inline Matrix ad_matrix(const Element& a) {
  const auto& alg = a.algebra();
  const std::size_t n = alg.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = detail::multiply_coords(alg, a.coords(), unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

inline std::vector<Vector> coords_of(const std::vector<Element>& xs) {
  std::vector<Vector> out;
  for (const auto& x : xs) out.push_back(x.coords());
  return out;
}

inline SubspaceBasis span_of(const Algebra& alg, const std::vector<Element>& xs) {
  return SubspaceBasis::span(alg.dim(), coords_of(xs));
}

/// Smallest subspace containing seed and closed under the product. Each round
/// multiplies all pairs (i <= j) of the current canonical basis.
inline SubspaceBasis subalgebra_closure(const Algebra& alg, const std::vector<Element>& seed) {
  SubspaceBasis current = span_of(alg, seed);
  while (true) {
    std::vector<Vector> gens = current.vectors();
    const auto& basis = current.vectors();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) gens.push_back(detail::multiply_coords(alg, basis[i], basis[j]));
    SubspaceBasis next = SubspaceBasis::span(alg.dim(), gens);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

/// Smallest subspace containing seed and stable under multiplication by A.
inline SubspaceBasis ideal_closure(const Algebra& alg, const std::vector<Element>& seed) {
  SubspaceBasis current = span_of(alg, seed);
  while (true) {
    std::vector<Vector> gens = current.vectors();
    for (const auto& v : current.vectors())
      for (std::size_t k = 0; k < alg.dim(); ++k) gens.push_back(detail::multiply_coords(alg, unit_vector(alg.dim(), k), v));
    SubspaceBasis next = SubspaceBasis::span(alg.dim(), gens);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

inline bool acts_as_unit(const Element& e) {
  const auto& alg = e.algebra();
  for (std::size_t j = 0; j < alg.dim(); ++j)
    if (e * alg.basis(j) != alg.basis(j)) return false;
  return true;
}

/// Unit of the algebra, or nullopt. Solves e e_j = e_j for all j at once.
inline std::optional<Element> find_unit(const Algebra& alg) {
  const std::size_t n = alg.dim();
  Matrix system(n * n, n);
  Vector rhs = zero_vector(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) system(j * n + k, i) = alg.structure()(i, j, k);
      if (j == k) rhs[j * n + k] = 1;
    }
  auto x = solve(system, rhs);
  if (!x) return std::nullopt;
  if (!kernel_basis(system).is_zero())
    throw Error(ErrorKind::InvariantFailure, "unit equations have a positive-dimensional solution space");
  return Element(alg, std::move(*x));
}

/// Full linearization of (x^2 y) x = x^2 (y x) on all basis 4-tuples:
/// sum over the three splits {i,j}|k of ((x_i x_j) y) x_k - (x_i x_j)(y x_k).
inline bool jordan_identity_check(const Algebra& alg) {
  const std::size_t n = alg.dim();
  auto times_basis = [&](const Vector& v, std::size_t b, Vector& out, const Rational& s) {
    for (std::size_t m = 0; m < n; ++m) {
      if (sgn(v[m]) == 0) continue;
      for (const auto& t : alg.basis_product(m, b)) out[t.index] += s * v[m] * t.coeff;
    }
  };
  auto basis_prod = [&](std::size_t i, std::size_t j) { return alg.structure().product(i, j); };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q)
      for (std::size_t r = q; r < n; ++r) {
        const std::size_t xs[3] = {p, q, r};
        for (std::size_t y = 0; y < n; ++y) {
          Vector total = zero_vector(n);
          for (int k = 0; k < 3; ++k) {
            const std::size_t i = xs[(k + 1) % 3], j = xs[(k + 2) % 3], out = xs[k];
            const Vector xij = basis_prod(i, j);
            Vector xij_y = zero_vector(n);
            times_basis(xij, y, xij_y, 1);
            times_basis(xij_y, out, total, 1);
            const Vector y_out = basis_prod(y, out);
            total = sub(total, detail::multiply_coords(alg, xij, y_out));
          }
          if (!axial::is_zero(total)) return false;
        }
      }
  return true;
}

/// A subspace closed under the product, re-presented as an algebra in the
/// canonical basis of that subspace.
struct Subalgebra {
  Algebra algebra;
  Algebra ambient;
  SubspaceBasis embedding;

  Element lift(const Element& x) const {
    Element::check_same(x, algebra.zero());
    Vector v = zero_vector(ambient.dim());
    for (std::size_t i = 0; i < embedding.dim(); ++i) axpy(x[i], embedding.vectors()[i], v);
    return Element(ambient, std::move(v));
  }

  Element project(const Element& x) const {
    Element::check_same(x, ambient.zero());
    auto c = embedding.coordinates(x.coords());
    if (!c) throw Error(ErrorKind::InvariantFailure, "element lies outside the subalgebra");
    return Element(algebra, std::move(*c));
  }
};

/// Restriction to a product-closed subspace. Axes are given as ambient
/// elements and must lie in the subspace. Errors: InvariantFailure when the
/// subspace is not closed.
inline Subalgebra restrict_to(const Algebra& alg, const SubspaceBasis& sub, const std::vector<Element>& axes,
                              std::string name) {
  const std::size_t k = sub.dim();
  StructureConstants sc(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const Vector p = detail::multiply_coords(alg, sub.vectors()[i], sub.vectors()[j]);
      auto c = sub.coordinates(p);
      if (!c) throw Error(ErrorKind::InvariantFailure, "subspace is not closed under the product");
      sc.set_product(i, j, *c);
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("w" + std::to_string(i + 1));
  std::vector<Vector> axis_coords;
  for (const auto& a : axes) {
    auto c = sub.coordinates(a.coords());
    if (!c) throw Error(ErrorKind::InvariantFailure, "axis lies outside the subalgebra");
    axis_coords.push_back(std::move(*c));
  }
  return Subalgebra{make_algebra(std::move(name), std::move(names), std::move(sc), std::move(axis_coords)), alg, sub};
}

}  // namespace axial
