#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/error.hpp"
#include "axial/linalg.hpp"

namespace axial {

inline const Rational kHalf{1, 2};

/// Eigenspaces of ad_e for the admissible eigenvalues 0, 1/2, 1.
struct EigDecomposition {
  Element axis;
  SubspaceBasis v0;
  SubspaceBasis v_half;
  SubspaceBasis v1;
  // inverse of [v0 | v_half | v1] when semisimple, empty otherwise
  Matrix eigenbasis_inverse;

  // Other eigenvalues leave a dimension deficit, so this also certifies
  // the spectrum of ad_e within {0, 1/2, 1}.
  bool semisimple() const { return v0.dim() + v_half.dim() + v1.dim() == axis.algebra().dim(); }
};

inline EigDecomposition eigendecompose(const Element& e) {
  if (!is_idempotent(e)) throw Error(ErrorKind::NotIdempotent, "eigendecomposition needs an idempotent");
  const std::size_t n = e.algebra().dim();
  const Matrix ad = ad_matrix(e);
  auto eigenspace = [&](const Rational& lambda) { return kernel_basis(ad - lambda * Matrix::identity(n)); };
  EigDecomposition dec{e, eigenspace(0), eigenspace(kHalf), eigenspace(1), Matrix()};
  if (dec.semisimple()) {
    std::vector<Vector> cols = dec.v0.vectors();
    for (const auto* s : {&dec.v_half, &dec.v1}) cols.insert(cols.end(), s->vectors().begin(), s->vectors().end());
    const Matrix p = Matrix::from_columns(cols, n);
    Matrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      auto col = solve(p, unit_vector(n, j));
      for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
    }
    dec.eigenbasis_inverse = std::move(inv);
  }
  return dec;
}

struct Components {
  Element zero;
  Element half;
  Element one;
};

/// x = x_0 + x_{1/2} + x_1 relative to a semisimple decomposition.
inline Components split(const EigDecomposition& dec, const Element& x) {
  if (!dec.semisimple()) throw Error(ErrorKind::NotSemisimple, "ad of the axis is not diagonalizable over {0,1/2,1}");
  Element::check_same(dec.axis, x);
  const auto& alg = x.algebra();
  const Vector c = dec.eigenbasis_inverse * x.coords();
  Vector parts[3] = {zero_vector(alg.dim()), zero_vector(alg.dim()), zero_vector(alg.dim())};
  std::size_t offset = 0;
  const SubspaceBasis* spaces[3] = {&dec.v0, &dec.v_half, &dec.v1};
  for (int s = 0; s < 3; ++s) {
    for (std::size_t i = 0; i < spaces[s]->dim(); ++i) axpy(c[offset + i], spaces[s]->vectors()[i], parts[s]);
    offset += spaces[s]->dim();
  }
  return {Element(alg, parts[0]), Element(alg, parts[1]), Element(alg, parts[2])};
}

struct FusionReport {
  bool zero_zero = false;  // A_0 A_0 in A_0
  bool half_half = false;  // A_h A_h in A_0 + A_1
  bool even_half = false;  // (A_0 + A_1) A_h in A_h
  bool zero_one = false;   // A_0 A_1 = 0
  bool z2_graded = false;  // even/odd grading, checked directly

  bool all() const { return zero_zero && half_half && even_half && zero_one && z2_graded; }
};

namespace detail {

inline bool products_inside(const Algebra& alg, const SubspaceBasis& x, const SubspaceBasis& y,
                            const SubspaceBasis& target) {
  for (const auto& u : x.vectors())
    for (const auto& w : y.vectors())
      if (!target.contains(multiply_coords(alg, u, w))) return false;
  return true;
}

}  // namespace detail

inline FusionReport check_fusion(const EigDecomposition& dec) {
  if (!dec.semisimple()) throw Error(ErrorKind::NotSemisimple, "fusion rules need a semisimple decomposition");
  const auto& alg = dec.axis.algebra();
  const SubspaceBasis zero(alg.dim());
  const SubspaceBasis even = dec.v0.sum(dec.v1);
  FusionReport r;
  r.zero_zero = detail::products_inside(alg, dec.v0, dec.v0, dec.v0);
  r.half_half = detail::products_inside(alg, dec.v_half, dec.v_half, even);
  r.even_half = detail::products_inside(alg, even, dec.v_half, dec.v_half);
  r.zero_one = detail::products_inside(alg, dec.v0, dec.v1, zero);
  r.z2_graded = detail::products_inside(alg, even, even, even) && r.even_half && r.half_half;
  return r;
}

struct AxisReport {
  bool is_idempotent = false;
  bool spectrum_ok = false;
  bool semisimple = false;
  bool primitive = false;
  bool fusion_ok = false;
  std::optional<FusionReport> fusion;
  std::optional<EigDecomposition> decomposition;

  bool is_primitive_axis() const { return is_idempotent && semisimple && primitive && fusion_ok; }
};

inline AxisReport check_axis(const Element& e) {
  AxisReport r;
  r.is_idempotent = is_idempotent(e);
  if (!r.is_idempotent) return r;
  const std::size_t n = e.algebra().dim();
  // spectrum of ad_e in {0,1/2,1} iff ad_e (ad_e - 1/2)(ad_e - 1) is nilpotent.
  const Matrix ad = ad_matrix(e);
  const Matrix id = Matrix::identity(n);
  const Matrix p = ad * (ad - kHalf * id) * (ad - id);
  Matrix power = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) power = power * p;
  r.spectrum_ok = power.is_zero();
  auto dec = eigendecompose(e);
  r.semisimple = dec.semisimple();
  r.primitive = !e.is_zero() && dec.v1.dim() == 1;
  if (r.semisimple) {
    r.fusion = check_fusion(dec);
    r.fusion_ok = r.fusion->all();
  }
  r.decomposition = std::move(dec);
  return r;
}

/// tau_e: identity on A_0 + A_1, minus identity on A_{1/2}.
inline Matrix miyamoto(const EigDecomposition& dec) {
  if (!dec.semisimple()) throw Error(ErrorKind::NotSemisimple, "Miyamoto map needs a semisimple decomposition");
  const auto& alg = dec.axis.algebra();
  const std::size_t n = alg.dim();
  Matrix tau(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto c = split(dec, alg.basis(j));
    const Vector image = sub(add(c.zero.coords(), c.one.coords()), c.half.coords());
    for (std::size_t i = 0; i < n; ++i) tau(i, j) = image[i];
  }
  return tau;
}

inline Element apply(const Matrix& m, const Element& x) { return Element(x.algebra(), m * x.coords()); }

/// A symmetric bilinear form on an algebra, as its Gram matrix on the basis.
struct GramForm {
  Algebra algebra;
  Matrix gram;

  Rational operator()(const Element& x, const Element& y) const {
    Element::check_same(x, y);
    if (!x.algebra().same_as(algebra)) throw Error(ErrorKind::AlgebraMismatch, "form belongs to another algebra");
    return dot(x.coords(), gram * y.coords());
  }
};

inline bool is_invariant(const GramForm& g) {
  const auto& alg = g.algebra;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = i; k < n; ++k)
        if (g(alg.basis(i) * alg.basis(j), alg.basis(k)) != g(alg.basis(i), alg.basis(j) * alg.basis(k))) return false;
  return true;
}

namespace detail {

inline void require_primitive_axes(const std::vector<Element>& axes) {
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const auto r = check_axis(axes[i]);
    if (!(r.is_idempotent && r.semisimple && r.primitive))
      throw Error(ErrorKind::NotPrimitiveAxis, "axis #" + std::to_string(i) + " is not a primitive semisimple idempotent");
  }
}

inline void require_form_invariants(const GramForm& g, const std::vector<Element>& axes) {
  if (!g.gram.is_symmetric()) throw Error(ErrorKind::Inconsistent, "form is not symmetric");
  if (!is_invariant(g)) throw Error(ErrorKind::Inconsistent, "form is not invariant");
  for (const auto& a : axes)
    if (g(a, a) != 1) throw Error(ErrorKind::Inconsistent, "form is not normalized on an axis");
}

}  // namespace detail

/// Frobenius form from projections: (a, e_j) is the coefficient of a in the
/// A_1(a)-component of e_j. With P stacking the axis coordinates, the Gram
/// matrix G solves P G = F.
inline GramForm frobenius_projection(const Algebra& alg, const std::vector<Element>& axes) {
  const std::size_t n = alg.dim();
  if (span_of(alg, axes).dim() != n) throw Error(ErrorKind::NotSpanning, "axes do not span the algebra");
  detail::require_primitive_axes(axes);
  Matrix f(axes.size(), n);
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const auto dec = eigendecompose(axes[i]);
    std::size_t pivot = 0;
    while (sgn(axes[i][pivot]) == 0) ++pivot;
    for (std::size_t j = 0; j < n; ++j) f(i, j) = split(dec, alg.basis(j)).one[pivot] / axes[i][pivot];
  }
  const Matrix p = Matrix::from_rows(coords_of(axes), n);
  Matrix gram(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = solve(p, f.column(j));
    if (!col) throw Error(ErrorKind::Inconsistent, "projection values are not realized by any bilinear form");
    for (std::size_t i = 0; i < n; ++i) gram(i, j) = (*col)[i];
  }
  GramForm g{alg, std::move(gram)};
  detail::require_form_invariants(g, axes);
  return g;
}

struct FrobeniusSolution {
  GramForm form;
  std::size_t solution_space_dim = 0;
};

/// Solves for a symmetric invariant form with (a, a) = 1 on the given axes.
/// Reports the dimension of the homogeneous solution space (0 = unique).
inline FrobeniusSolution frobenius_solve(const Algebra& alg, const std::vector<Element>& axes) {
  if (axes.empty()) throw Error(ErrorKind::NotBasisOfAxes, "no axes to normalize the form");
  const std::size_t n = alg.dim();
  auto var = [n](std::size_t p, std::size_t q) {
    if (p > q) std::swap(p, q);
    return p * n - p * (p - 1) / 2 + (q - p);
  };
  const std::size_t unknowns = n * (n + 1) / 2;
  std::vector<Vector> rows;
  Vector rhs;
  const auto& c = alg.structure();
  // (e_i e_j, e_k) - (e_i, e_j e_k) = 0; (i,j,k) and (k,j,i) give the same row.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = i; k < n; ++k) {
        Vector row = zero_vector(unknowns);
        for (std::size_t m = 0; m < n; ++m) {
          if (sgn(c(i, j, m)) != 0) row[var(m, k)] += c(i, j, m);
          if (sgn(c(j, k, m)) != 0) row[var(i, m)] -= c(j, k, m);
        }
        if (!is_zero(row)) {
          rows.push_back(std::move(row));
          rhs.push_back(0);
        }
      }
  for (const auto& a : axes) {
    Vector row = zero_vector(unknowns);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (sgn(a[p]) != 0 && sgn(a[q]) != 0) row[var(p, q)] += a[p] * a[q];
    rows.push_back(std::move(row));
    rhs.push_back(1);
  }
  const Matrix system = Matrix::from_rows(rows, unknowns);
  auto sol = solve(system, rhs);
  if (!sol) throw Error(ErrorKind::Inconsistent, "no invariant form is normalized on all given axes");
  Matrix gram(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) gram(p, q) = (*sol)[var(p, q)];
  return {GramForm{alg, std::move(gram)}, unknowns - rank(system)};
}

/// Kernel of the Gram matrix. Verified to be an ideal free of designated axes.
inline SubspaceBasis radical(const Algebra& alg, const GramForm& g) {
  const SubspaceBasis rad = kernel_basis(g.gram);
  std::vector<Element> seed;
  for (const auto& v : rad.vectors()) seed.emplace_back(alg, v);
  if (!(ideal_closure(alg, seed) == rad)) throw Error(ErrorKind::InvariantFailure, "radical is not an ideal");
  for (const auto& a : alg.axes())
    if (rad.contains(a.coords())) throw Error(ErrorKind::InvariantFailure, "radical contains a designated axis");
  return rad;
}

inline bool is_semisimple(const Algebra& alg, const GramForm& g) { return radical(alg, g).is_zero(); }

struct QuasiDefiniteCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// (x, y) != 1 for distinct members of a basis of axes.
inline QuasiDefiniteCheck quasi_definite_basis_check(const std::vector<Element>& basis, const GramForm& g) {
  if (basis.empty()) throw Error(ErrorKind::NotBasisOfAxes, "empty list");
  const Algebra& alg = basis.front().algebra();
  if (basis.size() != alg.dim() || span_of(alg, basis).dim() != alg.dim())
    throw Error(ErrorKind::NotBasisOfAxes, "elements do not form a basis");
  for (const auto& x : basis)
    if (!is_idempotent(x) || x.is_zero()) throw Error(ErrorKind::NotBasisOfAxes, "basis element is not a nonzero idempotent");
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (g(basis[i], basis[j]) == 1) return {false, std::make_pair(i, j)};
  return {};
}

/// Sylvester's criterion. Sufficient for anisotropy, so a true result means
/// the algebra is definite and hence quasi-definite.
inline bool positive_definite_check(const GramForm& g) {
  for (const auto& m : leading_principal_minors(g.gram))
    if (sgn(m) <= 0) return false;
  return true;
}

/// The form restricted to a subalgebra.
inline GramForm restrict_form(const GramForm& g, const Subalgebra& sub) {
  const Matrix basis = Matrix::from_rows(sub.embedding.vectors(), g.algebra.dim());
  return GramForm{sub.algebra, basis * g.gram * basis.transpose()};
}

}  // namespace axial
