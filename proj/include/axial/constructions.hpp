#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/axial.hpp"
#include "axial/error.hpp"
#include "axial/linalg.hpp"
#include "axial/permutation.hpp"

namespace axial {

namespace detail {

inline std::string index_name(const std::string& prefix, std::size_t i, std::size_t j, std::size_t n) {
  return n < 10 ? prefix + std::to_string(i) + std::to_string(j) : prefix + std::to_string(i) + "_" + std::to_string(j);
}

inline Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

inline Matrix jordan_product(const Matrix& x, const Matrix& y) { return kHalf * (x * y + y * x); }

inline Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

/// Outer product v v^T scaled by s.
inline Matrix outer(const Vector& v, const Rational& s) {
  Matrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = s * v[i] * v[j];
  return m;
}

/// Coordinates of a matrix in a basis of matrices; InvariantFailure if outside the span.
class MatrixCoordinates {
 public:
  explicit MatrixCoordinates(const std::vector<Matrix>& basis) {
    std::vector<Vector> cols;
    for (const auto& b : basis) cols.push_back(flatten(b));
    columns_ = Matrix::from_columns(cols, basis.front().rows() * basis.front().cols());
  }

  Vector operator()(const Matrix& m) const {
    auto c = solve(columns_, flatten(m));
    if (!c) throw Error(ErrorKind::InvariantFailure, "matrix lies outside the span of the basis");
    return *c;
  }

 private:
  Matrix columns_;
};

/// Algebra on a space of square matrices under X o Y = (XY + YX)/2. Closure
/// of the span under o is asserted.
inline Algebra jordan_matrix_algebra(std::string name, const std::vector<Matrix>& basis, std::vector<std::string> names,
                                     const std::vector<Matrix>& axes) {
  const MatrixCoordinates coords(basis);
  const std::size_t dim = basis.size();
  StructureConstants sc(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) sc.set_product(i, j, coords(jordan_product(basis[i], basis[j])));
  std::vector<Vector> axis_coords;
  for (const auto& a : axes) axis_coords.push_back(coords(a));
  return make_algebra(std::move(name), std::move(names), std::move(sc), std::move(axis_coords));
}

inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Rational r(sqrt(num), sqrt(den));
  r.canonicalize();
  return r;
}

}  // namespace detail

inline Rational trace_form(const Matrix& x, const Matrix& y) {
  const Matrix p = x * y;
  Rational t = 0;
  for (std::size_t i = 0; i < p.rows(); ++i) t += p(i, i);
  return t;
}

/// F1 + V with (a1 + x)(b1 + y) = (ab + f(x,y))1 + ay + bx and f diagonal.
/// Designated axes: (1 + v_i/s_i)/2 for every d_i = s_i^2 a rational square,
/// plus (1 - v_i/s_i)/2 for the first such i; the "+" axes are the
/// generators, together with the "-" axis when there is only one of them.
/// Errors: DegenerateForm when some d_i = 0.
inline Algebra spin_factor(const std::vector<Rational>& diag) {
  const std::size_t n = diag.size();
  for (const auto& d : diag)
    if (sgn(d) == 0) throw Error(ErrorKind::DegenerateForm, "spin factor form has a zero diagonal entry");
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back(n == 1 ? "u" : n == 2 ? (i == 1 ? "u" : "v") : "v" + std::to_string(i));
  StructureConstants sc(n + 1);
  sc.set_product(0, 0, unit_vector(n + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    sc.set_product(0, i, unit_vector(n + 1, i));
    sc.set_product(i, i, scale(diag[i - 1], unit_vector(n + 1, 0)));
  }
  std::vector<Vector> axes, gens;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto s = detail::rational_sqrt(diag[i - 1]);
    if (!s) continue;
    Vector plus = zero_vector(n + 1);
    plus[0] = kHalf;
    plus[i] = kHalf / *s;
    Vector minus = plus;
    minus[i] = -minus[i];
    axes.push_back(plus);
    gens.push_back(plus);
    if (gens.size() == 1) axes.push_back(minus);
  }
  if (gens.size() == 1) gens.push_back(axes[1]);
  std::string name = "spin(";
  for (std::size_t i = 0; i < n; ++i) name += (i ? "," : "") + to_string(diag[i]);
  return make_algebra(name + ")", std::move(names), std::move(sc), std::move(axes), std::move(gens));
}

/// Parameters chosen when extending a basis of M_m to M_{m+1}.
struct QdParameters {
  std::size_t size = 0;  // m + 1
  std::size_t index = 0;  // i, 1-based
  Rational b, c, d;
};

struct QdBasis {
  std::vector<Matrix> matrices;
  std::vector<QdParameters> parameters;
};

/// Inductive quasi-definite basis of rank-one idempotents for M_n: from a
/// basis H of M_m, add F_i(b_i, d_i), F_i(c_i, d_i) for i = 1..m and
/// e_{m+1,m+1}, where
///   F_i(b, d) = (1-d) e_ii + b e_{i,m+1} + d(1-d)/b e_{m+1,i} + d e_{m+1,m+1}.
/// b_i = 1, c_i = 2; d_i is the smallest integer >= 2 with 1/(1-d_i) not a
/// diagonal entry (H_k)_ii and d_i d_j != 1.
inline QdBasis qd_basis_matrices(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "matrix size must be positive");
  QdBasis out;
  out.matrices.push_back(detail::unit_matrix(1, 0, 0));
  for (std::size_t m = 1; m < n; ++m) {
    std::vector<Matrix> next;
    for (const auto& h : out.matrices) {
      Matrix e(m + 1, m + 1);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) e(i, j) = h(i, j);
      next.push_back(std::move(e));
    }
    std::vector<Rational> chosen_d;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational b = 1, c = 2;
      Rational d = 2;
      auto acceptable = [&](const Rational& cand) {
        if (sgn(cand) == 0 || cand == 1 || cand * cand == 1) return false;
        const Rational forbidden = 1 / (1 - cand);
        for (const auto& h : out.matrices)
          if (h(i, i) == forbidden) return false;
        return std::none_of(chosen_d.begin(), chosen_d.end(), [&](const Rational& dj) { return cand * dj == 1; });
      };
      while (!acceptable(d)) d += 1;
      chosen_d.push_back(d);
      for (const Rational& x : {b, c}) {
        Matrix f(m + 1, m + 1);
        f(i, i) = 1 - d;
        f(i, m) = x;
        f(m, i) = d * (1 - d) / x;
        f(m, m) = d;
        next.push_back(std::move(f));
      }
      out.parameters.push_back({m + 1, i + 1, b, c, d});
    }
    next.push_back(detail::unit_matrix(m + 1, m, m));
    out.matrices = std::move(next);
  }
  // rank-one idempotents, independent, pairwise trace values != 1
  const auto& hs = out.matrices;
  if (hs.size() != n * n) throw Error(ErrorKind::InvariantFailure, "wrong number of basis matrices");
  std::vector<Vector> flat;
  for (const auto& h : hs) {
    if (!(h * h == h) || rank(h) != 1) throw Error(ErrorKind::InvariantFailure, "basis matrix is not a rank-one idempotent");
    flat.push_back(detail::flatten(h));
  }
  if (rank(Matrix::from_rows(flat, n * n)) != n * n) throw Error(ErrorKind::InvariantFailure, "basis matrices are dependent");
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j)
      if (trace_form(hs[i], hs[j]) == 1) throw Error(ErrorKind::InvariantFailure, "pair with trace form value 1");
  return out;
}

/// M_n under X o Y = (XY + YX)/2 on the basis e_ij; designated axes are the
/// quasi-definite basis from qd_basis_matrices(n).
inline Algebra matrix_jordan(std::size_t n) {
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis.push_back(detail::unit_matrix(n, i, j));
      names.push_back(detail::index_name("e", i + 1, j + 1, n));
    }
  return detail::jordan_matrix_algebra("M" + std::to_string(n) + "+", basis, std::move(names),
                                       qd_basis_matrices(n).matrices);
}

inline std::vector<Element> qd_basis_matrix(std::size_t n) { return matrix_jordan(n).axes(); }

/// Element of matrix_jordan(n) with the coordinates of a matrix.
inline Element matrix_element(const Algebra& mn, const Matrix& m) { return mn.element(detail::flatten(m)); }

/// Symmetric n x n matrices on the basis e_ii, e_ij + e_ji (i < j). Designated
/// axes: e_ii and (e_i + e_j)(e_i + e_j)^T / 2.
inline Algebra sym_jordan(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::DimensionMismatch, "H_n needs n >= 2");
  std::vector<Matrix> basis, axes;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back(detail::unit_matrix(n, i, i));
    names.push_back(detail::index_name("s", i + 1, i + 1, n));
    axes.push_back(detail::unit_matrix(n, i, i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      basis.push_back(detail::unit_matrix(n, i, j) + detail::unit_matrix(n, j, i));
      names.push_back(detail::index_name("s", i + 1, j + 1, n));
      Vector v = zero_vector(n);
      v[i] = v[j] = 1;
      axes.push_back(detail::outer(v, kHalf));
    }
  return detail::jordan_matrix_algebra("H" + std::to_string(n), basis, std::move(names), axes);
}

/// Symmetric matrices with zero row sums, on the basis a_ij = (e_i - e_j)(e_i - e_j)^T / 2
/// for i < j; every basis element is a designated axis.
inline Algebra sym_jordan_prime(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::DimensionMismatch, "H_n' needs n >= 2");
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = zero_vector(n);
      v[i] = 1;
      v[j] = -1;
      basis.push_back(detail::outer(v, kHalf));
      names.push_back(detail::index_name("a", i + 1, j + 1, n));
    }
  for (const auto& x : basis)
    for (const auto& y : basis) {
      const Matrix p = detail::jordan_product(x, y);
      for (std::size_t r = 0; r < n; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < n; ++c) s += p(r, c);
        if (sgn(s) != 0) throw Error(ErrorKind::InvariantFailure, "product leaves the zero-row-sum matrices");
      }
    }
  return detail::jordan_matrix_algebra("H" + std::to_string(n) + "'", basis, std::move(names), basis);
}

struct MatsuoInput {
  std::size_t degree = 0;
  std::vector<Permutation> involutions;
  Rational eta = Rational(1, 2);
};

struct MatsuoAlgebra {
  Algebra algebra;
  Matrix expected_gram;  // (c,c) = 1, 0 for |cd| = 2, eta/2 for |cd| = 3
};

/// Span of D with c.c = c, c.d = 0 for |cd| = 2, c.d = eta/2 (c + d - c^d)
/// for |cd| = 3. Errors: NotInvolution, BadProductOrder (order > 3 or c^d
/// outside D), InvariantFailure (repeated involution).
inline MatsuoAlgebra matsuo(const MatsuoInput& input) {
  const auto& d = input.involutions;
  const std::size_t k = d.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (d[i].degree() != input.degree) throw Error(ErrorKind::DimensionMismatch, "involution of the wrong degree");
    if (d[i].order() != 2) throw Error(ErrorKind::NotInvolution, d[i].cycles() + " has order " + std::to_string(d[i].order()));
    for (std::size_t j = 0; j < i; ++j)
      if (d[i] == d[j]) throw Error(ErrorKind::InvariantFailure, "involution " + d[i].cycles() + " is listed twice");
  }
  const bool transpositions = std::all_of(d.begin(), d.end(), [](const Permutation& p) {
    std::size_t moved = 0;
    for (std::size_t x = 0; x < p.degree(); ++x) moved += p(x) != x;
    return moved == 2;
  });
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    if (transpositions) {
      std::size_t lo = d[i].degree(), hi = 0;
      for (std::size_t x = 0; x < d[i].degree(); ++x)
        if (d[i](x) != x) lo = std::min(lo, x), hi = std::max(hi, x);
      names.push_back(detail::index_name("t", lo + 1, hi + 1, input.degree));
    } else {
      names.push_back("d" + std::to_string(i + 1));
    }
  }
  StructureConstants sc(k);
  Matrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const std::size_t order = (d[i] * d[j]).order();
      Vector product = zero_vector(k);
      if (order == 1) {
        product[i] = 1;
        gram(i, j) = 1;
      } else if (order == 3) {
        const auto conj = d[i].conjugate_by(d[j]);
        const auto it = std::find(d.begin(), d.end(), conj);
        if (it == d.end())
          throw Error(ErrorKind::BadProductOrder, d[i].cycles() + "^" + d[j].cycles() + " is not in the involution set");
        const Rational h = input.eta / 2;
        product[i] += h;
        product[j] += h;
        product[static_cast<std::size_t>(it - d.begin())] -= h;
        gram(i, j) = gram(j, i) = h;
      } else if (order != 2) {
        throw Error(ErrorKind::BadProductOrder,
                    "|" + d[i].cycles() + " " + d[j].cycles() + "| = " + std::to_string(order));
      }
      sc.set_product(i, j, product);
    }
  std::vector<Vector> axes;
  for (std::size_t i = 0; i < k; ++i) axes.push_back(unit_vector(k, i));
  std::string name = "Matsuo(eta=" + to_string(input.eta) + ")";
  return {make_algebra(std::move(name), std::move(names), std::move(sc), std::move(axes)), std::move(gram)};
}

/// All transpositions of S_n in lexicographic order (1 2), (1 3), ..., (n-1 n).
inline MatsuoInput symmetric_group_transpositions(std::size_t n, Rational eta = Rational(1, 2)) {
  MatsuoInput in{n, {}, std::move(eta)};
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) in.involutions.push_back(Permutation::transposition(n, i, j));
  return in;
}

/// The 3-dimensional algebra on a, b, s with a^2 = a, b^2 = b,
/// ab = s + (a + b)/2 and s v = pi v for v in {a, b, s}, pi = (alpha - 1)/2.
/// Designated axes a, b and, when alpha != 1, x_a(b) = s/pi - a; generators a, b.
inline Algebra two_gen_algebra(const Rational& alpha) {
  const Rational pi = (alpha - 1) / 2;
  StructureConstants sc(3);
  sc.set_product(0, 0, {1, 0, 0});
  sc.set_product(1, 1, {0, 1, 0});
  sc.set_product(0, 1, {kHalf, kHalf, 1});
  sc.set_product(2, 0, {pi, 0, 0});
  sc.set_product(2, 1, {0, pi, 0});
  sc.set_product(2, 2, {0, 0, pi});
  std::vector<Vector> axes{{1, 0, 0}, {0, 1, 0}};
  if (sgn(pi) != 0) axes.push_back({-1, 0, 1 / pi});
  return make_algebra("B(" + to_string(alpha) + ")", {"a", "b", "s"}, std::move(sc), std::move(axes),
                      {{1, 0, 0}, {0, 1, 0}});
}

/// phi (a coordinate map A -> B, columns = images of A's basis) preserves
/// products of basis pairs and transports the forms.
inline bool is_isomorphism(const Matrix& phi, const GramForm& ga, const GramForm& gb) {
  const Algebra& a = ga.algebra;
  const Algebra& b = gb.algebra;
  if (phi.rows() != b.dim() || phi.cols() != a.dim() || a.dim() != b.dim() || rank(phi) != a.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Element xi = b.element(phi.column(i)), xj = b.element(phi.column(j));
      if (b.element(phi * (a.basis(i) * a.basis(j)).coords()) != xi * xj) return false;
      if (ga(a.basis(i), a.basis(j)) != gb(xi, xj)) return false;
    }
  return true;
}

/// The linear map a_ij -> (i j) from H_n' to M_{1/2}(S_n, transpositions).
inline Matrix hn_prime_to_matsuo_map(std::size_t n) {
  const Algebra h = sym_jordan_prime(n);
  const Algebra m = matsuo(symmetric_group_transpositions(n)).algebra;
  Matrix phi(m.dim(), h.dim());
  for (std::size_t col = 0; col < h.dim(); ++col) {
    const std::string target = "t" + h.basis_names()[col].substr(1);
    const auto it = std::find(m.basis_names().begin(), m.basis_names().end(), target);
    phi(static_cast<std::size_t>(it - m.basis_names().begin()), col) = 1;
  }
  return phi;
}

inline bool hn_prime_matsuo_isomorphism_check(std::size_t n, std::optional<Matrix> correspondence = std::nullopt) {
  const Algebra h = sym_jordan_prime(n);
  const auto m = matsuo(symmetric_group_transpositions(n));
  const GramForm gh = frobenius_projection(h, h.axes());
  const GramForm gm{m.algebra, m.expected_gram};
  return is_isomorphism(correspondence ? *correspondence : hn_prime_to_matsuo_map(n), gh, gm);
}

}  // namespace axial
