#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "axial.hpp"

namespace axial::testing {

inline Rational Q(const char* s) { return parse_rational(s); }

inline Vector V(std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

inline Matrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Vector> rs;
  for (auto r : rows) rs.push_back(V(r));
  return Matrix::from_rows(rs, rs.empty() ? 0 : rs.front().size());
}

inline std::mt19937_64 seeded(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

/// Low-rank variant so kernels and inconsistent systems show up.
inline Matrix random_low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(rng, r, k, 2) * random_matrix(rng, k, c, 2);
}

struct Named {
  std::string label;
  Algebra algebra;
};

/// One instance of every construction, small enough for exhaustive checks.
inline std::vector<Named> constructed_algebras() {
  return {
      {"spin(1)", spin_factor({Rational(1)})},
      {"spin(1,1)", spin_factor({Rational(1), Rational(1)})},
      {"spin(1,4,9)", spin_factor({Rational(1), Rational(4), Rational(9)})},
      {"M1", matrix_jordan(1)},
      {"M2", matrix_jordan(2)},
      {"M3", matrix_jordan(3)},
      {"H2", sym_jordan(2)},
      {"H3", sym_jordan(3)},
      {"H3'", sym_jordan_prime(3)},
      {"H4'", sym_jordan_prime(4)},
      {"Matsuo S3", matsuo(symmetric_group_transpositions(3)).algebra},
      {"Matsuo S4", matsuo(symmetric_group_transpositions(4)).algebra},
      {"B(1/2)", two_gen_algebra(Rational(1, 2))},
      {"B(1/4)", two_gen_algebra(Rational(1, 4))},
  };
}

}  // namespace axial::testing

namespace axial {

inline void PrintTo(const Element& x, std::ostream* os) { *os << detail::coords_string(x); }

inline void PrintTo(const Matrix& m, std::ostream* os) { *os << to_json(m).dump(); }

}  // namespace axial
