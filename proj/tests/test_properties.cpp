#include <gtest/gtest.h>

#include "support.hpp"

using namespace axial;
using namespace axial::testing;

namespace {

struct Sample {
  std::string label;
  Element a, b;
  GramForm g;
};

/// Random pairs from the axis pools of every construction.
std::vector<Sample> sampled_pairs(std::mt19937_64& rng, std::size_t per_algebra) {
  std::vector<Sample> out;
  for (const auto& [label, alg] : constructed_algebras()) {
    const auto g = frobenius_projection(alg, alg.axes());
    const auto pool = axis_pool(alg);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t k = 0; k < per_algebra; ++k) out.push_back({label, pool[pick(rng)], pool[pick(rng)], g});
  }
  return out;
}

}  // namespace

TEST(Identities, PairFormulas) {
  auto rng = seeded(51);
  const auto samples = sampled_pairs(rng, 20);
  ASSERT_GE(samples.size(), 200u);
  std::size_t with_x = 0;
  for (const auto& s : samples) {
    const auto r = pair_identity_suite(s.a, s.b, s.g);
    EXPECT_TRUE(r.eq_abb && r.eq_aba && r.eq_abab) << s.label;
    EXPECT_TRUE(r.eq_a0_sq && r.eq_ahalf_sq && r.eq_a0_ahalf) << s.label;
    EXPECT_TRUE(r.a0_half_trivial) << s.label;
    if (r.x_applicable) {
      ++with_x;
      EXPECT_TRUE(r.x_idempotent && r.x_norm_one && r.x_in_a0 && r.x_unit_on_pair) << s.label;
    }
  }
  EXPECT_GE(with_x, 100u);
}

TEST(Identities, EvenPartAssociatesWithAxis) {
  auto rng = seeded(52);
  std::size_t checked = 0;
  for (const auto& [label, alg] : constructed_algebras()) {
    const auto pool = axis_pool(alg);
    for (int t = 0; t < 20; ++t) {
      const Element& a = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      const auto dec = eigendecompose(a);
      const Element x = random_element(alg, rng);
      const Element z = random_in(alg, dec.v0.sum(dec.v1), rng);
      EXPECT_EQ(a * (x * z), (a * x) * z) << label;
      ++checked;
    }
  }
  EXPECT_GE(checked, 200u);
}

TEST(Identities, TripleFormula) {
  auto rng = seeded(53);
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
  for (const auto& [label, alg] : constructed_algebras()) {
    if (label.rfind("spin", 0) != 0 && label.rfind("Matsuo", 0) != 0) continue;
    const auto g = frobenius_projection(alg, alg.axes());
    auto pool = axis_pool(alg);
    if (pool.size() < 3) continue;
    for (int t = 0; t < 12; ++t) {
      std::shuffle(pool.begin(), pool.end(), rng);
      try {
        const auto r = triple_form_identity(pool[0], pool[1], pool[2], g);
        ++checked;
        if (!r.equal) counterexamples.push_back(label + ": " + to_string(r.lhs) + " vs " + to_string(r.rhs));
      } catch (const Error& e) {
        EXPECT_TRUE(e.kind() == ErrorKind::FormValueOne || e.kind() == ErrorKind::DegenerateDenominator) << e.what();
      }
    }
  }
  EXPECT_GE(checked, 20u);
  EXPECT_TRUE(counterexamples.empty()) << counterexamples.front();
}

TEST(Identities, TripleFormulaOnRandomSpinAxes) {
  // Axes (1 + w)/2 with w = (p u + q v)/r on the unit circle of the form.
  const Algebra s = spin_factor({Rational(1), Rational(1)});
  const auto g = frobenius_projection(s, s.axes());
  const std::vector<std::array<int, 3>> triples = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {-3, 4, 5}, {7, -24, 25},
                                                   {20, 21, 29}, {-12, -5, 13}, {0, 1, 1}, {1, 0, 1}, {-4, 3, 5}};
  std::vector<Element> axes;
  for (const auto& [p, q, r] : triples) axes.push_back(s.element({Rational(1, 2), Rational(p, 2 * r), Rational(q, 2 * r)}));
  for (auto& x : axes) {
    Vector c = x.coords();
    for (auto& v : c) v.canonicalize();
    x = s.element(c);
    ASSERT_TRUE(check_axis(x).is_primitive_axis());
  }
  std::size_t checked = 0;
  for (std::size_t i = 0; i < axes.size(); ++i)
    for (std::size_t j = 0; j < axes.size(); ++j)
      for (std::size_t k = j + 1; k < axes.size(); ++k) {
        if (i == j || i == k) continue;
        try {
          EXPECT_TRUE(triple_form_identity(axes[i], axes[j], axes[k], g).equal);
          ++checked;
        } catch (const Error& e) {
          EXPECT_TRUE(e.kind() == ErrorKind::FormValueOne || e.kind() == ErrorKind::DegenerateDenominator);
        }
      }
  EXPECT_GE(checked, 100u);
}
