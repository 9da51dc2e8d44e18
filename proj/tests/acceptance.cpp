// Acceptance gate: one line per criterion, exact arithmetic throughout.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "axial/cli.hpp"
#include "support.hpp"

using namespace axial;
using namespace axial::testing;

namespace {

/// Collects failed checks for one criterion.
class Checks {
 public:
  void require(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::size_t count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

GramForm form_of(const Algebra& alg) { return frobenius_projection(alg, alg.axes()); }

bool orthogonal_decomposition(const std::vector<Element>& ys, const Element& unit) {
  Element sum = unit.algebra().zero();
  for (std::size_t i = 0; i < ys.size(); ++i) {
    sum = sum + ys[i];
    for (std::size_t j = i + 1; j < ys.size(); ++j)
      if (!(ys[i] * ys[j]).is_zero()) return false;
  }
  return sum == unit;
}

void spin_reproduction(Checks& c) {
  const Algebra s = spin_factor({Rational(1), Rational(1)});
  const Element one = s.basis(0), u = s.basis(1), v = s.basis(2);
  c.require(u * u == one && v * v == one && (u * v).is_zero() && one * u == u, "spin table");
  const auto proj = form_of(s);
  const auto sol = frobenius_solve(s, s.axes());
  c.require(proj.gram == M({{"2", "0", "0"}, {"0", "2", "0"}, {"0", "0", "2"}}), "spin Gram diag(2,2,2)");
  c.require(sol.form.gram == proj.gram && sol.solution_space_dim == 0, "spin Frobenius constructions agree");
  for (const auto& a : s.axes()) c.require(check_axis(a).is_primitive_axis(), "spin axis fusion");
  const Element a = (one + u) / 2, b = (one + v) / 2;
  const auto run = capacity_decomposition(s, {a, b}, one, proj);
  c.require(run.summands == std::vector<Element>{(one + u) / 2, (one - u) / 2}, "spin capacity summands");
  c.require(orthogonal_decomposition(run.summands, one), "spin summands orthogonal with sum 1");
}

void matrix_reproduction(Checks& c) {
  const Algebra m2 = matrix_jordan(2);
  const Element e11 = m2.basis(0), e12 = m2.basis(1);
  c.require(form_of(m2)(e11, e11 + e12) == 1, "(e11, e11+e12) = 1");
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto qd = qd_basis_matrices(n);
    c.require(qd.matrices.size() == n * n, "qd basis size");
    std::vector<Vector> flat;
    for (const auto& x : qd.matrices) {
      c.require(x * x == x && rank(x) == 1, "qd element is a rank-1 idempotent");
      flat.push_back(detail::flatten(x));
    }
    c.require(SubspaceBasis::span(n * n, flat).dim() == n * n, "qd basis independent");
    for (std::size_t i = 0; i < qd.matrices.size(); ++i)
      for (std::size_t j = i + 1; j < qd.matrices.size(); ++j)
        c.require(trace_form(qd.matrices[i], qd.matrices[j]) != 1, "qd form value != 1");
  }
  for (std::size_t n = 2; n <= 3; ++n) {
    const Algebra mn = matrix_jordan(n);
    const auto unit = find_unit(mn);
    const auto run = capacity_decomposition(mn, mn.axes(), *unit, form_of(mn));
    c.require(run.capacity() == n, "M_n capacity = n");
    c.require(orthogonal_decomposition(run.summands, *unit), "M_n summands orthogonal");
  }
}

void matsuo_reproduction(Checks& c) {
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto m = matsuo(symmetric_group_transpositions(n));
    const auto g = form_of(m.algebra);
    c.require(g.gram == m.expected_gram, "Matsuo Gram equals prediction");
    for (std::size_t i = 0; i < g.gram.rows(); ++i)
      for (std::size_t j = 0; j < g.gram.cols(); ++j) {
        const Rational& x = g.gram(i, j);
        c.require(i == j ? x == 1 : (x == 0 || x == Rational(1, 4)), "Matsuo Gram values");
      }
  }
  const Algebra m = matsuo(symmetric_group_transpositions(3)).algebra;
  const auto axes = m.axes();
  const Element unit = Rational(2, 3) * (axes[0] + axes[1] + axes[2]);
  c.require(find_unit(m) == unit, "S_3 unit (2/3)(a+b+c)");
  const auto g = form_of(m);
  c.require(capacity_decomposition(m, axes, unit, g).capacity() == 2, "S_3 capacity 2");
  c.require(x_of(axes[0], axes[1], g) == x_of(axes[0], axes[2], g), "x_a(b) = x_a(c)");
}

void identity_suite(Checks& c) {
  auto rng = seeded(101);
  std::size_t pairs = 0, x_pairs = 0, even_checks = 0;
  for (const auto& [label, alg] : constructed_algebras()) {
    const auto g = form_of(alg);
    const auto pool = axis_pool(alg);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int t = 0; t < 20; ++t) {
      const Element &a = pool[pick(rng)], &b = pool[pick(rng)];
      const auto r = pair_identity_suite(a, b, g);
      c.require(r.eq_abb && r.eq_aba && r.eq_abab, label + ": two-generated products");
      c.require(r.eq_a0_sq && r.eq_ahalf_sq && r.eq_a0_ahalf, label + ": component products");
      ++pairs;
      if (r.x_applicable) {
        c.require(r.x_idempotent && r.x_norm_one && r.x_unit_on_pair, label + ": x_a(b) conclusions");
        ++x_pairs;
      }
      const auto dec = eigendecompose(a);
      const Element x = random_element(alg, rng), z = random_in(alg, dec.v0.sum(dec.v1), rng);
      c.require(a * (x * z) == (a * x) * z, label + ": a(xz) = (ax)z for z in A_0 + A_1");
      ++even_checks;
    }
  }
  c.require(pairs >= 200 && even_checks >= 200 && x_pairs > 0, "sample sizes");
}

void triple_formula(Checks& c) {
  const Algebra m = matsuo(symmetric_group_transpositions(3)).algebra;
  const auto axes = m.axes();
  const auto t = triple_form_identity(axes[0], axes[1], axes[2], form_of(m));
  c.require(t.lhs == 1 && t.rhs == 1, "Matsuo S_3 triple equals 1");
  auto rng = seeded(102);
  std::size_t checked = 0;
  for (const auto& [label, alg] : constructed_algebras()) {
    if (label.rfind("spin", 0) != 0 && label.rfind("Matsuo", 0) != 0) continue;
    const auto g = form_of(alg);
    auto pool = axis_pool(alg);
    if (pool.size() < 3) continue;
    for (int k = 0; k < 10; ++k) {
      std::shuffle(pool.begin(), pool.end(), rng);
      try {
        const auto r = triple_form_identity(pool[0], pool[1], pool[2], g);
        c.require(r.equal, label + ": triple formula " + to_string(r.lhs) + " vs " + to_string(r.rhs));
        ++checked;
      } catch (const Error& e) {
        c.require(e.kind() == ErrorKind::FormValueOne || e.kind() == ErrorKind::DegenerateDenominator, e.what());
      }
    }
  }
  c.require(checked >= 20, "at least 20 nondegenerate triples");
}

void unit_construction(Checks& c) {
  std::size_t applicable = 0;
  for (const auto& [label, alg] : constructed_algebras()) {
    const auto g = form_of(alg);
    const auto unit = find_unit(alg);
    if (unit)
      for (const auto& a : axis_pool(alg)) c.require(g(*unit, a) == 1, label + ": (e,a) = 1");
    for (const auto& a : alg.axes()) {
      const auto sub = restrict_to(alg, eigendecompose(a).v0, {}, "A0");
      const auto e0 = find_unit(sub.algebra);
      if (!e0) continue;
      for (const auto& b : alg.axes()) c.require(g(sub.lift(*e0) + a, b) == 1, label + ": (e_0(a)+a, b) = 1");
    }
    if (!is_semisimple(alg, g) || !quasi_definite_basis_check(alg.axes(), g).ok) continue;
    ++applicable;
    c.require(build_unit(alg, alg.axes(), g) == unit, label + ": recursive unit");
  }
  c.require(applicable >= 10, "applicable algebras");
}

void radical_behavior(Checks& c) {
  const Algebra b0 = two_gen_algebra(Rational(0)), bh = two_gen_algebra(Rational(1, 2));
  c.require(!radical(b0, frobenius_solve(b0, b0.axes()).form).is_zero(), "B(0) radical nonzero");
  c.require(is_semisimple(bh, frobenius_solve(bh, bh.axes()).form), "B(1/2) semisimple");
  std::size_t applicable = 0;
  for (const auto& [label, alg] : constructed_algebras()) {
    const auto g = form_of(alg);
    const auto rad = radical(alg, g);
    for (const auto& a : alg.axes()) {
      std::vector<Element> b0_axes;
      try {
        b0_axes = a0_axis_basis(a, alg.axes(), g);
      } catch (const Error&) {
        continue;
      }
      const auto v0 = eigendecompose(a).v0;
      const auto sub = restrict_to(alg, v0, {}, "A0");
      std::vector<Vector> lifted;
      for (const auto& v : kernel_basis(restrict_form(g, sub).gram).vectors())
        lifted.push_back(sub.lift(sub.algebra.element(v)).coords());
      c.require(SubspaceBasis::span(alg.dim(), lifted) == rad.intersect(v0), label + ": R(A_0(a)) = R(A) meet A_0(a)");
      ++applicable;
    }
  }
  c.require(applicable > 0, "applicable axes");
}

void isomorphism(Checks& c) {
  c.require(hn_prime_matsuo_isomorphism_check(3), "H_3' = Matsuo(S_3)");
  c.require(hn_prime_matsuo_isomorphism_check(4), "H_4' = Matsuo(S_4)");
}

void property_integrity(Checks& c) {
  for (const auto& [label, alg] : constructed_algebras()) {
    c.require(jordan_identity_check(alg), label + ": Jordan identity");
    const auto g = form_of(alg);
    for (const auto& a : axis_pool(alg)) {
      const auto dec = eigendecompose(a);
      const Matrix tau = miyamoto(dec);
      c.require(tau * tau == Matrix::identity(alg.dim()), label + ": tau^2 = 1");
      for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i; j < alg.dim(); ++j)
          c.require(apply(tau, alg.basis(i) * alg.basis(j)) == apply(tau, alg.basis(i)) * apply(tau, alg.basis(j)),
                    label + ": tau is an automorphism");
      const SubspaceBasis* spaces[] = {&dec.v0, &dec.v_half, &dec.v1};
      for (int p = 0; p < 3; ++p)
        for (int q = p + 1; q < 3; ++q)
          for (const auto& x : spaces[p]->vectors())
            for (const auto& y : spaces[q]->vectors())
              c.require(g(alg.element(x), alg.element(y)) == 0, label + ": eigenspaces orthogonal");
    }
  }
}

int run_cli(const std::vector<std::string>& args, Report* report = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  if (report) *report = parse_report(out.str());
  return code;
}

void cli_contract(Checks& c) {
  const std::vector<std::pair<std::vector<std::string>, Algebra>> factories = {
      {{"construct", "spin", "--diag", "1,1"}, spin_factor({Rational(1), Rational(1)})},
      {{"construct", "matrix", "--n", "3"}, matrix_jordan(3)},
      {{"construct", "hn", "--n", "3"}, sym_jordan(3)},
      {{"construct", "hnprime", "--n", "4"}, sym_jordan_prime(4)},
      {{"construct", "matsuo", "--sn", "4"}, matsuo(symmetric_group_transpositions(4)).algebra},
      {{"construct", "twogen", "--alpha", "1/2"}, two_gen_algebra(Rational(1, 2))},
      {{"construct", "qdbasis", "--n", "2"}, matrix_jordan(2)},
  };
  for (const auto& [args, direct] : factories) {
    Report built;
    c.require(run_cli(args, &built) == 0, args[1] + ": construct");
    const Algebra parsed = parse_algebra(json::parse(serialize_algebra(direct).dump()));
    c.require(parse_algebra(built.findings["algebra"]).dim() == direct.dim(), args[1] + ": constructed file");
    c.require(cli::analyze_report(parse_algebra(built.findings["algebra"])) == cli::analyze_report(direct),
              args[1] + ": analyze after round trip");
    c.require(cli::analyze_report(parsed) == cli::analyze_report(direct), args[1] + ": serialize/parse");
  }
  const std::string dir = AXIAL_FIXTURES;
  const std::vector<std::pair<std::string, int>> corpus = {
      {"spin3.json", 0},        {"matsuo_s3.json", 0},  {"m2_identity_axis.json", 1}, {"bad_rational.json", 2},
      {"asymmetric.json", 2},   {"not_idempotent.json", 2}, {"malformed.json", 2},    {"short_table.json", 2},
  };
  for (const auto& [name, expected] : corpus) {
    c.require(run_cli({"analyze", dir + "/" + name}) == expected, name + ": analyze exit code");
    c.require(run_cli({"verify", "identities", dir + "/" + name, "--pairs", "all"}) == expected,
              name + ": verify exit code");
  }
  Report cap;
  c.require(run_cli({"capacity", dir + "/matsuo_s3.json"}, &cap) == 0 && cap.findings["capacity"] == 2,
            "capacity on Matsuo fixture");
  c.require(run_cli({"analyze", dir + "/spin3.json", "--bogus"}) == 2, "unknown flag exit code");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Checks&)>>> criteria = {
      {"spin-factor reproduction", spin_reproduction},
      {"matrix Jordan reproduction", matrix_reproduction},
      {"Matsuo reproduction", matsuo_reproduction},
      {"identity suite", identity_suite},
      {"triple formula", triple_formula},
      {"unit construction", unit_construction},
      {"radical behavior", radical_behavior},
      {"isomorphism", isomorphism},
      {"property suite integrity", property_integrity},
      {"CLI contract", cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks c;
    std::string error;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = c.ok() && error.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << c.count()
              << " checks)";
    if (!error.empty()) std::cout << " exception: " << error;
    if (!c.failures().empty()) std::cout << " first failure: " << c.failures().front();
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
