#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/axial.hpp"
#include "axial/error.hpp"

namespace axial {

/// b = a0 + a_half + alpha a relative to the primitive axis a.
struct PairDecomposition {
  Element a;
  Element b;
  Rational alpha;
  Element a0;
  Element a_half;
};

namespace detail {

inline EigDecomposition primitive_decomposition(const Element& a) {
  if (!is_idempotent(a) || a.is_zero()) throw Error(ErrorKind::NotPrimitiveAxis, "element is not a nonzero idempotent");
  auto dec = eigendecompose(a);
  if (!dec.semisimple() || dec.v1.dim() != 1)
    throw Error(ErrorKind::NotPrimitiveAxis, "element is not a primitive semisimple idempotent");
  return dec;
}

inline std::string coords_string(const Element& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords().size(); ++i) s += (i ? ", " : "") + to_string(x[i]);
  return s + ")";
}

inline void push_unique(std::vector<Element>& list, const Element& x) {
  if (std::find(list.begin(), list.end(), x) == list.end()) list.push_back(x);
}

}  // namespace detail

inline PairDecomposition pair_decompose(const Element& a, const Element& b, const GramForm& g) {
  const auto dec = detail::primitive_decomposition(a);
  const auto parts = split(dec, b);
  PairDecomposition p{a, b, g(a, b), parts.zero, parts.half};
  if (parts.one != p.alpha * a)
    throw Error(ErrorKind::InvariantFailure, "A_1(a)-component of b disagrees with the form value (a,b)");
  return p;
}

/// x_a(b) = (2ab - (a,b)a - b) / ((a,b) - 1): the normalized A_0(a)-component
/// of b. Errors: SameAxis, FormValueOne, InvariantFailure when the result is
/// not a nonzero idempotent in A_0(a) with (x,x) = 1.
inline Element x_of(const Element& a, const Element& b, const GramForm& g) {
  if (a == b) throw Error(ErrorKind::SameAxis, "x_a(b) needs distinct axes");
  const Rational alpha = g(a, b);
  if (alpha == 1) throw Error(ErrorKind::FormValueOne, "(a,b) = 1 for a = " + detail::coords_string(a) +
                                                           ", b = " + detail::coords_string(b));
  const Element x = (2 * (a * b) - alpha * a - b) / Rational(alpha - 1);
  if (x.is_zero() || !is_idempotent(x) || g(x, x) != 1 || !(a * x).is_zero())
    throw Error(ErrorKind::InvariantFailure, "x_a(b) is not a normalized idempotent in A_0(a)");
  return x;
}

/// Exact checks of the two-axis identities for a pair of primitive axes.
struct PairIdentityReport {
  Rational alpha;
  bool vacuous = false;  // a == b
  // (ab)b, (ab)a, (ab)(ab)
  bool eq_abb = false;
  bool eq_aba = false;
  bool eq_abab = false;
  // a0^2, a_half^2, a0 a_half
  bool eq_a0_sq = false;
  bool eq_ahalf_sq = false;
  bool eq_a0_ahalf = false;
  // idempotent x_a(b): applicable when (a,b) != 1 and a != b
  bool x_applicable = false;
  bool x_idempotent = true;
  bool x_norm_one = true;
  bool x_in_a0 = true;
  bool x_unit_on_pair = true;
  // (a,b) = 0 iff b in A_0(a); only guaranteed for quasi-definite algebras
  bool zero_axis = false;
  // A_0(a) meet A_{1/2}(b) = 0 when (a,b) not in {0, 1}
  bool a0_half_applicable = false;
  bool a0_half_trivial = true;

  bool identities_hold() const {
    return eq_abb && eq_aba && eq_abab && eq_a0_sq && eq_ahalf_sq && eq_a0_ahalf && x_idempotent && x_norm_one &&
           x_in_a0 && x_unit_on_pair && a0_half_trivial;
  }
};

inline PairIdentityReport pair_identity_suite(const Element& a, const Element& b, const GramForm& g) {
  const auto dec_a = detail::primitive_decomposition(a);
  detail::primitive_decomposition(b);
  const auto pd = pair_decompose(a, b, g);
  const Rational& alpha = pd.alpha;
  PairIdentityReport r;
  r.alpha = alpha;
  r.vacuous = a == b;
  const Element ab = a * b;
  r.eq_abb = ab * b == kHalf * (alpha * b + ab);
  r.eq_aba = ab * a == kHalf * (alpha * a + ab);
  r.eq_abab = ab * ab == Rational(alpha / 4) * (a + b + 2 * ab);
  r.eq_a0_sq = pd.a0 * pd.a0 == Rational(1 - alpha) * pd.a0;
  r.eq_ahalf_sq = pd.a_half * pd.a_half == alpha * pd.a0 + Rational(alpha - alpha * alpha) * a;
  r.eq_a0_ahalf = pd.a0 * pd.a_half == Rational((1 - alpha) / 2) * pd.a_half;

  r.x_applicable = !r.vacuous && alpha != 1;
  if (r.x_applicable) {
    const Element x = (2 * ab - alpha * a - b) / Rational(alpha - 1);
    r.x_idempotent = !x.is_zero() && is_idempotent(x);
    r.x_norm_one = g(x, x) == 1;
    r.x_in_a0 = dec_a.v0.contains(x.coords());
    const Element u = a + x;
    const auto pair = subalgebra_closure(a.algebra(), {a, b});
    r.x_unit_on_pair = std::all_of(pair.vectors().begin(), pair.vectors().end(), [&](const Vector& v) {
      const Element y(a.algebra(), v);
      return u * y == y;
    });
  }
  r.zero_axis = (alpha == 0) == dec_a.v0.contains(b.coords());
  r.a0_half_applicable = alpha != 0 && alpha != 1;
  if (r.a0_half_applicable) r.a0_half_trivial = dec_a.v0.intersect(eigendecompose(b).v_half).is_zero();
  return r;
}

struct TripleFormResult {
  Rational lhs;
  Rational rhs;
  bool equal = false;
  Rational alpha, beta, gamma, phi;
};

/// (x_a(b), x_a(c)) against (-alpha gamma - beta + 2 phi) / (-alpha gamma + alpha + gamma - 1)
/// with alpha = (a,b), beta = (b,c), gamma = (a,c), phi = (ab, c).
inline TripleFormResult triple_form_identity(const Element& a, const Element& b, const Element& c, const GramForm& g) {
  if (a == b || a == c || b == c) throw Error(ErrorKind::SameAxis, "triple needs pairwise distinct axes");
  TripleFormResult r;
  r.alpha = g(a, b);
  r.beta = g(b, c);
  r.gamma = g(a, c);
  r.phi = g(a * b, c);
  if (r.alpha == 1 || r.gamma == 1) throw Error(ErrorKind::FormValueOne, "(a,b) or (a,c) equals 1");
  const Rational den = -r.alpha * r.gamma + r.alpha + r.gamma - 1;
  if (sgn(den) == 0) throw Error(ErrorKind::DegenerateDenominator, "-alpha gamma + alpha + gamma - 1 = 0");
  r.lhs = g(x_of(a, b, g), x_of(a, c, g));
  r.rhs = (-r.alpha * r.gamma - r.beta + 2 * r.phi) / den;
  r.equal = r.lhs == r.rhs;
  return r;
}

/// B_0 = {x_a(y) : y in X \ {a}} without zeros and duplicates; its span is
/// asserted to be A_0(a). Errors: FormValueOne, RecursionBasisFailure.
inline std::vector<Element> a0_axis_basis(const Element& a, const std::vector<Element>& basis, const GramForm& g) {
  const auto dec = detail::primitive_decomposition(a);
  std::vector<Element> out;
  for (const auto& y : basis) {
    if (y == a) continue;
    if (g(a, y) == 1) throw Error(ErrorKind::FormValueOne, "(a,y) = 1 for y = " + detail::coords_string(y));
    const Element x = x_of(a, y, g);
    if (!x.is_zero()) detail::push_unique(out, x);
  }
  if (!(span_of(a.algebra(), out) == dec.v0))
    throw Error(ErrorKind::RecursionBasisFailure, "projected axes do not span A_0(a)");
  return out;
}

/// A product tree over generator indices.
class Word {
 public:
  static Word letter(std::size_t index) {
    Word w;
    w.letter_ = index;
    return w;
  }
  static Word product(Word left, Word right) {
    Word w;
    w.left_ = std::make_shared<const Word>(std::move(left));
    w.right_ = std::make_shared<const Word>(std::move(right));
    return w;
  }

  bool is_letter() const noexcept { return letter_.has_value(); }
  std::size_t index() const { return letter_.value(); }
  const Word& left() const { return *left_; }
  const Word& right() const { return *right_; }

  std::size_t length() const { return is_letter() ? 1 : left_->length() + right_->length(); }

  Element evaluate(const std::vector<Element>& gens) const {
    if (is_letter()) {
      if (index() >= gens.size()) throw Error(ErrorKind::UsageError, "word letter out of range");
      return gens[index()];
    }
    return left_->evaluate(gens) * right_->evaluate(gens);
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (is_letter()) return index() < names.size() ? names[index()] : "#" + std::to_string(index());
    auto side = [&](const Word& w) { return w.is_letter() ? w.to_string(names) : "(" + w.to_string(names) + ")"; };
    return side(*left_) + "*" + side(*right_);
  }

 private:
  std::optional<std::size_t> letter_;
  std::shared_ptr<const Word> left_, right_;
};

/// Parses products like "(a*b)*a" over the given names; '*' is left-associative.
inline Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorKind::ParseError, what + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  };
  std::function<Word()> expr;
  auto atom = [&]() -> Word {
    skip();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      Word w = expr();
      skip();
      if (pos >= text.size() || text[pos] != ')') throw fail("expected ')'");
      ++pos;
      return w;
    }
    const std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    if (start == pos) throw fail("expected a generator name");
    const std::string name = text.substr(start, pos - start);
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw fail("unknown generator \"" + name + "\"");
    return Word::letter(static_cast<std::size_t>(it - names.begin()));
  };
  expr = [&]() -> Word {
    Word w = atom();
    while (true) {
      skip();
      if (pos >= text.size() || text[pos] != '*') return w;
      ++pos;
      w = Word::product(std::move(w), atom());
    }
  };
  Word w = expr();
  skip();
  if (pos != text.size()) throw fail("trailing input");
  return w;
}

/// q = scale * (eval(w) + correction) is an axis, where correction is a
/// combination of strictly shorter words (already evaluated).
struct WordAxis {
  Element axis;
  Rational scale;
  Element correction;
};

/// For w = w1 w2 with q_i = s_i (w_i + c_i) axes:
///   q1 q2 = s1 s2 (w + c1 w2 + w1 c2 + c1 c2)
/// and x_{q1}(q2) = (2 q1 q2 - alpha q1 - q2) / (alpha - 1) closes the induction.
inline WordAxis word_to_axis(const Algebra& alg, const std::vector<Element>& gens, const Word& w, const GramForm& g) {
  if (w.is_letter()) {
    const Element q = w.evaluate(gens);
    detail::primitive_decomposition(q);
    return {q, Rational(1), alg.zero()};
  }
  const WordAxis l = word_to_axis(alg, gens, w.left(), g);
  const WordAxis r = word_to_axis(alg, gens, w.right(), g);
  const Element wl = w.left().evaluate(gens);
  const Element wr = w.right().evaluate(gens);
  const Element shorter = l.correction * wr + wl * r.correction + l.correction * r.correction;
  const Rational s12 = l.scale * r.scale;
  if (l.axis == r.axis) return {l.axis, s12, shorter};
  const Rational alpha = g(l.axis, r.axis);
  if (alpha == 1) throw Error(ErrorKind::FormValueOne, "(q1,q2) = 1 while reducing " + w.to_string({}));
  const Rational scale = 2 * s12 / (alpha - 1);
  const Element correction = shorter - (alpha * l.axis + r.axis) / Rational(2 * s12);
  const Element axis = x_of(l.axis, r.axis, g);
  if (axis != scale * (w.evaluate(gens) + correction))
    throw Error(ErrorKind::InvariantFailure, "word reduction bookkeeping mismatch");
  return {axis, scale, correction};
}

namespace detail {

/// Greedy independent subset with pairwise form values != 1.
inline std::vector<Element> select_qd_basis(const std::vector<Element>& candidates, const GramForm& g) {
  std::vector<Element> chosen;
  for (const auto& c : candidates) {
    std::vector<Element> trial = chosen;
    trial.push_back(c);
    if (span_of(c.algebra(), trial).dim() != trial.size()) continue;
    if (std::any_of(chosen.begin(), chosen.end(), [&](const Element& x) { return g(x, c) == 1; })) continue;
    chosen.push_back(c);
  }
  return chosen;
}

inline Element build_unit_rec(const Algebra& alg, const std::vector<Element>& basis, const GramForm& g, int depth) {
  if (alg.dim() == 0) return alg.zero();
  if (!radical(alg, g).is_zero()) throw Error(ErrorKind::NotSemisimple, "radical is nonzero at recursion depth " + std::to_string(depth));
  if (alg.dim() == 1) return basis.front();
  const Element& a = basis.front();
  const auto b0 = a0_axis_basis(a, basis, g);
  const SubspaceBasis v0 = eigendecompose(a).v0;
  if (v0.is_zero()) return a;
  const auto chosen = select_qd_basis(b0, g);
  if (chosen.size() != v0.dim())
    throw Error(ErrorKind::RecursionBasisFailure,
                "no quasi-definite basis of A_0(a) among projected axes at depth " + std::to_string(depth));
  const auto sub = restrict_to(alg, v0, chosen, alg.name() + "_0");
  const auto sub_g = restrict_form(g, sub);
  const Element e0 = build_unit_rec(sub.algebra, sub.algebra.axes(), sub_g, depth + 1);
  return sub.lift(e0) + a;
}

}  // namespace detail

/// Recursive unit construction e = e_0(a) + a, with e_0(a) the unit of A_0(a)
/// built the same way from the projected axes. Returns nullopt when the
/// candidate fails to act as a unit. Errors: NotBasisOfAxes, FormValueOne,
/// NotSemisimple, RecursionBasisFailure.
inline std::optional<Element> build_unit(const Algebra& alg, const std::vector<Element>& basis, const GramForm& g) {
  const auto qd = quasi_definite_basis_check(basis, g);
  if (!qd.ok)
    throw Error(ErrorKind::FormValueOne, "basis elements #" + std::to_string(qd.witness->first) + " and #" +
                                             std::to_string(qd.witness->second) + " have form value 1");
  const Element e = detail::build_unit_rec(alg, basis, g, 0);
  if (!acts_as_unit(e)) return std::nullopt;
  const auto direct = find_unit(alg);
  if (!direct || *direct != e) throw Error(ErrorKind::InvariantFailure, "recursive unit disagrees with the linear solve");
  return e;
}

struct PivotStep {
  Element pivot;
  std::vector<Element> projected;  // the next axis list
};

struct CapacityResult {
  std::vector<Element> summands;
  std::vector<PivotStep> pivot_trace;
  Element residual;

  std::size_t capacity() const { return summands.size(); }
};

/// Peels pairwise-orthogonal axes off the unit: take the first axis p of the
/// current list, subtract it, replace the list by the distinct nonzero
/// x_p(q). The count is the length of this decomposition, an upper bound on
/// the minimal one. Errors: NotUnit, FormValueOne, ResidualNonzero.
inline CapacityResult capacity_decomposition(const Algebra& alg, const std::vector<Element>& gens, const Element& unit,
                                             const GramForm& g) {
  Element::check_same(unit, alg.zero());
  if (!acts_as_unit(unit)) throw Error(ErrorKind::NotUnit, "given element is not the unit");
  std::vector<Element> list;
  for (const auto& x : gens) detail::push_unique(list, x);
  CapacityResult out{{}, {}, unit};
  while (!list.empty()) {
    const Element p = list.front();
    out.summands.push_back(p);
    out.residual = out.residual - p;
    std::vector<Element> next;
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i] == p) continue;
      const Element x = x_of(p, list[i], g);
      if (!x.is_zero()) detail::push_unique(next, x);
    }
    out.pivot_trace.push_back({p, next});
    list = std::move(next);
  }
  if (!out.residual.is_zero())
    throw Error(ErrorKind::ResidualNonzero, "unit not exhausted after " + std::to_string(out.summands.size()) +
                                                " summands; residual " + detail::coords_string(out.residual));
  for (std::size_t i = 0; i < out.summands.size(); ++i) {
    if (!check_axis(out.summands[i]).is_primitive_axis())
      throw Error(ErrorKind::InvariantFailure, "summand #" + std::to_string(i) + " is not a primitive axis");
    for (std::size_t j = i + 1; j < out.summands.size(); ++j)
      if (!(out.summands[i] * out.summands[j]).is_zero())
        throw Error(ErrorKind::InvariantFailure, "summands are not pairwise orthogonal");
  }
  if (out.summands.size() > gens.size())
    throw Error(ErrorKind::InvariantFailure, "more summands than generators");
  return out;
}

struct SpecialChain {
  std::vector<SubspaceBasis> links;  // A, A_0(y1), A_0(y1, y2), ..., (0)
  std::vector<Element> special_axes;
};

inline SpecialChain special_chain(const Algebra& alg, const std::vector<Element>& gens, const GramForm& g) {
  const auto unit = find_unit(alg);
  if (!unit) throw Error(ErrorKind::NotUnit, "algebra has no unit");
  const auto run = capacity_decomposition(alg, gens, *unit, g);
  SpecialChain chain;
  chain.links.push_back(SubspaceBasis::whole(alg.dim()));
  for (const auto& y : run.summands) {
    chain.links.push_back(chain.links.back().intersect(eigendecompose(y).v0));
    chain.special_axes.push_back(y);
  }
  if (!chain.links.back().is_zero()) throw Error(ErrorKind::InvariantFailure, "special chain does not end at zero");
  return chain;
}

struct PropagationResult {
  bool hypothesis = false;  // q a = 0 and q x_a(b) = 0
  bool conclusion = false;  // q b = 0

  bool ok() const { return !hypothesis || conclusion; }
};

/// If q a = q x_a(b) = 0 then q b = 0.
inline PropagationResult orthogonality_propagation_check(const Element& q, const Element& a, const Element& b,
                                                         const GramForm& g) {
  const Element x = x_of(a, b, g);
  PropagationResult r;
  r.hypothesis = (q * a).is_zero() && (q * x).is_zero();
  r.conclusion = (q * b).is_zero();
  return r;
}

}  // namespace axial
