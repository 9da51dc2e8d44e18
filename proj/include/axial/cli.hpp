#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "axial/algebra.hpp"
#include "axial/axial.hpp"
#include "axial/constructions.hpp"
#include "axial/io.hpp"
#include "axial/jordan_half.hpp"
#include "axial/sampling.hpp"

namespace axial::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

namespace detail {

inline std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

inline std::size_t parse_index(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::UsageError, "expected a nonnegative integer, got \"" + s + "\"");
  }
}

inline std::uint64_t sampling_seed() {
  if (const char* env = std::getenv("AXIAL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::UsageError, std::string("AXIAL_SEED is not an integer: ") + env);
    }
  }
  return kDefaultSeed;
}

/// Letter names a, b, c, ... for a generator list.
inline std::vector<std::string> letter_names(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "g" + std::to_string(i));
  return out;
}

inline std::vector<Element> default_generators(const Algebra& alg) {
  auto gens = alg.generators();
  return gens.empty() ? alg.axes() : gens;
}

inline std::vector<Element> select_generators(const Algebra& alg, const std::string& indices) {
  if (indices.empty()) return default_generators(alg);
  const auto axes = alg.axes();
  std::vector<Element> out;
  for (const auto& tok : split_list(indices, ',')) {
    const auto i = parse_index(tok);
    if (i >= axes.size()) throw Error(ErrorKind::UsageError, "generator index " + tok + " out of range");
    out.push_back(axes[i]);
  }
  return out;
}

/// The unique Frobenius form normalized on the designated axes.
inline GramForm designated_form(const Algebra& alg) {
  if (alg.axes().empty()) throw Error(ErrorKind::NotBasisOfAxes, "algebra has no designated axes");
  auto sol = frobenius_solve(alg, alg.axes());
  if (sol.solution_space_dim != 0)
    throw Error(ErrorKind::Inconsistent,
                "Frobenius form is not unique (solution space dimension " + std::to_string(sol.solution_space_dim) + ")");
  return sol.form;
}

inline json axis_json(const Element& a) {
  const auto r = check_axis(a);
  json j = {{"coords", to_json(a)},
            {"idempotent", r.is_idempotent},
            {"spectrum_ok", r.spectrum_ok},
            {"semisimple", r.semisimple},
            {"primitive", r.primitive},
            {"fusion_ok", r.fusion_ok},
            {"primitive_axis", r.is_primitive_axis()}};
  if (r.decomposition)
    j["eigenspace_dims"] = {r.decomposition->v0.dim(), r.decomposition->v_half.dim(), r.decomposition->v1.dim()};
  return j;
}

}  // namespace detail

/// Analysis shared by `analyze` and the round-trip tests: depends only on the
/// algebra, not on where it came from.
inline Report analyze_report(const Algebra& alg) {
  Report r;
  r.command = "analyze";
  json& f = r.findings;
  f["name"] = alg.name();
  f["dimension"] = alg.dim();
  f["basis"] = alg.basis_names();
  bool ok = true;
  json axes = json::array();
  for (const auto& a : alg.axes()) {
    axes.push_back(detail::axis_json(a));
    ok = ok && axes.back()["primitive_axis"].get<bool>();
  }
  f["axes"] = axes;
  f["axis_count"] = alg.axes().size();
  f["jordan"] = jordan_identity_check(alg);
  const auto unit = find_unit(alg);
  f["unit"] = unit ? to_json(*unit) : json(nullptr);
  try {
    const GramForm g = detail::designated_form(alg);
    f["gram"] = to_json(g.gram);
    const auto rad = radical(alg, g);
    f["radical_dim"] = rad.dim();
    f["semisimple"] = rad.is_zero();
    const auto axes_list = alg.axes();
    if (span_of(alg, axes_list).dim() == alg.dim() && axes_list.size() == alg.dim())
      f["quasi_definite_basis"] = quasi_definite_basis_check(axes_list, g).ok;
    else
      f["quasi_definite_basis"] = nullptr;
    f["positive_definite"] = positive_definite_check(g);
    if (unit) {
      bool unit_ok = true;
      for (const auto& a : axes_list) unit_ok = unit_ok && g(*unit, a) == 1;
      f["unit_form_one_on_axes"] = unit_ok;
      ok = ok && unit_ok;
    }
  } catch (const Error& e) {
    f["gram"] = nullptr;
    r.message = e.what();
    ok = false;
  }
  r.status = ok ? Status::Pass : Status::Fail;
  return r;
}

namespace detail {

struct ConstructArgs {
  std::string diag = "1,1";
  std::string n = "2";
  std::string sn = "3";
  std::string eta = "1/2";
  std::string perms;
  std::string alpha = "1/2";
  std::string out;
};

inline Report construct_report(const std::string& kind, const ConstructArgs& args) {
  Report r;
  r.command = "construct " + kind;
  const std::string& out_path = args.out;
  std::optional<Algebra> alg;
  if (kind == "spin") {
    std::vector<Rational> diag;
    for (const auto& t : split_list(args.diag, ',')) diag.push_back(parse_rational(t));
    r.inputs["diag"] = args.diag;
    alg = spin_factor(diag);
  } else if (kind == "matrix") {
    r.inputs["n"] = parse_index(args.n);
    alg = matrix_jordan(parse_index(args.n));
  } else if (kind == "hn") {
    r.inputs["n"] = parse_index(args.n);
    alg = sym_jordan(parse_index(args.n));
  } else if (kind == "hnprime") {
    r.inputs["n"] = parse_index(args.n);
    alg = sym_jordan_prime(parse_index(args.n));
  } else if (kind == "matsuo") {
    const Rational eta = parse_rational(args.eta);
    MatsuoInput in;
    if (!args.perms.empty()) {
      in.eta = eta;
      for (const auto& p : split_list(args.perms, ';')) {
        std::vector<std::size_t> images;
        for (const auto& t : split_list(p, ' ')) images.push_back(parse_index(t));
        in.involutions.push_back(Permutation::from_one_line(images));
        in.degree = images.size();
      }
      r.inputs["perms"] = args.perms;
    } else {
      in = symmetric_group_transpositions(parse_index(args.sn), eta);
      r.inputs["sn"] = parse_index(args.sn);
    }
    r.inputs["eta"] = to_string(eta);
    const auto m = matsuo(in);
    r.findings["expected_gram"] = to_json(m.expected_gram);
    alg = m.algebra;
  } else if (kind == "twogen") {
    const Rational alpha = parse_rational(args.alpha);
    r.inputs["alpha"] = to_string(alpha);
    alg = two_gen_algebra(alpha);
  } else if (kind == "qdbasis") {
    const auto n = parse_index(args.n);
    r.inputs["n"] = n;
    const auto qd = qd_basis_matrices(n);
    json params = json::array();
    for (const auto& p : qd.parameters)
      params.push_back({{"size", p.size}, {"index", p.index}, {"b", to_string(p.b)}, {"c", to_string(p.c)},
                        {"d", to_string(p.d)}});
    json mats = json::array();
    for (const auto& m : qd.matrices) mats.push_back(to_json(m));
    r.findings["parameters"] = params;
    r.findings["basis_matrices"] = mats;
    alg = matrix_jordan(n);
  }
  r.findings["name"] = alg->name();
  r.findings["dimension"] = alg->dim();
  r.findings["axis_count"] = alg->axes().size();
  const json file = serialize_algebra(*alg);
  if (out_path.empty()) {
    r.findings["algebra"] = file;
  } else {
    write_file_atomic(out_path, file.dump(1) + "\n");
    r.inputs["out"] = out_path;
  }
  return r;
}

inline Report frobenius_report(const Algebra& alg) {
  Report r;
  r.command = "frobenius";
  if (alg.axes().empty()) throw Error(ErrorKind::NotBasisOfAxes, "algebra has no designated axes");
  const auto sol = frobenius_solve(alg, alg.axes());
  r.findings["gram"] = to_json(sol.form.gram);
  r.findings["solution_space_dim"] = sol.solution_space_dim;
  r.findings["positive_definite"] = positive_definite_check(sol.form);
  bool ok = sol.solution_space_dim == 0;
  if (span_of(alg, alg.axes()).dim() == alg.dim()) {
    const auto proj = frobenius_projection(alg, alg.axes());
    r.findings["projection_agrees"] = proj.gram == sol.form.gram;
    ok = ok && proj.gram == sol.form.gram;
  } else {
    r.findings["projection_agrees"] = nullptr;
  }
  r.status = ok ? Status::Pass : Status::Fail;
  return r;
}

inline Report radical_report(const Algebra& alg) {
  Report r;
  r.command = "radical";
  const auto rad = radical(alg, designated_form(alg));
  r.findings["radical"] = to_json(rad);
  r.findings["radical_dim"] = rad.dim();
  r.findings["semisimple"] = rad.is_zero();
  return r;
}

inline Report capacity_report(const Algebra& alg, const std::string& gen_indices, bool chain_only) {
  Report r;
  r.command = chain_only ? "chain" : "capacity";
  if (!gen_indices.empty()) r.inputs["generators"] = gen_indices;
  const auto gens = select_generators(alg, gen_indices);
  const GramForm g = designated_form(alg);
  r.findings["generators"] = to_json(gens);
  const auto unit = find_unit(alg);
  if (!unit) throw Error(ErrorKind::NotUnit, "algebra has no unit");
  const auto run = capacity_decomposition(alg, gens, *unit, g);
  const auto chain = special_chain(alg, gens, g);
  json dims = json::array();
  for (const auto& l : chain.links) dims.push_back(l.dim());
  r.findings["chain_dims"] = dims;
  r.findings["special_axes"] = to_json(chain.special_axes);
  if (!chain_only) {
    r.findings["unit"] = to_json(*unit);
    r.findings["capacity"] = run.capacity();
    r.findings["summands"] = to_json(run.summands);
    json trace = json::array();
    for (const auto& step : run.pivot_trace)
      trace.push_back({{"pivot", to_json(step.pivot)}, {"projected", to_json(step.projected)}});
    r.findings["pivot_trace"] = trace;
  }
  return r;
}

inline Report unit_report(const Algebra& alg, bool recursive) {
  Report r;
  r.command = "unit";
  r.inputs["recursive"] = recursive;
  const auto unit = find_unit(alg);
  r.findings["unit"] = unit ? to_json(*unit) : json(nullptr);
  bool ok = unit.has_value();
  if (recursive) {
    const auto built = build_unit(alg, alg.axes(), designated_form(alg));
    r.findings["recursive_unit"] = built ? to_json(*built) : json(nullptr);
    r.findings["agrees"] = built.has_value() && unit.has_value() && *built == *unit;
    ok = ok && r.findings["agrees"].get<bool>();
  }
  if (!ok) r.message = "algebra has no unit";
  r.status = ok ? Status::Pass : Status::Fail;
  return r;
}

inline Report identities_report(const Algebra& alg, const std::string& pairs, std::size_t triples) {
  Report r;
  r.command = "verify identities";
  const std::uint64_t seed = sampling_seed();
  r.inputs["pairs"] = pairs;
  r.inputs["triples"] = triples;
  r.findings["seed"] = seed;
  std::mt19937_64 rng(seed);
  const GramForm g = designated_form(alg);
  const auto axes = alg.axes();
  std::vector<std::pair<Element, Element>> work;
  if (pairs == "all") {
    for (std::size_t i = 0; i < axes.size(); ++i)
      for (std::size_t j = 0; j < axes.size(); ++j)
        if (i != j) work.emplace_back(axes[i], axes[j]);
  } else {
    const auto count = parse_index(pairs);
    const auto pool = axis_pool(alg);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t k = 0; k < count; ++k) work.emplace_back(pool[pick(rng)], pool[pick(rng)]);
  }
  bool ok = true;
  json failures = json::array();
  std::size_t zero_axis_failures = 0;
  for (std::size_t k = 0; k < work.size(); ++k) {
    const auto rep = pair_identity_suite(work[k].first, work[k].second, g);
    if (!rep.zero_axis) ++zero_axis_failures;
    if (!rep.identities_hold()) {
      ok = false;
      failures.push_back({{"a", to_json(work[k].first)}, {"b", to_json(work[k].second)}});
    }
  }
  r.findings["pairs_checked"] = work.size();
  r.findings["pair_failures"] = failures;
  r.findings["zero_axis_mismatches"] = zero_axis_failures;
  std::size_t triples_checked = 0, triples_skipped = 0;
  json mismatches = json::array();
  if (triples > 0 && axes.size() >= 3) {
    std::vector<std::size_t> order(axes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = 0; k < triples; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      const auto &a = axes[order[0]], &b = axes[order[1]], &c = axes[order[2]];
      try {
        const auto t = triple_form_identity(a, b, c, g);
        ++triples_checked;
        if (!t.equal) {
          ok = false;
          mismatches.push_back({{"lhs", to_string(t.lhs)}, {"rhs", to_string(t.rhs)}});
        }
      } catch (const Error&) {
        ++triples_skipped;
      }
    }
  }
  r.findings["triples_checked"] = triples_checked;
  r.findings["triples_skipped"] = triples_skipped;
  r.findings["triple_mismatches"] = mismatches;
  r.status = ok ? Status::Pass : Status::Fail;
  return r;
}

inline Report word_axis_report(const Algebra& alg, const std::string& expr) {
  Report r;
  r.command = "word-axis";
  r.inputs["word"] = expr;
  const auto gens = default_generators(alg);
  const auto names = letter_names(gens.size());
  const Word w = parse_word(expr, names);
  const auto res = word_to_axis(alg, gens, w, designated_form(alg));
  r.findings["word"] = w.to_string(names);
  r.findings["length"] = w.length();
  r.findings["axis"] = axis_json(res.axis);
  r.findings["scale"] = to_string(res.scale);
  r.findings["correction"] = to_json(res.correction);
  r.status = r.findings["axis"]["primitive_axis"].get<bool>() ? Status::Pass : Status::Fail;
  return r;
}

inline bool is_input_error(ErrorKind k) {
  return k == ErrorKind::ParseError || k == ErrorKind::UsageError || k == ErrorKind::DimensionMismatch ||
         k == ErrorKind::CommutativityViolation || k == ErrorKind::NotIdempotent || k == ErrorKind::NotInvolution ||
         k == ErrorKind::BadProductOrder || k == ErrorKind::DegenerateForm;
}

}  // namespace detail

/// Runs one command line (without the program name), writes the JSON report
/// to `out` and returns the exit code: 0 pass, 1 a checked property failed,
/// 2 bad input or usage.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of axial algebras of Jordan type 1/2", "axial"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build an example algebra");
  construct->require_subcommand(1);
  detail::ConstructArgs cargs;
  construct->add_subcommand("spin", "spin factor of a diagonal form")->add_option("--diag", cargs.diag);
  construct->add_subcommand("matrix", "M_n under the Jordan product")->add_option("--n", cargs.n);
  construct->add_subcommand("hn", "symmetric matrices H_n")->add_option("--n", cargs.n);
  construct->add_subcommand("hnprime", "zero-row-sum symmetric matrices H_n'")->add_option("--n", cargs.n);
  auto* m = construct->add_subcommand("matsuo", "Matsuo algebra of a 3-transposition set");
  m->add_option("--sn", cargs.sn, "use all transpositions of S_n");
  m->add_option("--eta", cargs.eta);
  m->add_option("--perms", cargs.perms, "involutions in one-line notation, ';'-separated");
  construct->add_subcommand("twogen", "3-dimensional two-generated algebra")->add_option("--alpha", cargs.alpha);
  construct->add_subcommand("qdbasis", "quasi-definite basis of M_n")->add_option("--n", cargs.n);
  for (auto* s : construct->get_subcommands([](const CLI::App*) { return true; }))
    s->add_option("--out", cargs.out, "write the algebra file here");

  std::string file, gen_indices, word, pairs = "all";
  std::size_t triples = 0;
  bool recursive = false;
  auto file_cmd = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("file", file, "algebra file")->required();
    return s;
  };
  auto* analyze = file_cmd("analyze", "axes, fusion, form, radical, unit");
  auto* frob = file_cmd("frobenius", "Frobenius form by both constructions");
  auto* rad = file_cmd("radical", "radical of the Frobenius form");
  auto* cap = file_cmd("capacity", "decompose the unit into orthogonal axes");
  cap->add_option("--generators", gen_indices, "comma-separated indices into the axes");
  auto* chain = file_cmd("chain", "special subalgebra chain");
  chain->add_option("--generators", gen_indices);
  auto* unit = file_cmd("unit", "unit by linear solve");
  unit->add_flag("--recursive", recursive, "also build it recursively from the axis basis");
  auto* verify = app.add_subcommand("verify", "identity checks");
  verify->require_subcommand(1);
  auto* ids = verify->add_subcommand("identities", "pair and triple identities");
  ids->add_option("file", file)->required();
  ids->add_option("--pairs", pairs, "all or a sample size");
  ids->add_option("--triples", triples);
  auto* wax = file_cmd("word-axis", "reduce a word to an axis");
  wax->add_option("--word", word)->required();

  Report report;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    auto load = [&] { return parse_algebra_file(read_text_file(file)); };
    if (construct->parsed()) {
      const auto* kind = construct->get_subcommands().front();
      report = detail::construct_report(kind->get_name(), cargs);
    } else if (analyze->parsed()) {
      report = analyze_report(load());
    } else if (frob->parsed()) {
      report = detail::frobenius_report(load());
    } else if (rad->parsed()) {
      report = detail::radical_report(load());
    } else if (cap->parsed() || chain->parsed()) {
      report = detail::capacity_report(load(), gen_indices, chain->parsed());
    } else if (unit->parsed()) {
      report = detail::unit_report(load(), recursive);
    } else if (ids->parsed()) {
      report = detail::identities_report(load(), pairs, triples);
    } else if (wax->parsed()) {
      report = detail::word_axis_report(load(), word);
    }
    if (!file.empty()) report.inputs["file"] = file;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    report = Report{"usage", json::object(), json::object(), Status::Error, e.what()};
  } catch (const Error& e) {
    if (report.command.empty()) report.command = args.empty() ? "" : args.front();
    report.status = detail::is_input_error(e.kind()) ? Status::Error : Status::Fail;
    report.message = e.what();
    report.findings["error_kind"] = std::string(to_string(e.kind()));
    if (!file.empty()) report.inputs["file"] = file;
  } catch (const std::exception& e) {
    report.command = args.empty() ? "" : args.front();
    report.status = Status::Error;
    report.message = e.what();
  }
  out << serialize_report(report);
  return exit_code(report.status);
}

}  // namespace axial::cli
