#include "cdalg_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cdalg/format.hpp"
#include "cdalg/identity_lab.hpp"
#include "cdalg/oracle.hpp"
#include "cdalg/parser.hpp"
#include "cdalg/serialize.hpp"
#include "cdalg/solvers.hpp"
#include "cdalg/structure_table.hpp"

namespace cdalg::cli {

namespace {

struct Options {
  std::optional<unsigned> level;
  std::optional<std::string> backend;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::string output = "text";
  std::string a, b, expr;
  unsigned m = 2;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool json_output(const Options& o) { return o.output == "json"; }

std::size_t max_basis_index(const Expr& e) {
  std::size_t m = e.kind == Expr::Kind::Basis ? e.index : 0;
  for (const auto& c : e.args) m = std::max(m, max_basis_index(c));
  return m;
}

unsigned level_for(std::size_t max_index) {
  unsigned n = 0;
  while (dimension_of(n) <= max_index) ++n;
  return n;
}

/// Parsed operands sharing one level and one backend.
struct Operands {
  unsigned level = 0;
  bool exact = true;
  std::vector<Expr> exprs;

  template <class T>
  Element<T> get(std::size_t i) const {
    return evaluate<T>(exprs[i], level);
  }
};

Operands read_operands(const Options& o, const std::vector<std::string>& texts) {
  Operands ops;
  std::size_t max_index = 0;
  bool decimal = false;
  for (const auto& t : texts) {
    ops.exprs.push_back(parse_expression(t));
    max_index = std::max(max_index, max_basis_index(ops.exprs.back()));
    decimal = decimal || ops.exprs.back().has_decimal();
  }
  ops.level = o.level.value_or(level_for(max_index));
  if (ops.level > kMaxElementLevel) throw UsageError("level too large");
  if (o.backend == "exact" && decimal) throw UsageError("decimal literal with --backend exact");
  ops.exact = !decimal && o.backend != "float";
  return ops;
}

template <class T>
void print_solution_text(const SolutionSet<T>& s, std::ostream& out) {
  out << "variant: " << s.variant_name() << "\n";
  out << "completeness: " << to_string(s.completeness()) << "\n";
  out << "level_semantics: " << to_string(s.semantics()) << "\n";
  out << "backend: " << ScalarTraits<T>::name << "\n";
  if (s.template holds<ParametricModule<T>>()) {
    const auto& m = s.template get<ParametricModule<T>>();
    out << "map: x = (Im a)p + p(Im b), p in " << to_string(m.domain) << " (dimension " << m.parameter_basis.size()
        << ")\n";
  } else if (s.template holds<ScalingFamily<T>>()) {
    out << "family: x = t * direction, t real\n";
  } else if (s.template holds<AffineSubspace<T>>()) {
    out << (s.has_note("root-sphere") ? "sphere: unit combinations of\n" : "span of:\n");
  }
  const auto reps = s.representatives();
  if (!reps.empty()) {
    out << "representatives:\n";
    for (const auto& r : reps) out << "  " << format_element(r) << "\n";
  }
  if (!s.notes().empty()) {
    out << "notes:";
    for (const auto& n : s.notes()) out << " " << n;
    out << "\n";
  }
}

template <class T>
int emit_solution(const SolutionSet<T>& s, const Options& o, std::ostream& out) {
  if (json_output(o)) {
    out << to_json(s).dump(2) << "\n";
  } else {
    print_solution_text(s, out);
  }
  return s.is_empty() ? kExitNoSolution : kExitOk;
}

/// Runs `solve` on the exact backend when possible; square roots of
/// non-squares fall back to floats.
template <class Solve>
int run_solver(const Options& o, const Operands& ops, Solve&& solve, std::ostream& out) {
  if (ops.exact) {
    try {
      return emit_solution(solve(ops, Rational{}), o, out);
    } catch (const InexactError&) {
      auto s = solve(ops, double{});
      s.add_note("float-fallback");
      return emit_solution(s, o, out);
    }
  }
  return emit_solution(solve(ops, double{}), o, out);
}

// ---------------------------------------------------------------------------

int cmd_eval(const Options& o, std::ostream& out) {
  const Operands ops = read_operands(o, {o.expr});
  const AnyElement e = ops.exact ? AnyElement(ops.get<Rational>(0)) : AnyElement(ops.get<double>(0));
  if (json_output(o)) {
    out << to_json(e).dump(2) << "\n";
  } else {
    out << format_element(e) << "\n";
  }
  return kExitOk;
}

std::string basis_name(int sign, std::uint32_t index) {
  std::string s = sign < 0 ? "-" : "+";
  return s + (index == 0 ? std::string("1") : "e" + std::to_string(index));
}

int cmd_table(const Options& o, std::ostream& out) {
  if (!o.level) throw UsageError("table needs --level");
  const StructureTable& t = structure_table(*o.level);
  if (json_output(o)) {
    out << to_json(t).dump() << "\n";
    return kExitOk;
  }
  std::size_t width = basis_name(-1, static_cast<std::uint32_t>(t.dim() - 1)).size() + 1;
  out << std::setw(static_cast<int>(width)) << "*";
  for (std::size_t j = 0; j < t.dim(); ++j) {
    out << std::setw(static_cast<int>(width)) << basis_name(1, static_cast<std::uint32_t>(j)).substr(1);
  }
  out << "\n";
  for (std::size_t i = 0; i < t.dim(); ++i) {
    out << std::setw(static_cast<int>(width)) << basis_name(1, static_cast<std::uint32_t>(i)).substr(1);
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const BasisProduct& p = t(i, j);
      out << std::setw(static_cast<int>(width)) << basis_name(p.sign, p.index);
    }
    out << "\n";
  }
  return kExitOk;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
}

int cmd_binary_solver(const std::string& verb, const Options& o, std::ostream& out) {
  require(o.a, "--a");
  require(o.b, "--b");
  const Operands ops = read_operands(o, {o.a, o.b});
  auto solve = [&verb](const Operands& in, auto tag) {
    using T = decltype(tag);
    const Element<T> a = in.get<T>(0), b = in.get<T>(1);
    if (verb == "solve-sim") return solve_sim(a, b);
    if (verb == "solve-consim") return solve_consim(a, b);
    if (verb == "solve-conj-transform") return solve_conj_transform(a, b);
    return solve_xax(a, b);
  };
  return run_solver(o, ops, solve, out);
}

int cmd_sqrt(const Options& o, std::ostream& out) {
  require(o.a, "--a");
  const Operands ops = read_operands(o, {o.a});
  auto solve = [](const Operands& in, auto tag) {
    using T = decltype(tag);
    return cdalg::sqrt(in.get<T>(0));
  };
  return run_solver(o, ops, solve, out);
}

int cmd_root(const Options& o, std::ostream& out) {
  require(o.a, "--a");
  if (o.m == 0) throw UsageError("--m must be positive");
  const Operands ops = read_operands(o, {o.a});
  const FloatElement a = ops.exact ? to_float(ops.get<Rational>(0)) : ops.get<double>(0);
  if (a.is_real()) throw UsageError("root needs a non-real element; use sqrt for reals");
  SolutionSet<double> s = nth_root(a, o.m);
  if (ops.exact) s.add_note("float-only");
  return emit_solution(s, o, out);
}

template <class T>
Json classify_json(const Operands& ops) {
  const Element<T> a = ops.get<T>(0);
  const SimilarityClass<T> sc = similarity_class(a);
  Json j{{"element", to_json(a)},
         {"real_part", to_json(sc.real_part)},
         {"im_norm_sq", to_json(sc.im_norm_sq)},
         {"im_norm", sc.im_norm}};
  const CanonicalForm<T> cf = canonical_form(a);
  j["canonical"] = to_json(cf.canonical);
  j["degenerate"] = cf.degenerate;
  j["witness"] = to_json(cf.witness);
  if (ops.exprs.size() > 1) {
    const Element<T> b = ops.get<T>(1);
    j["b"] = to_json(b);
    j["similar"] = similar(a, b);
    j["consimilar"] = consimilar(a, b);
  }
  j["backend"] = ScalarTraits<T>::name;
  return j;
}

void print_classify_text(const Json& j, const Operands& ops, bool exact, std::ostream& out) {
  auto element_text = [&](const Json& e) { return format_element(element_from_json(e)); };
  out << "element: " << element_text(j["element"]) << "\n";
  out << "backend: " << j["backend"].get<std::string>() << "\n";
  out << "real_part: " << (exact ? j["real_part"].get<std::string>() : format_scalar(j["real_part"].get<double>()))
      << "\n";
  out << "im_norm_sq: "
      << (exact ? j["im_norm_sq"].get<std::string>() : format_scalar(j["im_norm_sq"].get<double>())) << "\n";
  out << "im_norm: " << format_scalar(j["im_norm"].get<double>()) << "\n";
  out << "canonical: " << element_text(j["canonical"]) << (j["degenerate"].get<bool>() ? " (degenerate)" : "")
      << "\n";
  out << "witness:";
  for (const auto& r : j["witness"]["representatives"]) out << "\n  " << element_text(r);
  out << "\n";
  if (ops.exprs.size() > 1) {
    out << "similar: " << (j["similar"].get<bool>() ? "true" : "false") << "\n";
    out << "consimilar: " << (j["consimilar"].get<bool>() ? "true" : "false") << "\n";
  }
}

int cmd_classify(const Options& o, std::ostream& out) {
  require(o.a, "--a");
  std::vector<std::string> texts{o.a};
  if (!o.b.empty()) texts.push_back(o.b);
  const Operands ops = read_operands(o, texts);
  Json j;
  bool exact = ops.exact;
  if (exact) {
    try {
      j = classify_json<Rational>(ops);
    } catch (const InexactError&) {
      exact = false;
    }
  }
  if (!exact) {
    j = classify_json<double>(ops);
    if (ops.exact) j["notes"] = Json::array({"float-fallback"});
  }
  if (json_output(o)) {
    out << j.dump(2) << "\n";
  } else {
    print_classify_text(j, ops, exact, out);
  }
  return kExitOk;
}

int cmd_identity_scan(const Options& o, std::ostream& out) {
  if (!o.level) throw UsageError("identity-scan needs --level");
  if (o.backend == "float") throw UsageError("identity-scan is exact only");
  const auto reports = scan_level(*o.level, o.trials, o.seed);
  if (json_output(o)) {
    for (const auto& r : reports) out << to_json(r).dump() << "\n";
    return kExitOk;
  }
  std::size_t width = 0;
  for (const auto& r : reports) width = std::max(width, r.law_id.size());
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << r.law_id
        << std::setw(16) << (r.verdict == Verdict::HoldsOnSamples ? "holds" : "counterexample")
        << "claimed=" << (r.claimed ? "yes" : "no ") << "  " << (r.matches_claim() ? "ok" : "MISMATCH") << "\n";
    if (r.verdict == Verdict::Counterexample) {
      out << "    witness:";
      for (const auto& w : r.witness) out << " [" << format_element(w) << "]";
      out << "\n    left:  " << format_element(*r.left) << "\n    right: " << format_element(*r.right) << "\n";
    }
  }
  out << std::right;
  return kExitOk;
}

int cmd_span_experiment(const Options& o, std::ostream& out) {
  if (!o.level || (*o.level != 2 && *o.level != 3)) throw UsageError("span-experiment needs --level 2 or 3");
  const SpanReport r = span_experiment(*o.level, o.trials, o.seed);
  if (json_output(o)) {
    out << to_json(r).dump(2) << "\n";
    return kExitOk;
  }
  out << "level,trial,d_oracle,d_pair,d_module,equal\n";
  for (const auto& row : r.rows) {
    out << r.level << "," << row.trial << "," << row.d_oracle << "," << row.d_pair << "," << row.d_module << ","
        << (row.equal ? "true" : "false") << "\n";
  }
  out << "# rows=" << r.rows.size() << " equal=" << r.equal_count() << " skipped=" << r.skipped << "\n";
  return kExitOk;
}

int cmd_zero_divisors(const Options& o, std::ostream& out) {
  if (!o.level) throw UsageError("zero-divisors needs --level");
  const auto w = zero_divisor_search(*o.level, o.trials, o.seed);
  if (json_output(o)) {
    Json j{{"level", *o.level}, {"found", w.has_value()}};
    if (w) {
      j["a"] = to_json(w->a);
      j["x"] = to_json(w->x);
      j["product"] = to_json(w->a * w->x);
    }
    out << j.dump(2) << "\n";
  } else if (w) {
    out << "a = " << format_element(w->a) << "\n"
        << "x = " << format_element(w->x) << "\n"
        << "a x = " << format_element(w->a * w->x) << "\n";
  } else {
    out << "no zero divisor found at level " << *o.level << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley-Dickson algebra toolkit"};
  app.name("cdalg");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--level", o.level, "Algebra level n (dimension 2^n)");
    sub->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_backend = [&o](CLI::App* sub) {
    sub->add_option("--backend", o.backend, "Scalar backend")->check(CLI::IsMember({"exact", "float"}));
  };
  auto add_random = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--trials", o.trials, "Number of random trials");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", o.expr, "Expression")->required();
  add_common(eval);
  add_backend(eval);

  auto* table = app.add_subcommand("table", "Basis multiplication table");
  add_common(table);

  const std::vector<std::pair<std::string, std::string>> binary = {
      {"solve-sim", "Solve a x = x b"},
      {"solve-consim", "Solve a x = conj(x) b"},
      {"solve-conj-transform", "Solve conj(x) a x = b"},
      {"solve-xax", "Solve x a x = b"}};
  for (const auto& [name, help] : binary) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--a", o.a, "Element a")->required();
    sub->add_option("--b", o.b, "Element b")->required();
    add_common(sub);
    add_backend(sub);
  }

  auto* sq = app.add_subcommand("sqrt", "Square roots of a");
  sq->add_option("--a", o.a, "Element a")->required();
  add_common(sq);
  add_backend(sq);

  auto* root = app.add_subcommand("root", "m-th roots of a non-real a (float)");
  root->add_option("--a", o.a, "Element a")->required();
  root->add_option("--m", o.m, "Root degree");
  add_common(root);
  add_backend(root);

  auto* classify = app.add_subcommand("classify", "Similarity class and canonical form");
  classify->add_option("--a", o.a, "Element a")->required();
  classify->add_option("--b", o.b, "Optional second element for similar/consimilar");
  add_common(classify);
  add_backend(classify);

  auto* scan = app.add_subcommand("identity-scan", "Check every catalog law at one level");
  add_common(scan);
  add_backend(scan);
  add_random(scan);

  auto* span = app.add_subcommand("span-experiment", "Compare solution span dimensions");
  add_common(span);
  add_random(span);

  auto* zd = app.add_subcommand("zero-divisors", "Search for zero divisors");
  add_common(zd);
  add_random(zd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cdalg: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (verb == "eval") return cmd_eval(o, out);
    if (verb == "table") return cmd_table(o, out);
    if (verb == "sqrt") return cmd_sqrt(o, out);
    if (verb == "root") return cmd_root(o, out);
    if (verb == "classify") return cmd_classify(o, out);
    if (verb == "identity-scan") return cmd_identity_scan(o, out);
    if (verb == "span-experiment") return cmd_span_experiment(o, out);
    if (verb == "zero-divisors") return cmd_zero_divisors(o, out);
    return cmd_binary_solver(verb, o, out);
  } catch (const std::exception& e) {
    err << "cdalg " << verb << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cdalg::cli
