#include "ginv/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ginv/rol.hpp"

namespace ginv::cli {

json to_json(const FunctionSpan& s) {
  json j = {{"kind", "functions"}, {"span", json::array()}};
  for (const auto& f : s.basis()) j["span"].push_back(f.to_string());
  return j;
}

json to_json(const FunctionalSpan& s) {
  json j = {{"kind", "functionals"}, {"span", json::array()}};
  for (const auto& b : s.basis()) j["span"].push_back(b.to_string());
  return j;
}

namespace {

// ---------------------------------------------------------------- printing

std::string vector_string(const VectorQ& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v(i).to_string();
  return out + ")";
}

std::string matrix_string(const MatrixQ& m) {
  std::string out = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (Index j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

std::string space_string(const SubspaceQ& s) {
  if (s.is_zero()) return "{0}";
  std::string out = "span{";
  for (Index j = 0; j < s.dim(); ++j) out += (j ? ", " : "") + vector_string(s.basis().col(j));
  return out + "}";
}

std::string space_string(const DualSubspaceQ& s) {
  if (s.is_zero()) return "{0}";
  std::string out = "span{";
  for (Index i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + vector_string(s.basis().row(i).transpose());
  return out + "}";
}

std::string space_string(const FunctionSpan& s) { return s.is_zero() ? "{0}" : s.to_string(); }
std::string space_string(const FunctionalSpan& s) { return s.is_zero() ? "{0}" : s.to_string(); }

std::string bool_string(bool b) { return b ? "true" : "false"; }

template <class Primal, class Dual>
json report_json(const RolReport<Primal, Dual>& r) {
  json j;
  j["verdict"] = r.verdict;
  j["consistent"] = r.consistent;
  j["conditions"] = json::object();
  for (std::size_t k = 0; k < 5; ++k)
    j["conditions"][kConditionNames[k]] = r.conditions[k] ? json(*r.conditions[k]) : json(nullptr);
  j["failed"] = r.failed_conditions();
  j["witnesses"] = json::object();
  for (const auto& [name, space] : r.witnesses)
    j["witnesses"][name] = std::visit([](const auto& s) { return to_json(s); }, space);
  return j;
}

template <class Primal, class Dual>
void print_report(std::ostream& out, const std::string& title, const RolReport<Primal, Dual>& r, bool verbose) {
  out << title << ": " << bool_string(r.verdict) << "\n ";
  for (std::size_t k = 0; k < 5; ++k)
    out << " (" << kConditionNames[k] << ") " << (r.conditions[k] ? bool_string(*r.conditions[k]) : "n/a");
  out << "\n";
  if (!r.failed_conditions().empty()) out << "  failed: " << detail::join(r.failed_conditions()) << "\n";
  if (!r.consistent) out << "  warning: conditions disagree\n";
  if (verbose)
    for (const auto& [name, space] : r.witnesses)
      out << "  " << name << " = " << std::visit([](const auto& s) { return space_string(s); }, space) << "\n";
}

// ---------------------------------------------------------------- parsing

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void input_error(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) input_error(where, "missing field \"" + key + "\"");
  return j.at(key);
}

template <class T, class F>
T parse_string(const json& j, const std::string& where, F&& f) {
  if (!j.is_string()) input_error(where, "expected a string");
  try {
    return f(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.message() + " (in " + where + ")", e.line(), e.column());
  }
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_string<Rational>(j, where, [](const std::string& s) { return parse_rational(s); });
  input_error(where, "expected an integer or a rational string");
}

std::vector<VectorQ> vectors_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) input_error(where, "expected an array of vectors");
  std::vector<VectorQ> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) input_error(w, "expected an array");
    VectorQ v(static_cast<Index>(j[i].size()));
    for (std::size_t k = 0; k < j[i].size(); ++k)
      v(static_cast<Index>(k)) = rational_from_json(j[i][k], w + "[" + std::to_string(k) + "]");
    out.push_back(std::move(v));
  }
  return out;
}

template <class Elem, class F>
std::vector<Elem> strings_from_json(const json& j, const std::string& where, F&& f) {
  if (!j.is_array()) input_error(where, "expected an array of strings");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_string<Elem>(j[i], where + "[" + std::to_string(i) + "]", f));
  return out;
}

json vector_json(const VectorQ& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i).to_string());
  return a;
}

}  // namespace

const MatrixQ& MatrixPayload::matrix(const std::string& name) const {
  const auto it = matrices.find(name);
  if (it == matrices.end()) throw std::invalid_argument("problem file has no matrix \"" + name + "\"");
  return it->second;
}

const SubspaceQ& MatrixPayload::space(const std::string& name) const {
  const auto it = spaces.find(name);
  if (it == spaces.end()) throw std::invalid_argument("problem file has no subspace \"" + name + "\"");
  return it->second;
}

json to_json(const MatrixQ& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i).transpose()));
  return rows;
}

MatrixQ matrix_from_json(const json& j, const std::string& where) {
  const auto rows = vectors_from_json(j, where);
  if (rows.empty()) input_error(where, "matrix has no rows");
  MatrixQ m(static_cast<Index>(rows.size()), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DimensionError(where + ": rows have different lengths");
    m.row(static_cast<Index>(i)) = rows[i].transpose();
  }
  return m;
}

json to_json(const SubspaceQ& s) {
  json basis = json::array();
  for (Index j = 0; j < s.dim(); ++j) basis.push_back(vector_json(s.basis().col(j)));
  return {{"ambient", s.ambient()}, {"basis", basis}};
}

json to_json(const DualSubspaceQ& s) {
  json basis = json::array();
  for (Index i = 0; i < s.dim(); ++i) basis.push_back(vector_json(s.basis().row(i).transpose()));
  return {{"ambient", s.ambient()}, {"covectors", basis}};
}

SubspaceQ subspace_from_json(const json& j, const std::string& where) {
  const auto vectors = vectors_from_json(field(j, "basis", where), where + ".basis");
  Index ambient = -1;
  if (j.contains("ambient")) {
    if (!j["ambient"].is_number_integer() || j["ambient"].get<long>() < 0)
      input_error(where + ".ambient", "expected a nonnegative integer");
    ambient = j["ambient"].get<Index>();
  } else if (!vectors.empty()) {
    ambient = vectors.front().size();
  } else {
    input_error(where, "an empty basis needs \"ambient\"");
  }
  for (const auto& v : vectors)
    if (v.size() != ambient) throw DimensionError(where + ": vector length differs from ambient dimension");
  return SubspaceQ::span(ambient, vectors);
}

json to_json(const BvpEntry& e) {
  json j;
  j["operator"] = e.op.to_string();
  j["conditions"] = json::array();
  for (const auto& b : e.conditions) j["conditions"].push_back(b.to_string());
  j["exceptional"] = json::array();
  for (const auto& f : e.exceptional) j["exceptional"].push_back(f.to_string());
  return j;
}

BvpEntry bvp_entry_from_json(const json& j, const std::string& where) {
  DiffOp op = parse_string<DiffOp>(field(j, "operator", where), where + ".operator",
                                   [](const std::string& s) { return parse_diffop(s); });
  auto conds = strings_from_json<BoundaryFunctional>(field(j, "conditions", where), where + ".conditions",
                                                     [](const std::string& s) { return parse_functional(s); });
  std::vector<ExpPoly> exc;
  if (j.contains("exceptional"))
    exc = strings_from_json<ExpPoly>(j["exceptional"], where + ".exceptional",
                                     [](const std::string& s) { return parse_exppoly(s); });
  return {std::move(op), std::move(conds), std::move(exc)};
}

ProblemFile parse_problem(std::string_view text) {
  if (std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
    throw ParseError("empty input", 1, 1);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    const auto colon = msg.find("error: ");
    if (colon != std::string::npos) msg = msg.substr(colon + 7);
    throw ParseError("malformed JSON: " + msg, line, column);
  }
  if (!j.is_object()) input_error("file", "expected a JSON object");
  const json& schema = field(j, "schema", "file");
  if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion)
    input_error("schema", "unsupported schema version (expected 1)");
  ProblemFile p;
  const json& kind = field(j, "kind", "file");
  if (!kind.is_string()) input_error("kind", "expected a string");
  p.kind = kind.get<std::string>();
  if (p.kind == "matrix") {
    for (const auto& [key, value] : j.items()) {
      if (key == "schema" || key == "kind") continue;
      if (value.is_array()) {
        p.matrix.matrices.emplace(key, matrix_from_json(value, key));
      } else if (value.is_object()) {
        p.matrix.spaces.emplace(key, subspace_from_json(value, key));
      } else {
        input_error(key, "expected a matrix (array of rows) or a subspace (object)");
      }
    }
  } else if (p.kind == "bvp") {
    const json& problems = field(j, "problems", "file");
    if (!problems.is_array()) input_error("problems", "expected an array");
    for (std::size_t i = 0; i < problems.size(); ++i)
      p.bvp.problems.push_back(bvp_entry_from_json(problems[i], "problems[" + std::to_string(i) + "]"));
    if (j.contains("forcing"))
      p.bvp.forcing = strings_from_json<ExpPoly>(j["forcing"], "forcing",
                                                 [](const std::string& s) { return parse_exppoly(s); });
  } else {
    input_error("kind", "expected \"matrix\" or \"bvp\"");
  }
  return p;
}

json serialize(const ProblemFile& file) {
  json j = {{"schema", kSchemaVersion}, {"kind", file.kind}};
  if (file.kind == "matrix") {
    for (const auto& [name, m] : file.matrix.matrices) j[name] = to_json(m);
    for (const auto& [name, s] : file.matrix.spaces) j[name] = to_json(s);
  } else {
    j["problems"] = json::array();
    for (const auto& e : file.bvp.problems) j["problems"].push_back(to_json(e));
    j["forcing"] = json::array();
    for (const auto& f : file.bvp.forcing) j["forcing"].push_back(f.to_string());
  }
  return j;
}

namespace {

// ---------------------------------------------------------------- commands

struct Options {
  std::string file;
  bool json_output = false;
  bool verbose = false;
  std::uint64_t seed = 1;
  std::string kind = "outer";
  bool reverse = false;
  std::vector<std::string> forcing;
};

struct Outcome {
  int exit_code = 0;
  json report;
  std::string text;
};

ProblemFile load(const Options& o, const std::string& expected_kind) {
  std::ifstream in(o.file, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + o.file);
  std::stringstream buf;
  buf << in.rdbuf();
  ProblemFile p = parse_problem(buf.str());
  if (p.kind != expected_kind)
    throw std::invalid_argument(o.file + ": expected a \"" + expected_kind + "\" file, found \"" + p.kind + "\"");
  return p;
}

Outcome matrix_rol(const Options& o) {
  const MatrixPayload d = load(o, "matrix").matrix;
  const MatrixQ &t1 = d.matrix("T1"), &t2 = d.matrix("T2");
  const auto outer = rol_outer_check(t1, t2, d.space("B1"), d.space("E1"), d.space("B2"), d.space("E2"));
  const auto inner = rol_inner_check(t1, t2, d.space("B1"), d.space("E2"));
  std::ostringstream out;
  print_report(out, "outer reverse order law", outer, o.verbose);
  print_report(out, "inner reverse order law", inner, o.verbose);
  return {outer.verdict ? 0 : 1, {{"outer", report_json(outer)}, {"inner", report_json(inner)}}, out.str()};
}

Outcome matrix_compose(const Options& o) {
  const MatrixPayload d = load(o, "matrix").matrix;
  const MatrixQ &t1 = d.matrix("T1"), &t2 = d.matrix("T2");
  const SubspaceQ &b1 = d.space("B1"), &e1 = d.space("E1"), &b2 = d.space("B2"), &e2 = d.space("E2");
  const auto p = product_implicit(t1, t2, orthogonal(b1), e1, orthogonal(b2), e2);
  const MatrixQ t = t1 * t2;
  const MatrixQ g = construct_outer(t, orthogonal(p.image_perp), p.kernel);
  const MatrixQ explicit_product = construct_outer(t2, b2, e2) * construct_outer(t1, b1, e1);
  const bool check = same<Rational>(g, explicit_product);
  if (!check) throw std::logic_error("matrix-compose: implicit and explicit products differ");
  std::ostringstream out;
  out << "reverse order law: true\n";
  out << "image orthogonal: " << space_string(p.image_perp) << "\n";
  out << "kernel: " << space_string(p.kernel) << "\n";
  out << "G2 G1 = " << matrix_string(g) << "\n";
  out << "self-check: passed (implicit product equals explicit product)\n";
  json r = {{"verdict", true},
            {"image_orthogonal", to_json(p.image_perp)},
            {"kernel", to_json(p.kernel)},
            {"product", to_json(g)},
            {"self_check", check}};
  return {0, r, out.str()};
}

Outcome matrix_verify(const Options& o) {
  const MatrixPayload d = load(o, "matrix").matrix;
  const auto r = verify(d.matrix("T"), d.matrix("G"));
  bool verdict = r.outer;
  if (o.kind == "inner") verdict = r.inner;
  if (o.kind == "reflexive") verdict = r.reflexive;
  std::ostringstream out;
  out << "outer: " << bool_string(r.outer) << "\ninner: " << bool_string(r.inner)
      << "\nreflexive: " << bool_string(r.reflexive) << "\nseven-way agreement: " << bool_string(r.seven_way_agree)
      << "\n" << o.kind << " verdict: " << bool_string(verdict) << "\n";
  json j = {{"kind", o.kind},
            {"verdict", verdict},
            {"outer", r.outer},
            {"inner", r.inner},
            {"reflexive", r.reflexive},
            {"seven_way", r.seven_way},
            {"seven_way_agree", r.seven_way_agree}};
  return {verdict ? 0 : 1, j, out.str()};
}

std::vector<GreenSpec> green_specs(const BvpPayload& d, std::size_t at_least) {
  if (d.problems.size() < at_least)
    throw std::invalid_argument("problem file needs at least " + std::to_string(at_least) + " problem(s)");
  std::vector<GreenSpec> out;
  for (const auto& e : d.problems) out.emplace_back(BoundaryProblem(e.op, e.conditions), e.exceptional);
  return out;
}

std::string exceptional_string(const std::vector<ExpPoly>& e) {
  const FunctionSpan s(e);
  if (s.is_zero()) return "none";
  if (s == FunctionSpan({ExpPoly(1)})) return "constants";
  return s.to_string();
}

Outcome bvp_compat(const Options& o) {
  const BvpPayload d = load(o, "bvp").bvp;
  if (d.problems.empty()) throw std::invalid_argument("problem file has no problems");
  std::ostringstream out;
  json list = json::array();
  for (std::size_t i = 0; i < d.problems.size(); ++i) {
    const BoundaryProblem p(d.problems[i].op, d.problems[i].conditions);
    const Regularity r = regularity(p);
    const FunctionalSpan c(compatibility(p));
    out << "problem " << i + 1 << ": " << p.op() << "\n";
    out << "  regular: " << bool_string(r.regular) << ", semi-regular: " << bool_string(r.semi_regular) << "\n";
    out << "  compatibility: " << space_string(c) << "\n";
    list.push_back({{"operator", p.op().to_string()},
                    {"regular", r.regular},
                    {"semi_regular", r.semi_regular},
                    {"compatibility", to_json(c)}});
  }
  return {0, {{"problems", list}}, out.str()};
}

Outcome bvp_green(const Options& o) {
  const BvpPayload d = load(o, "bvp").bvp;
  const auto specs = green_specs(d, 1);
  std::vector<ExpPoly> forcing = d.forcing;
  if (!o.forcing.empty()) {
    forcing.clear();
    for (const auto& s : o.forcing) forcing.push_back(parse_exppoly(s));
  }
  if (forcing.empty()) throw std::invalid_argument("no forcing functions (use \"forcing\" or --forcing)");
  std::ostringstream out;
  json list = json::array();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    json results = json::array();
    out << "problem " << i + 1 << ": " << specs[i].op() << ", exceptional: " << exceptional_string(specs[i].exceptional())
        << "\n";
    for (const auto& f : forcing) {
      const ExpPoly u = green_apply(specs[i], f);
      out << "  G" << i + 1 << "(" << f << ") = " << u << "\n";
      results.push_back({{"f", f.to_string()}, {"u", u.to_string()}});
    }
    list.push_back({{"operator", specs[i].op().to_string()}, {"results", results}});
  }
  return {0, {{"problems", list}}, out.str()};
}

Outcome bvp_rol(const Options& o) {
  const auto specs = green_specs(load(o, "bvp").bvp, 2);
  const GreenSpec &s1 = specs[0], &s2 = specs[1];
  const auto forward = rol_check(s1, s2);
  const auto backward = rol_check(s2, s1);
  std::ostringstream out;
  const std::string f_title = "G2 G1 outer inverse of T1 T2";
  const std::string b_title = "G1 G2 outer inverse of T2 T1";
  if (o.reverse) {
    print_report(out, b_title, backward, o.verbose);
    print_report(out, f_title, forward, o.verbose);
  } else {
    print_report(out, f_title, forward, o.verbose);
    print_report(out, b_title, backward, o.verbose);
  }
  const bool verdict = o.reverse ? backward.verdict : forward.verdict;
  return {verdict ? 0 : 1, {{"G2G1", report_json(forward)}, {"G1G2", report_json(backward)}}, out.str()};
}

ExpPoly random_function(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-1, 1), power(0, 2), count(1, 3);
  ExpPoly f;
  for (int n = count(rng); n > 0; --n) f += ExpPoly::term(RatFuncE(coeff(rng)), expo(rng), power(rng));
  return f;
}

Outcome bvp_compose(const Options& o) {
  const auto specs = green_specs(load(o, "bvp").bvp, 2);
  const GreenSpec& first = specs[o.reverse ? 1 : 0];
  const GreenSpec& second = specs[o.reverse ? 0 : 1];
  const GreenSpec c = compose(first, second);
  std::mt19937_64 rng(o.seed);
  constexpr int kChecks = 6;
  for (int n = 0; n < kChecks; ++n) {
    const ExpPoly f = random_function(rng);
    if (!(green_apply(c, f) == green_apply(second, green_apply(first, f))))
      throw std::logic_error("bvp-compose: self-check failed on f = " + f.to_string());
  }
  std::ostringstream out;
  out << "operator: " << c.op() << "\nconditions:\n";
  for (const auto& b : c.conditions()) out << "  " << b << "\n";
  out << "exceptional: " << exceptional_string(c.exceptional()) << "\n";
  out << "self-check: passed (" << kChecks << " random functions, seed " << o.seed << ")\n";
  json r = to_json(BvpEntry{c.op(), c.conditions(), c.exceptional()});
  r["self_check"] = {{"passed", true}, {"functions", kChecks}, {"seed", o.seed}};
  return {0, r, out.str()};
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  CLI::App app{"Generalized inverses and the reverse order law, for matrices and boundary problems", "ginv"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    Outcome (*fn)(const Options&);
  };
  const std::vector<Command> commands = {
      {"matrix-rol", "decide the outer and inner reverse order law for T1, T2", matrix_rol},
      {"matrix-compose", "defining spaces of G2 G1 without forming G1, G2", matrix_compose},
      {"matrix-verify", "check whether G is a generalized inverse of T", matrix_verify},
      {"bvp-compat", "regularity and compatibility conditions", bvp_compat},
      {"bvp-green", "apply generalized Green's operators", bvp_green},
      {"bvp-rol", "decide whether G2 G1 is a generalized Green's operator of T1 T2", bvp_rol},
      {"bvp-compose", "boundary problem solved by G2 G1", bvp_compose},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", o.file, "problem file (JSON, schema 1)")->required();
    sub->add_flag("--json", o.json_output, "print the report as JSON");
    sub->add_flag("--verbose", o.verbose, "print witness subspaces");
    sub->add_option("--seed", o.seed, "seed for randomized self-checks");
    if (std::string(c.name) == "matrix-verify")
      sub->add_option("--kind", o.kind, "outer, inner or reflexive")->check(CLI::IsMember({"outer", "inner", "reflexive"}));
    if (std::string(c.name) == "bvp-rol" || std::string(c.name) == "bvp-compose")
      sub->add_flag("--reverse", o.reverse, "swap the roles of the two problems");
    if (std::string(c.name) == "bvp-green") sub->add_option("--forcing", o.forcing, "forcing function (repeatable)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {2, "error: " + std::string(e.what()) + "\n" + app.help()};
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const auto it = std::find_if(commands.begin(), commands.end(),
                               [&](const Command& c) { return chosen->get_name() == c.name; });
  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome out = it->fn(o);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.json_output) {
      json j = {{"schema", kSchemaVersion}, {"command", it->name}, {"exit_code", out.exit_code}};
      j["report"] = std::move(out.report);
      j["timing_ms"] = ms;
      return {out.exit_code, j.dump(2) + "\n"};
    }
    if (o.verbose) out.text += "time: " + std::to_string(ms) + " ms\n";
    return {out.exit_code, out.text};
  } catch (const RolFailure& e) {
    return {2, "error: " + std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    return {2, "error: " + std::string(e.what()) + "\n"};
  }
}

}  // namespace ginv::cli
