#include "assoform/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "assoform/binary_invariants.hpp"
#include "assoform/errors.hpp"
#include "assoform/graded_ideal.hpp"
#include "assoform/inverse_system.hpp"
#include "assoform/parser.hpp"
#include "assoform/stability.hpp"

namespace assoform::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  std::optional<std::size_t> split;
  std::optional<unsigned> bound;
  unsigned degree_cap = kDefaultDegreeCap;
  std::vector<std::string> files;
};

struct Outcome {
  json result = json::object();
  std::vector<std::string> text;
  int exit_code = kExitOk;
  std::string failure;  // message for err when exit_code != 0
  std::optional<std::size_t> nvars;
  std::optional<unsigned> d;
  std::optional<unsigned> nu;
  bool with_seed = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

InputSystem load(const std::string& path) { return parse_system(read_file(path)); }

json monomial_json(const Monomial& m) { return json(std::vector<unsigned>(m.exponents().begin(), m.exponents().end())); }

json terms_json(const Polynomial& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) out.push_back({{"monomial", monomial_json(m)}, {"coefficient", c.str()}});
  return out;
}

json polys_json(const std::vector<Polynomial>& ps, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p, names));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string weights_string(const OnePS& u) {
  std::vector<std::string> parts;
  for (long w : u.weights()) parts.push_back(std::to_string(w));
  return "(" + join(parts, ", ") + ")";
}

std::string monomial_string(const Monomial& m) {
  std::vector<std::string> parts;
  for (auto e : m.exponents()) parts.push_back(std::to_string(e));
  return "(" + join(parts, ", ") + ")";
}

std::string point_string(const GITPoint& p) {
  std::vector<std::string> parts;
  for (const auto& c : p.coordinates()) parts.push_back(c.str());
  return "[" + join(parts, " : ") + "]";
}

// The forms must be nonzero, homogeneous and of one degree.
unsigned common_degree(const std::vector<Polynomial>& forms) {
  if (forms.empty()) throw InvalidArgument("the input contains no polynomials");
  const auto d = forms.front().degree();
  for (const auto& f : forms) {
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != d) {
      throw InvalidArgument("all input polynomials must be nonzero forms of one degree");
    }
  }
  return *d;
}

unsigned socle(std::size_t n, unsigned d) { return d == 0 ? 0 : static_cast<unsigned>(n) * (d - 1); }

void require_square(const InputSystem& sys) {
  if (sys.polynomials.size() != sys.nvars()) {
    throw InvalidArgument("expected " + std::to_string(sys.nvars()) + " forms in " + std::to_string(sys.nvars()) +
                          " variables, got " + std::to_string(sys.polynomials.size()));
  }
}

const Polynomial& single(const InputSystem& sys) {
  if (sys.polynomials.size() != 1) throw InvalidArgument("expected exactly one polynomial in the input");
  return sys.polynomials.front();
}

void describe_system(Outcome& o, const InputSystem& sys) {
  o.nvars = sys.nvars();
  o.d = common_degree(sys.polynomials);
  o.nu = socle(sys.nvars(), *o.d);
}

Outcome cmd_assoc(const Options& opt) {
  const InputSystem sys = load(opt.files[0]);
  require_square(sys);
  Outcome o;
  describe_system(o, sys);
  const AssociatedForm af = associated_form(sys.polynomials, opt.degree_cap);
  json omega = json::array();
  for (const auto& [m, v] : af.omega.values) omega.push_back({{"monomial", monomial_json(m)}, {"value", v.str()}});
  o.result = {{"form", to_string(af.form)},
              {"terms", terms_json(af.form)},
              {"omega", omega},
              {"jacobian_pairing", jacobian_pairing(af).str()}};
  o.text.push_back(to_string(af.form));
  return o;
}

Outcome cmd_perp(const Options& opt) {
  const InputSystem sys = load(opt.files[0]);
  const Polynomial f = single(sys).with_space(Space::Dual);
  if (f.is_zero() || !f.is_homogeneous()) throw InvalidArgument("perp requires a nonzero form");
  Outcome o;
  o.nvars = sys.nvars();
  o.nu = *f.degree();
  const auto gens = perp_generators(f);
  std::vector<std::size_t> hilbert;
  for (unsigned k = 0; k <= *o.nu + 1; ++k) {
    hilbert.push_back(count_monomials(sys.nvars(), k) - perp_piece(f, k).rows());
  }
  o.result = {{"form", to_string(f)}, {"generators", polys_json(gens, sys.variables)}, {"hilbert", hilbert}};
  o.text.push_back("form: " + to_string(f));
  o.text.push_back("generators of the annihilator:");
  for (const auto& g : gens) o.text.push_back("  " + to_string(g, sys.variables));
  std::vector<std::string> values;
  for (auto h : hilbert) values.push_back(std::to_string(h));
  o.text.push_back("hilbert function: " + join(values, " "));
  return o;
}

Outcome cmd_hilbert(const Options& opt) {
  const InputSystem sys = load(opt.files[0]);
  Outcome o;
  describe_system(o, sys);
  const GradedIdeal ideal(sys.nvars(), *o.d, sys.polynomials, opt.degree_cap);
  const unsigned bound = opt.bound.value_or(*o.nu + 1);
  const HilbertData h = hilbert_function(ideal, bound);
  o.result = {{"values", h.values}, {"bound", bound}};
  std::vector<std::string> values;
  for (auto v : h.values) values.push_back(std::to_string(v));
  o.text.push_back(join(values, " "));
  return o;
}

Outcome cmd_regseq(const Options& opt) {
  const InputSystem sys = load(opt.files[0]);
  require_square(sys);
  Outcome o;
  describe_system(o, sys);
  const GradedIdeal ideal(sys.nvars(), *o.d, sys.polynomials, opt.degree_cap);
  const unsigned probe = *o.nu + 1;
  const std::size_t qdim = ideal.quotient_dim(probe);
  const bool regular = qdim == 0;
  o.result = {{"regular", regular}, {"probe_degree", probe}, {"quotient_dim", qdim}};
  if (regular) {
    o.text.push_back("regular sequence");
  } else {
    o.exit_code = kExitPrecondition;
    o.failure = "not a regular sequence: the forms have a nontrivial common zero (dim (S/I)_" +
                std::to_string(probe) + " = " + std::to_string(qdim) + ", expected 0)";
    o.text.push_back(o.failure);
  }
  return o;
}

Outcome cmd_koszul(const Options& opt) {
  const InputSystem sys = load(opt.files[0]);
  Outcome o;
  describe_system(o, sys);
  const unsigned k_max = opt.bound.value_or(*o.nu + *o.d);
  if (k_max > opt.degree_cap + *o.d) throw DegreeCapExceeded("Koszul degree bound exceeds the degree cap");
  const bool exact = koszul_exactness_check(sys.polynomials, k_max);
  o.result = {{"exact", exact}, {"k_max", k_max}};
  o.text.push_back(exact ? "exact" : "not exact");
  return o;
}

json certificate_json(const DecompositionCertificate& c, const std::vector<std::string>& names) {
  return {{"split", c.split},
          {"generators", polys_json(c.generators, names)},
          {"condition_a", c.condition_a},
          {"condition_b", c.condition_b}};
}

Outcome cmd_decompose(const Options& opt) {
  const InputSystem sys = load(opt.files[0]);
  require_square(sys);
  Outcome o;
  describe_system(o, sys);
  if (!is_regular_sequence(sys.polynomials, opt.degree_cap)) {
    throw NotRegularSequence("the forms have a nontrivial common zero");
  }
  const GradedIdeal ideal(sys.nvars(), *o.d, sys.polynomials, opt.degree_cap);
  std::vector<std::size_t> splits;
  if (opt.split) {
    splits.push_back(*opt.split);
  } else {
    for (std::size_t b = 1; b < sys.nvars(); ++b) splits.push_back(b);
  }
  o.result = {{"decomposable", false}, {"certificate", nullptr}};
  for (auto b : splits) {
    if (auto cert = recognize_decomposable(ideal, b)) {
      o.result = {{"decomposable", true}, {"certificate", certificate_json(*cert, sys.variables)}};
      std::vector<std::string> gens;
      for (const auto& g : cert->generators) gens.push_back(to_string(g, sys.variables));
      o.text.push_back("decomposable at split b = " + std::to_string(b) + ": " + join(gens, ", "));
      return o;
    }
  }
  o.text.push_back("no decomposition certificate in these coordinates");
  return o;
}

Outcome cmd_degenerate(const Options& opt) {
  if (!opt.split) throw UsageError("degenerate requires --split");
  const InputSystem sys = load(opt.files[0]);
  require_square(sys);
  Outcome o;
  describe_system(o, sys);
  const auto limit = degeneration_limit(sys.polynomials, *opt.split, opt.degree_cap);
  const AssociatedForm af = associated_form(limit, opt.degree_cap);
  o.result = {{"split", *opt.split}, {"limit", polys_json(limit, sys.variables)}, {"associated_form", to_string(af.form)}};
  for (const auto& g : limit) o.text.push_back(to_string(g, sys.variables));
  o.text.push_back("associated form: " + to_string(af.form));
  return o;
}

json report_json(const StabilityReport& r) {
  json out = {{"verdict", std::string(to_string(r.verdict))}, {"degree", r.degree}, {"multiplicities", r.multiplicities}};
  out["witness"] = r.witness ? json(r.witness->weights()) : json(nullptr);
  if (r.witness_coordinates) {
    json rows = json::array();
    const QMatrix& m = r.witness_coordinates->matrix();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (const auto& e : m.row(i)) row.push_back(e.str());
      rows.push_back(row);
    }
    out["witness_coordinates"] = rows;
  } else {
    out["witness_coordinates"] = nullptr;
  }
  return out;
}

std::string multiplicities_string(const std::vector<unsigned>& mult) {
  std::vector<std::string> parts;
  for (auto m : mult) parts.push_back(std::to_string(m));
  return join(parts, " ");
}

Outcome cmd_stability(const Options& opt) {
  const InputSystem sys = load(opt.files[0]);
  require_square(sys);
  Outcome o;
  describe_system(o, sys);
  const AssociatedForm af = associated_form(sys.polynomials, opt.degree_cap);
  const auto destabilizer = torus_destabilizer(af.form);
  const GradedIdeal ideal(sys.nvars(), *o.d, sys.polynomials, opt.degree_cap);
  const auto minimal = min_nonideal_monomial(ideal, *o.nu);
  const bool inequalities = minimal && grevlex_partial_sums_hold(*minimal, *o.d);
  o.result = {{"associated_form", to_string(af.form)},
              {"torus_destabilizer", destabilizer ? json(destabilizer->weights()) : json(nullptr)},
              {"grevlex_minimal", minimal ? monomial_json(*minimal) : json(nullptr)},
              {"grevlex_inequalities", inequalities}};
  o.text.push_back("associated form: " + to_string(af.form));
  o.text.push_back("torus destabilizer: " + (destabilizer ? weights_string(*destabilizer) : std::string("none")));
  o.text.push_back("grevlex-minimal monomial outside I: " + (minimal ? monomial_string(*minimal) : std::string("none")) +
                   (inequalities ? " (partial sums bounded)" : " (partial sums VIOLATED)"));
  if (sys.nvars() == 2) {
    const StabilityReport r = binary_stability(af.form);
    o.result["binary"] = report_json(r);
    o.text.push_back("binary verdict: " + std::string(to_string(r.verdict)) +
                     " (root multiplicities " + multiplicities_string(r.multiplicities) + ")");
  } else {
    o.result["binary"] = nullptr;
  }
  return o;
}

Outcome cmd_binary_stability(const Options& opt) {
  const InputSystem sys = load(opt.files[0]);
  if (sys.nvars() != 2) throw InvalidArgument("binary-stability requires exactly two variables");
  const Polynomial f = single(sys).with_space(Space::Dual);
  Outcome o;
  o.nvars = 2;
  o.d = f.degree();
  const StabilityReport r = binary_stability(f);
  o.result = report_json(r);
  o.text.push_back(std::string(to_string(r.verdict)));
  o.text.push_back("root multiplicities: " + multiplicities_string(r.multiplicities));
  if (r.witness) o.text.push_back("destabilizing weights: " + weights_string(*r.witness));
  return o;
}

Outcome cmd_mather_yau(const Options& opt) {
  if (opt.files.size() > 2) throw UsageError("mather-yau takes one or two files");
  Outcome o;
  o.nvars = 2;
  o.d = 3;
  o.nu = 4;
  std::vector<GITPoint> points;
  json point_list = json::array();
  for (const auto& file : opt.files) {
    const InputSystem sys = load(file);
    if (sys.nvars() != 2) throw InvalidArgument(file + ": expected a binary quartic");
    GITPoint p = mather_yau_point(single(sys), opt.degree_cap);
    json coords = json::array();
    for (const auto& c : p.coordinates()) coords.push_back(c.str());
    point_list.push_back(coords);
    o.text.push_back(file + ": " + point_string(p));
    points.push_back(std::move(p));
  }
  o.result = {{"points", point_list}};
  if (points.size() == 2) {
    const bool equal = points_equal(points[0], points[1]);
    o.result["equal"] = equal;
    o.text.push_back(equal ? "EQUAL" : "DIFFERENT");
  }
  return o;
}

Outcome cmd_audit(const Options& opt) {
  const InputSystem sys = load(opt.files[0]);
  require_square(sys);
  Outcome o;
  describe_system(o, sys);
  o.with_seed = true;
  const AuditReport r = semistability_audit(sys.polynomials, opt.trials, opt.seed, opt.degree_cap);
  json samples = json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"weights", s.weights.weights()}, {"min", s.dual.min}, {"max", s.dual.max}});
  }
  o.result = {{"trials", opt.trials},
              {"samples", samples},
              {"semistable_evidence", r.semistable_evidence},
              {"torus_destabilizer", r.torus_destabilizer ? json(r.torus_destabilizer->weights()) : json(nullptr)},
              {"grevlex_minimal", r.grevlex_minimal ? monomial_json(*r.grevlex_minimal) : json(nullptr)},
              {"grevlex_inequalities", r.grevlex_inequalities_hold},
              {"decomposable_split", r.decomposable_split ? json(*r.decomposable_split) : json(nullptr)},
              {"any_limit_exists", r.any_limit_exists ? json(*r.any_limit_exists) : json(nullptr)}};
  std::size_t nonpositive = 0;
  for (const auto& s : r.samples) nonpositive += s.dual.min <= 0 ? 1 : 0;
  o.text.push_back("seed " + std::to_string(opt.seed) + ", " + std::to_string(r.samples.size()) + " sampled weights");
  o.text.push_back("samples with nonpositive minimum weight: " + std::to_string(nonpositive) + "/" +
                   std::to_string(r.samples.size()));
  o.text.push_back(std::string("semistability evidence: ") + (r.semistable_evidence ? "yes" : "NO"));
  o.text.push_back("torus destabilizer: " +
                   (r.torus_destabilizer ? weights_string(*r.torus_destabilizer) : std::string("none")));
  o.text.push_back("grevlex-minimal monomial: " +
                   (r.grevlex_minimal ? monomial_string(*r.grevlex_minimal) : std::string("none")) +
                   (r.grevlex_inequalities_hold ? " (partial sums bounded)" : " (partial sums VIOLATED)"));
  if (r.decomposable_split) {
    o.text.push_back("decomposable at split b = " + std::to_string(*r.decomposable_split));
  } else {
    o.text.push_back(std::string("no split certificate; a sampled weight admits a limit: ") +
                     (*r.any_limit_exists ? "yes" : "no"));
  }
  return o;
}

struct CommandSpec {
  const char* name;
  const char* description;
  std::function<Outcome(const Options&)> handler;
  std::size_t max_files;
};

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> specs = {
      {"assoc", "associated form of n forms of degree d in n variables", cmd_assoc, 1},
      {"perp", "annihilator of a form (read as a dual form in z1..zn)", cmd_perp, 1},
      {"hilbert", "Hilbert function of the quotient by the forms", cmd_hilbert, 1},
      {"regseq", "check that n forms form a regular sequence", cmd_regseq, 1},
      {"koszul-check", "exactness of the Koszul complex in low degrees", cmd_koszul, 1},
      {"decompose", "search for a decomposition certificate", cmd_decompose, 1},
      {"degenerate", "limit of the forms under the splitting one-parameter subgroup", cmd_degenerate, 1},
      {"stability", "torus and binary stability evidence for the associated form", cmd_stability, 1},
      {"binary-stability", "SL(2) stability of a binary form", cmd_binary_stability, 1},
      {"mather-yau", "invariant point of the associated form of a binary quartic", cmd_mather_yau, 2},
      {"audit", "sampled one-parameter subgroup semistability audit", cmd_audit, 1},
  };
  return specs;
}

void emit(const std::string& command, const Options& opt, const Outcome& o, std::ostream& out, std::ostream& err) {
  if (opt.json) {
    json doc = {{"command", command},
                {"nvars", o.nvars ? json(*o.nvars) : json(nullptr)},
                {"d", o.d ? json(*o.d) : json(nullptr)},
                {"nu", o.nu ? json(*o.nu) : json(nullptr)},
                {"result", o.result}};
    if (o.with_seed) doc["seed"] = opt.seed;
    out << doc.dump(2) << '\n';
    if (o.exit_code != kExitOk) err << "error: " << o.failure << '\n';
    return;
  }
  if (o.exit_code != kExitOk) {
    err << "error: " << o.failure << '\n';
    return;
  }
  for (const auto& line : o.text) out << line << '\n';
}

void emit_error(const std::string& command, const Options& opt, const std::string& kind, const std::string& message,
                std::ostream& out, std::ostream& err) {
  if (opt.json) {
    json doc = {{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
    out << doc.dump(2) << '\n';
  }
  err << "error: " << message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Associated forms and inverse systems of balanced complete intersections", "assoform"};
  app.require_subcommand(1, 1);
  Options opt;
  std::map<std::string, const CommandSpec*> by_name;
  for (const auto& spec : commands()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.description);
    by_name[spec.name] = &spec;
    sub->add_option("files", opt.files, "input file(s)")->required()->expected(1, static_cast<int>(spec.max_files));
    sub->add_flag("--json", opt.json, "print a JSON report");
    sub->add_option("--degree-cap", opt.degree_cap, "largest accepted socle degree n(d-1)");
    const std::string name = spec.name;
    if (name == "audit") {
      sub->add_option("--seed", opt.seed, "random seed");
      sub->add_option("--trials", opt.trials, "number of sampled one-parameter subgroups");
    }
    if (name == "decompose" || name == "degenerate") {
      sub->add_option("--split", opt.split, "split index b (1 <= b <= n-1)");
    }
    if (name == "hilbert" || name == "koszul-check") {
      sub->add_option("--bound", opt.bound, "largest graded degree examined");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Outcome o = by_name.at(command)->handler(opt);
    emit(command, opt, o, out, err);
    return o.exit_code;
  } catch (const ParseError& e) {
    emit_error(command, opt, "parse", e.what(), out, err);
    return kExitUsage;
  } catch (const UsageError& e) {
    emit_error(command, opt, "usage", e.what(), out, err);
    return kExitUsage;
  } catch (const NotRegularSequence& e) {
    emit_error(command, opt, "not-regular-sequence", std::string("not a regular sequence: ") + e.what(), out, err);
    return kExitPrecondition;
  } catch (const SingularHypersurface& e) {
    emit_error(command, opt, "singular-hypersurface", std::string("singular hypersurface: ") + e.what(), out, err);
    return kExitPrecondition;
  } catch (const Error& e) {
    emit_error(command, opt, "precondition", e.what(), out, err);
    return kExitPrecondition;
  }
}

}  // namespace assoform::cli
