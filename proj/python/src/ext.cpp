#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "assoform/binary_invariants.hpp"
#include "assoform/cli.hpp"
#include "assoform/errors.hpp"
#include "assoform/graded_ideal.hpp"
#include "assoform/inverse_system.hpp"
#include "assoform/parser.hpp"
#include "assoform/stability.hpp"

namespace py = pybind11;
using namespace assoform;

namespace {

using Names = std::optional<std::vector<std::string>>;

std::vector<std::string> names_or_default(const Names& names, std::size_t nvars, Space space) {
  return names ? *names : default_variable_names(nvars, space);
}

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  static py::object to_int = py::module_::import("builtins").attr("int");
  return cls(to_int(q.numerator().get_str()), to_int(q.denominator().get_str()));
}

// Variables are inferred from the highest xN that occurs when no names are given.
std::size_t infer_nvars(const std::vector<std::string>& texts, const Names& names, char prefix) {
  if (names) return names->size();
  std::size_t n = 1;
  for (const auto& t : texts) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] != prefix || (i > 0 && (std::isalnum(static_cast<unsigned char>(t[i - 1])) || t[i - 1] == '_'))) continue;
      std::size_t j = i + 1;
      std::size_t value = 0;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) value = value * 10 + (t[j++] - '0');
      if (j > i + 1) n = std::max(n, value);
    }
  }
  return n;
}

std::vector<Polynomial> parse_forms(const std::vector<std::string>& texts, const Names& names,
                                    std::size_t min_vars = 1) {
  const std::size_t n = names ? names->size() : std::max(min_vars, infer_nvars(texts, names, 'x'));
  const auto vars = names_or_default(names, n, Space::Primal);
  std::vector<Polynomial> out;
  std::size_t line = 1;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, vars, Space::Primal, line++));
  return out;
}

Polynomial parse_dual(const std::string& text, std::optional<std::size_t> nvars) {
  const std::size_t n = nvars ? *nvars : infer_nvars({text}, std::nullopt, 'z');
  return parse_polynomial(text, default_variable_names(n, Space::Dual), Space::Dual);
}

py::dict terms_dict(const Polynomial& f) {
  py::dict out;
  for (const auto& [m, c] : f.terms()) {
    py::tuple key(m.nvars());
    for (std::size_t i = 0; i < m.nvars(); ++i) key[i] = m[i];
    out[key] = fraction(c);
  }
  return out;
}

std::vector<std::string> render(const std::vector<Polynomial>& ps, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p, names));
  return out;
}

py::object weights_or_none(const std::optional<OnePS>& u) {
  if (!u) return py::none();
  return py::tuple(py::cast(u->weights()));
}

}  // namespace

PYBIND11_MODULE(_assoform, m) {
  m.doc() = "Associated forms of balanced complete intersections in exact arithmetic";

  auto base = py::register_exception<Error>(m, "AssoformError");
  py::register_exception<NotRegularSequence>(m, "NotRegularSequence", base);
  py::register_exception<SingularHypersurface>(m, "SingularHypersurface", base);
  py::register_exception<DegreeCapExceeded>(m, "DegreeCapExceeded", base);
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", base);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "associated_form",
      [](const std::vector<std::string>& forms, const Names& variables, unsigned degree_cap) {
        const AssociatedForm af = associated_form(parse_forms(forms, variables), degree_cap);
        return py::make_tuple(to_string(af.form), terms_dict(af.form));
      },
      py::arg("forms"), py::arg("variables") = py::none(), py::arg("degree_cap") = kDefaultDegreeCap,
      "Associated form of n forms of one degree in n variables, as (text, {exponents: Fraction}).");

  m.def(
      "hilbert_function",
      [](const std::vector<std::string>& forms, const Names& variables, std::optional<unsigned> bound) {
        const GradedIdeal ideal(parse_forms(forms, variables));
        return hilbert_function(ideal, bound.value_or(ideal.socle_degree() + 1)).values;
      },
      py::arg("forms"), py::arg("variables") = py::none(), py::arg("bound") = py::none());

  m.def(
      "is_regular_sequence",
      [](const std::vector<std::string>& forms, const Names& variables) {
        return is_regular_sequence(parse_forms(forms, variables));
      },
      py::arg("forms"), py::arg("variables") = py::none());

  m.def(
      "koszul_exactness_check",
      [](const std::vector<std::string>& forms, unsigned k_max, const Names& variables) {
        return koszul_exactness_check(parse_forms(forms, variables), k_max);
      },
      py::arg("forms"), py::arg("k_max"), py::arg("variables") = py::none());

  m.def(
      "perp_generators",
      [](const std::string& form, std::optional<std::size_t> nvars) {
        const Polynomial f = parse_dual(form, nvars);
        return render(perp_generators(f), default_variable_names(f.nvars(), Space::Primal));
      },
      py::arg("form"), py::arg("nvars") = py::none(), "Generators of the annihilator of a dual form in z1..zn.");

  m.def(
      "recognize_decomposable",
      [](const std::vector<std::string>& forms, std::size_t split, const Names& variables) -> py::object {
        const auto gs = parse_forms(forms, variables);
        const auto cert = recognize_decomposable(GradedIdeal(gs), split);
        if (!cert) return py::none();
        return py::cast(render(cert->generators, names_or_default(variables, gs.front().nvars(), Space::Primal)));
      },
      py::arg("forms"), py::arg("split"), py::arg("variables") = py::none());

  m.def(
      "torus_destabilizer",
      [](const std::string& form, std::optional<std::size_t> nvars) {
        return weights_or_none(torus_destabilizer(parse_dual(form, nvars)));
      },
      py::arg("form"), py::arg("nvars") = py::none());

  m.def(
      "binary_stability",
      [](const std::string& form) {
        const StabilityReport r = binary_stability(parse_dual(form, 2));
        py::dict out;
        out["verdict"] = std::string(to_string(r.verdict));
        out["degree"] = r.degree;
        out["multiplicities"] = r.multiplicities;
        out["witness"] = weights_or_none(r.witness);
        return out;
      },
      py::arg("form"), "SL(2) stability of a binary dual form in z1, z2.");

  m.def(
      "semistability_audit",
      [](const std::vector<std::string>& forms, std::size_t trials, std::uint64_t seed, const Names& variables) {
        const AuditReport r = semistability_audit(parse_forms(forms, variables), trials, seed);
        py::list samples;
        for (const auto& s : r.samples) {
          samples.append(py::make_tuple(py::tuple(py::cast(s.weights.weights())), s.dual.min, s.dual.max));
        }
        py::dict out;
        out["seed"] = r.seed;
        out["samples"] = samples;
        out["semistable_evidence"] = r.semistable_evidence;
        out["torus_destabilizer"] = weights_or_none(r.torus_destabilizer);
        out["decomposable_split"] = r.decomposable_split ? py::cast(*r.decomposable_split) : py::none();
        return out;
      },
      py::arg("forms"), py::arg("trials") = 20, py::arg("seed") = 1, py::arg("variables") = py::none());

  m.def(
      "quartic_invariants",
      [](const std::string& form) {
        const auto inv = quartic_invariants(parse_dual(form, 2));
        return py::make_tuple(fraction(inv.i), fraction(inv.j));
      },
      py::arg("form"));

  m.def(
      "mather_yau_point",
      [](const std::string& form, const Names& variables) {
        const GITPoint p = mather_yau_point(parse_forms({form}, variables, 2).front());
        py::list out;
        for (const auto& c : p.coordinates()) out.append(fraction(c));
        return py::tuple(out);
      },
      py::arg("form"), py::arg("variables") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
