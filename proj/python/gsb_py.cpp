// SPDX-License-Identifier: Apache-2.0

#include "gsb/census.hpp"
#include "gsb/complete.hpp"
#include "gsb/error.hpp"
#include "gsb/symn.hpp"
#include "gsb/text.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gsb;

namespace {

Word to_word(const std::vector<int> &v)
{
	std::vector<Letter> l;
	for (int x : v) {
		if (x < 1 || x > max_generators)
			throw py::value_error("generator index out of range: " + std::to_string(x));
		l.push_back(static_cast<Letter>(x));
	}
	return Word(std::move(l));
}

py::tuple from_word(const Word &w)
{
	py::tuple t(w.size());
	for (std::size_t i = 0; i < w.size(); i++)
		t[i] = static_cast<int>(w[i]);
	return t;
}

py::list from_poly(const Poly &p)
{
	py::list out;
	for (const auto &[w, c] : p)
		out.append(py::make_tuple(from_word(w), scalar_to_fraction(c)));
	return out;
}

Poly to_poly(const std::vector<std::pair<std::vector<int>, std::string>> &terms)
{
	Poly p;
	for (const auto &[w, c] : terms)
		p.add_term(to_word(w), parse_scalar(c));
	return p;
}

py::object big(const mpz_class &z)
{
	return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

} // namespace

PYBIND11_MODULE(_gsb, m)
{
	m.doc() = "Noncommutative Groebner-Shirshov basis workbench";

	py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
	py::register_exception<BudgetRefusal>(m, "BudgetRefusal", PyExc_RuntimeError);

	m.def("compare_deglex", [](const std::vector<int> &u, const std::vector<int> &v) {
		auto c = compare_deglex(to_word(u), to_word(v));
		return c < 0 ? -1 : c > 0 ? 1 : 0;
	}, py::arg("u"), py::arg("v"), "-1, 0 or 1 by degree-lexicographic order");

	m.def("sort_word", [](const std::vector<int> &u) { return from_word(sort_word(to_word(u))); }, py::arg("u"));

	m.def("parse_poly", [](const std::string &text, int n) { return from_poly(parse_poly(text, n)); },
	      py::arg("text"), py::arg("n") = 0);

	m.def("format_poly", [](const std::vector<std::pair<std::vector<int>, std::string>> &terms) {
		return format_poly(to_poly(terms));
	}, py::arg("terms"));

	m.def("normal_form", [](int n, const std::vector<int> &w, std::size_t degree_bound) {
		Word word = to_word(w);
		std::size_t d = std::max({degree_bound, word.size(), static_cast<std::size_t>(n) + 1});
		auto sb = symn::build_S_tilde(n, d);
		return from_poly(normal_form(Poly(word), sb.basis).poly);
	}, py::arg("n"), py::arg("word"), py::arg("degree_bound") = 0,
	   "normal form of a word in S_n(Sym_n) modulo S-tilde");

	m.def("irr_member", [](const std::vector<int> &w, int n) { return symn::irr_member(to_word(w), n); },
	      py::arg("word"), py::arg("n"));

	m.def("irr_enumerate", [](int n, std::size_t len) {
		py::list out;
		for (const Word &w : symn::irr_enumerate(n, len))
			out.append(from_word(w));
		return out;
	}, py::arg("n"), py::arg("length"));

	m.def("count_normal_forms", [](int n, std::size_t max_len) {
		py::list out;
		for (const mpz_class &z : census::count_normal_forms(n, max_len).total)
			out.append(big(z));
		return out;
	}, py::arg("n"), py::arg("max_len"));

	m.def("verify_symn", [](int n, std::size_t degree_bound, unsigned jobs) {
		symn::VerificationReport rep;
		{
			py::gil_scoped_release release;
			rep = symn::verify_theorem(n, degree_bound, jobs);
		}
		py::dict d;
		d["rules"] = rep.rules;
		d["checked"] = rep.checked;
		d["skipped"] = rep.skipped;
		d["nontrivial"] = rep.nontrivial;
		d["pass"] = rep.pass();
		return d;
	}, py::arg("n"), py::arg("degree_bound"), py::arg("jobs") = 1);

	m.def("oracle_check_irr", [](int n, std::size_t len) {
		auto rep = census::oracle_check_irr(n, len);
		py::dict d;
		d["words"] = rep.words;
		d["classes"] = rep.classes;
		d["normal_words"] = rep.normal_words;
		d["pass"] = rep.pass();
		return d;
	}, py::arg("n"), py::arg("length"));

	m.def("complete_symn", [](int n, std::size_t degree_bound, std::size_t budget) {
		CompletionReport rep;
		{
			py::gil_scoped_release release;
			rep = shirshov_complete(symn::defining_relations(n), degree_bound, budget);
		}
		py::dict d;
		d["status"] = to_string(rep.status);
		d["rounds"] = rep.rounds;
		d["input_rules"] = rep.input.size();
		d["rules"] = rep.basis.size();
		py::list rules;
		for (const Poly &p : rep.basis.rules())
			rules.append(from_poly(p));
		d["basis"] = rules;
		return d;
	}, py::arg("n"), py::arg("degree_bound"), py::arg("budget") = default_rule_budget);
}
