// SPDX-License-Identifier: Apache-2.0

#include "gsb/cli.hpp"
#include "gsb/census.hpp"
#include "gsb/complete.hpp"
#include "gsb/error.hpp"
#include "gsb/report.hpp"
#include "gsb/symn.hpp"
#include "gsb/text.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace gsb::cli {

namespace {

using report::Json;

struct Options {
	std::string command;
	std::optional<int> symn;
	std::optional<std::string> file;
	std::optional<std::size_t> degree_bound;
	std::size_t budget = default_rule_budget;
	std::optional<std::size_t> max_len;
	std::optional<std::size_t> len;
	std::optional<std::string> word;
	unsigned jobs = 1;
	std::optional<std::string> out;
	bool trace = false;
	bool lemma = false;
};

/// A command's outcome: exit status and JSON payload.
struct Outcome {
	int status = ok;
	Json payload;
};

/// Resolved input: either S_n(Sym_n) or a presentation file.
struct Input {
	int n = 0;
	bool is_symn = false;
	PresentationFile presentation;
	std::string digest;

	std::size_t max_lead_degree() const
	{
		std::size_t d = 0;
		for (const Poly &p : presentation.polys())
			d = std::max(d, p.degree());
		return d;
	}
};

class UsageError : public Error {
public:
	using Error::Error;
};

Input load_input(const Options &o)
{
	Input in;
	if (o.symn) {
		if (*o.symn < 2 || *o.symn > max_generators)
			throw UsageError("--symn needs 2 <= n <= 255");
		in.n = *o.symn;
		in.is_symn = true;
		in.presentation.n = in.n;
		for (const Poly &p : symn::defining_relations(in.n))
			in.presentation.relations.push_back({p});
		in.digest = report::sha256_hex("symn:" + std::to_string(in.n));
		return in;
	}
	if (!o.file)
		throw UsageError("one of --symn or --file is required");
	std::ifstream f(*o.file, std::ios::binary);
	if (!f)
		throw UsageError("cannot read " + *o.file);
	std::stringstream ss;
	ss << f.rdbuf();
	std::string text = ss.str();
	in.presentation = parse_presentation(text);
	in.n = in.presentation.n;
	in.digest = report::sha256_hex(text);
	return in;
}

std::size_t default_bound(const Options &o, const Input &in, std::size_t at_least = 0)
{
	std::size_t d = o.degree_bound.value_or(static_cast<std::size_t>(in.n) + 6);
	if (!in.is_symn)
		d = std::max(d, in.max_lead_degree());
	return std::max(d, at_least);
}

/// Completes a presentation-file input; budget exhaustion ends the command.
CompletionReport complete_file(const Options &o, const Input &in, std::size_t bound)
{
	auto rep = shirshov_complete(in.presentation.polys(), bound, o.budget, o.jobs);
	if (rep.status == CompletionStatus::budget_exhausted)
		throw BudgetRefusal("completion exhausted the rule budget of " + std::to_string(o.budget) +
		                    " below degree " + std::to_string(bound));
	return rep;
}

Outcome run_complete(const Options &o, const Input &in, std::ostream &out)
{
	std::size_t d = default_bound(o, in, in.max_lead_degree());
	auto rep = shirshov_complete(in.presentation.polys(), d, o.budget, o.jobs);
	out << "status: " << to_string(rep.status) << "\n"
	    << "degree bound: " << d << "\n"
	    << "rounds: " << rep.rounds << "\n"
	    << "rules: " << rep.input.size() << " -> " << rep.basis.size() << "\n"
	    << "skipped beyond bound: " << rep.skipped << "\n";
	if (o.trace)
		for (const AddedRule &a : rep.added)
			out << "  + [" << a.id << "] " << format_poly(a.rule) << "   from " << to_string(a.source.kind)
			    << " of " << a.source.f << "," << a.source.g << " at " << format_word(a.source.w) << "\n";
	Json p = report::to_json(rep, o.trace);
	p["provenance_replay"] = replay_provenance(rep);
	return {rep.status == CompletionStatus::closed_below_bound ? ok : budget_refusal, std::move(p)};
}

Outcome run_verify(const Options &o, const Input &in, std::ostream &out)
{
	if (in.is_symn) {
		std::size_t d = o.degree_bound.value_or(static_cast<std::size_t>(in.n) + 6);
		auto rep = symn::verify_theorem(in.n, d, o.jobs);
		out << "S-tilde(n=" << in.n << ", d=" << d << "): " << rep.rules << " rules, " << rep.checked
		    << " ambiguities checked, " << rep.skipped << " beyond bound, " << rep.nontrivial << " nontrivial\n";
		for (const auto &[fp, pc] : rep.pairs)
			out << "  " << symn::to_string(fp.first) << "^" << symn::to_string(fp.second) << "  checked "
			    << pc.checked << "  nontrivial " << pc.nontrivial << "\n";
		for (const auto &f : rep.failures)
			out << "  nontrivial at " << format_word(f.ambiguity.w) << ": remainder "
			    << format_poly(f.remainder) << "\n";
		out << "verdict: " << (rep.pass() ? "pass" : "fail") << "\n";
		int status = rep.pass() ? ok : verification_failed;
		if (!o.lemma)
			return {status, report::to_json(rep)};

		auto lem = symn::verify_lemma_membership(in.n, d, o.budget, o.jobs);
		out << "membership: " << lem.members << " rules against " << lem.completed_rules
		    << " completed rules, " << lem.failures.size() << " failures, "
		    << (lem.inconclusive() ? "inconclusive" : lem.pass() ? "pass" : "fail") << "\n";
		if (lem.inconclusive())
			status = std::max<int>(status, budget_refusal);
		else if (!lem.pass() && status == ok)
			status = verification_failed;
		return {status, Json{{"kind", "theorem_and_lemma"},
		                     {"theorem", report::to_json(rep)},
		                     {"lemma", report::to_json(lem)}}};
	}

	// a presentation file: check its relations as a candidate basis
	if (o.lemma)
		throw UsageError("--lemma requires --symn");
	std::size_t d = default_bound(o, in);
	Basis basis = Basis::build(in.presentation.polys());
	AmbiguitySet set = enumerate_ambiguities(basis, d);
	auto results = check_all(set.within, basis, o.jobs);
	Json failures = Json::array();
	std::size_t bad = 0;
	for (const auto &r : results)
		if (!r.trivial) {
			bad++;
			failures.push_back(report::to_json(r, o.trace));
			out << "  nontrivial at " << format_word(r.ambiguity.w) << ": remainder "
			    << format_poly(r.remainder) << "\n";
		}
	out << basis.size() << " rules, " << set.within.size() << " ambiguities checked, " << set.skipped
	    << " beyond bound, " << bad << " nontrivial\nverdict: " << (bad == 0 ? "pass" : "fail") << "\n";
	return {bad == 0 ? ok : verification_failed,
	        Json{{"kind", "verification"},
	             {"n", in.n},
	             {"degree_bound", d},
	             {"rules", basis.size()},
	             {"ambiguities_total", set.within.size() + set.skipped},
	             {"checked", set.within.size()},
	             {"skipped_beyond_bound", set.skipped},
	             {"nontrivial", bad},
	             {"verdict", bad == 0 ? "pass" : "fail"},
	             {"failures", std::move(failures)}}};
}

Outcome run_nf(const Options &o, const Input &in, std::ostream &out)
{
	if (!o.word)
		throw UsageError("nf needs --word");
	Word w = parse_word(*o.word, in.n);
	std::size_t d = default_bound(o, in, std::max(w.size(), static_cast<std::size_t>(in.n) + 1));
	Basis basis;
	if (in.is_symn)
		basis = symn::build_S_tilde(in.n, d).basis;
	else
		basis = complete_file(o, in, d).basis;
	NormalForm nf = normal_form(Poly(w), basis, o.trace);
	out << format_poly(nf.poly) << "\n";
	Json p{{"kind", "normal_form"},
	       {"n", in.n},
	       {"degree_bound", d},
	       {"input", report::to_json(w)},
	       {"normal_form", report::to_json(nf.poly)}};
	if (nf.trace) {
		for (const auto &s : nf.trace->steps)
			out << "  rule " << s.rule << " at " << s.position << " in " << format_word(s.word) << "  ("
			    << format_poly(basis.rule(s.rule)) << ")\n";
		p["trace"] = report::to_json(*nf.trace);
	}
	return {ok, std::move(p)};
}

Outcome run_enumerate(const Options &o, const Input &in, std::ostream &out)
{
	if (!o.len)
		throw UsageError("enumerate needs --len");
	std::vector<Word> words;
	if (in.is_symn) {
		words = symn::irr_enumerate(in.n, *o.len);
	} else {
		std::size_t d = default_bound(o, in, *o.len);
		words = irreducible_words(complete_file(o, in, d).basis, in.n, *o.len);
	}
	Json list = Json::array();
	for (const Word &w : words) {
		out << format_word(w) << "\n";
		list.push_back(report::to_json(w));
	}
	return {ok, Json{{"kind", "normal_words"}, {"n", in.n}, {"length", *o.len}, {"count", words.size()},
	                 {"words", std::move(list)}}};
}

Outcome run_count(const Options &o, const Input &in, std::ostream &out)
{
	if (!o.max_len)
		throw UsageError("count needs --max-len");
	out << "length\tcount\n";
	if (in.is_symn) {
		auto g = census::count_normal_forms(in.n, *o.max_len);
		for (std::size_t l = 0; l < g.total.size(); l++)
			out << l << "\t" << g.total[l].get_str() << "\n";
		return {ok, report::to_json(g)};
	}
	std::size_t d = default_bound(o, in, *o.max_len);
	Basis basis = complete_file(o, in, d).basis;
	Json rows = Json::array();
	for (std::size_t l = 0; l <= *o.max_len; l++) {
		std::size_t c = count_irreducible_words(basis, in.n, l);
		out << l << "\t" << c << "\n";
		rows.push_back(Json{{"length", l}, {"total", std::to_string(c)}});
	}
	return {ok, Json{{"kind", "growth_series"}, {"n", in.n}, {"degree_bound", d}, {"series", std::move(rows)}}};
}

Outcome run_oracle(const Options &o, const Input &in, std::ostream &out)
{
	std::size_t lo = 0, hi = 0;
	if (o.len)
		lo = hi = *o.len;
	else if (o.max_len)
		hi = *o.max_len;
	else
		throw UsageError("oracle needs --len or --max-len");

	std::optional<census::GrowthSeries> series;
	std::optional<Basis> basis;
	std::vector<census::WordRelation> rels;
	if (in.is_symn) {
		series = census::count_normal_forms(in.n, hi);
	} else {
		if (!in.presentation.homogeneous_monoid())
			throw UsageError("the oracle needs length-preserving word relations");
		for (const Relation &r : in.presentation.relations)
			rels.push_back(std::get<std::pair<Word, Word>>(r.value));
		basis = complete_file(o, in, default_bound(o, in, hi)).basis;
	}

	bool pass = true;
	Json rows = Json::array();
	out << "length\tclasses\tnormal\tverdict\n";
	for (std::size_t l = lo; l <= hi; l++) {
		census::OracleReport r;
		if (in.is_symn) {
			r = census::oracle_check_irr(in.n, l);
		} else {
			auto parts = census::oracle_classes(in.n, rels, l);
			r = census::check_classes(parts, [&](const Word &w) { return !basis->index().contains_any(w); });
		}
		Json row = report::to_json(r);
		bool ok_row = r.pass();
		if (series) {
			bool agrees = series->total[l] == r.classes;
			row["count_normal_forms_total"] = series->total[l].get_str();
			row["counts_agree"] = agrees;
			ok_row = ok_row && agrees;
		}
		pass = pass && ok_row;
		out << l << "\t" << r.classes << "\t" << r.normal_words << "\t" << (ok_row ? "pass" : "fail") << "\n";
		rows.push_back(std::move(row));
	}
	return {pass ? ok : verification_failed,
	        Json{{"kind", "oracle"}, {"n", in.n}, {"lengths", std::move(rows)}, {"verdict", pass ? "pass" : "fail"}}};
}

std::string join(const std::vector<std::string> &args)
{
	std::string s = "gsb";
	for (const auto &a : args)
		s += " " + a;
	return s;
}

unsigned default_jobs()
{
	if (const char *env = std::getenv("GSB_JOBS")) {
		char *end = nullptr;
		unsigned long v = std::strtoul(env, &end, 10);
		if (end != env && *end == '\0' && v > 0)
			return static_cast<unsigned>(std::min<unsigned long>(v, 1024));
	}
	return 1;
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	Options o;
	o.jobs = default_jobs();

	CLI::App app{"Groebner-Shirshov basis workbench for free associative algebras", "gsb"};
	app.require_subcommand(1);
	app.set_help_all_flag("--help-all");

	auto add_common = [&](CLI::App *sub) {
		auto *sy = sub->add_option("--symn", o.symn, "use S_n(Sym_n) with n generators");
		auto *fi = sub->add_option("--file", o.file, "read a presentation file");
		sy->excludes(fi);
		fi->excludes(sy);
		sub->add_option("--degree-bound", o.degree_bound, "largest ambiguity / word degree (default n + 6)");
		sub->add_option("--budget", o.budget, "maximum number of rules during completion")->check(CLI::PositiveNumber);
		sub->add_option("--jobs", o.jobs, "worker threads (default $GSB_JOBS or 1)")->check(CLI::PositiveNumber);
		sub->add_option("--out", o.out, "write the JSON report here");
		sub->add_flag("--trace", o.trace, "include reduction traces");
	};

	auto *complete = app.add_subcommand("complete", "degree-bounded Shirshov completion");
	add_common(complete);
	auto *verify = app.add_subcommand("verify", "check that all compositions are trivial");
	add_common(verify);
	verify->add_flag("--lemma", o.lemma, "also reduce every S-tilde rule modulo the completed S(n)");
	auto *nf = app.add_subcommand("nf", "normal form of a word");
	add_common(nf);
	nf->add_option("--word", o.word, "word, e.g. \"x3 x1 x2 x2\"")->required();
	auto *enumerate = app.add_subcommand("enumerate", "list normal words of one length");
	add_common(enumerate);
	enumerate->add_option("--len", o.len, "word length")->required();
	auto *count = app.add_subcommand("count", "normal-form counts per length");
	add_common(count);
	count->add_option("--max-len", o.max_len, "largest length")->required();
	auto *oracle = app.add_subcommand("oracle", "brute-force congruence check");
	add_common(oracle);
	auto *ol = oracle->add_option("--len", o.len, "single length");
	auto *om = oracle->add_option("--max-len", o.max_len, "lengths 0..max-len");
	ol->excludes(om);
	om->excludes(ol);

	std::vector<std::string> rev(args.rbegin(), args.rend());
	try {
		app.parse(rev);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return ok;
	} catch (const CLI::CallForAllHelp &) {
		out << app.help("", CLI::AppFormatMode::All);
		return ok;
	} catch (const CLI::ParseError &e) {
		err << "gsb: " << e.what() << "\n";
		return usage_error;
	}
	for (auto *sub : app.get_subcommands())
		o.command = sub->get_name();

	auto t0 = std::chrono::steady_clock::now();
	Outcome res;
	Input in;
	try {
		in = load_input(o);
		if (o.command == "complete")
			res = run_complete(o, in, out);
		else if (o.command == "verify")
			res = run_verify(o, in, out);
		else if (o.command == "nf")
			res = run_nf(o, in, out);
		else if (o.command == "enumerate")
			res = run_enumerate(o, in, out);
		else if (o.command == "count")
			res = run_count(o, in, out);
		else
			res = run_oracle(o, in, out);
	} catch (const ParseError &e) {
		err << "gsb: parse error: " << e.what() << "\n";
		return usage_error;
	} catch (const BudgetRefusal &e) {
		err << "gsb: " << e.what() << "\n";
		return budget_refusal;
	} catch (const UsageError &e) {
		err << "gsb: " << e.what() << "\n";
		return usage_error;
	} catch (const std::invalid_argument &e) {
		err << "gsb: " << e.what() << "\n";
		return usage_error;
	} catch (const std::exception &e) {
		err << "gsb: internal error: " << e.what() << "\n";
		return internal_error;
	}
	double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

	if (o.out) {
		std::ofstream f(*o.out, std::ios::binary | std::ios::trunc);
		if (!f) {
			err << "gsb: cannot write " << *o.out << "\n";
			return usage_error;
		}
		f << report::serialize(report::envelope(join(args), in.digest, std::move(res.payload), ms));
	}
	return res.status;
}

} // namespace gsb::cli
