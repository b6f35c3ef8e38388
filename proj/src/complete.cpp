// SPDX-License-Identifier: Apache-2.0

#include "gsb/complete.hpp"

#include <stdexcept>

namespace gsb {

const char *to_string(CompletionStatus s) noexcept
{
	return s == CompletionStatus::closed_below_bound ? "closed_below_bound" : "budget_exhausted";
}

CompletionReport shirshov_complete(std::span<const Poly> rules, std::size_t degree_bound,
                                   std::size_t budget, unsigned jobs)
{
	CompletionReport rep;
	rep.input = Basis::build(rules);
	rep.degree_bound = degree_bound;
	for (const Word &l : rep.input.leads())
		if (l.size() > degree_bound)
			throw std::invalid_argument("degree bound below an input leading degree");
	if (budget < rep.input.size())
		throw std::invalid_argument("rule budget below the input size");

	Basis &basis = rep.basis;
	basis = rep.input;
	RuleId first_new = 0;
	for (;;) {
		std::size_t before = basis.size();
		auto ambs = enumerate_ambiguities(basis, degree_bound, first_new).within;
		if (ambs.empty())
			break;
		rep.rounds++;
		Basis snapshot = basis;
		auto results = check_all(ambs, snapshot, jobs);
		for (auto &res : results) {
			if (res.trivial)
				continue;
			NormalForm nf = normal_form(res.remainder, basis, true);
			if (nf.poly.is_zero())
				continue;
			if (basis.size() >= budget) {
				rep.status = CompletionStatus::budget_exhausted;
				break;
			}
			ReductionTrace trace = std::move(res.trace);
			trace.steps.insert(trace.steps.end(), nf.trace->steps.begin(), nf.trace->steps.end());
			trace.terminal = nf.poly;
			// nf.poly is irreducible, so its leading word is new and no merge happens
			RuleId id = *basis.insert(nf.poly);
			rep.added.push_back({id, res.ambiguity, std::move(trace), basis.rule(id)});
		}
		if (rep.status == CompletionStatus::budget_exhausted || basis.size() == before)
			break;
		first_new = before;
	}
	rep.skipped = enumerate_ambiguities(basis, degree_bound).skipped;
	return rep;
}

bool replay_provenance(const CompletionReport &report)
{
	Basis basis = report.input;
	for (const AddedRule &add : report.added) {
		if (add.id != basis.size())
			return false;
		Poly comp;
		try {
			comp = composition_poly(add.source, basis);
			if (replay(comp, add.trace.steps, basis) != add.trace.terminal)
				return false;
		} catch (const std::exception &) {
			return false;
		}
		if (add.trace.terminal.is_zero() || monic(add.trace.terminal) != add.rule)
			return false;
		if (normal_form(add.trace.terminal, basis).poly != add.trace.terminal)
			return false;
		if (basis.insert(add.rule) != add.id)
			return false;
	}
	return basis.rules() == report.basis.rules();
}

} // namespace gsb
