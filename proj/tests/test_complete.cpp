// SPDX-License-Identifier: Apache-2.0

#include "gsb/complete.hpp"
#include "gsb/symn.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace gsb;

TEST_CASE("S(2) is already closed")
{
	auto rep = shirshov_complete(symn::defining_relations(2), 8);
	CHECK(rep.status == CompletionStatus::closed_below_bound);
	CHECK(rep.added.empty());
	CHECK(rep.basis.rules() == symn::build_S(2).rules());
}

TEST_CASE("empty input")
{
	auto rep = shirshov_complete(std::vector<Poly>{}, 5);
	CHECK(rep.status == CompletionStatus::closed_below_bound);
	CHECK(rep.basis.empty());
	CHECK(rep.rounds == 0);
}

TEST_CASE("S(3) completion below degree 7")
{
	auto rep = shirshov_complete(symn::defining_relations(3), 7);
	CHECK(rep.status == CompletionStatus::closed_below_bound);
	CHECK(rep.basis.size() > 5);
	CHECK(replay_provenance(rep));
	for (const Poly &p : rep.basis.rules())
		CHECK(p.is_homogeneous());

	auto rels = oracle::symn_relations(3);
	for (std::size_t l = 0; l <= 7; l++)
		CHECK(count_irreducible_words(rep.basis, 3, l) == oracle::classes(3, l, rels).size());

	// idempotent
	auto again = shirshov_complete(rep.basis.rules(), 7);
	CHECK(again.added.empty());
	CHECK(again.basis.rules() == rep.basis.rules());
}

TEST_CASE("added rules lie in the ideal of the input")
{
	auto rep = shirshov_complete(symn::defining_relations(3), 6);
	// each added rule reduces to zero modulo the input plus the earlier additions
	Basis b = rep.input;
	for (const AddedRule &a : rep.added) {
		Poly comp = composition_poly(a.source, b);
		CHECK(replay(comp, a.trace.steps, b) == a.trace.terminal);
		b.insert(a.rule);
		CHECK(normal_form(a.rule, b).poly.is_zero());
	}
}

TEST_CASE("budget exhaustion is reported")
{
	auto rep = shirshov_complete(symn::defining_relations(3), 7, 6);
	CHECK(rep.status == CompletionStatus::budget_exhausted);
	CHECK(rep.basis.size() == 6);
	CHECK(replay_provenance(rep));
}

TEST_CASE("preconditions")
{
	CHECK_THROWS_AS(shirshov_complete(symn::defining_relations(3), 2), std::invalid_argument);
	CHECK_THROWS_AS(shirshov_complete(symn::defining_relations(3), 7, 3), std::invalid_argument);
}

TEST_CASE("a non-homogeneous presentation")
{
	// x1 x2 = x1, x2 x1 = x2: completion must make x1^2 -> x1 and x2^2 -> x2 consistent
	std::vector<Poly> rules{Poly::binomial(Word{2, 1}, Word{2}), Poly::binomial(Word{1, 2}, Word{1})};
	auto rep = shirshov_complete(rules, 6);
	CHECK(rep.status == CompletionStatus::closed_below_bound);
	CHECK(replay_provenance(rep));
	auto set = enumerate_ambiguities(rep.basis, 6);
	for (const auto &a : set.within)
		CHECK(check_trivial(a, rep.basis).trivial);
}
