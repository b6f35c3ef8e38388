// SPDX-License-Identifier: Apache-2.0

#include "gsb/symn.hpp"
#include "gsb/text.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace gsb;
using namespace gsb::symn;

namespace {

std::size_t count_family(const SymBasis &sb, Family f)
{
	std::size_t c = 0;
	for (const SymRule &r : sb.tags)
		c += r.family == f;
	return c;
}

} // namespace

TEST_CASE("defining relations")
{
	CHECK(defining_relations(2).size() == 1);
	CHECK(defining_relations(3).size() == 5);
	CHECK(defining_relations(4).size() == 23);
	CHECK(defining_relations(2)[0] == Poly::binomial(Word{2, 1}, Word{1, 2}));
	CHECK_THROWS_AS(defining_relations(1), std::invalid_argument);
}

TEST_CASE("S-tilde at small bounds")
{
	auto sb = build_S_tilde(2, 3);
	CHECK(sb.tags.size() == 2);
	CHECK(count_family(sb, Family::T1) == 1);
	CHECK(count_family(sb, Family::T2) == 1);
	CHECK(sb.basis.rule(1) == Poly::binomial(Word{2, 1, 2}, Word{1, 2, 2}));
	CHECK_THROWS_AS(build_S_tilde(3, 3), std::invalid_argument);

	auto s3 = build_S_tilde(3, 5);
	auto id = s3.basis.find_lead(Word{1, 2, 3, 3, 2});
	REQUIRE(id);
	CHECK(s3.tags[*id].family == Family::T4);
	CHECK(s3.basis.rule(*id) == Poly::binomial(Word{1, 2, 3, 3, 2}, Word{1, 2, 3, 2, 3}));
}

TEST_CASE("family shapes")
{
	auto sb = build_S_tilde(3, 8);
	for (RuleId i = 0; i < sb.tags.size(); i++) {
		const SymRule &r = sb.tags[i];
		const Word &lead = sb.basis.lead(i);
		CHECK(lead.size() <= 8);
		CHECK(sb.basis.rule(i).is_homogeneous());
		CHECK(sb.basis.rule(i).size() == 2);
		switch (r.family) {
		case Family::T1: CHECK(lead.size() == 3); break;
		case Family::T2: CHECK(lead.size() == 4); break;
		case Family::T3: CHECK(lead[0] == r.params[0]); break;
		case Family::T4: CHECK(lead.prefix(3) == identity_word(3)); break;
		case Family::T5:
			CHECK(lead[lead.size() - 1] == 1);
			CHECK(lead.prefix(3) == identity_word(3));
			break;
		}
	}
	// T3 needs 1 + m + n <= d: m = 1..4 for each of x2, x3
	CHECK(count_family(sb, Family::T3) == 8);
	// T5: |u| = 1..4 over two letters
	CHECK(count_family(sb, Family::T5) == 2 + 4 + 8 + 16);
	// T4: unsorted words of length 2..5 over two letters
	std::size_t t4 = 0;
	for (std::size_t l = 2; l <= 5; l++)
		t4 += (std::size_t{1} << l) - (l + 1);
	CHECK(count_family(sb, Family::T4) == t4);
}

TEST_CASE("every composition is trivial for n = 2 and n = 3")
{
	for (int n : {2, 3}) {
		auto rep = verify_theorem(n, 8);
		CHECK(rep.pass());
		CHECK(rep.nontrivial == 0);
		CHECK(rep.checked > 0);
		CHECK(rep.total == rep.checked + rep.skipped);
	}
	CHECK_THROWS_AS(verify_theorem(3, 4), std::invalid_argument);
}

TEST_CASE("pair coverage at n = 3")
{
	auto rep = verify_theorem(3, 8);
	using F = Family;
	for (FamilyPair p : std::vector<FamilyPair>{{F::T1, F::T1}, {F::T1, F::T2}, {F::T2, F::T1}, {F::T2, F::T2},
	                                            {F::T2, F::T4}, {F::T4, F::T1}, {F::T4, F::T2}}) {
		CAPTURE(to_string(p.first));
		CAPTURE(to_string(p.second));
		REQUIRE(rep.pairs.count(p));
		CHECK(rep.pairs.at(p).checked > 0);
		CHECK(rep.pairs.at(p).nontrivial == 0);
	}
	std::size_t sum = 0;
	for (const auto &[k, v] : rep.pairs)
		sum += v.checked;
	CHECK(sum == rep.checked);
}

TEST_CASE("removing a T4 rule breaks closure unless the rule is redundant")
{
	auto sb = build_S_tilde(3, 8);
	std::size_t minimal = 0;
	for (RuleId i = 0; i < sb.tags.size(); i++) {
		if (sb.tags[i].family != Family::T4)
			continue;
		auto rest = sb.without(i);
		auto rep = verify_basis(rest);
		CAPTURE(format_word(sb.basis.lead(i)));
		if (rest.basis.index().contains_any(sb.basis.lead(i))) {
			// e u with an unsorted proper prefix of u: reducible by a shorter T4
			CHECK(rep.pass());
			CHECK(normal_form(sb.basis.rule(i), rest.basis).poly.is_zero());
			continue;
		}
		minimal++;
		CHECK_FALSE(rep.pass());
		REQUIRE_FALSE(rep.failures.empty());
		CHECK_FALSE(rep.failures.front().remainder.is_zero());
	}
	// u = x2^a x3^b x2 with b >= 1 and a + b <= 4
	CHECK(minimal == 10);
}

TEST_CASE("S-tilde lies in the ideal of S")
{
	for (auto [n, d] : std::vector<std::pair<int, std::size_t>>{{2, 8}, {3, 7}}) {
		auto rep = verify_lemma_membership(n, d);
		CHECK(rep.pass());
		CHECK(rep.members == build_S_tilde(n, d).tags.size());
	}
}

TEST_CASE("irr_member examples")
{
	CHECK(irr_member(Word{}, 3));
	CHECK(irr_member(Word{3, 2}, 3));
	CHECK(irr_member(Word{1, 2, 3}, 3));
	CHECK_FALSE(irr_member(Word{2, 1, 3}, 3));
	CHECK(irr_member(Word{1, 1, 2, 3, 2, 3, 3}, 3));
	CHECK_FALSE(irr_member(Word{1, 2, 3, 3, 2}, 3));
	CHECK_FALSE(irr_member(Word{1, 2, 3, 1}, 3));
	CHECK(irr_member(Word{1, 1, 2, 2}, 3));
	CHECK_FALSE(irr_member(Word{3, 1, 2, 3}, 3));
	CHECK(irr_member(Word{1, 2}, 2));
	CHECK(irr_member(Word{1, 1, 2}, 2));
	CHECK(irr_member(Word{1, 2, 2}, 2));
	CHECK_FALSE(irr_member(Word{2, 1}, 2));
	CHECK_FALSE(irr_member(Word{1, 2, 1}, 2));
}

TEST_CASE("irr_enumerate examples")
{
	CHECK(irr_enumerate(2, 2) == std::vector<Word>{Word{1, 1}, Word{1, 2}, Word{2, 2}});
	CHECK(irr_enumerate(3, 3).size() == 22);
	CHECK(irr_enumerate(3, 4).size() == 54);
	CHECK(irr_enumerate(4, 3).size() == 64);
	CHECK(irr_enumerate(3, 0) == std::vector<Word>{Word{}});
	for (int n : {2, 3, 4})
		for (std::size_t l = 0; l <= 7; l++) {
			auto ws = irr_enumerate(n, l);
			CHECK(std::is_sorted(ws.begin(), ws.end()));
			CHECK(std::adjacent_find(ws.begin(), ws.end()) == ws.end());
			std::size_t member = 0;
			for (const auto &s : oracle::all_words(n, l))
				member += irr_member(oracle::word(s), n);
			CHECK(ws.size() == member);
			for (const Word &w : ws)
				CHECK(irr_member(w, n));
		}
}

TEST_CASE("special words are the only normal words containing a permutation")
{
	// the two branches of the closed form are disjoint
	for (int n : {2, 3}) {
		auto perms = oracle::perm_strings(n);
		for (std::size_t l = n; l <= 7; l++)
			for (const Word &w : irr_enumerate(n, l)) {
				std::string s = oracle::str(w);
				std::size_t hits = 0;
				for (const auto &p : perms)
					for (std::size_t i = s.find(p); i != std::string::npos; i = s.find(p, i + 1))
						hits++;
				CHECK(hits <= 1);
				if (hits == 1)
					CHECK(s.find(perms[0]) != std::string::npos);
			}
	}
}

TEST_CASE("closed form equals the irreducible words of S-tilde")
{
	for (auto [n, d] : std::vector<std::pair<int, std::size_t>>{{2, 8}, {3, 8}}) {
		auto sb = build_S_tilde(n, d);
		for (std::size_t l = 0; l <= d; l++)
			CHECK(irr_enumerate(n, l) == irreducible_words(sb.basis, n, l));
	}
}
