// SPDX-License-Identifier: Apache-2.0

#include "gsb/census.hpp"
#include "gsb/error.hpp"
#include "gsb/symn.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace gsb;
using namespace gsb::census;

namespace {

/// Brute-force count of words of length len containing no permutation factor.
std::size_t brute_avoiders(int n, std::size_t len)
{
	auto perms = oracle::perm_strings(n);
	std::size_t c = 0;
	for (const auto &s : oracle::all_words(n, len)) {
		bool hit = false;
		for (const auto &p : perms)
			hit = hit || oracle::contains(s, p);
		c += !hit;
	}
	return c;
}

std::size_t binom(std::size_t a, std::size_t b)
{
	if (b > a)
		return 0;
	std::size_t r = 1;
	for (std::size_t i = 1; i <= b; i++)
		r = r * (a - b + i) / i;
	return r;
}

} // namespace

TEST_CASE("oracle classes at small lengths")
{
	auto p = oracle_classes(2, 2);
	REQUIRE(p.classes.size() == 3);
	CHECK(p.classes[1] == std::vector<Word>{Word{1, 2}, Word{2, 1}});
	CHECK(oracle_classes(3, 3).classes.size() == 22);
	CHECK(oracle_classes(3, 4).classes.size() == 54);
	// below n nothing relates
	for (const auto &c : oracle_classes(4, 3).classes)
		CHECK(c.size() == 1);
	CHECK(oracle_classes(4, 3).classes.size() == 64);
}

TEST_CASE("oracle classes agree with breadth-first search")
{
	for (int n : {2, 3})
		for (std::size_t l = 0; l <= 6; l++) {
			auto ours = oracle_classes(n, l).classes;
			auto ref = oracle::classes(n, l, oracle::symn_relations(n));
			REQUIRE(ours.size() == ref.size());
			std::set<std::vector<std::string>> a, b;
			for (const auto &c : ours) {
				std::vector<std::string> s;
				for (const Word &w : c)
					s.push_back(oracle::str(w));
				a.insert(s);
			}
			for (const auto &c : ref)
				b.insert(c);
			CHECK(a == b);
		}
}

TEST_CASE("every class has exactly one closed-form normal word")
{
	for (std::size_t l = 0; l <= 8; l++) {
		auto rep = oracle_check_irr(2, l);
		CHECK(rep.pass());
		CHECK(rep.normal_words == rep.classes);
		CHECK(rep.representative_mismatches == 0);
	}
	auto r3 = oracle_check_irr(3, 4);
	CHECK(r3.pass());
	CHECK(r3.classes == 54);
	CHECK(r3.words == 81);
}

TEST_CASE("canonical representative is the normal word")
{
	for (std::size_t l = 0; l <= 6; l++)
		for (const auto &c : oracle_classes(3, l).classes) {
			std::size_t normal = 0;
			for (const Word &w : c)
				normal += symn::irr_member(w, 3);
			CHECK(normal == 1);
			CHECK(symn::irr_member(c.front(), 3));
		}
}

TEST_CASE("check_classes flags a bad predicate")
{
	auto parts = oracle_classes(2, 3);
	auto rep = check_classes(parts, [](const Word &) { return true; });
	CHECK_FALSE(rep.pass());
	for (const auto &v : rep.violations)
		CHECK(v.normal_words >= 2);
	auto none = check_classes(parts, [](const Word &) { return false; });
	CHECK(none.violations.size() == none.classes);
}

TEST_CASE("growth series")
{
	auto g3 = count_normal_forms(3, 7);
	std::vector<long> expect{1, 3, 9, 22, 54, 129, 307, 732};
	for (std::size_t l = 0; l <= 7; l++) {
		CHECK(g3.total[l] == expect[l]);
		CHECK(g3.avoiders[l] == brute_avoiders(3, l));
		CHECK(g3.special[l] == (l == 0 ? 0 : binom(l - 1, 2)));
		CHECK(g3.total[l] == g3.avoiders[l] + g3.special[l]);
	}
	// 81 words of length 4, 30 contain a permutation: 6 * 3 * 2 - 6 overlaps
	CHECK(g3.avoiders[4] == 51);
	CHECK(81 - 30 == 51);

	for (int n : {2, 4})
		for (std::size_t l = 0; l <= 8; l++) {
			auto g = count_normal_forms(n, 8);
			CHECK(g.total[l] == oracle_classes(n, l).classes.size());
		}
}

TEST_CASE("growth series scales to long words")
{
	auto g = count_normal_forms(4, 60);
	CHECK(g.total.size() == 61);
	for (std::size_t l = 1; l <= 60; l++)
		CHECK(g.total[l] > g.total[l - 1]);
}

TEST_CASE("budget refusal")
{
	CHECK_THROWS_AS(oracle_classes(9, 9), BudgetRefusal);
	CHECK_THROWS_AS(oracle_classes(3, 5, 100), BudgetRefusal);
	CHECK_NOTHROW(oracle_classes(3, 4, 81));
}

TEST_CASE("generic relations")
{
	// commutative monoid on two letters: classes by letter content
	std::vector<WordRelation> rels{{Word{2, 1}, Word{1, 2}}};
	for (std::size_t l = 0; l <= 6; l++)
		CHECK(oracle_classes(2, rels, l).classes.size() == l + 1);
	std::vector<WordRelation> bad{{Word{2, 1}, Word{1}}};
	CHECK_THROWS_AS(oracle_classes(2, bad, 3), std::invalid_argument);
}
