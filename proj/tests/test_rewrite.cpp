// SPDX-License-Identifier: Apache-2.0

#include "gsb/error.hpp"
#include "gsb/rewrite.hpp"
#include "gsb/symn.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace gsb;

TEST_CASE("factor index")
{
	std::vector<Word> pats{Word{1, 2}, Word{2}, Word{2, 1, 2}};
	FactorIndex idx(pats);
	auto occ = idx.occurrences(Word{2, 1, 2});
	// by end position, longer first
	REQUIRE(occ.size() == 4);
	CHECK(occ[0].start == 0);
	CHECK(occ[0].pattern == 1);
	CHECK(occ[1].start == 0);
	CHECK(occ[1].pattern == 2);
	CHECK(occ[2].start == 1);
	CHECK(occ[2].pattern == 0);
	auto lm = idx.leftmost(Word{1, 2, 1, 2});
	REQUIRE(lm);
	CHECK(lm->start == 0);
	CHECK(lm->pattern == 0);
	CHECK_FALSE(idx.contains_any(Word{1, 1, 3}));
	CHECK_THROWS_AS(FactorIndex(std::vector<Word>{Word{1}, Word{1}}), std::invalid_argument);

	// agrees with naive search on random inputs
	std::mt19937 rng(29);
	for (int t = 0; t < 300; t++) {
		std::vector<Word> ps;
		for (int i = 0; i < 5; i++) {
			Word w = oracle::random_word(rng, 3, 1, 4);
			if (std::find(ps.begin(), ps.end(), w) == ps.end())
				ps.push_back(w);
		}
		FactorIndex fi(ps);
		Word s = oracle::random_word(rng, 4, 0, 10);
		std::size_t naive = 0;
		for (const Word &p : ps)
			naive += p.size() <= s.size() ? find_factor_occurrences(p, s).size() : 0;
		CHECK(fi.occurrences(s).size() == naive);
		CHECK(fi.contains_any(s) == (naive > 0));
	}
}

TEST_CASE("build_basis")
{
	Poly c = Poly::binomial(Word{2, 1}, Word{1, 2});
	Basis b = build_basis(std::vector<Poly>{c});
	CHECK(b.size() == 1);
	CHECK(b.lead(0) == Word{2, 1});

	Basis d = build_basis(std::vector<Poly>{c * Scalar(2), c});
	CHECK(d.size() == 1);
	CHECK(d.rule(0) == c);

	// same leading word, different tails: merged by subtraction
	Basis m = build_basis(std::vector<Poly>{Poly::binomial(Word{2, 2}, Word{1, 1}),
	                                        Poly::binomial(Word{2, 2}, Word{1, 2})});
	REQUIRE(m.size() == 2);
	CHECK(m.rule(1) == Poly::binomial(Word{1, 2}, Word{1, 1}));

	Basis s3 = symn::build_S(3);
	CHECK(s3.size() == 5);
	for (const Word &l : s3.leads())
		CHECK(l > Word({1, 2, 3}));

	CHECK_THROWS_AS(build_basis(std::vector<Poly>{Poly()}), ZeroPolynomialError);
}

TEST_CASE("reduce_step")
{
	Basis b = build_basis(std::vector<Poly>{Poly::binomial(Word{2, 1}, Word{1, 2})});
	auto r = reduce_step(Poly(Word{2, 1}), b);
	REQUIRE(r);
	CHECK(r->first == Poly(Word{1, 2}));
	CHECK_FALSE(reduce_step(Poly(Word{1, 2}), b));

	auto st = symn::build_S_tilde(3, 8);
	auto s = reduce_step(Poly(Word{3, 1, 2, 2}), st.basis);
	REQUIRE(s);
	CHECK(s->first == Poly(Word{1, 2, 3, 2}));
	CHECK(st.basis.lead(s->second.rule) == Word{3, 1, 2});
	CHECK(s->second.position == 0);
}

TEST_CASE("normal_form")
{
	auto st = symn::build_S_tilde(3, 8);
	CHECK(normal_form(Poly(Word{3, 1, 2, 2}), st.basis).poly == Poly(Word{1, 2, 3, 2}));
	CHECK(normal_form(Poly(Word{2}) * Poly(Word{1, 2, 3}), st.basis).poly == Poly(Word{1, 2, 3, 2}));
	CHECK(normal_form(Poly(), st.basis).poly.is_zero());
}

TEST_CASE("normal_form equals iterated reduce_step, trace replays (randomized)")
{
	auto st = symn::build_S_tilde(3, 7);
	std::mt19937 rng(31);
	std::uniform_int_distribution<int> C(-2, 2);
	for (int t = 0; t < 200; t++) {
		std::size_t deg = 3 + t % 5;
		Poly p;
		for (int i = 0; i < 4; i++)
			p.add_term(oracle::random_word(rng, 3, deg, deg), C(rng));
		NormalForm nf = normal_form(p, st.basis, true);

		Poly q = p;
		std::vector<ReductionStep> steps;
		std::size_t bound = 1;
		for (std::size_t i = 0; i < deg; i++)
			bound *= 3;
		while (auto r = reduce_step(q, st.basis)) {
			CHECK(r->first.is_homogeneous());
			q = r->first;
			steps.push_back(r->second);
			REQUIRE(steps.size() <= 100 * bound);
		}
		CHECK(q == nf.poly);
		CHECK(steps == nf.trace->steps);
		CHECK(replay(p, nf.trace->steps, st.basis) == nf.trace->terminal);
		CHECK(nf.poly.is_homogeneous());
		for (const auto &[w, c] : nf.poly)
			CHECK_FALSE(st.basis.index().contains_any(w));
	}
}

TEST_CASE("irreducible words")
{
	Basis b = build_basis(std::vector<Poly>{Poly::binomial(Word{2, 1}, Word{1, 2})});
	CHECK(irreducible_words(b, 2, 2) == std::vector<Word>{Word{1, 1}, Word{1, 2}, Word{2, 2}});
	CHECK(irreducible_words(b, 2, 0) == std::vector<Word>{Word{}});
	auto st = symn::build_S_tilde(3, 4);
	CHECK(irreducible_words(st.basis, 3, 3).size() == 22);
	for (std::size_t l = 0; l <= 4; l++)
		CHECK(count_irreducible_words(st.basis, 3, l) == irreducible_words(st.basis, 3, l).size());

	// a constant rule kills everything
	Basis k = build_basis(std::vector<Poly>{Poly(Word{}, 3)});
	CHECK(irreducible_words(k, 2, 0).empty());
	CHECK(normal_form(Poly(Word{1, 2}), k).poly.is_zero());
}
