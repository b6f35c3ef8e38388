// SPDX-License-Identifier: Apache-2.0

#include "gsb/symn.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace gsb::symn {

namespace {

void require_n(int n)
{
	if (n < 2 || n > max_generators)
		throw std::invalid_argument("S_n(Sym_n) needs 2 <= n <= 255, got " + std::to_string(n));
}

/// Every word of length len over letters lo..hi, lexicographic.
std::vector<Word> all_words(int lo, int hi, std::size_t len)
{
	std::vector<Word> out;
	std::vector<Letter> cur(len, static_cast<Letter>(lo));
	for (;;) {
		out.emplace_back(cur);
		std::size_t i = len;
		while (i > 0 && cur[i - 1] == hi)
			cur[--i] = static_cast<Letter>(lo);
		if (i == 0)
			break;
		cur[i - 1]++;
	}
	return out;
}

std::vector<int> to_ints(const Word &w)
{
	return std::vector<int>(w.begin(), w.end());
}

/// x_1^m1 e x_2^m2 ... x_n^mn: leading x_1's, then e, then a nondecreasing tail over x_2..x_n.
bool is_special(const Word &w, int n)
{
	auto un = static_cast<std::size_t>(n);
	std::size_t k = 0;
	while (k < w.size() && w[k] == 1)
		k++;
	if (k == 0 || w.size() < k - 1 + un)
		return false;
	std::size_t start = k - 1;
	for (std::size_t j = 1; j < un; j++)
		if (w[start + j] != j + 1)
			return false;
	Letter prev = 2;
	for (std::size_t i = start + un; i < w.size(); i++) {
		if (w[i] < prev || w[i] > n)
			return false;
		prev = w[i];
	}
	return true;
}

} // namespace

const char *to_string(Family f) noexcept
{
	switch (f) {
	case Family::T1: return "T1";
	case Family::T2: return "T2";
	case Family::T3: return "T3";
	case Family::T4: return "T4";
	case Family::T5: return "T5";
	}
	return "?";
}

SymBasis SymBasis::without(RuleId id) const
{
	SymBasis r{n, degree_bound, basis.without(id), tags};
	r.tags.erase(r.tags.begin() + static_cast<std::ptrdiff_t>(id));
	return r;
}

Word identity_word(int n)
{
	return perm_word(Permutation::identity(n));
}

std::vector<Poly> defining_relations(int n)
{
	require_n(n);
	Word e = identity_word(n);
	std::vector<Poly> rels;
	for (const Permutation &s : enumerate_permutations(n))
		if (!s.is_identity())
			rels.push_back(Poly::binomial(perm_word(s), e));
	return rels;
}

Basis build_S(int n)
{
	return Basis::build(defining_relations(n));
}

SymBasis build_S_tilde(int n, std::size_t degree_bound)
{
	require_n(n);
	auto un = static_cast<std::size_t>(n);
	if (degree_bound < un + 1)
		throw std::invalid_argument("S-tilde needs degree bound >= n + 1");
	SymBasis sb;
	sb.n = n;
	sb.degree_bound = degree_bound;
	std::vector<SymRule> rules;
	const Word e = identity_word(n);

	for (const Permutation &s : enumerate_permutations(n))
		if (!s.is_identity())
			rules.push_back({Family::T1, s.images(), Poly::binomial(perm_word(s), e)});

	for (int i = 2; i <= n; i++) {
		Word xi{i};
		rules.push_back({Family::T2, {i}, Poly::binomial(xi * e, e * xi)});
	}

	for (std::size_t m = 1; 1 + m + un <= degree_bound; m++)
		for (int i = 2; i <= n; i++) {
			Word xi{i};
			Word x1m = Word::power(1, m);
			rules.push_back({Family::T3, {i, static_cast<int>(m)},
			                 Poly::binomial(xi * x1m * e, x1m * e * xi)});
		}

	for (std::size_t len = 2; un + len <= degree_bound; len++)
		for (const Word &u : all_words(2, n, len)) {
			Word su = sort_word(u);
			if (u > su)
				rules.push_back({Family::T4, to_ints(u), Poly::binomial(e * u, e * su)});
		}

	const Word x1{1};
	for (std::size_t len = 1; un + len + 1 <= degree_bound; len++)
		for (const Word &u : all_words(2, n, len))
			rules.push_back({Family::T5, to_ints(u), Poly::binomial(e * u * x1, x1 * e * u)});

	for (SymRule &r : rules) {
		auto id = sb.basis.insert(r.poly);
		if (!id || *id != sb.tags.size())
			throw std::logic_error("S-tilde rules must have distinct leading words");
		sb.tags.push_back(std::move(r));
	}
	return sb;
}

VerificationReport verify_basis(const SymBasis &sb, unsigned jobs)
{
	VerificationReport rep;
	rep.n = sb.n;
	rep.degree_bound = sb.degree_bound;
	rep.rules = sb.basis.size();
	AmbiguitySet set = enumerate_ambiguities(sb.basis, sb.degree_bound);
	rep.checked = set.within.size();
	rep.skipped = set.skipped;
	rep.total = rep.checked + rep.skipped;

	std::vector<std::optional<CompositionResult>> bad(set.within.size());
	detail::parallel_for(set.within.size(), jobs, [&](std::size_t i) {
		CompositionResult r = check_trivial(set.within[i], sb.basis);
		if (!r.trivial)
			bad[i] = std::move(r);
	});

	for (std::size_t i = 0; i < set.within.size(); i++) {
		const Ambiguity &a = set.within[i];
		PairCount &pc = rep.pairs[{sb.tags.at(a.f).family, sb.tags.at(a.g).family}];
		pc.checked++;
		if (bad[i]) {
			pc.nontrivial++;
			rep.nontrivial++;
			rep.failures.push_back(std::move(*bad[i]));
		}
	}
	return rep;
}

VerificationReport verify_theorem(int n, std::size_t degree_bound, unsigned jobs)
{
	require_n(n);
	if (degree_bound < static_cast<std::size_t>(n) + 2)
		throw std::invalid_argument("verification needs degree bound >= n + 2");
	return verify_basis(build_S_tilde(n, degree_bound), jobs);
}

LemmaReport verify_lemma_membership(int n, std::size_t degree_bound, std::size_t budget, unsigned jobs)
{
	require_n(n);
	LemmaReport rep;
	rep.n = n;
	rep.degree_bound = degree_bound;
	CompletionReport comp = shirshov_complete(defining_relations(n), degree_bound, budget, jobs);
	rep.completion_status = comp.status;
	rep.completed_rules = comp.basis.size();
	SymBasis st = build_S_tilde(n, degree_bound);
	rep.members = st.tags.size();

	std::vector<Poly> rem(st.tags.size());
	detail::parallel_for(st.tags.size(), jobs,
	                     [&](std::size_t i) { rem[i] = normal_form(st.basis.rule(i), comp.basis).poly; });
	for (RuleId i = 0; i < st.tags.size(); i++) {
		rep.members_by_family[st.tags[i].family]++;
		if (!rem[i].is_zero())
			rep.failures.push_back({i, std::move(rem[i])});
	}
	return rep;
}

bool irr_member(const Word &w, int n)
{
	auto un = static_cast<std::size_t>(n);
	if (is_special(w, n))
		return true;
	if (w.size() < un)
		return true;
	std::vector<int> seen(un + 1, -1);
	for (std::size_t start = 0; start + un <= w.size(); start++) {
		bool perm = true;
		for (std::size_t j = 0; j < un && perm; j++) {
			Letter x = w[start + j];
			if (x < 1 || x > n || seen[x] == static_cast<int>(start))
				perm = false;
			else
				seen[x] = static_cast<int>(start);
		}
		if (perm)
			return false;
	}
	return true;
}

std::vector<Word> irr_enumerate(int n, std::size_t len)
{
	require_n(n);
	std::vector<Word> perms;
	for (const Permutation &s : enumerate_permutations(n))
		perms.push_back(perm_word(s));
	FactorIndex index(perms);

	std::vector<Word> out;
	std::vector<Letter> cur;
	auto dfs = [&](auto &&self, std::size_t state) -> void {
		if (cur.size() == len) {
			out.emplace_back(cur);
			return;
		}
		for (int x = 1; x <= n; x++) {
			std::size_t t = index.step(state, static_cast<Letter>(x));
			if (index.accepting(t))
				continue;
			cur.push_back(static_cast<Letter>(x));
			self(self, t);
			cur.pop_back();
		}
	};
	dfs(dfs, FactorIndex::root);

	auto un = static_cast<std::size_t>(n);
	if (len >= un) {
		// distribute the len - n letters beyond e over the exponents m_1..m_n
		std::vector<std::size_t> extra(un, 0);
		auto emit = [&] {
			std::vector<Letter> l(extra[0], 1);
			Word e = identity_word(n);
			l.insert(l.end(), e.begin(), e.end());
			for (std::size_t i = 1; i < un; i++)
				l.insert(l.end(), extra[i], static_cast<Letter>(i + 1));
			out.emplace_back(std::move(l));
		};
		auto rec = [&](auto &&self, std::size_t i, std::size_t left) -> void {
			if (i + 1 == un) {
				extra[i] = left;
				emit();
				return;
			}
			for (std::size_t k = 0; k <= left; k++) {
				extra[i] = k;
				self(self, i + 1, left - k);
			}
		};
		rec(rec, 0, len - un);
	}
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace gsb::symn
