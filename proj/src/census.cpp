// SPDX-License-Identifier: Apache-2.0

#include "gsb/census.hpp"
#include "gsb/error.hpp"
#include "gsb/rewrite.hpp"
#include "gsb/symn.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gsb::census {

namespace {

using Index = std::uint32_t;

class UnionFind {
public:
	explicit UnionFind(std::size_t size) : parent_(size)
	{
		std::iota(parent_.begin(), parent_.end(), Index{0});
	}

	Index find(Index x)
	{
		while (parent_[x] != x) {
			parent_[x] = parent_[parent_[x]];
			x = parent_[x];
		}
		return x;
	}

	// the smaller index becomes the root, so roots are class minima
	void unite(Index a, Index b)
	{
		a = find(a);
		b = find(b);
		if (a == b)
			return;
		if (a < b)
			parent_[b] = a;
		else
			parent_[a] = b;
	}

private:
	std::vector<Index> parent_;
};

/// Words of one length <-> base-n integers, first letter most significant,
/// so numeric order is lexicographic order.
struct Codec {
	int n;
	std::size_t len;

	void decode(Index x, std::vector<Letter> &out) const
	{
		out.resize(len);
		for (std::size_t i = len; i-- > 0;) {
			out[i] = static_cast<Letter>(x % static_cast<Index>(n) + 1);
			x /= static_cast<Index>(n);
		}
	}

	Index encode(const std::vector<Letter> &w) const
	{
		Index x = 0;
		for (Letter l : w)
			x = x * static_cast<Index>(n) + (l - 1u);
		return x;
	}
};

std::size_t word_count(int n, std::size_t len, std::size_t budget)
{
	budget = std::min<std::size_t>(budget, std::numeric_limits<Index>::max());
	std::size_t total = 1;
	for (std::size_t i = 0; i < len; i++) {
		if (total > budget / static_cast<std::size_t>(n))
			throw BudgetRefusal("oracle refused: " + std::to_string(n) + "^" + std::to_string(len) +
			                    " words exceed the enumeration budget of " + std::to_string(budget));
		total *= static_cast<std::size_t>(n);
	}
	if (total > budget)
		throw BudgetRefusal("oracle refused: word count exceeds the enumeration budget");
	return total;
}

ClassPartition collect(int n, std::size_t len, std::size_t total, UnionFind &uf)
{
	Codec codec{n, len};
	ClassPartition parts;
	parts.n = n;
	parts.length = len;
	std::vector<std::size_t> slot(total, 0);
	std::vector<Letter> buf;
	for (Index x = 0; x < total; x++) {
		Index r = uf.find(x);
		if (r == x) {
			slot[x] = parts.classes.size();
			parts.classes.emplace_back();
		}
		codec.decode(x, buf);
		parts.classes[slot[r]].emplace_back(buf);
	}
	return parts;
}

} // namespace

ClassPartition oracle_classes(int n, const std::vector<WordRelation> &relations, std::size_t len,
                              std::size_t budget)
{
	if (n < 1 || n > max_generators)
		throw std::invalid_argument("oracle: generator count out of range");
	for (const auto &[l, r] : relations) {
		l.validate(n);
		r.validate(n);
		if (l.size() != r.size())
			throw std::invalid_argument("oracle: relations must be length-preserving");
	}
	std::size_t total = word_count(n, len, budget);
	Codec codec{n, len};
	UnionFind uf(total);
	std::vector<Letter> w, v;
	for (Index x = 0; x < total; x++) {
		codec.decode(x, w);
		Word word(w);
		for (const auto &[lhs, rhs] : relations) {
			if (lhs.empty() || lhs.size() > len)
				continue;
			for (std::size_t p : find_factor_occurrences(lhs, word)) {
				v = w;
				std::copy(rhs.begin(), rhs.end(), v.begin() + static_cast<std::ptrdiff_t>(p));
				uf.unite(x, codec.encode(v));
			}
		}
	}
	return collect(n, len, total, uf);
}

ClassPartition oracle_classes(int n, std::size_t len, std::size_t budget)
{
	if (n < 1 || n > max_generators)
		throw std::invalid_argument("oracle: generator count out of range");
	std::size_t total = word_count(n, len, budget);
	auto un = static_cast<std::size_t>(n);
	Codec codec{n, len};
	UnionFind uf(total);
	std::vector<Letter> w, v;
	std::vector<std::size_t> seen(un + 1);
	for (Index x = 0; x < total; x++) {
		codec.decode(x, w);
		for (std::size_t p = 0; p + un <= len; p++) {
			std::fill(seen.begin(), seen.end(), 0);
			bool perm = true, ident = true;
			for (std::size_t j = 0; j < un && perm; j++) {
				Letter l = w[p + j];
				perm = seen[l]++ == 0;
				ident = ident && l == j + 1;
			}
			if (!perm || ident)
				continue;
			v = w;
			for (std::size_t j = 0; j < un; j++)
				v[p + j] = static_cast<Letter>(j + 1);
			uf.unite(x, codec.encode(v));
		}
	}
	return collect(n, len, total, uf);
}

OracleReport check_classes(const ClassPartition &parts, const std::function<bool(const Word &)> &is_normal)
{
	OracleReport rep;
	rep.n = parts.n;
	rep.length = parts.length;
	rep.classes = parts.classes.size();
	for (const auto &cls : parts.classes) {
		rep.words += cls.size();
		std::size_t hits = 0;
		for (const Word &w : cls)
			if (is_normal(w))
				hits++;
		rep.normal_words += hits;
		if (hits != 1)
			rep.violations.push_back({cls.front(), cls.size(), hits});
		if (!cls.empty() && !is_normal(cls.front()))
			rep.representative_mismatches++;
	}
	return rep;
}

OracleReport oracle_check_irr(int n, std::size_t len, std::size_t budget)
{
	return check_classes(oracle_classes(n, len, budget),
	                     [n](const Word &w) { return symn::irr_member(w, n); });
}

GrowthSeries count_normal_forms(int n, std::size_t max_len)
{
	if (n < 2 || n > max_generators)
		throw std::invalid_argument("count_normal_forms needs 2 <= n <= 255");
	std::vector<Word> perms;
	for (const Permutation &s : enumerate_permutations(n))
		perms.push_back(perm_word(s));
	FactorIndex index(perms);

	// live[s] = number of avoiding words whose automaton run ends in state s
	std::size_t states = index.state_count();
	std::vector<std::vector<std::pair<std::size_t, unsigned>>> edges(states);
	for (std::size_t s = 0; s < states; s++) {
		if (index.accepting(s))
			continue;
		std::vector<std::size_t> targets;
		for (int x = 1; x <= n; x++) {
			std::size_t t = index.step(s, static_cast<Letter>(x));
			if (!index.accepting(t))
				targets.push_back(t);
		}
		std::sort(targets.begin(), targets.end());
		for (std::size_t t : targets) {
			if (!edges[s].empty() && edges[s].back().first == t)
				edges[s].back().second++;
			else
				edges[s].push_back({t, 1});
		}
	}

	GrowthSeries g;
	g.n = n;
	std::vector<mpz_class> live(states), next(states);
	live[FactorIndex::root] = 1;
	auto un = static_cast<unsigned long>(n);
	for (std::size_t len = 0; len <= max_len; len++) {
		if (len > 0) {
			for (auto &c : next)
				c = 0;
			for (std::size_t s = 0; s < states; s++) {
				if (live[s] == 0)
					continue;
				for (auto [t, m] : edges[s])
					next[t] += live[s] * m;
			}
			std::swap(live, next);
		}
		mpz_class avoid = 0;
		for (const auto &c : live)
			avoid += c;
		mpz_class special = 0;
		if (len >= static_cast<std::size_t>(n))
			mpz_bin_uiui(special.get_mpz_t(), static_cast<unsigned long>(len - 1), un - 1);
		g.avoiders.push_back(avoid);
		g.special.push_back(special);
		g.total.push_back(avoid + special);
	}
	return g;
}

} // namespace gsb::census
