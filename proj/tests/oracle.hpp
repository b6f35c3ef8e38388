// SPDX-License-Identifier: Apache-2.0
//
// Test-only brute-force references. Nothing here calls into the engine
// beyond the Word value type, so the checks stay independent of the code
// paths they verify.

#ifndef GSB_TESTS_ORACLE_HPP
#define GSB_TESTS_ORACLE_HPP

#include "gsb/words.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using gsb::Word;

inline std::string str(const Word &w)
{
	std::string s;
	for (auto x : w)
		s.push_back(static_cast<char>('0' + x));
	return s;
}

inline Word word(const std::string &s)
{
	std::vector<gsb::Letter> l;
	for (char c : s)
		l.push_back(static_cast<gsb::Letter>(c - '0'));
	return Word(l);
}

/// Deg-lex via (length, string) comparison.
inline bool less(const Word &u, const Word &v)
{
	return std::make_pair(u.size(), str(u)) < std::make_pair(v.size(), str(v));
}

/// Every word of length len over 1..n as digit strings, lexicographic.
inline std::vector<std::string> all_words(int n, std::size_t len)
{
	std::vector<std::string> out{""};
	for (std::size_t i = 0; i < len; i++) {
		std::vector<std::string> next;
		for (const auto &p : out)
			for (int x = 1; x <= n; x++)
				next.push_back(p + static_cast<char>('0' + x));
		out = std::move(next);
	}
	return out;
}

inline bool contains(const std::string &s, const std::string &f)
{
	return s.find(f) != std::string::npos;
}

/// Permutation words of 1..n as strings, identity first.
inline std::vector<std::string> perm_strings(int n)
{
	std::string e;
	for (int i = 1; i <= n; i++)
		e.push_back(static_cast<char>('0' + i));
	std::vector<std::string> out;
	do {
		out.push_back(e);
	} while (std::next_permutation(e.begin(), e.end()));
	return out;
}

/**
 * Congruence classes at one length by breadth-first search: from each
 * unvisited word, apply every relation in both directions at every
 * position until closure. Classes come out sorted, ordered by least word.
 */
inline std::vector<std::vector<std::string>>
classes(int n, std::size_t len, const std::vector<std::pair<std::string, std::string>> &rels)
{
	std::set<std::string> seen;
	std::vector<std::vector<std::string>> out;
	for (const auto &start : all_words(n, len)) {
		if (seen.count(start))
			continue;
		std::vector<std::string> cls;
		std::deque<std::string> q{start};
		seen.insert(start);
		while (!q.empty()) {
			std::string w = q.front();
			q.pop_front();
			cls.push_back(w);
			for (const auto &[l, r] : rels)
				for (int dir = 0; dir < 2; dir++) {
					const std::string &from = dir ? r : l;
					const std::string &to = dir ? l : r;
					for (std::size_t p = w.find(from); p != std::string::npos; p = w.find(from, p + 1)) {
						std::string v = w;
						v.replace(p, from.size(), to);
						if (seen.insert(v).second)
							q.push_back(v);
					}
				}
		}
		std::sort(cls.begin(), cls.end());
		out.push_back(std::move(cls));
	}
	return out;
}

/// Relations x_s = e of S_n(Sym_n) as strings.
inline std::vector<std::pair<std::string, std::string>> symn_relations(int n)
{
	auto perms = perm_strings(n);
	std::vector<std::pair<std::string, std::string>> rels;
	for (std::size_t i = 1; i < perms.size(); i++)
		rels.push_back({perms[i], perms[0]});
	return rels;
}

/// All (f, g, w, |a|) witnesses by scanning every word up to the bound.
struct Witness {
	int kind; // 0 intersection, 1 inclusion
	std::size_t f, g;
	std::string w;
	std::size_t a_len;
	auto operator<=>(const Witness &) const = default;
};

inline std::set<Witness> scan_ambiguities(int n, const std::vector<std::string> &leads, std::size_t bound)
{
	std::set<Witness> out;
	for (std::size_t len = 1; len <= bound; len++)
		for (const auto &w : all_words(n, len))
			for (std::size_t f = 0; f < leads.size(); f++)
				for (std::size_t g = 0; g < leads.size(); g++) {
					const auto &u = leads[f];
					const auto &v = leads[g];
					// intersection: w = u b = a v, a and b nonempty, u and v overlap
					if (u.size() < len && v.size() < len && u.size() + v.size() > len &&
					    w.compare(0, u.size(), u) == 0 && w.compare(len - v.size(), v.size(), v) == 0)
						out.insert({0, f, g, w, len - v.size()});
					// inclusion: w = u = a v b, not the trivial self-inclusion
					if (f != g && w == u)
						for (std::size_t p = w.find(v); p != std::string::npos; p = w.find(v, p + 1))
							out.insert({1, f, g, w, p});
				}
	return out;
}

inline Word random_word(std::mt19937 &rng, int n, std::size_t min_len, std::size_t max_len)
{
	std::uniform_int_distribution<std::size_t> L(min_len, max_len);
	std::uniform_int_distribution<int> X(1, n);
	std::vector<gsb::Letter> l(L(rng));
	for (auto &x : l)
		x = static_cast<gsb::Letter>(X(rng));
	return Word(l);
}

} // namespace oracle

#endif
