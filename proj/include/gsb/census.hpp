// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_CENSUS_HPP
#define GSB_CENSUS_HPP

#include "gsb/poly.hpp"
#include "gsb/words.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace gsb::census {

inline constexpr std::size_t default_oracle_budget = 10'000'000;

/// Congruence classes of all words of one length. Each class is sorted
/// ascending, so its first word is the deg-lex least representative;
/// classes are ordered by representative.
struct ClassPartition {
	int n = 0;
	std::size_t length = 0;
	std::vector<std::vector<Word>> classes;
};

/// A length-preserving relation lhs = rhs.
using WordRelation = std::pair<Word, Word>;

/**
 * Brute-force congruence classes at length len for a homogeneous monoid
 * presentation: union-find over all n^len words, joining each word with
 * every word obtained by one relation rewrite. Throws BudgetRefusal when
 * n^len exceeds budget and std::invalid_argument for a relation whose
 * sides differ in length.
 */
ClassPartition oracle_classes(int n, const std::vector<WordRelation> &relations, std::size_t len,
                              std::size_t budget = default_oracle_budget);

/// Classes of S_n(Sym_n): every permutation-word factor is joined to the
/// word with that factor replaced by x_1 ... x_n.
ClassPartition oracle_classes(int n, std::size_t len, std::size_t budget = default_oracle_budget);

struct ClassViolation {
	/// Deg-lex least word of the offending class.
	Word representative;
	std::size_t class_size = 0;
	/// Number of class members accepted by the predicate (0 or >= 2).
	std::size_t normal_words = 0;
};

struct OracleReport {
	int n = 0;
	std::size_t length = 0;
	std::size_t words = 0;
	std::size_t classes = 0;
	std::size_t normal_words = 0;
	std::vector<ClassViolation> violations;
	/// Classes whose least word is not the normal word.
	std::size_t representative_mismatches = 0;

	bool pass() const noexcept { return violations.empty(); }
};

/// Checks that every class contains exactly one word accepted by is_normal.
OracleReport check_classes(const ClassPartition &parts, const std::function<bool(const Word &)> &is_normal);

/// check_classes(oracle_classes(n, len), symn::irr_member).
OracleReport oracle_check_irr(int n, std::size_t len, std::size_t budget = default_oracle_budget);

struct GrowthSeries {
	int n = 0;
	std::vector<mpz_class> avoiders;
	std::vector<mpz_class> special;
	std::vector<mpz_class> total;
};

/**
 * Normal-form counts for lengths 0..max_len: words avoiding every
 * permutation factor (transfer counting over the Aho-Corasick automaton of
 * the n! permutation words) plus the C(len-1, n-1) special words.
 */
GrowthSeries count_normal_forms(int n, std::size_t max_len);

} // namespace gsb::census

#endif
