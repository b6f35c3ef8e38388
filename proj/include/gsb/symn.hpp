// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_SYMN_HPP
#define GSB_SYMN_HPP

#include "gsb/complete.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace gsb::symn {

/*
 * The monoid S_n(Sym_n) = < x_1..x_n | x_s(1)...x_s(n) = x_1...x_n, s in Sym_n >
 * and the rule families of its Groebner-Shirshov basis. Below, e is the
 * identity word x_1 x_2 ... x_n and u ranges over words in x_2..x_n:
 *
 *   T1  x_s - e                     s != identity
 *   T2  x_i e - e x_i               2 <= i <= n
 *   T3  x_i x_1^m e - x_1^m e x_i   2 <= i <= n, m >= 1
 *   T4  e u - e sort(u)             |u| >= 2, u != sort(u)
 *   T5  e u x_1 - x_1 e u           |u| >= 1
 *
 * T3..T5 are infinite; they are generated up to a degree bound.
 */

enum class Family { T1 = 1, T2, T3, T4, T5 };

const char *to_string(Family f) noexcept;

struct SymRule {
	Family family;
	/// T1: images of s; T2: {i}; T3: {i, m}; T4, T5: the letters of u.
	std::vector<int> params;
	Poly poly;
};

/// Rules of S-tilde tagged by family; tags[id] describes basis.rule(id).
struct SymBasis {
	int n = 0;
	std::size_t degree_bound = 0;
	Basis basis;
	std::vector<SymRule> tags;

	/// Copy with one rule removed, tags kept aligned.
	SymBasis without(RuleId id) const;
};

/// x_1 x_2 ... x_n.
Word identity_word(int n);

/// The defining relations as polynomials x_s - e for s != identity, in
/// lexicographic order of s. Throws std::invalid_argument for n < 2.
std::vector<Poly> defining_relations(int n);
Basis build_S(int n);

/// Every rule of the five families of degree <= degree_bound. Throws
/// std::invalid_argument for n < 2 or degree_bound < n + 1.
SymBasis build_S_tilde(int n, std::size_t degree_bound);

struct PairCount {
	std::size_t checked = 0;
	std::size_t nontrivial = 0;
};

using FamilyPair = std::pair<Family, Family>;

struct VerificationReport {
	int n = 0;
	std::size_t degree_bound = 0;
	std::size_t rules = 0;
	std::size_t total = 0;
	std::size_t checked = 0;
	std::size_t skipped = 0;
	std::size_t nontrivial = 0;
	/// Keyed by (family of f, family of g); realized pairs only.
	std::map<FamilyPair, PairCount> pairs;
	std::vector<CompositionResult> failures;

	bool pass() const noexcept { return nontrivial == 0; }
};

/// Checks every composition of the given tagged basis with |w| <= its bound.
VerificationReport verify_basis(const SymBasis &sb, unsigned jobs = 1);

/// verify_basis(build_S_tilde(n, d)). Throws std::invalid_argument for
/// n < 2 or d < n + 2.
VerificationReport verify_theorem(int n, std::size_t degree_bound, unsigned jobs = 1);

struct LemmaFailure {
	RuleId rule;
	Poly remainder;
};

struct LemmaReport {
	int n = 0;
	std::size_t degree_bound = 0;
	CompletionStatus completion_status = CompletionStatus::closed_below_bound;
	std::size_t completed_rules = 0;
	std::size_t members = 0;
	std::map<Family, std::size_t> members_by_family;
	std::vector<LemmaFailure> failures;

	bool inconclusive() const noexcept { return completion_status == CompletionStatus::budget_exhausted; }
	bool pass() const noexcept { return !inconclusive() && failures.empty(); }
};

/// Completes S(n) below the bound and reduces every member of
/// S-tilde(n, degree_bound) modulo the result.
LemmaReport verify_lemma_membership(int n, std::size_t degree_bound,
                                    std::size_t budget = default_rule_budget, unsigned jobs = 1);

/**
 * Membership in the closed-form normal-form set: w has no length-n factor
 * that is a permutation word (identity included), or w is
 * x_1^m1 e x_2^m2 ... x_n^mn with every m_i >= 0.
 */
bool irr_member(const Word &w, int n);

/// All irr_member words of length len, deg-lex ascending.
std::vector<Word> irr_enumerate(int n, std::size_t len);

} // namespace gsb::symn

#endif
