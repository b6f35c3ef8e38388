// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_COMPLETE_HPP
#define GSB_COMPLETE_HPP

#include "gsb/compose.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gsb {

enum class CompletionStatus { closed_below_bound, budget_exhausted };

const char *to_string(CompletionStatus s) noexcept;

/// A rule adjoined by completion, with the data needed to regenerate it.
struct AddedRule {
	RuleId id;
	Ambiguity source;
	/// Reduction of composition_poly(source) modulo the basis as it stood
	/// when the rule was committed; trace.terminal is the unnormalized rule.
	ReductionTrace trace;
	Poly rule;
};

struct CompletionReport {
	Basis input;
	Basis basis;
	std::size_t rounds = 0;
	std::vector<AddedRule> added;
	std::size_t skipped = 0;
	std::size_t degree_bound = 0;
	CompletionStatus status = CompletionStatus::closed_below_bound;
};

inline constexpr std::size_t default_rule_budget = 100000;

/**
 * Degree-bounded Shirshov completion. Each round enumerates the
 * ambiguities with |w| <= degree_bound among pairs touching rules added in
 * the previous round, reduces all their compositions against the basis
 * snapshot (in parallel), then commits in ascending-w order: every nonzero
 * remainder is reduced again modulo the current basis and, if still
 * nonzero, adjoined. Stops when a round adds nothing or the basis would
 * exceed `budget` rules.
 *
 * Throws std::invalid_argument if degree_bound is below an input leading
 * degree or budget is below the input size.
 */
CompletionReport shirshov_complete(std::span<const Poly> rules, std::size_t degree_bound,
                                   std::size_t budget = default_rule_budget, unsigned jobs = 1);

/**
 * Regenerates every added rule from its provenance against the input basis
 * extended by the earlier additions. Returns false on the first mismatch.
 */
bool replay_provenance(const CompletionReport &report);

} // namespace gsb

#endif
