// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_REWRITE_HPP
#define GSB_REWRITE_HPP

#include "gsb/poly.hpp"
#include "gsb/words.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace gsb {

using RuleId = std::size_t;

/**
 * Aho-Corasick automaton over a set of distinct patterns. The goto
 * function is completed into a DFA over letters 1..alphabet; letters
 * beyond the alphabet send the automaton back to the root.
 */
class FactorIndex {
public:
	struct Match {
		std::size_t start;
		std::size_t pattern;
	};

	FactorIndex() : FactorIndex(std::span<const Word>{}) {}
	explicit FactorIndex(std::span<const Word> patterns);

	std::size_t state_count() const noexcept { return nodes_.size(); }
	std::size_t pattern_count() const noexcept { return lengths_.size(); }
	int alphabet() const noexcept { return alphabet_; }

	static constexpr std::size_t root = 0;
	std::size_t step(std::size_t state, Letter x) const;
	/// Some pattern ends at this state (directly or through a suffix link).
	bool accepting(std::size_t state) const;

	/// Every occurrence of every pattern in w, ordered by end position then by
	/// decreasing pattern length. An empty pattern is reported once, at start 0.
	std::vector<Match> occurrences(const Word &w) const;
	/// Occurrence with the smallest start; ties go to the longest pattern.
	std::optional<Match> leftmost(const Word &w) const;
	bool contains_any(const Word &w) const;

private:
	struct Node {
		std::vector<std::size_t> next;
		std::size_t fail = 0;
		std::ptrdiff_t out = -1;       // pattern ending exactly here
		std::size_t dict = 0;          // nearest proper suffix state with out >= 0
		bool accepting = false;
	};

	std::vector<Node> nodes_;
	std::vector<std::size_t> lengths_;
	std::optional<std::size_t> empty_pattern_;
	int alphabet_ = 0;
};

/**
 * An ordered set of monic rules with pairwise distinct leading words and a
 * factor index over those leading words. Rule ids are positions in
 * insertion order and stay stable as the basis grows.
 */
class Basis {
public:
	Basis() = default;

	/// Monic-normalizes and inserts every rule (see insert). Throws
	/// ZeroPolynomialError if an input polynomial is zero.
	static Basis build(std::span<const Poly> rules);

	/**
	 * Inserts monic(p). While the leading word collides with an existing
	 * rule the existing rule is subtracted and the difference renormalized;
	 * a zero difference drops the newcomer. Returns the new id, or nullopt
	 * when nothing was added.
	 */
	std::optional<RuleId> insert(const Poly &p);

	std::size_t size() const noexcept { return rules_.size(); }
	bool empty() const noexcept { return rules_.empty(); }
	const Poly &rule(RuleId id) const { return rules_.at(id); }
	const Word &lead(RuleId id) const { return leads_.at(id); }
	const std::vector<Poly> &rules() const noexcept { return rules_; }
	const std::vector<Word> &leads() const noexcept { return leads_; }
	std::optional<RuleId> find_lead(const Word &w) const;
	const FactorIndex &index() const noexcept { return index_; }

	/// Copy with one rule removed; ids after it shift down by one.
	Basis without(RuleId id) const;

	bool is_homogeneous() const noexcept;

private:
	std::optional<RuleId> insert_unindexed(const Poly &p);
	void reindex();

	std::vector<Poly> rules_;
	std::vector<Word> leads_;
	std::map<Word, RuleId> by_lead_;
	FactorIndex index_;
};

inline Basis build_basis(std::span<const Poly> rules) { return Basis::build(rules); }

/// One rewrite: the supported word `word` = a * lead(rule) * b with |a| =
/// position is replaced, i.e. coefficient * a * rule * b is subtracted.
struct ReductionStep {
	RuleId rule;
	std::size_t position;
	Word word;
	Scalar coefficient;

	friend bool operator==(const ReductionStep &, const ReductionStep &) = default;
};

struct ReductionTrace {
	std::vector<ReductionStep> steps;
	Poly terminal;
};

/**
 * One reduction step with the deterministic selection rule: the deg-lex
 * greatest reducible supported word, its leftmost reducible position, and
 * at that position the rule with the greatest leading word.
 */
std::optional<std::pair<Poly, ReductionStep>> reduce_step(const Poly &p, const Basis &basis);

struct NormalForm {
	Poly poly;
	std::optional<ReductionTrace> trace;
};

/// Fixpoint of reduce_step. Equivalent to iterating reduce_step, but
/// processes words top-down so each word is matched at most once.
NormalForm normal_form(const Poly &p, const Basis &basis, bool want_trace = false);

/// Applies trace steps to p. A faithful trace reproduces trace.terminal.
Poly replay(const Poly &p, std::span<const ReductionStep> steps, const Basis &basis);

/// Words of length len over x_1..x_n avoiding every leading word, ascending.
std::vector<Word> irreducible_words(const Basis &basis, int n, std::size_t len);

/// Number of such words without materializing them.
std::size_t count_irreducible_words(const Basis &basis, int n, std::size_t len);

} // namespace gsb

#endif
