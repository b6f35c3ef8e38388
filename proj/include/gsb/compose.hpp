// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_COMPOSE_HPP
#define GSB_COMPOSE_HPP

#include "gsb/rewrite.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace gsb {

enum class AmbiguityKind { intersection, inclusion };

const char *to_string(AmbiguityKind k) noexcept;

/**
 * Witness of a composition between rules f and g.
 *
 *   intersection:  w = lead(f) * b = a * lead(g), a and b nonempty
 *   inclusion:     w = lead(f) = a * lead(g) * b
 */
struct Ambiguity {
	AmbiguityKind kind;
	RuleId f;
	RuleId g;
	Word w;
	Word a;
	Word b;

	friend bool operator==(const Ambiguity &, const Ambiguity &) = default;
};

/// Enumeration order: w deg-lex, then f, g, |a|, kind.
std::strong_ordering compare_ambiguities(const Ambiguity &x, const Ambiguity &y);

struct AmbiguitySet {
	std::vector<Ambiguity> within;
	/// Ambiguities with |w| above the bound; counted, not listed.
	std::size_t skipped = 0;
};

/**
 * All ambiguities of the basis with |w| <= bound: intersections for every
 * ordered pair of rules (self-pairs included) and every proper overlap, and
 * inclusions of every other rule's leading word inside a leading word.
 * Pairs whose larger id is below first_new are ignored, which lets
 * completion re-scan only pairs touching fresh rules.
 */
AmbiguitySet enumerate_ambiguities(const Basis &basis, std::size_t bound, RuleId first_new = 0);

/// f*b - a*g for intersections, f - a*g*b for inclusions. Throws
/// std::invalid_argument when the ambiguity does not match the basis.
Poly composition_poly(const Ambiguity &amb, const Basis &basis);

struct CompositionResult {
	Ambiguity ambiguity;
	Poly composition;
	Poly remainder;
	bool trivial = false;
	ReductionTrace trace;
};

/**
 * Reduces the composition modulo the basis. The result is trivial iff the
 * remainder is zero. Every word of the composition and of every reduction
 * step is checked to lie strictly below w; for a homogeneous basis the
 * composition degree is checked to equal |w|. A violation throws
 * std::logic_error.
 */
CompositionResult check_trivial(const Ambiguity &amb, const Basis &basis);

/// check_trivial over many ambiguities on `jobs` threads; results keep input order.
std::vector<CompositionResult> check_all(const std::vector<Ambiguity> &ambs, const Basis &basis,
                                         unsigned jobs = 1);

} // namespace gsb

#endif
