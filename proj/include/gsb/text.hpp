// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_TEXT_HPP
#define GSB_TEXT_HPP

#include "gsb/poly.hpp"
#include "gsb/words.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gsb {

/*
 * Text syntax.
 *
 *   word:  whitespace-separated letters, each `x<k>` or a bare integer k;
 *          "x2 x1 x3" and "2 1 3" are the same word. The empty string is
 *          the empty word.
 *   poly:  signed terms  [coef *] word,  e.g. "x2 x1 - x1 x2",
 *          "1/2 * x1 x2 x3 + x2". Letters must use the `x<k>` form. A bare
 *          coefficient is a constant term; "0" is the zero polynomial.
 *
 * Formatting always emits `x<k>`, terms in descending deg-lex order, and
 * omits unit coefficients; parse(format(p)) == p.
 */

/// If n > 0, letters are validated against 1..n.
Word parse_word(std::string_view text, int n = 0);
std::string format_word(const Word &w);

Poly parse_poly(std::string_view text, int n = 0);
std::string format_poly(const Poly &p);

/// A monoid relation lhs = rhs or an explicit polynomial.
struct Relation {
	std::variant<std::pair<Word, Word>, Poly> value;

	/// lhs - rhs, or the polynomial itself.
	Poly to_poly() const;
};

struct PresentationFile {
	int n = 0;
	std::vector<Relation> relations;

	/// Nonzero relation polynomials, in file order.
	std::vector<Poly> polys() const;
	/// All relations are word pairs of equal length.
	bool homogeneous_monoid() const;
};

/**
 * Grammar, one item per line, `#` starts a comment:
 *
 *   gens: <n>
 *   rel: <word> = <word>
 *   rel: <poly>
 *
 * `gens` must come first and appear exactly once. Errors are ParseError
 * carrying line and column.
 */
PresentationFile parse_presentation(std::string_view text);

} // namespace gsb

#endif
