// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_POLY_HPP
#define GSB_POLY_HPP

#include "gsb/words.hpp"

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace gsb {

/// Exact rational coefficient, always kept canonical (reduced, positive denominator).
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Scalar parse_scalar(const std::string &s);
/// Canonical short form: "3", "-1/2".
std::string scalar_to_string(const Scalar &c);
/// Always "p/q", e.g. "-1/1".
std::string scalar_to_fraction(const Scalar &c);

struct Term {
	Word word;
	Scalar coef;
};

/**
 * Noncommutative polynomial over the rationals: a finitely supported map
 * from words to nonzero coefficients. Terms are stored in descending
 * deg-lex order, so the leading term is the first one.
 */
class Poly {
public:
	using Map = std::map<Word, Scalar, std::greater<>>;

	Poly() = default;
	/// The monomial c * w; c == 0 yields the zero polynomial.
	explicit Poly(Word w, Scalar c = 1);

	static Poly binomial(const Word &lhs, const Word &rhs);

	bool is_zero() const noexcept { return terms_.empty(); }
	std::size_t size() const noexcept { return terms_.size(); }
	const Map &terms() const noexcept { return terms_; }
	auto begin() const noexcept { return terms_.begin(); }
	auto end() const noexcept { return terms_.end(); }

	/// Coefficient of w, zero if unsupported.
	Scalar coef(const Word &w) const;

	/// Throws ZeroPolynomialError on the zero polynomial.
	Term leading() const;
	const Word &leading_word() const;

	/// Degree of the leading word; throws on zero.
	std::size_t degree() const;
	/// All supported words share one degree. The zero polynomial is homogeneous.
	bool is_homogeneous() const noexcept;

	/// Adds c * w, dropping the term if it cancels.
	void add_term(const Word &w, const Scalar &c);

	Poly &operator+=(const Poly &q);
	Poly &operator-=(const Poly &q);
	Poly &operator*=(const Scalar &c);
	Poly operator-() const;

	friend Poly operator+(Poly p, const Poly &q) { return p += q; }
	friend Poly operator-(Poly p, const Poly &q) { return p -= q; }
	friend Poly operator*(Poly p, const Scalar &c) { return p *= c; }
	friend Poly operator*(const Scalar &c, Poly p) { return p *= c; }
	friend Poly operator*(const Poly &p, const Poly &q);

	/// a * p * b for words a, b.
	Poly sandwich(const Word &a, const Word &b) const;

	friend bool operator==(const Poly &, const Poly &) = default;

	/// Largest letter used, 0 for constants.
	Letter max_letter() const noexcept;

private:
	Map terms_;
};

Poly add(const Poly &p, const Poly &q);
Poly mul(const Poly &p, const Poly &q);
Term leading(const Poly &p);
/// p scaled so its leading coefficient is 1.
Poly monic(const Poly &p);

} // namespace gsb

#endif
