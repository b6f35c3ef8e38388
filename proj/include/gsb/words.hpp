// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_WORDS_HPP
#define GSB_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace gsb {

/// Generator index. Letters are 1-based: x_1 is 1, x_n is n.
using Letter = std::uint8_t;

inline constexpr int max_generators = 255;

/**
 * A word over x_1..x_n, i.e. an element of the free monoid. The empty
 * word is the identity. The number of generators is carried by the
 * context, not by the word; use validate() to check letters against it.
 *
 * Comparison operators implement the degree-lexicographic order with
 * x_1 < x_2 < ... < x_n: shorter words are smaller, words of equal length
 * compare letter by letter from the left.
 */
class Word {
public:
	Word() = default;
	explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
	Word(std::initializer_list<int> letters);

	static Word power(Letter x, std::size_t k) { return Word(std::vector<Letter>(k, x)); }

	std::size_t degree() const noexcept { return letters_.size(); }
	std::size_t size() const noexcept { return letters_.size(); }
	bool empty() const noexcept { return letters_.empty(); }

	Letter operator[](std::size_t i) const { return letters_[i]; }
	auto begin() const noexcept { return letters_.begin(); }
	auto end() const noexcept { return letters_.end(); }
	std::span<const Letter> letters() const noexcept { return letters_; }

	/// Factor [pos, pos + len).
	Word sub(std::size_t pos, std::size_t len) const;
	Word prefix(std::size_t len) const { return sub(0, len); }
	Word suffix(std::size_t len) const { return sub(size() - len, len); }

	/// Largest letter, 0 for the empty word.
	Letter max_letter() const noexcept;

	/// Throws std::invalid_argument unless every letter lies in 1..n.
	void validate(int n) const;

	Word &operator*=(const Word &rhs);
	friend Word operator*(Word lhs, const Word &rhs) { return lhs *= rhs; }

	friend bool operator==(const Word &, const Word &) = default;
	friend std::strong_ordering operator<=>(const Word &u, const Word &v);

private:
	std::vector<Letter> letters_;
};

/// Degree-lexicographic comparison.
std::strong_ordering compare_deglex(const Word &u, const Word &v);

/// Nondecreasing rearrangement of the letters of w.
Word sort_word(const Word &w);

/// Start offsets of every occurrence of pattern inside subject, ascending.
/// Overlapping occurrences are all reported. Empty patterns are rejected.
std::vector<std::size_t> find_factor_occurrences(const Word &pattern, const Word &subject);

/**
 * Lengths k of the proper overlaps of u followed by v: the length-k suffix
 * of u equals the length-k prefix of v and the overlap word
 * w = u * v[k..] = u[..|u|-k] * v has both flanks nonempty, i.e.
 * 1 <= k < min(|u|, |v|). Containment is not an overlap.
 */
std::vector<std::size_t> proper_overlaps(const Word &u, const Word &v);

struct WordHash {
	std::size_t operator()(const Word &w) const noexcept;
};

/// A bijection of {1..n}, stored as its image sequence.
class Permutation {
public:
	/// Throws std::invalid_argument unless images is a permutation of 1..n.
	explicit Permutation(std::vector<int> images);

	static Permutation identity(int n);
	/// The n-cycle 1 -> 2 -> ... -> n -> 1, images (2, 3, ..., n, 1).
	static Permutation cyclic(int n);

	int size() const noexcept { return static_cast<int>(images_.size()); }
	int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
	const std::vector<int> &images() const noexcept { return images_; }
	bool is_identity() const noexcept;

	friend bool operator==(const Permutation &, const Permutation &) = default;

private:
	std::vector<int> images_;
};

/// All n! permutations, lexicographic in their image sequences; identity first.
std::vector<Permutation> enumerate_permutations(int n);

/// x_{s(1)} x_{s(2)} ... x_{s(n)}.
Word perm_word(const Permutation &s);

} // namespace gsb

#endif
