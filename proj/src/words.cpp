// SPDX-License-Identifier: Apache-2.0

#include "gsb/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gsb {

Word::Word(std::initializer_list<int> letters)
{
	letters_.reserve(letters.size());
	for (int x : letters) {
		if (x < 1 || x > max_generators)
			throw std::invalid_argument("letter out of range: " + std::to_string(x));
		letters_.push_back(static_cast<Letter>(x));
	}
}

Word Word::sub(std::size_t pos, std::size_t len) const
{
	if (pos > size() || len > size() - pos)
		throw std::out_of_range("Word::sub");
	return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
	                                letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Letter Word::max_letter() const noexcept
{
	Letter m = 0;
	for (Letter x : letters_)
		m = std::max(m, x);
	return m;
}

void Word::validate(int n) const
{
	for (std::size_t i = 0; i < letters_.size(); i++)
		if (letters_[i] < 1 || letters_[i] > n)
			throw std::invalid_argument("generator x" + std::to_string(letters_[i]) +
			                            " out of range 1.." + std::to_string(n));
}

Word &Word::operator*=(const Word &rhs)
{
	letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
	return *this;
}

std::strong_ordering operator<=>(const Word &u, const Word &v)
{
	if (auto c = u.size() <=> v.size(); c != 0)
		return c;
	return std::lexicographical_compare_three_way(u.letters_.begin(), u.letters_.end(),
	                                              v.letters_.begin(), v.letters_.end());
}

std::strong_ordering compare_deglex(const Word &u, const Word &v)
{
	return u <=> v;
}

Word sort_word(const Word &w)
{
	std::vector<Letter> s(w.begin(), w.end());
	std::sort(s.begin(), s.end());
	return Word(std::move(s));
}

std::vector<std::size_t> find_factor_occurrences(const Word &pattern, const Word &subject)
{
	if (pattern.empty())
		throw std::invalid_argument("empty pattern");
	std::vector<std::size_t> r;
	if (pattern.size() > subject.size())
		return r;
	auto p = pattern.letters();
	auto s = subject.letters();
	for (std::size_t o = 0; o + p.size() <= s.size(); o++)
		if (std::equal(p.begin(), p.end(), s.begin() + static_cast<std::ptrdiff_t>(o)))
			r.push_back(o);
	return r;
}

std::vector<std::size_t> proper_overlaps(const Word &u, const Word &v)
{
	if (u.empty() || v.empty())
		throw std::invalid_argument("proper_overlaps: empty word");
	std::vector<std::size_t> r;
	auto a = u.letters();
	auto b = v.letters();
	std::size_t lim = std::min(a.size(), b.size());
	for (std::size_t k = 1; k < lim; k++)
		if (std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin()))
			r.push_back(k);
	return r;
}

std::size_t WordHash::operator()(const Word &w) const noexcept
{
	// FNV-1a
	std::size_t h = 1469598103934665603ull;
	for (Letter x : w) {
		h ^= x;
		h *= 1099511628211ull;
	}
	return h ^ w.size();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
	int n = size();
	if (n < 1 || n > max_generators)
		throw std::invalid_argument("permutation size out of range");
	std::vector<bool> seen(static_cast<std::size_t>(n) + 1);
	for (int x : images_) {
		if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
			throw std::invalid_argument("not a permutation of 1..n");
		seen[static_cast<std::size_t>(x)] = true;
	}
}

Permutation Permutation::identity(int n)
{
	if (n < 1)
		throw std::invalid_argument("permutation size must be positive");
	std::vector<int> im(static_cast<std::size_t>(n));
	std::iota(im.begin(), im.end(), 1);
	return Permutation(std::move(im));
}

Permutation Permutation::cyclic(int n)
{
	if (n < 1)
		throw std::invalid_argument("permutation size must be positive");
	std::vector<int> im(static_cast<std::size_t>(n));
	for (int i = 0; i < n; i++)
		im[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
	return Permutation(std::move(im));
}

bool Permutation::is_identity() const noexcept
{
	for (std::size_t i = 0; i < images_.size(); i++)
		if (images_[i] != static_cast<int>(i) + 1)
			return false;
	return true;
}

std::vector<Permutation> enumerate_permutations(int n)
{
	if (n < 1)
		throw std::invalid_argument("enumerate_permutations: n must be >= 1");
	std::vector<int> im(static_cast<std::size_t>(n));
	std::iota(im.begin(), im.end(), 1);
	std::vector<Permutation> r;
	do {
		r.emplace_back(im);
	} while (std::next_permutation(im.begin(), im.end()));
	return r;
}

Word perm_word(const Permutation &s)
{
	std::vector<Letter> l;
	l.reserve(s.images().size());
	for (int x : s.images())
		l.push_back(static_cast<Letter>(x));
	return Word(std::move(l));
}

} // namespace gsb
