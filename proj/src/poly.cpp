// SPDX-License-Identifier: Apache-2.0

#include "gsb/poly.hpp"
#include "gsb/error.hpp"

#include <stdexcept>

namespace gsb {

Scalar parse_scalar(const std::string &s)
{
	Scalar c;
	if (s.empty() || c.set_str(s, 10) != 0)
		throw std::invalid_argument("bad rational: '" + s + "'");
	if (c.get_den() == 0)
		throw std::invalid_argument("zero denominator: '" + s + "'");
	c.canonicalize();
	return c;
}

std::string scalar_to_string(const Scalar &c)
{
	return c.get_str();
}

std::string scalar_to_fraction(const Scalar &c)
{
	return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Poly::Poly(Word w, Scalar c)
{
	c.canonicalize();
	if (c != 0)
		terms_.emplace(std::move(w), std::move(c));
}

Poly Poly::binomial(const Word &lhs, const Word &rhs)
{
	Poly p(lhs);
	p.add_term(rhs, -1);
	return p;
}

Scalar Poly::coef(const Word &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Scalar(0) : it->second;
}

Term Poly::leading() const
{
	if (terms_.empty())
		throw ZeroPolynomialError("leading term of the zero polynomial");
	return {terms_.begin()->first, terms_.begin()->second};
}

const Word &Poly::leading_word() const
{
	if (terms_.empty())
		throw ZeroPolynomialError("leading word of the zero polynomial");
	return terms_.begin()->first;
}

std::size_t Poly::degree() const
{
	return leading_word().degree();
}

bool Poly::is_homogeneous() const noexcept
{
	if (terms_.empty())
		return true;
	return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void Poly::add_term(const Word &w, const Scalar &c)
{
	if (c == 0)
		return;
	auto [it, fresh] = terms_.try_emplace(w, c);
	if (fresh) {
		// callers may hand in an uncanonicalized mpq_class
		it->second.canonicalize();
		return;
	}
	it->second += c;
	it->second.canonicalize();
	if (it->second == 0)
		terms_.erase(it);
}

Poly &Poly::operator+=(const Poly &q)
{
	for (const auto &[w, c] : q.terms_)
		add_term(w, c);
	return *this;
}

Poly &Poly::operator-=(const Poly &q)
{
	for (const auto &[w, c] : q.terms_)
		add_term(w, -c);
	return *this;
}

Poly &Poly::operator*=(const Scalar &c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto &[w, d] : terms_) {
		d *= c;
		d.canonicalize();
	}
	return *this;
}

Poly Poly::operator-() const
{
	Poly r = *this;
	for (auto &[w, d] : r.terms_)
		d = -d;
	return r;
}

Poly operator*(const Poly &p, const Poly &q)
{
	Poly r;
	for (const auto &[u, a] : p.terms_)
		for (const auto &[v, b] : q.terms_)
			r.add_term(u * v, a * b);
	return r;
}

Poly Poly::sandwich(const Word &a, const Word &b) const
{
	Poly r;
	for (const auto &[w, c] : terms_)
		r.terms_.emplace_hint(r.terms_.end(), a * w * b, c);
	return r;
}

Letter Poly::max_letter() const noexcept
{
	Letter m = 0;
	for (const auto &t : terms_)
		m = std::max(m, t.first.max_letter());
	return m;
}

Poly add(const Poly &p, const Poly &q) { return p + q; }
Poly mul(const Poly &p, const Poly &q) { return p * q; }
Term leading(const Poly &p) { return p.leading(); }

Poly monic(const Poly &p)
{
	if (p.is_zero())
		throw ZeroPolynomialError("monic of the zero polynomial");
	Scalar lc = p.leading().coef;
	if (lc == 1)
		return p;
	return p * Scalar(1 / lc);
}

} // namespace gsb
