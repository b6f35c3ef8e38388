// SPDX-License-Identifier: Apache-2.0

#include "gsb/compose.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsb {

const char *to_string(AmbiguityKind k) noexcept
{
	return k == AmbiguityKind::intersection ? "intersection" : "inclusion";
}

std::strong_ordering compare_ambiguities(const Ambiguity &x, const Ambiguity &y)
{
	if (auto c = x.w <=> y.w; c != 0)
		return c;
	if (auto c = x.f <=> y.f; c != 0)
		return c;
	if (auto c = x.g <=> y.g; c != 0)
		return c;
	if (auto c = x.a.size() <=> y.a.size(); c != 0)
		return c;
	return static_cast<int>(x.kind) <=> static_cast<int>(y.kind);
}

AmbiguitySet enumerate_ambiguities(const Basis &basis, std::size_t bound, RuleId first_new)
{
	AmbiguitySet r;
	const auto &leads = basis.leads();
	for (RuleId f = 0; f < leads.size(); f++) {
		const Word &u = leads[f];
		if (u.empty())
			continue;
		for (RuleId g = 0; g < leads.size(); g++) {
			if (std::max(f, g) < first_new)
				continue;
			const Word &v = leads[g];
			if (v.empty())
				continue;
			for (std::size_t k : proper_overlaps(u, v)) {
				std::size_t len = u.size() + v.size() - k;
				if (len > bound) {
					r.skipped++;
					continue;
				}
				Word a = u.prefix(u.size() - k);
				Word b = v.suffix(v.size() - k);
				Word w = u * b;
				r.within.push_back({AmbiguityKind::intersection, f, g, std::move(w), std::move(a), std::move(b)});
			}
		}
		for (const auto &m : basis.index().occurrences(u)) {
			RuleId g = m.pattern;
			if (g == f || std::max(f, g) < first_new)
				continue;
			if (u.size() > bound) {
				r.skipped++;
				continue;
			}
			const Word &v = leads[g];
			r.within.push_back({AmbiguityKind::inclusion, f, g, u, u.prefix(m.start),
			                    u.suffix(u.size() - m.start - v.size())});
		}
	}
	std::sort(r.within.begin(), r.within.end(),
	          [](const Ambiguity &x, const Ambiguity &y) { return compare_ambiguities(x, y) < 0; });
	return r;
}

Poly composition_poly(const Ambiguity &amb, const Basis &basis)
{
	if (amb.f >= basis.size() || amb.g >= basis.size())
		throw std::invalid_argument("composition_poly: stale rule reference");
	const Poly &f = basis.rule(amb.f);
	const Poly &g = basis.rule(amb.g);
	const Word &u = basis.lead(amb.f);
	const Word &v = basis.lead(amb.g);
	if (amb.kind == AmbiguityKind::intersection) {
		if (amb.a.empty() || amb.b.empty() || u * amb.b != amb.w || amb.a * v != amb.w)
			throw std::invalid_argument("composition_poly: not an intersection of these rules");
		return f.sandwich(Word{}, amb.b) - g.sandwich(amb.a, Word{});
	}
	if (u != amb.w || amb.a * v * amb.b != amb.w)
		throw std::invalid_argument("composition_poly: not an inclusion of these rules");
	return f - g.sandwich(amb.a, amb.b);
}

CompositionResult check_trivial(const Ambiguity &amb, const Basis &basis)
{
	CompositionResult r{amb, composition_poly(amb, basis), {}, false, {}};
	if (!r.composition.is_zero()) {
		if (!(r.composition.leading_word() < amb.w))
			throw std::logic_error("composition has a word not below its ambiguity");
		if (basis.is_homogeneous() &&
		    (!r.composition.is_homogeneous() || r.composition.degree() != amb.w.size()))
			throw std::logic_error("composition of homogeneous rules has the wrong degree");
	}
	NormalForm nf = normal_form(r.composition, basis, true);
	for (const auto &s : nf.trace->steps)
		if (!(s.word < amb.w))
			throw std::logic_error("reduction step at a word not below the ambiguity");
	r.remainder = std::move(nf.poly);
	r.trivial = r.remainder.is_zero();
	r.trace = std::move(*nf.trace);
	return r;
}

std::vector<CompositionResult> check_all(const std::vector<Ambiguity> &ambs, const Basis &basis,
                                         unsigned jobs)
{
	std::vector<CompositionResult> out(ambs.size());
	detail::parallel_for(ambs.size(), jobs, [&](std::size_t i) { out[i] = check_trivial(ambs[i], basis); });
	return out;
}

} // namespace gsb
