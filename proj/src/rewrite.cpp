// SPDX-License-Identifier: Apache-2.0

#include "gsb/rewrite.hpp"
#include "gsb/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace gsb {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

} // namespace

FactorIndex::FactorIndex(std::span<const Word> patterns)
{
	for (const Word &p : patterns)
		alphabet_ = std::max<int>(alphabet_, p.max_letter());
	auto width = static_cast<std::size_t>(alphabet_) + 1;
	nodes_.push_back(Node{std::vector<std::size_t>(width, npos)});
	lengths_.reserve(patterns.size());

	for (std::size_t id = 0; id < patterns.size(); id++) {
		const Word &p = patterns[id];
		lengths_.push_back(p.size());
		if (p.empty()) {
			if (empty_pattern_)
				throw std::invalid_argument("FactorIndex: duplicate pattern");
			empty_pattern_ = id;
			continue;
		}
		std::size_t s = root;
		for (Letter x : p) {
			if (nodes_[s].next[x] == npos) {
				nodes_[s].next[x] = nodes_.size();
				nodes_.push_back(Node{std::vector<std::size_t>(width, npos)});
			}
			s = nodes_[s].next[x];
		}
		if (nodes_[s].out >= 0)
			throw std::invalid_argument("FactorIndex: duplicate pattern");
		nodes_[s].out = static_cast<std::ptrdiff_t>(id);
	}

	// Breadth-first: fail links, dictionary links, completed goto function.
	std::deque<std::size_t> queue;
	for (std::size_t x = 1; x < width; x++) {
		std::size_t t = nodes_[root].next[x];
		if (t == npos) {
			nodes_[root].next[x] = root;
		} else {
			nodes_[t].fail = root;
			queue.push_back(t);
		}
	}
	nodes_[root].dict = npos;
	nodes_[root].accepting = false;
	while (!queue.empty()) {
		std::size_t s = queue.front();
		queue.pop_front();
		Node &node = nodes_[s];
		const Node &f = nodes_[node.fail];
		node.dict = f.out >= 0 ? node.fail : f.dict;
		node.accepting = node.out >= 0 || f.accepting;
		for (std::size_t x = 1; x < width; x++) {
			std::size_t t = nodes_[s].next[x];
			if (t == npos) {
				nodes_[s].next[x] = nodes_[nodes_[s].fail].next[x];
			} else {
				nodes_[t].fail = nodes_[nodes_[s].fail].next[x];
				queue.push_back(t);
			}
		}
	}
}

std::size_t FactorIndex::step(std::size_t state, Letter x) const
{
	if (x == 0 || x > alphabet_)
		return root;
	return nodes_[state].next[x];
}

bool FactorIndex::accepting(std::size_t state) const
{
	return empty_pattern_.has_value() || nodes_[state].accepting;
}

std::vector<FactorIndex::Match> FactorIndex::occurrences(const Word &w) const
{
	std::vector<Match> r;
	if (empty_pattern_)
		r.push_back({0, *empty_pattern_});
	if (nodes_.empty())
		return r;
	std::size_t s = root;
	for (std::size_t i = 0; i < w.size(); i++) {
		s = step(s, w[i]);
		if (!nodes_[s].accepting)
			continue;
		for (std::size_t t = nodes_[s].out >= 0 ? s : nodes_[s].dict; t != npos; t = nodes_[t].dict) {
			auto id = static_cast<std::size_t>(nodes_[t].out);
			r.push_back({i + 1 - lengths_[id], id});
		}
	}
	return r;
}

std::optional<FactorIndex::Match> FactorIndex::leftmost(const Word &w) const
{
	std::optional<Match> best;
	for (const Match &m : occurrences(w)) {
		if (!best || m.start < best->start ||
		    (m.start == best->start && lengths_[m.pattern] > lengths_[best->pattern]))
			best = m;
	}
	return best;
}

bool FactorIndex::contains_any(const Word &w) const
{
	if (empty_pattern_)
		return true;
	if (nodes_.empty())
		return false;
	std::size_t s = root;
	for (Letter x : w) {
		s = step(s, x);
		if (nodes_[s].accepting)
			return true;
	}
	return false;
}

Basis Basis::build(std::span<const Poly> rules)
{
	Basis b;
	for (const Poly &p : rules) {
		if (p.is_zero())
			throw ZeroPolynomialError("build_basis: zero polynomial in input");
		b.insert_unindexed(p);
	}
	b.reindex();
	return b;
}

std::optional<RuleId> Basis::insert(const Poly &p)
{
	auto id = insert_unindexed(p);
	if (id)
		reindex();
	return id;
}

std::optional<RuleId> Basis::insert_unindexed(const Poly &p)
{
	if (p.is_zero())
		return std::nullopt;
	Poly q = monic(p);
	for (;;) {
		auto it = by_lead_.find(q.leading_word());
		if (it == by_lead_.end())
			break;
		q -= rules_[it->second];
		if (q.is_zero())
			return std::nullopt;
		q = monic(q);
	}
	RuleId id = rules_.size();
	leads_.push_back(q.leading_word());
	by_lead_.emplace(q.leading_word(), id);
	rules_.push_back(std::move(q));
	return id;
}

std::optional<RuleId> Basis::find_lead(const Word &w) const
{
	auto it = by_lead_.find(w);
	if (it == by_lead_.end())
		return std::nullopt;
	return it->second;
}

Basis Basis::without(RuleId id) const
{
	if (id >= rules_.size())
		throw std::out_of_range("Basis::without: no such rule");
	Basis b;
	for (RuleId i = 0; i < rules_.size(); i++)
		if (i != id)
			b.insert_unindexed(rules_[i]);
	b.reindex();
	return b;
}

bool Basis::is_homogeneous() const noexcept
{
	return std::all_of(rules_.begin(), rules_.end(), [](const Poly &p) { return p.is_homogeneous(); });
}

void Basis::reindex()
{
	index_ = FactorIndex(leads_);
}

std::optional<std::pair<Poly, ReductionStep>> reduce_step(const Poly &p, const Basis &basis)
{
	for (const auto &[w, c] : p) {
		auto m = basis.index().leftmost(w);
		if (!m)
			continue;
		const Word &lead = basis.lead(m->pattern);
		Word a = w.prefix(m->start);
		Word b = w.suffix(w.size() - m->start - lead.size());
		ReductionStep step{m->pattern, m->start, w, c};
		Poly q = p - basis.rule(m->pattern).sandwich(a, b) * c;
		return std::pair{std::move(q), std::move(step)};
	}
	return std::nullopt;
}

NormalForm normal_form(const Poly &p, const Basis &basis, bool want_trace)
{
	NormalForm nf;
	if (want_trace)
		nf.trace.emplace();
	Poly::Map work = p.terms();
	Poly::Map done;
	while (!work.empty()) {
		auto top = work.begin();
		Word w = top->first;
		Scalar c = top->second;
		work.erase(top);
		auto m = basis.index().leftmost(w);
		if (!m) {
			done.emplace_hint(done.end(), std::move(w), std::move(c));
			continue;
		}
		const Word &lead = basis.lead(m->pattern);
		Word a = w.prefix(m->start);
		Word b = w.suffix(w.size() - m->start - lead.size());
		bool first = true;
		for (const auto &[t, d] : basis.rule(m->pattern)) {
			if (first) {
				first = false;
				continue;
			}
			Word v = a * t * b;
			Scalar delta = -c * d;
			auto [it, fresh] = work.try_emplace(std::move(v), delta);
			if (!fresh) {
				it->second += delta;
				if (it->second == 0)
					work.erase(it);
			}
		}
		if (want_trace)
			nf.trace->steps.push_back({m->pattern, m->start, std::move(w), std::move(c)});
	}
	for (auto &[w, c] : done)
		nf.poly.add_term(w, c);
	if (want_trace)
		nf.trace->terminal = nf.poly;
	return nf;
}

Poly replay(const Poly &p, std::span<const ReductionStep> steps, const Basis &basis)
{
	Poly q = p;
	for (const ReductionStep &s : steps) {
		const Word &lead = basis.lead(s.rule);
		if (s.position + lead.size() > s.word.size() ||
		    s.word.sub(s.position, lead.size()) != lead)
			throw std::invalid_argument("replay: step does not match its rule");
		if (q.coef(s.word) != s.coefficient)
			throw std::invalid_argument("replay: coefficient mismatch");
		Word a = s.word.prefix(s.position);
		Word b = s.word.suffix(s.word.size() - s.position - lead.size());
		q -= basis.rule(s.rule).sandwich(a, b) * s.coefficient;
	}
	return q;
}

namespace {

void collect_irreducible(const FactorIndex &index, int n, std::size_t len, std::size_t state,
                         std::vector<Letter> &prefix, std::vector<Word> &out)
{
	if (prefix.size() == len) {
		out.emplace_back(prefix);
		return;
	}
	for (int x = 1; x <= n; x++) {
		auto l = static_cast<Letter>(x);
		std::size_t t = index.step(state, l);
		if (index.accepting(t))
			continue;
		prefix.push_back(l);
		collect_irreducible(index, n, len, t, prefix, out);
		prefix.pop_back();
	}
}

} // namespace

std::vector<Word> irreducible_words(const Basis &basis, int n, std::size_t len)
{
	std::vector<Word> out;
	const FactorIndex &index = basis.index();
	if (index.accepting(FactorIndex::root))
		return out;
	std::vector<Letter> prefix;
	prefix.reserve(len);
	collect_irreducible(index, n, len, FactorIndex::root, prefix, out);
	return out;
}

std::size_t count_irreducible_words(const Basis &basis, int n, std::size_t len)
{
	const FactorIndex &index = basis.index();
	if (index.accepting(FactorIndex::root))
		return 0;
	std::size_t states = std::max<std::size_t>(index.state_count(), 1);
	std::vector<std::size_t> cur(states, 0), nxt(states);
	cur[FactorIndex::root] = 1;
	for (std::size_t l = 0; l < len; l++) {
		std::fill(nxt.begin(), nxt.end(), 0);
		for (std::size_t s = 0; s < states; s++) {
			if (cur[s] == 0)
				continue;
			for (int x = 1; x <= n; x++) {
				std::size_t t = index.step(s, static_cast<Letter>(x));
				if (!index.accepting(t))
					nxt[t] += cur[s];
			}
		}
		std::swap(cur, nxt);
	}
	std::size_t total = 0;
	for (std::size_t c : cur)
		total += c;
	return total;
}

} // namespace gsb
