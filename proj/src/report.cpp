// SPDX-License-Identifier: Apache-2.0

#include "gsb/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace gsb::report {

const char *const engine_version = "gsb 1.0.0";

std::string sha256_hex(std::string_view data)
{
	std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
	unsigned int len = 0;
	if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
		throw std::runtime_error("SHA-256 failed");
	std::string hex;
	hex.reserve(2 * len);
	char buf[3];
	for (unsigned i = 0; i < len; i++) {
		std::snprintf(buf, sizeof buf, "%02x", md[i]);
		hex += buf;
	}
	return hex;
}

Json to_json(const Word &w)
{
	Json j = Json::array();
	for (Letter x : w)
		j.push_back(static_cast<int>(x));
	return j;
}

Json to_json(const Poly &p)
{
	Json j = Json::array();
	for (const auto &[w, c] : p)
		j.push_back(Json{{"word", to_json(w)}, {"coef", scalar_to_fraction(c)}});
	return j;
}

Json to_json(const Ambiguity &a)
{
	return Json{
		{"kind", to_string(a.kind)},
		{"f", a.f},
		{"g", a.g},
		{"w", to_json(a.w)},
		{"a", to_json(a.a)},
		{"b", to_json(a.b)},
	};
}

Json to_json(const ReductionTrace &t)
{
	Json steps = Json::array();
	for (const auto &s : t.steps)
		steps.push_back(Json{
			{"rule", s.rule},
			{"position", s.position},
			{"word", to_json(s.word)},
			{"coef", scalar_to_fraction(s.coefficient)},
		});
	return Json{{"steps", std::move(steps)}, {"terminal", to_json(t.terminal)}};
}

Json to_json(const CompositionResult &r, bool with_trace)
{
	Json j{
		{"ambiguity", to_json(r.ambiguity)},
		{"composition", to_json(r.composition)},
		{"remainder", to_json(r.remainder)},
		{"trivial", r.trivial},
	};
	if (with_trace)
		j["trace"] = to_json(r.trace);
	return j;
}

Json to_json(const CompletionReport &r, bool with_traces)
{
	Json rules = Json::array();
	for (const Poly &p : r.basis.rules())
		rules.push_back(to_json(p));
	Json added = Json::array();
	for (const AddedRule &a : r.added) {
		Json e{{"id", a.id}, {"source", to_json(a.source)}, {"rule", to_json(a.rule)}};
		if (with_traces)
			e["trace"] = to_json(a.trace);
		added.push_back(std::move(e));
	}
	return Json{
		{"kind", "completion"},
		{"status", to_string(r.status)},
		{"degree_bound", r.degree_bound},
		{"rounds", r.rounds},
		{"input_rules", r.input.size()},
		{"final_rules", r.basis.size()},
		{"skipped_beyond_bound", r.skipped},
		{"added", std::move(added)},
		{"basis", std::move(rules)},
	};
}

Json to_json(const symn::VerificationReport &r)
{
	Json pairs = Json::array();
	for (const auto &[fp, pc] : r.pairs)
		pairs.push_back(Json{
			{"pair", std::string(symn::to_string(fp.first)) + "^" + symn::to_string(fp.second)},
			{"checked", pc.checked},
			{"nontrivial", pc.nontrivial},
		});
	Json failures = Json::array();
	for (const auto &f : r.failures)
		failures.push_back(to_json(f));
	return Json{
		{"kind", "verification"},
		{"n", r.n},
		{"degree_bound", r.degree_bound},
		{"rules", r.rules},
		{"ambiguities_total", r.total},
		{"checked", r.checked},
		{"skipped_beyond_bound", r.skipped},
		{"nontrivial", r.nontrivial},
		{"verdict", r.pass() ? "pass" : "fail"},
		{"pairs", std::move(pairs)},
		{"failures", std::move(failures)},
	};
}

Json to_json(const symn::LemmaReport &r)
{
	Json fam = Json::object();
	for (const auto &[f, c] : r.members_by_family)
		fam[symn::to_string(f)] = c;
	Json failures = Json::array();
	for (const auto &f : r.failures)
		failures.push_back(Json{{"rule", f.rule}, {"remainder", to_json(f.remainder)}});
	return Json{
		{"kind", "lemma_membership"},
		{"n", r.n},
		{"degree_bound", r.degree_bound},
		{"completion_status", to_string(r.completion_status)},
		{"completed_rules", r.completed_rules},
		{"members", r.members},
		{"members_by_family", std::move(fam)},
		{"failures", std::move(failures)},
		{"verdict", r.inconclusive() ? "inconclusive" : r.pass() ? "pass" : "fail"},
	};
}

Json to_json(const census::OracleReport &r)
{
	Json v = Json::array();
	for (const auto &c : r.violations)
		v.push_back(Json{
			{"representative", to_json(c.representative)},
			{"class_size", c.class_size},
			{"normal_words", c.normal_words},
		});
	return Json{
		{"length", r.length},
		{"words", r.words},
		{"classes", r.classes},
		{"normal_words", r.normal_words},
		{"representative_mismatches", r.representative_mismatches},
		{"violations", std::move(v)},
		{"verdict", r.pass() ? "pass" : "fail"},
	};
}

Json to_json(const census::GrowthSeries &g)
{
	Json rows = Json::array();
	for (std::size_t l = 0; l < g.total.size(); l++)
		rows.push_back(Json{
			{"length", l},
			{"avoiders", g.avoiders[l].get_str()},
			{"special", g.special[l].get_str()},
			{"total", g.total[l].get_str()},
		});
	return Json{{"kind", "growth_series"}, {"n", g.n}, {"series", std::move(rows)}};
}

Json to_json(const symn::SymBasis &sb)
{
	Json rules = Json::array();
	for (RuleId id = 0; id < sb.tags.size(); id++)
		rules.push_back(Json{
			{"id", id},
			{"family", symn::to_string(sb.tags[id].family)},
			{"params", sb.tags[id].params},
			{"poly", to_json(sb.basis.rule(id))},
		});
	return Json{{"n", sb.n}, {"degree_bound", sb.degree_bound}, {"rules", std::move(rules)}};
}

Json envelope(const std::string &command, const std::string &input_digest, Json payload,
              double wall_time_ms)
{
	std::string digest = sha256_hex(payload.dump());
	return Json{
		{"schema_version", schema_version},
		{"engine_version", engine_version},
		{"command", command},
		{"input_digest", input_digest},
		{"payload", std::move(payload)},
		{"payload_digest", digest},
		{"wall_time_ms", wall_time_ms},
	};
}

std::string serialize(const Json &j)
{
	return j.dump(2) + "\n";
}

} // namespace gsb::report
