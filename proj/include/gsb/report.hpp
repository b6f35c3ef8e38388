// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_REPORT_HPP
#define GSB_REPORT_HPP

#include "gsb/census.hpp"
#include "gsb/complete.hpp"
#include "gsb/symn.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace gsb::report {

// Keys keep insertion order so serialization is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;
extern const char *const engine_version;

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

Json to_json(const Word &w);
/// [{"word": [..], "coef": "p/q"}, ...] in descending deg-lex order.
Json to_json(const Poly &p);
Json to_json(const Ambiguity &a);
Json to_json(const ReductionTrace &t);
Json to_json(const CompositionResult &r, bool with_trace = true);
Json to_json(const CompletionReport &r, bool with_traces = false);
Json to_json(const symn::VerificationReport &r);
Json to_json(const symn::LemmaReport &r);
Json to_json(const census::OracleReport &r);
Json to_json(const census::GrowthSeries &g);

/// Family-tagged listing of a basis.
Json to_json(const symn::SymBasis &sb);

/**
 * The report envelope:
 *
 *   {"schema_version", "engine_version", "command", "input_digest",
 *    "payload", "payload_digest", "wall_time_ms"}
 *
 * payload_digest hashes the serialized payload only, so it is unaffected
 * by the wall time.
 */
Json envelope(const std::string &command, const std::string &input_digest, Json payload,
              double wall_time_ms);

/// Two-space indented dump with a trailing newline.
std::string serialize(const Json &j);

} // namespace gsb::report

#endif
