#ifndef BCHKIT_EMIT_HPP
#define BCHKIT_EMIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bchkit/bch.hpp"
#include "bchkit/metering.hpp"

namespace bchkit {

using Json = nlohmann::ordered_json;

/// Envelope for all machine-readable output. Identical inputs produce
/// byte-identical emissions.
struct OutputDocument {
	std::string schema_version = "1";
	std::string command;
	Json parameters;
	Json payload;
};

Json to_json(const OutputDocument &doc);
std::string emit_json(const OutputDocument &doc);
/// Parses an emitted document; throws std::invalid_argument on anything that
/// is not a version-"1" envelope.
OutputDocument parse_document(const std::string &text);

// --- terms payload -----------------------------------------------------------

/// [{"degree": i, "monomials": [{"coeff": "p/q", "word": "xyx"}, ...]}, ...]
/// Coefficients always carry the explicit denominator ("1/1"); words are raw
/// label strings, "" for the empty word.
Json terms_json(const std::vector<HomogeneousComponent> &terms);
Json terms_payload(const BchResult &r);
Json terms_payload(const BchResult &r, bool agreement);
std::vector<HomogeneousComponent> parse_terms(const Json &payload);

// --- count payload -----------------------------------------------------------

Json counter_json(const MulCounter &c);
MulCounter parse_counter(const Json &j);
Json count_payload(const CountReport &r);
CountReport parse_count_report(const Json &payload);

// --- verify payload ----------------------------------------------------------

struct VerifyFailure {
	int order = 0;
	int trial = 0;
	std::uint64_t seed = 0;
	std::string check;

	friend bool operator==(const VerifyFailure &, const VerifyFailure &) = default;
};

struct VerifySummary {
	int order_max = 0;
	int trials = 0;
	std::uint64_t seed = 0;
	int generators = 0;
	std::uint64_t checks_run = 0;
	std::vector<VerifyFailure> failures;
	bool pass = false;

	friend bool operator==(const VerifySummary &, const VerifySummary &) = default;
};

Json verify_payload(const VerifySummary &s);
VerifySummary parse_verify_summary(const Json &payload);

// --- human-readable renderings -------------------------------------------------

/// One `deg i: ...` line per degree, components in the plain term format.
std::string render_terms_plain(const BchResult &r);
std::string render_terms_plain(const BchResult &r, bool agreement);

/// One display-math line per degree; adjacent equal letters collapse to
/// powers here only ("x^2 y"), plain and JSON keep raw words.
std::string render_terms_latex(const BchResult &r);
std::string latex_word(const Word &w);

std::string render_count_table(const CountReport &r, bool color);
std::string render_verify_plain(const VerifySummary &s, bool color);

} // namespace bchkit

#endif
