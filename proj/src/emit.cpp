#include "bchkit/emit.hpp"

#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bchkit {

Json to_json(const OutputDocument &doc)
{
	Json j;
	j["schema_version"] = doc.schema_version;
	j["command"] = doc.command;
	j["parameters"] = doc.parameters;
	j["payload"] = doc.payload;
	return j;
}

std::string emit_json(const OutputDocument &doc)
{
	return to_json(doc).dump(2) + "\n";
}

OutputDocument parse_document(const std::string &text)
{
	Json j;
	try
	{
		j = Json::parse(text);
	}
	catch (const nlohmann::json::exception &e)
	{
		throw std::invalid_argument(std::string("parse_document: ") + e.what());
	}
	if (!j.is_object() || !j.contains("schema_version") ||
	    j["schema_version"] != "1" || !j.contains("command") ||
	    !j.contains("parameters") || !j.contains("payload"))
		throw std::invalid_argument("parse_document: not a schema-version-1 document");
	OutputDocument doc;
	doc.schema_version = j["schema_version"].get<std::string>();
	doc.command = j["command"].get<std::string>();
	doc.parameters = j["parameters"];
	doc.payload = j["payload"];
	return doc;
}

// --- terms ---------------------------------------------------------------------

Json terms_json(const std::vector<HomogeneousComponent> &terms)
{
	Json arr = Json::array();
	for (const auto &term : terms)
	{
		Json monomials = Json::array();
		for (const auto &[w, c] : term.terms())
			monomials.push_back(Json{{"coeff", c.str_slash()}, {"word", w.str()}});
		arr.push_back(Json{{"degree", term.degree()}, {"monomials", monomials}});
	}
	return arr;
}

Json terms_payload(const BchResult &r)
{
	return Json{{"terms", terms_json(r.terms)}};
}

Json terms_payload(const BchResult &r, bool agreement)
{
	Json payload = terms_payload(r);
	payload["agreement"] = agreement;
	return payload;
}

std::vector<HomogeneousComponent> parse_terms(const Json &payload)
{
	std::vector<HomogeneousComponent> out;
	for (const auto &entry : payload.at("terms"))
	{
		HomogeneousComponent hc(entry.at("degree").get<int>());
		for (const auto &monomial : entry.at("monomials"))
			hc.add_term(parse_word(monomial.at("word").get<std::string>()),
			            Rational::from_string(monomial.at("coeff").get<std::string>()));
		out.push_back(std::move(hc));
	}
	return out;
}

// --- count ---------------------------------------------------------------------

Json counter_json(const MulCounter &c)
{
	Json per_degree = Json::object();
	for (const auto &[degree, count] : c.per_degree)
		per_degree[std::to_string(degree)] = count;
	return Json{{"per_degree", per_degree},
	            {"total", c.total},
	            {"scalar_muls", c.scalar_muls},
	            {"coeff_adds", c.coeff_adds}};
}

MulCounter parse_counter(const Json &j)
{
	MulCounter c;
	for (const auto &[key, value] : j.at("per_degree").items())
		c.per_degree[std::stoi(key)] = value.get<std::uint64_t>();
	c.total = j.at("total").get<std::uint64_t>();
	c.scalar_muls = j.at("scalar_muls").get<std::uint64_t>();
	c.coeff_adds = j.at("coeff_adds").get<std::uint64_t>();
	return c;
}

Json count_payload(const CountReport &r)
{
	return Json{{"order", r.order},
	            {"scope", r.scope},
	            {"backend", r.backend},
	            {"direct", counter_json(r.direct_counts)},
	            {"matrix", counter_json(r.matrix_counts)},
	            {"equal", r.equal}};
}

CountReport parse_count_report(const Json &payload)
{
	CountReport r;
	r.order = payload.at("order").get<int>();
	r.scope = payload.at("scope").get<std::string>();
	r.backend = payload.at("backend").get<std::string>();
	r.direct_counts = parse_counter(payload.at("direct"));
	r.matrix_counts = parse_counter(payload.at("matrix"));
	r.equal = payload.at("equal").get<bool>();
	return r;
}

// --- verify --------------------------------------------------------------------

Json verify_payload(const VerifySummary &s)
{
	Json failures = Json::array();
	for (const auto &f : s.failures)
		failures.push_back(Json{{"order", f.order},
		                        {"trial", f.trial},
		                        {"seed", f.seed},
		                        {"check", f.check}});
	return Json{{"order_max", s.order_max}, {"trials", s.trials},
	            {"seed", s.seed},           {"generators", s.generators},
	            {"checks_run", s.checks_run}, {"failures", failures},
	            {"pass", s.pass}};
}

VerifySummary parse_verify_summary(const Json &payload)
{
	VerifySummary s;
	s.order_max = payload.at("order_max").get<int>();
	s.trials = payload.at("trials").get<int>();
	s.seed = payload.at("seed").get<std::uint64_t>();
	s.generators = payload.at("generators").get<int>();
	s.checks_run = payload.at("checks_run").get<std::uint64_t>();
	for (const auto &f : payload.at("failures"))
		s.failures.push_back(VerifyFailure{f.at("order").get<int>(),
		                                   f.at("trial").get<int>(),
		                                   f.at("seed").get<std::uint64_t>(),
		                                   f.at("check").get<std::string>()});
	s.pass = payload.at("pass").get<bool>();
	return s;
}

// --- plain / latex ---------------------------------------------------------------

std::string render_terms_plain(const BchResult &r)
{
	std::string out;
	for (const auto &term : r.terms)
		out += "deg " + std::to_string(term.degree()) + ": " + to_plain(term) + "\n";
	return out;
}

std::string render_terms_plain(const BchResult &r, bool agreement)
{
	return render_terms_plain(r) +
	       (agreement ? "agreement: true\n" : "agreement: false\n");
}

std::string latex_word(const Word &w)
{
	std::string out;
	const auto &letters = w.letters();
	for (std::size_t i = 0; i < letters.size();)
	{
		std::size_t run = i + 1;
		while (run < letters.size() && letters[run] == letters[i])
			++run;
		if (!out.empty())
			out += ' ';
		out += generator_label(letters[i]);
		const std::size_t count = run - i;
		if (count == 2)
			out += "^2";
		else if (count > 2 && count < 10)
			out += "^" + std::to_string(count);
		else if (count >= 10)
			out += "^{" + std::to_string(count) + "}";
		i = run;
	}
	return out;
}

namespace {

std::string latex_term(const Rational &c, const Word &w, bool first)
{
	const Rational mag = c.abs();
	std::string body;
	const bool unit = mag == Rational(1);
	if (!unit || w.empty())
	{
		const std::string num = mag.str();
		const auto slash = num.find('/');
		body = slash == std::string::npos
		           ? num
		           : "\\frac{" + num.substr(0, slash) + "}{" + num.substr(slash + 1) + "}";
	}
	if (!w.empty())
	{
		if (!body.empty())
			body += ' ';
		body += latex_word(w);
	}
	if (first)
		return (c.sign() < 0 ? "- " : "") + body;
	return (c.sign() < 0 ? " - " : " + ") + body;
}

} // namespace

std::string render_terms_latex(const BchResult &r)
{
	std::string out;
	for (const auto &term : r.terms)
	{
		if (term.is_zero())
		{
			out += "0\n";
			continue;
		}
		std::string line;
		for (const auto &[w, c] : term.terms())
			line += latex_term(c, w, line.empty());
		out += line + "\n";
	}
	return out;
}

namespace {

const char *kGreen = "\x1b[32m";
const char *kRed = "\x1b[31m";
const char *kReset = "\x1b[0m";

std::string verdict(bool ok, bool color, const std::string &yes,
                    const std::string &no)
{
	const std::string word = ok ? yes : no;
	if (!color)
		return word;
	return std::string(ok ? kGreen : kRed) + word + kReset;
}

} // namespace

std::string render_count_table(const CountReport &r, bool color)
{
	std::ostringstream os;
	os << "order: " << r.order << "   scope: " << r.scope
	   << "   backend: " << r.backend << "\n";
	os << std::setw(7) << "degree" << std::setw(12) << "direct" << std::setw(12)
	   << "matrix" << "\n";
	std::set<int> degrees;
	for (const auto &[d, c] : r.direct_counts.per_degree)
		degrees.insert(d);
	for (const auto &[d, c] : r.matrix_counts.per_degree)
		degrees.insert(d);
	auto at = [](const MulCounter &c, int d) -> std::uint64_t {
		auto it = c.per_degree.find(d);
		return it == c.per_degree.end() ? 0 : it->second;
	};
	for (int d : degrees)
		os << std::setw(7) << d << std::setw(12) << at(r.direct_counts, d)
		   << std::setw(12) << at(r.matrix_counts, d) << "\n";
	os << std::setw(7) << "total" << std::setw(12) << r.direct_counts.total
	   << std::setw(12) << r.matrix_counts.total << "\n";
	os << std::setw(7) << "scalar" << std::setw(12) << r.direct_counts.scalar_muls
	   << std::setw(12) << r.matrix_counts.scalar_muls << "\n";
	os << std::setw(7) << "adds" << std::setw(12) << r.direct_counts.coeff_adds
	   << std::setw(12) << r.matrix_counts.coeff_adds << "\n";
	os << "equal: " << verdict(r.equal, color, "true", "false") << "\n";
	return os.str();
}

std::string render_verify_plain(const VerifySummary &s, bool color)
{
	std::ostringstream os;
	os << "verify: order_max=" << s.order_max << " trials=" << s.trials
	   << " seed=" << s.seed << " generators=" << s.generators << "\n";
	os << "checks run: " << s.checks_run << "\n";
	for (const auto &f : s.failures)
		os << "FAIL order=" << f.order << " trial=" << f.trial
		   << " seed=" << f.seed << " check=" << f.check << "\n";
	os << "result: " << verdict(s.pass, color, "pass", "fail") << "\n";
	return os.str();
}

} // namespace bchkit
