#include "bchkit/cli.hpp"

#include <atomic>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bchkit/metering.hpp"
#include "bchkit/toeplitz.hpp"

namespace bchkit {

namespace {

// Density of the random polynomials drawn for verify trials. Not a CLI knob;
// chosen so order-6 three-generator trials stay sparse enough to be quick but
// full enough to exercise every degree.
constexpr double kVerifyDensity = 0.3;

std::uint64_t splitmix64(std::uint64_t s)
{
	s += 0x9e3779b97f4a7c15ull;
	s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ull;
	s = (s ^ (s >> 27)) * 0x94d049bb133111ebull;
	return s ^ (s >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, int order, int trial)
{
	return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(order)) ^
	                  splitmix64(0x5851f42d4c957f2dull +
	                             static_cast<std::uint64_t>(trial)));
}

} // namespace

int run_terms(const TermsOptions &opt, std::ostream &out, std::ostream &err)
{
	if (opt.max_order < 1)
	{
		err << "terms: --max-order must be >= 1\n";
		return 2;
	}
	if (opt.order < 1 || opt.order > opt.max_order)
	{
		err << "terms: --order must be in [1, " << opt.max_order << "]\n";
		return 2;
	}
	if (opt.method != "direct" && opt.method != "matrix" && opt.method != "both")
	{
		err << "terms: unknown method '" << opt.method << "'\n";
		return 2;
	}
	if (opt.format != "plain" && opt.format != "json" && opt.format != "latex")
	{
		err << "terms: unknown format '" << opt.format << "'\n";
		return 2;
	}

	const bool both = opt.method == "both";
	BchResult result =
	    opt.method == "matrix" ? bch_matrix(opt.order) : bch_direct(opt.order);
	bool agreement = true;
	if (both)
	{
		const BchResult other = bch_matrix(opt.order);
		agreement = result.terms_equal(other);
	}

	if (opt.format == "json")
	{
		OutputDocument doc;
		doc.command = "terms";
		doc.parameters = Json{{"order", opt.order},
		                      {"method", opt.method},
		                      {"format", opt.format},
		                      {"max_order", opt.max_order}};
		doc.payload = both ? terms_payload(result, agreement) : terms_payload(result);
		out << emit_json(doc);
	}
	else if (opt.format == "latex")
	{
		out << render_terms_latex(result);
		if (both && !agreement)
			err << "terms: methods disagree\n";
	}
	else
	{
		out << (both ? render_terms_plain(result, agreement)
		             : render_terms_plain(result));
	}

	if (both && !agreement)
	{
		err << "terms: direct and matrix methods disagree at order "
		    << opt.order << "\n";
		return 1;
	}
	return 0;
}

int run_count(const CountOptions &opt, std::ostream &out, std::ostream &err)
{
	if (opt.scope != "product" && opt.scope != "full")
	{
		err << "count: unknown scope '" << opt.scope << "'\n";
		return 2;
	}
	if (opt.format != "plain" && opt.format != "json")
	{
		err << "count: unknown format '" << opt.format << "'\n";
		return 2;
	}
	const int min_order = opt.scope == "full" ? 1 : 0;
	if (opt.max_order < min_order || opt.order < min_order ||
	    opt.order > opt.max_order)
	{
		err << "count: --order must be in [" << min_order << ", "
		    << opt.max_order << "] for scope '" << opt.scope << "'\n";
		return 2;
	}

	const CountReport report = opt.scope == "product"
	                               ? count_product_of_exponentials(opt.order)
	                               : count_full_bch(opt.order);

	if (opt.format == "json")
	{
		OutputDocument doc;
		doc.command = "count";
		doc.parameters = Json{{"order", opt.order}, {"scope", opt.scope}};
		doc.payload = count_payload(report);
		out << emit_json(doc);
	}
	else
	{
		out << render_count_table(report, opt.color);
	}

	if (!report.equal)
	{
		err << "count: multiplication profiles disagree at order " << opt.order
		    << "\n";
		return 1;
	}
	return 0;
}

namespace {

struct TrialJob {
	int order = 0;
	int trial = 0;
};

std::vector<VerifyFailure> run_trial(const VerifyOptions &opt, TrialJob job)
{
	std::vector<VerifyFailure> failures;
	const std::uint64_t ts = trial_seed(opt.seed, job.order, job.trial);
	auto fail = [&](const char *check) {
		failures.push_back(VerifyFailure{job.order, job.trial, ts, check});
	};
	const int n = job.order;
	const Polynomial a = random_polynomial(splitmix64(ts ^ 1), n,
	                                       opt.generators, kVerifyDensity);
	const Polynomial b = random_polynomial(splitmix64(ts ^ 2), n,
	                                       opt.generators, kVerifyDensity);

	// extraction equals convolution
	const Polynomial direct = poly_mul(a, b);
	const ToeplitzRep compact = mat_mul(to_toeplitz(a), to_toeplitz(b));
	Polynomial via_matrix = from_first_row(compact);
	if (opt.inject_corruption && job.order == 1 && job.trial == 0)
	{
		if (via_matrix.is_zero())
			via_matrix.add_term(Word(), Rational(1));
		else
		{
			const Word w = via_matrix.terms().begin()->first;
			const Rational c = via_matrix.terms().begin()->second;
			via_matrix.add_term(w, c); // doubles one coefficient
		}
	}
	if (!(via_matrix == direct))
		fail("first-row extraction equals convolution");

	// structure of the product, dense grid vs compact diagonals
	try
	{
		const DenseToeplitzRep dense =
		    mat_mul(to_dense_toeplitz(a), to_dense_toeplitz(b));
		validate(dense);
		if (!same_entries(compact, dense))
			fail("dense and compact products agree");
	}
	catch (const StructureError &)
	{
		fail("product keeps Toeplitz structure");
	}

	// series application: structure plus first-row homomorphism
	const Polynomial u = poly_sub(a, Polynomial::constant(a.constant_term(), n));
	const Polynomial expu = exp_poly(u);
	try
	{
		const DenseToeplitzRep dense_exp =
		    mat_apply_series(exp_series(), to_dense_toeplitz(u));
		validate(dense_exp);
		if (!(from_first_row(dense_exp) == expu))
			fail("matrix series application matches polynomial series");
	}
	catch (const StructureError &)
	{
		fail("series application keeps Toeplitz structure");
	}

	// exp/log round trips
	if (!(log_poly(expu) == u))
		fail("log(exp(u)) = u");
	const Polynomial one_plus_u = poly_add(Polynomial::one(n), u);
	if (!(exp_poly(log_poly(one_plus_u)) == one_plus_u))
		fail("exp(log(1+u)) = 1+u");
	return failures;
}

std::vector<VerifyFailure> run_trial_guarded(const VerifyOptions &opt,
                                             TrialJob job)
{
	try
	{
		return run_trial(opt, job);
	}
	catch (const std::exception &e)
	{
		// an exception out of a check is itself a verified failure, not a crash
		return {VerifyFailure{job.order, job.trial,
		                      trial_seed(opt.seed, job.order, job.trial),
		                      std::string("unexpected exception: ") + e.what()}};
	}
}

constexpr std::uint64_t kChecksPerTrial = 5;

} // namespace

VerifySummary verify_equivalence(const VerifyOptions &opt)
{
	VerifySummary summary;
	summary.order_max = opt.order_max;
	summary.trials = opt.trials;
	summary.seed = opt.seed;
	summary.generators = opt.generators;

	std::vector<TrialJob> jobs;
	for (int n = 1; n <= opt.order_max; ++n)
		for (int t = 0; t < opt.trials; ++t)
			jobs.push_back(TrialJob{n, t});
	std::vector<std::vector<VerifyFailure>> results(jobs.size());

	const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
	const unsigned workers =
	    static_cast<unsigned>(std::min<std::size_t>(hw, jobs.size()));
	std::atomic<std::size_t> next{0};
	auto worker = [&]() {
		for (std::size_t i = next.fetch_add(1); i < jobs.size();
		     i = next.fetch_add(1))
			results[i] = run_trial_guarded(opt, jobs[i]);
	};
	if (workers <= 1)
	{
		worker();
	}
	else
	{
		std::vector<std::thread> pool;
		pool.reserve(workers);
		for (unsigned i = 0; i < workers; ++i)
			pool.emplace_back(worker);
		for (auto &t : pool)
			t.join();
	}

	summary.checks_run = kChecksPerTrial * jobs.size();
	for (const auto &r : results) // job order, so reports are deterministic
		summary.failures.insert(summary.failures.end(), r.begin(), r.end());
	summary.pass = summary.failures.empty();
	return summary;
}

int run_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err)
{
	if (opt.max_order < 1 || opt.order_max < 1 || opt.order_max > opt.max_order)
	{
		err << "verify: --order must be in [1, " << opt.max_order << "]\n";
		return 2;
	}
	if (opt.trials < 1)
	{
		err << "verify: --trials must be >= 1\n";
		return 2;
	}
	if (opt.generators < 1 || opt.generators > kMaxAlphabet)
	{
		err << "verify: --generators must be in [1, " << kMaxAlphabet << "]\n";
		return 2;
	}
	if (opt.format != "plain" && opt.format != "json")
	{
		err << "verify: unknown format '" << opt.format << "'\n";
		return 2;
	}

	const VerifySummary summary = verify_equivalence(opt);

	if (opt.format == "json")
	{
		OutputDocument doc;
		doc.command = "verify";
		doc.parameters = Json{{"order_max", opt.order_max},
		                      {"trials", opt.trials},
		                      {"seed", opt.seed},
		                      {"generators", opt.generators}};
		doc.payload = verify_payload(summary);
		out << emit_json(doc);
	}
	else
	{
		out << render_verify_plain(summary, opt.color);
	}

	if (!summary.pass)
	{
		const auto &f = summary.failures.front();
		err << "verify: FAIL reproduce with seed=" << f.seed << " order="
		    << f.order << " trial=" << f.trial << " (" << f.check << ")\n";
		return 1;
	}
	return 0;
}

} // namespace bchkit
