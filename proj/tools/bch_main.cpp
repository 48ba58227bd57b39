#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "bchkit/cli.hpp"

namespace {

bool color_from_env()
{
	const char *v = std::getenv("BCH_COLOR");
	return v != nullptr && std::string(v) == "1";
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Baker-Campbell-Hausdorff series terms, two ways, with "
	             "multiplication-count reports"};
	app.require_subcommand(1);
	const bool color = color_from_env();

	bchkit::TermsOptions terms;
	terms.color = color;
	auto *terms_cmd = app.add_subcommand(
	    "terms", "emit the series terms degree by degree");
	terms_cmd->add_option("-n,--order", terms.order, "truncation order")
	    ->required();
	terms_cmd->add_option("--method", terms.method,
	                      "direct | matrix | both (default both)");
	terms_cmd->add_option("--format", terms.format,
	                      "plain | json | latex (default plain)");
	terms_cmd->add_option("--max-order", terms.max_order,
	                      "guard against runaway orders (default 12)");

	bchkit::VerifyOptions verify;
	verify.color = color;
	auto *verify_cmd = app.add_subcommand(
	    "verify", "randomized equivalence checks of the two pipelines");
	verify_cmd->add_option("-n,--order", verify.order_max,
	                       "largest truncation order to test")
	    ->required();
	verify_cmd->add_option("--trials", verify.trials,
	                       "random trials per order (default 50)");
	verify_cmd->add_option("--seed", verify.seed, "base seed (default 1)");
	verify_cmd->add_option("--generators", verify.generators,
	                       "alphabet size (default 2)");
	verify_cmd->add_option("--format", verify.format,
	                       "plain | json (default plain)");
	verify_cmd->add_option("--max-order", verify.max_order,
	                       "guard against runaway orders (default 12)");
	verify_cmd->add_flag("--inject-corruption", verify.inject_corruption)
	    ->group(""); // test fixture, hidden from help

	bchkit::CountOptions count;
	count.color = color;
	auto *count_cmd = app.add_subcommand(
	    "count", "multiplication tallies of both pipelines");
	count_cmd->add_option("-n,--order", count.order, "truncation order")
	    ->required();
	count_cmd->add_option("--scope", count.scope,
	                      "product | full (default product)");
	count_cmd->add_option("--format", count.format,
	                      "plain | json (default plain)");
	count_cmd->add_option("--max-order", count.max_order,
	                      "guard against runaway orders (default 12)");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp &e)
	{
		return app.exit(e);
	}
	catch (const CLI::CallForAllHelp &e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e); // prints the message
		return 2;
	}

	try
	{
		if (terms_cmd->parsed())
			return bchkit::run_terms(terms, std::cout, std::cerr);
		if (verify_cmd->parsed())
			return bchkit::run_verify(verify, std::cout, std::cerr);
		return bchkit::run_count(count, std::cout, std::cerr);
	}
	catch (const std::invalid_argument &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (const std::out_of_range &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (const std::exception &e)
	{
		std::cerr << "internal error: " << e.what() << "\n";
		return 1;
	}
}
