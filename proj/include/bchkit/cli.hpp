#ifndef BCHKIT_CLI_HPP
#define BCHKIT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "bchkit/emit.hpp"

namespace bchkit {

// Exit code contract shared by every command: 0 success/agreement,
// 1 verified mismatch, 2 usage error. Machine output goes to `out`,
// diagnostics to `err`.

struct TermsOptions {
	int order = 1;
	std::string method = "both"; // direct | matrix | both
	std::string format = "plain"; // plain | json | latex
	int max_order = 12;
	bool color = false;
};
int run_terms(const TermsOptions &opt, std::ostream &out, std::ostream &err);

struct CountOptions {
	int order = 2;
	std::string scope = "product"; // product | full
	std::string format = "plain";  // plain | json
	int max_order = 12;
	bool color = false;
};
int run_count(const CountOptions &opt, std::ostream &out, std::ostream &err);

struct VerifyOptions {
	int order_max = 4;
	int trials = 50;
	std::uint64_t seed = 1;
	int generators = 2;
	std::string format = "plain"; // plain | json
	int max_order = 12;
	bool color = false;
	/// Test fixture: flips one coefficient on the matrix path of the first
	/// trial so the mismatch reporting path can be exercised end to end.
	bool inject_corruption = false;
};
int run_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err);

/// The randomized equivalence suite behind `verify`, exposed for in-process
/// testing. Trials may run on several threads; the summary is aggregated in
/// deterministic (order, trial) order either way.
VerifySummary verify_equivalence(const VerifyOptions &opt);

} // namespace bchkit

#endif
