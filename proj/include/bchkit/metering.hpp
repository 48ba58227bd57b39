#ifndef BCHKIT_METERING_HPP
#define BCHKIT_METERING_HPP

#include <string>

#include "bchkit/bch.hpp"

namespace bchkit {

/// Side-by-side multiplication tallies of the direct and matrix pipelines.
/// `equal` holds exactly when the per-degree word-multiplication profiles
/// agree; the scalar and addition buckets are reported but take no part in
/// the verdict. `backend` names the matrix representation that was metered
/// (the compact diagonal one here; the dense grid backend does strictly more
/// work and is exercised in the tests, not in these reports).
struct CountReport {
	int order = 0;
	std::string scope;   // "product" or "full"
	std::string backend; // "compact"
	MulCounter direct_counts;
	MulCounter matrix_counts;
	bool equal = false;
};

/// Meters only the final product exp(x) * exp(y) at truncation n on both
/// pipelines; the exponentials are precomputed outside both meters. n >= 0.
CountReport count_product_of_exponentials(int n);

/// Meters the complete BCH pipelines end to end (exp, product, log). n >= 1.
CountReport count_full_bch(int n);

} // namespace bchkit

#endif
