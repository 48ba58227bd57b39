#ifndef BCHKIT_MUL_COUNTER_HPP
#define BCHKIT_MUL_COUNTER_HPP

#include <cstdint>
#include <map>

namespace bchkit {

/// Tally of monomial multiplications performed in one computation context.
/// One count = one formation of a product term (coefficient times coefficient
/// together with the word concatenation) from a nonzero stored term of each
/// factor, bucketed by the degree of the product. Scalar-by-term scalings
/// (series coefficients) and coefficient additions go to separate buckets and
/// take no part in any equality verdict.
struct MulCounter {
	std::map<int, std::uint64_t> per_degree;
	std::uint64_t total = 0; // always the sum over per_degree
	std::uint64_t scalar_muls = 0;
	std::uint64_t coeff_adds = 0;

	void record_mul(int result_degree, std::uint64_t n = 1)
	{
		per_degree[result_degree] += n;
		total += n;
	}
	void record_scalar(std::uint64_t n = 1) { scalar_muls += n; }
	void record_add(std::uint64_t n = 1) { coeff_adds += n; }

	/// The per-degree word-multiplication profiles agree exactly.
	bool same_mul_profile(const MulCounter &o) const
	{
		return per_degree == o.per_degree;
	}
};

} // namespace bchkit

#endif
