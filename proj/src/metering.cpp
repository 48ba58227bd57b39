#include "bchkit/metering.hpp"

#include <stdexcept>

namespace bchkit {

CountReport count_product_of_exponentials(int n)
{
	if (n < 0)
		throw std::invalid_argument("count_product_of_exponentials: order must be >= 0");
	const Polynomial x = Polynomial::generator(0, n);
	const Polynomial y = Polynomial::generator(1, n);

	CountReport report;
	report.order = n;
	report.scope = "product";
	report.backend = "compact";

	const Polynomial ex = exp_poly(x);
	const Polynomial ey = exp_poly(y);
	poly_mul(ex, ey, report.direct_counts);

	const ToeplitzRep em = mat_apply_series(exp_series(), to_toeplitz(x));
	const ToeplitzRep en = mat_apply_series(exp_series(), to_toeplitz(y));
	mat_mul(em, en, report.matrix_counts);

	report.equal = report.direct_counts.same_mul_profile(report.matrix_counts);
	return report;
}

CountReport count_full_bch(int n)
{
	if (n < 1)
		throw std::invalid_argument("count_full_bch: order must be >= 1");
	CountReport report;
	report.order = n;
	report.scope = "full";
	report.backend = "compact";
	bch_direct(n, report.direct_counts);
	bch_matrix(n, report.matrix_counts);
	report.equal = report.direct_counts.same_mul_profile(report.matrix_counts);
	return report;
}

} // namespace bchkit
