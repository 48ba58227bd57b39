#ifndef BCHKIT_BCH_HPP
#define BCHKIT_BCH_HPP

#include <utility>
#include <vector>

#include "bchkit/toeplitz.hpp"

namespace bchkit {

enum class BchMethod { direct, matrix };

/// The degree-1..n terms of log(exp x exp y) plus the multiplication tally of
/// the run that produced them.
struct BchResult {
	int order = 0;
	std::vector<HomogeneousComponent> terms; // degrees 1..order
	BchMethod method = BchMethod::direct;
	MulCounter meter;

	const HomogeneousComponent &term(int degree) const;
	bool terms_equal(const BchResult &other) const;
};

/// Straightforward series expansion: log_poly(exp_poly(x) * exp_poly(y)) at
/// truncation n, split into homogeneous components. Throws
/// std::invalid_argument for n < 1.
BchResult bch_direct(int n, MulCounter &meter);
BchResult bch_direct(int n);

/// The single-superdiagonal generator matrices (M with x, N with y).
std::pair<ToeplitzRep, ToeplitzRep> build_reinsch_generators(int n);

/// Matrix pipeline: log(exp(M) exp(N)) through Toeplitz operations only, then
/// first-row extraction. Produces the same terms as bch_direct.
BchResult bch_matrix(int n, MulCounter &meter);
BchResult bch_matrix(int n);

/// The whole matrix pipeline over an arbitrary backend, for differential
/// testing of the compact representation against the naive dense one.
template <class Rep> Polynomial bch_matrix_pipeline(int n, MulCounter *meter)
{
	if (n < 1)
		throw std::invalid_argument("bch_matrix: order must be >= 1");
	const Rep m = Rep::embed(Polynomial::generator(0, n));
	const Rep nn = Rep::embed(Polynomial::generator(1, n));
	const Rep em = mat_apply_series(exp_series(), m, meter);
	const Rep en = mat_apply_series(exp_series(), nn, meter);
	const Rep product =
	    meter ? mat_mul(em, en, *meter) : mat_mul(em, en);
	const Rep logmat = mat_apply_series(log_series(), product, meter);
	return from_first_row(logmat);
}

/// Substitutes one commuting variable for every generator: the degree-1 term
/// must collapse to twice that variable and every higher term to zero, since
/// log(e^t e^t) = 2t. Returns false on any other outcome.
bool abelianization_check(const BchResult &r);

} // namespace bchkit

#endif
