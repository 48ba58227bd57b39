#include "bchkit/bch.hpp"

#include <stdexcept>

namespace bchkit {

const HomogeneousComponent &BchResult::term(int degree) const
{
	if (degree < 1 || degree > order)
		throw std::out_of_range("BchResult::term: degree out of range");
	return terms[static_cast<std::size_t>(degree - 1)];
}

bool BchResult::terms_equal(const BchResult &other) const
{
	return order == other.order && terms == other.terms;
}

namespace {

BchResult split_terms(const Polynomial &z, int n, BchMethod method,
                      MulCounter meter)
{
	BchResult r;
	r.order = n;
	r.method = method;
	r.meter = std::move(meter);
	r.terms.reserve(static_cast<std::size_t>(n));
	for (int d = 1; d <= n; ++d)
		r.terms.push_back(component(z, d));
	return r;
}

} // namespace

BchResult bch_direct(int n, MulCounter &meter)
{
	if (n < 1)
		throw std::invalid_argument("bch_direct: order must be >= 1");
	const Polynomial x = Polynomial::generator(0, n);
	const Polynomial y = Polynomial::generator(1, n);
	const Polynomial z =
	    log_poly(poly_mul(exp_poly(x, meter), exp_poly(y, meter), meter), meter);
	return split_terms(z, n, BchMethod::direct, meter);
}

BchResult bch_direct(int n)
{
	MulCounter meter;
	return bch_direct(n, meter);
}

std::pair<ToeplitzRep, ToeplitzRep> build_reinsch_generators(int n)
{
	if (n < 1)
		throw std::invalid_argument("build_reinsch_generators: order must be >= 1");
	return {to_toeplitz(Polynomial::generator(0, n)),
	        to_toeplitz(Polynomial::generator(1, n))};
}

BchResult bch_matrix(int n, MulCounter &meter)
{
	const Polynomial z = bch_matrix_pipeline<ToeplitzRep>(n, &meter);
	return split_terms(z, n, BchMethod::matrix, meter);
}

BchResult bch_matrix(int n)
{
	MulCounter meter;
	return bch_matrix(n, meter);
}

bool abelianization_check(const BchResult &r)
{
	for (const auto &term : r.terms)
	{
		const Rational expected = term.degree() == 1 ? Rational(2) : Rational(0);
		if (term.coefficient_sum() != expected)
			return false;
	}
	return true;
}

} // namespace bchkit
