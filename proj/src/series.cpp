#include "bchkit/series.hpp"

#include <stdexcept>

namespace bchkit {

SeriesFunction exp_series()
{
	return {"exp",
	        [](int k) { return Rational::factorial_inverse(static_cast<unsigned long>(k)); },
	        DomainConstraint::constant_term_zero};
}

SeriesFunction log_series()
{
	return {"log",
	        [](int k) {
		        return k == 0 ? Rational(0) : Rational(k % 2 == 1 ? 1 : -1, k);
	        },
	        DomainConstraint::constant_term_one};
}

namespace {

void check_domain(const SeriesFunction &f, const Polynomial &a)
{
	switch (f.domain_constraint)
	{
	case DomainConstraint::constant_term_zero:
		if (!a.constant_term().is_zero())
			throw std::domain_error("apply_series: '" + f.name +
			                        "' requires constant term zero");
		return;
	case DomainConstraint::constant_term_one:
		if (a.constant_term() != Rational(1))
			throw std::domain_error("apply_series: '" + f.name +
			                        "' requires constant term one");
		return;
	case DomainConstraint::none:
		return;
	}
}

Polynomial apply_series_impl(const SeriesFunction &f, const Polynomial &a,
                             MulCounter *meter)
{
	check_domain(f, a);
	const int n = a.trunc_order();
	const Polynomial u =
	    f.domain_constraint == DomainConstraint::constant_term_one
	        ? poly_sub(a, Polynomial::one(n))
	        : a;

	auto scale = [&](const Rational &q, const Polynomial &p) {
		return meter ? scalar_mul(q, p, *meter) : scalar_mul(q, p);
	};

	Polynomial acc = scale(f.coeff(0), Polynomial::one(n));
	Polynomial power = u; // u^1; higher powers by left fold, reusing the last
	for (int k = 1; k <= n; ++k)
	{
		if (k > 1)
			power = meter ? poly_mul(power, u, *meter) : poly_mul(power, u);
		acc = poly_add(acc, scale(f.coeff(k), power), meter);
	}
	return acc;
}

} // namespace

Polynomial apply_series(const SeriesFunction &f, const Polynomial &a,
                        MulCounter &meter)
{
	return apply_series_impl(f, a, &meter);
}

Polynomial apply_series(const SeriesFunction &f, const Polynomial &a)
{
	return apply_series_impl(f, a, nullptr);
}

Polynomial exp_poly(const Polynomial &a, MulCounter &meter)
{
	return apply_series(exp_series(), a, meter);
}

Polynomial exp_poly(const Polynomial &a) { return apply_series(exp_series(), a); }

Polynomial log_poly(const Polynomial &a, MulCounter &meter)
{
	return apply_series(log_series(), a, meter);
}

Polynomial log_poly(const Polynomial &a) { return apply_series(log_series(), a); }

} // namespace bchkit
