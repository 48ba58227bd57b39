#ifndef BCHKIT_SERIES_HPP
#define BCHKIT_SERIES_HPP

#include <functional>
#include <string>

#include "bchkit/polynomial.hpp"

namespace bchkit {

/// Admissible constant terms of a series argument.
enum class DomainConstraint { constant_term_zero, constant_term_one, none };

/// A formal scalar coefficient sequence f_0, f_1, ... applied to polynomial
/// arguments as sum_k f_k u^k. exp uses f_k = 1/k! on zero-constant-term
/// arguments; log uses f_0 = 0, f_k = (-1)^(k+1)/k on arguments with constant
/// term one (shifted by u = a - 1).
struct SeriesFunction {
	std::string name;
	std::function<Rational(int)> coeff;
	DomainConstraint domain_constraint = DomainConstraint::none;
};

SeriesFunction exp_series();
SeriesFunction log_series();

/// sum_{k=0..n} f_k u^k truncated at n = a.trunc_order(), with u = a - 1 for
/// constant-term-one functions and u = a otherwise. Powers are computed by
/// left-fold repeated multiplication through the metered polynomial product;
/// the f_k scalings go to the meter's scalar bucket. For constrained f the
/// shifted u has zero constant term, so the k <= n bound is exact, not an
/// approximation. Throws std::domain_error naming the constraint when `a`
/// violates f.domain_constraint.
Polynomial apply_series(const SeriesFunction &f, const Polynomial &a,
                        MulCounter &meter);
Polynomial apply_series(const SeriesFunction &f, const Polynomial &a);

/// exp of a zero-constant-term polynomial; the result has constant term 1.
Polynomial exp_poly(const Polynomial &a, MulCounter &meter);
Polynomial exp_poly(const Polynomial &a);

/// log of a constant-term-one polynomial; the result has zero constant term.
Polynomial log_poly(const Polynomial &a, MulCounter &meter);
Polynomial log_poly(const Polynomial &a);

} // namespace bchkit

#endif
