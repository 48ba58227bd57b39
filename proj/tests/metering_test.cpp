#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bchkit/metering.hpp"

#include <stdexcept>

using namespace bchkit;

TEST_CASE("counter bookkeeping: totals follow per-degree buckets")
{
	MulCounter c;
	c.record_mul(0);
	c.record_mul(2, 3);
	c.record_mul(2);
	CHECK(c.total == 5);
	CHECK(c.per_degree == std::map<int, std::uint64_t>{{0, 1}, {2, 4}});
	c.record_scalar(2);
	c.record_add();
	CHECK(c.scalar_muls == 2);
	CHECK(c.coeff_adds == 1);
	CHECK(c.total == 5); // other buckets never leak into the word-mul total

	MulCounter d;
	d.record_mul(2, 4);
	d.record_mul(0);
	d.record_scalar(99); // ignored by the verdict
	CHECK(c.same_mul_profile(d));
	d.record_mul(1);
	CHECK(!c.same_mul_profile(d));
}

TEST_CASE("product of exponentials: once, twice, three times at order 2")
{
	const CountReport r = count_product_of_exponentials(2);
	CHECK(r.direct_counts.per_degree ==
	      std::map<int, std::uint64_t>{{0, 1}, {1, 2}, {2, 3}});
	CHECK(r.matrix_counts.per_degree ==
	      std::map<int, std::uint64_t>{{0, 1}, {1, 2}, {2, 3}});
	CHECK(r.equal);
	CHECK(r.scope == "product");
	CHECK(r.backend == "compact");
}

TEST_CASE("product scope: degree d costs d+1 on both paths, any order")
{
	for (int n = 0; n <= 6; ++n)
	{
		const CountReport r = count_product_of_exponentials(n);
		CAPTURE(n);
		CHECK(r.equal);
		for (int d = 0; d <= n; ++d)
			CHECK(r.direct_counts.per_degree.at(d) ==
			      static_cast<std::uint64_t>(d + 1));
	}
	// order zero is the single constant product
	CHECK(count_product_of_exponentials(0).direct_counts.per_degree ==
	      std::map<int, std::uint64_t>{{0, 1}});
}

TEST_CASE("full pipeline: profiles agree for orders 1..6")
{
	std::uint64_t last_total = 0;
	for (int n = 1; n <= 6; ++n)
	{
		const CountReport r = count_full_bch(n);
		CAPTURE(n);
		CHECK(r.equal);
		CHECK(r.direct_counts.total == r.matrix_counts.total);
		CHECK(r.direct_counts.scalar_muls == r.matrix_counts.scalar_muls);
		// strictly more work at every next order
		CHECK(r.direct_counts.total > last_total);
		last_total = r.direct_counts.total;
	}
	CHECK_THROWS_AS(count_full_bch(0), std::invalid_argument);
	CHECK_THROWS_AS(count_product_of_exponentials(-1), std::invalid_argument);
}

TEST_CASE("the dense grid does strictly more multiplications")
{
	// the same worked product, metered on the naive full-grid backend
	for (int n = 1; n <= 5; ++n)
	{
		const Polynomial x = Polynomial::generator(0, n);
		const Polynomial y = Polynomial::generator(1, n);
		MulCounter compact_meter, dense_meter;
		mat_mul(mat_apply_series(exp_series(), to_toeplitz(x)),
		        mat_apply_series(exp_series(), to_toeplitz(y)), compact_meter);
		mat_mul(mat_apply_series(exp_series(), to_dense_toeplitz(x)),
		        mat_apply_series(exp_series(), to_dense_toeplitz(y)),
		        dense_meter);
		CAPTURE(n);
		CHECK(dense_meter.total > compact_meter.total);
	}

	// frozen n = 2 tallies: every cell of the upper triangle recomputes its
	// diagonal's convolution, 10 formations instead of 6
	const Polynomial x = Polynomial::generator(0, 2);
	const Polynomial y = Polynomial::generator(1, 2);
	MulCounter dense_meter;
	mat_mul(mat_apply_series(exp_series(), to_dense_toeplitz(x)),
	        mat_apply_series(exp_series(), to_dense_toeplitz(y)), dense_meter);
	CHECK(dense_meter.per_degree ==
	      std::map<int, std::uint64_t>{{0, 3}, {1, 4}, {2, 3}});
	CHECK(dense_meter.total == 10);
}

TEST_CASE("metering never changes results")
{
	MulCounter meter;
	CHECK(bch_direct(4, meter).terms == bch_direct(4).terms);
	MulCounter meter2;
	CHECK(bch_matrix(4, meter2).terms == bch_matrix(4).terms);
	const Polynomial a = random_polynomial(3, 4, 2, 0.5);
	const Polynomial b = random_polynomial(4, 4, 2, 0.5);
	MulCounter meter3;
	CHECK(poly_mul(a, b, meter3) == poly_mul(a, b));
}
