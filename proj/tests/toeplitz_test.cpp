#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bchkit/toeplitz.hpp"

#include <stdexcept>

using namespace bchkit;

namespace {

Word w(std::initializer_list<std::uint8_t> letters) { return Word(letters); }

// 1 + x + 1/2 x^2 and 1 + y + 1/2 y^2 at n = 2: the worked 3x3 factors
Polynomial exp_sum(int letter)
{
	Polynomial p(2);
	p.add_term(Word(), Rational(1));
	p.add_term(Word::single(static_cast<std::uint8_t>(letter)), Rational(1));
	p.add_term(w({static_cast<std::uint8_t>(letter),
	              static_cast<std::uint8_t>(letter)}),
	           Rational(1, 2));
	return p;
}

} // namespace

TEST_CASE("embedding a constant gives the identity matrix")
{
	const ToeplitzRep m = to_toeplitz(Polynomial::one(2));
	CHECK(m == ToeplitzRep::identity(2));
	for (int i = 1; i <= 3; ++i)
		for (int j = 1; j <= 3; ++j)
		{
			if (i == j)
				CHECK(m.entry(i, j).coeff(Word()) == Rational(1));
			else
				CHECK(m.entry(i, j).is_zero());
		}
}

TEST_CASE("embedding the worked factor puts components on the diagonals")
{
	const ToeplitzRep m = to_toeplitz(exp_sum(0));
	CHECK(dump(m) == "+ 1 1 | + 1 x | + 1/2 xx\n"
	                 "0 | + 1 1 | + 1 x\n"
	                 "0 | 0 | + 1 1\n");
}

TEST_CASE("the generator embeds as the single-superdiagonal matrix")
{
	const ToeplitzRep m = to_toeplitz(Polynomial::generator(0, 3));
	for (int i = 1; i <= 4; ++i)
		for (int j = 1; j <= 4; ++j)
		{
			if (j == i + 1)
				CHECK(m.entry(i, j).coeff(w({0})) == Rational(1));
			else
				CHECK(m.entry(i, j).is_zero());
		}
}

TEST_CASE("first-row extraction inverts embedding")
{
	CHECK(from_first_row(ToeplitzRep::identity(3)) == Polynomial::one(3));
	for (std::uint64_t seed : {1ull, 2ull, 3ull})
	{
		const Polynomial a = random_polynomial(seed, 4, 2, 0.5);
		CHECK(from_first_row(to_toeplitz(a)) == a);
		CHECK(from_first_row(to_dense_toeplitz(a)) == a);
		// and the other way around: a valid matrix is the embedding of its
		// first row
		CHECK(to_toeplitz(from_first_row(to_toeplitz(a))) == to_toeplitz(a));
	}
}

TEST_CASE("first-row extraction rejects a corrupted grid")
{
	DenseToeplitzRep m = to_dense_toeplitz(exp_sum(0));

	SUBCASE("lower-triangle dirt")
	{
		m.entry_mut(3, 1).add_term(Word(), Rational(1));
		CHECK_THROWS_AS(from_first_row(m), StructureError);
	}
	SUBCASE("Toeplitz constancy broken")
	{
		m.entry_mut(2, 3).add_term(w({1}), Rational(1));
		CHECK_THROWS_AS(from_first_row(m), StructureError);
	}
	SUBCASE("valid grid passes")
	{
		CHECK_NOTHROW(validate(m));
	}
}

TEST_CASE("the worked 3x3 product comes out entry for entry")
{
	const ToeplitzRep a = to_toeplitz(exp_sum(0));
	const ToeplitzRep b = to_toeplitz(exp_sum(1));
	MulCounter meter;
	const ToeplitzRep c = mat_mul(a, b, meter);

	CHECK(dump(c) ==
	      "+ 1 1 | + 1 x  + 1 y | + 1/2 xx  + 1 xy  + 1/2 yy\n"
	      "0 | + 1 1 | + 1 x  + 1 y\n"
	      "0 | 0 | + 1 1\n");

	// first row reads the convolution
	CHECK(from_first_row(c) == poly_mul(exp_sum(0), exp_sum(1)));

	// once for degree 0, twice for degree 1, three times for degree 2
	CHECK(meter.per_degree ==
	      std::map<int, std::uint64_t>{{0, 1}, {1, 2}, {2, 3}});

	CHECK(mat_mul(a, ToeplitzRep::identity(2)) == a);
	CHECK(mat_mul(ToeplitzRep::identity(2), a) == a);
	CHECK_THROWS_AS(mat_mul(a, ToeplitzRep::identity(3)), std::invalid_argument);
}

TEST_CASE("representation homomorphism: embed(ab) = embed(a) embed(b)")
{
	for (std::uint64_t seed : {11ull, 12ull, 13ull, 14ull})
	{
		const Polynomial a = random_polynomial(seed, 4, 2, 0.5);
		const Polynomial b = random_polynomial(seed + 7, 4, 2, 0.5);
		const ToeplitzRep product = mat_mul(to_toeplitz(a), to_toeplitz(b));
		CHECK(product == to_toeplitz(poly_mul(a, b)));
		CHECK(from_first_row(product) == poly_mul(a, b));
	}
}

TEST_CASE("matrix addition is entry-wise and matches polynomial addition")
{
	const ToeplitzRep x = to_toeplitz(Polynomial::generator(0, 2));
	const ToeplitzRep y = to_toeplitz(Polynomial::generator(1, 2));
	CHECK(mat_add(x, y) ==
	      to_toeplitz(Polynomial::generator(0, 2) + Polynomial::generator(1, 2)));
	CHECK(mat_add(x, ToeplitzRep(2)) == x);
	CHECK_THROWS_AS(mat_add(x, ToeplitzRep(5)), std::invalid_argument);

	for (std::uint64_t seed : {21ull, 22ull})
	{
		const Polynomial a = random_polynomial(seed, 3, 2, 0.6);
		const Polynomial b = random_polynomial(seed + 5, 3, 2, 0.6);
		CHECK(from_first_row(mat_add(to_toeplitz(a), to_toeplitz(b))) ==
		      poly_add(a, b));
	}
}

TEST_CASE("series on matrices: exp of the generator matrix is the worked factor")
{
	const ToeplitzRep m = to_toeplitz(Polynomial::generator(0, 2));
	const ToeplitzRep e = mat_apply_series(exp_series(), m);
	CHECK(e == to_toeplitz(exp_sum(0)));

	CHECK(mat_apply_series(exp_series(), ToeplitzRep(3)) ==
	      ToeplitzRep::identity(3));
}

TEST_CASE("series on matrices: domain violations are rejected by the diagonal")
{
	const ToeplitzRep one = ToeplitzRep::identity(2);
	CHECK_THROWS_AS(mat_apply_series(exp_series(), one), std::domain_error);
	CHECK_THROWS_AS(mat_apply_series(log_series(), ToeplitzRep(2)),
	                std::domain_error);
}

TEST_CASE("series on matrices: log inverts exp, first rows match apply_series")
{
	for (std::uint64_t seed : {31ull, 32ull, 33ull})
	{
		const int n = 4;
		Polynomial a = random_polynomial(seed, n, 2, 0.5);
		const Polynomial u =
		    poly_sub(a, Polynomial::constant(a.constant_term(), n));
		const ToeplitzRep mu = to_toeplitz(u);
		const ToeplitzRep e = mat_apply_series(exp_series(), mu);
		CHECK(from_first_row(e) == exp_poly(u));
		CHECK(mat_apply_series(log_series(), e) == mu);
	}
}

TEST_CASE("nilpotency: zero-diagonal matrices vanish at power n+1")
{
	const int n = 3;
	Polynomial a = random_polynomial(5, n, 2, 0.8);
	const Polynomial u = poly_sub(a, Polynomial::constant(a.constant_term(), n));
	ToeplitzRep power = to_toeplitz(u);
	for (int k = 2; k <= n + 1; ++k)
		power = mat_mul(power, to_toeplitz(u));
	CHECK(power == ToeplitzRep(n));
}

TEST_CASE("dense and compact backends stay interchangeable")
{
	for (std::uint64_t seed : {41ull, 42ull, 43ull})
	{
		const int n = 4;
		const Polynomial a = random_polynomial(seed, n, 2, 0.5);
		const Polynomial b = random_polynomial(seed + 3, n, 2, 0.5);
		const ToeplitzRep compact = mat_mul(to_toeplitz(a), to_toeplitz(b));
		const DenseToeplitzRep dense =
		    mat_mul(to_dense_toeplitz(a), to_dense_toeplitz(b));
		validate(dense);
		CHECK(same_entries(compact, dense));

		const Polynomial u =
		    poly_sub(a, Polynomial::constant(a.constant_term(), n));
		const ToeplitzRep ce = mat_apply_series(exp_series(), to_toeplitz(u));
		const DenseToeplitzRep de =
		    mat_apply_series(exp_series(), to_dense_toeplitz(u));
		validate(de);
		CHECK(same_entries(ce, de));
	}
}

TEST_CASE("dense dump shows explicit zeros below the diagonal")
{
	const DenseToeplitzRep m = to_dense_toeplitz(Polynomial::generator(0, 1));
	CHECK(dump(m) == "0 | + 1 x\n"
	                 "0 | 0\n");
}

TEST_CASE("general composition h(f(a) g(b)) goes through the matrices")
{
	// f, g with zero-constant-term domain, h unconstrained: compare the
	// matrix route against the polynomial route on random inputs
	SeriesFunction f{"f", [](int k) { return Rational(1, 1 + k); },
	                 DomainConstraint::constant_term_zero};
	SeriesFunction g{"g",
	                 [](int k) { return k % 2 == 0 ? Rational(2, 3) : Rational(-1, 2); },
	                 DomainConstraint::none};
	SeriesFunction h{"h", [](int k) { return Rational(1 + (k % 3), 2); },
	                 DomainConstraint::none};

	for (std::uint64_t seed : {51ull, 52ull, 53ull})
	{
		const int n = 4;
		Polynomial ra = random_polynomial(seed, n, 2, 0.5);
		Polynomial rb = random_polynomial(seed + 9, n, 2, 0.5);
		const Polynomial a =
		    poly_sub(ra, Polynomial::constant(ra.constant_term(), n));
		const Polynomial b = rb;

		const Polynomial direct =
		    apply_series(h, poly_mul(apply_series(f, a), apply_series(g, b)));

		const ToeplitzRep fa = mat_apply_series(f, to_toeplitz(a));
		const ToeplitzRep gb = mat_apply_series(g, to_toeplitz(b));
		const ToeplitzRep hfg = mat_apply_series(h, mat_mul(fa, gb));
		CHECK(from_first_row(hfg) == direct);
	}
}

TEST_CASE("composition reports a domain error when the inner product violates h")
{
	// h needs constant term one, but f(a) g(b) has constant term f_0 * g_0 = 6
	SeriesFunction f{"f", [](int) { return Rational(2); },
	                 DomainConstraint::constant_term_zero};
	SeriesFunction g{"g", [](int) { return Rational(3); },
	                 DomainConstraint::constant_term_zero};
	SeriesFunction h{"h", [](int k) { return Rational(1, 1 + k); },
	                 DomainConstraint::constant_term_one};
	const int n = 2;
	const Polynomial a = Polynomial::generator(0, n);
	const Polynomial b = Polynomial::generator(1, n);
	const ToeplitzRep product =
	    mat_mul(mat_apply_series(f, to_toeplitz(a)),
	            mat_apply_series(g, to_toeplitz(b)));
	CHECK_THROWS_AS(mat_apply_series(h, product), std::domain_error);
	CHECK_THROWS_AS(
	    apply_series(h, poly_mul(apply_series(f, a), apply_series(g, b))),
	    std::domain_error);
}
