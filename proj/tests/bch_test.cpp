#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bchkit/bch.hpp"
#include "oracle.hpp"

#include <stdexcept>

using namespace bchkit;

namespace {

Word w(std::initializer_list<std::uint8_t> letters) { return Word(letters); }

// oracle degree part -> library component, for exact comparisons
HomogeneousComponent from_oracle(const oracle::Poly &p, int degree)
{
	HomogeneousComponent hc(degree);
	for (const auto &[word, coeff] : p)
	{
		if (static_cast<int>(word.size()) != degree)
			continue;
		std::vector<std::uint8_t> letters;
		for (char c : word)
			letters.push_back(c == 'x' ? 0 : 1);
		hc.add_term(Word(std::move(letters)),
		            Rational::from_string(coeff.get_str()));
	}
	return hc;
}

} // namespace

TEST_CASE("oracle self-check: scalar factorials and the abelian collapse")
{
	// exp partial sum has 1/k! coefficients
	const oracle::Poly e = oracle::exp_partial_sum('x', 5);
	CHECK(e.at("xxx") == mpq_class(1, 6));
	CHECK(e.at("") == 1);
	// log(exp(x)) = x in one variable
	const oracle::Poly l = oracle::log_partial_sum(e, 5);
	CHECK(l == oracle::Poly{{"x", mpq_class(1)}});
	// BCH degrees >= 2 sum to zero under the commuting substitution
	const oracle::Poly z = oracle::bch(4);
	for (int d = 2; d <= 4; ++d)
	{
		mpq_class sum(0);
		for (const auto &[word, coeff] : oracle::degree_part(z, d))
			sum += coeff;
		CHECK(sum == 0);
	}
}

TEST_CASE("low-degree golden values, frozen from the oracle")
{
	const BchResult r = bch_direct(3);

	CHECK(to_plain(r.term(1)) == "+ 1 x  + 1 y");
	CHECK(to_plain(r.term(2)) == "+ 1/2 xy  - 1/2 yx");
	CHECK(to_plain(r.term(3)) ==
	      "+ 1/12 xxy  - 1/6 xyx  + 1/12 xyy  + 1/12 yxx  - 1/6 yxy  + 1/12 yyx");

	// and against the live oracle, degree for degree
	const oracle::Poly z = oracle::bch(3);
	for (int d = 1; d <= 3; ++d)
		CHECK(r.term(d) == from_oracle(z, d));
}

TEST_CASE("degree-1 term is x + y for both methods at several orders")
{
	for (int n : {1, 2, 5})
	{
		HomogeneousComponent expected(1);
		expected.add_term(w({0}), Rational(1));
		expected.add_term(w({1}), Rational(1));
		CHECK(bch_direct(n).term(1) == expected);
		CHECK(bch_matrix(n).term(1) == expected);
	}
}

TEST_CASE("terms contain only words over x and y of the right degree")
{
	const BchResult r = bch_matrix(5);
	for (int d = 1; d <= 5; ++d)
		for (const auto &[word, coeff] : r.term(d).terms())
		{
			CHECK(word.degree() == d);
			for (auto letter : word.letters())
				CHECK(letter <= 1);
		}
}

TEST_CASE("reinsch generators: one superdiagonal of x resp. y")
{
	auto [m, n] = build_reinsch_generators(2);
	CHECK(dump(m) == "0 | + 1 x | 0\n"
	                 "0 | 0 | + 1 x\n"
	                 "0 | 0 | 0\n");
	CHECK(m.diagonal(0).is_zero());
	CHECK(m.diagonal(2).is_zero());
	CHECK(from_first_row(m) == Polynomial::generator(0, 2));
	CHECK(from_first_row(n) == Polynomial::generator(1, 2));
}

TEST_CASE("matrix pipeline reproduces the worked product along the way")
{
	auto [m, n] = build_reinsch_generators(2);
	const ToeplitzRep product = mat_mul(mat_apply_series(exp_series(), m),
	                                    mat_apply_series(exp_series(), n));
	CHECK(dump(product) ==
	      "+ 1 1 | + 1 x  + 1 y | + 1/2 xx  + 1 xy  + 1/2 yy\n"
	      "0 | + 1 1 | + 1 x  + 1 y\n"
	      "0 | 0 | + 1 1\n");
}

TEST_CASE("cross-method equality through order 8")
{
	for (int n = 1; n <= 8; ++n)
	{
		const BchResult direct = bch_direct(n);
		const BchResult matrix = bch_matrix(n);
		CAPTURE(n);
		CHECK(direct.terms_equal(matrix));
	}
}

TEST_CASE("dense-backend pipeline matches the compact one")
{
	for (int n = 1; n <= 5; ++n)
	{
		MulCounter unused;
		CHECK(bch_matrix_pipeline<DenseToeplitzRep>(n, &unused) ==
		      bch_matrix_pipeline<ToeplitzRep>(n, nullptr));
	}
}

TEST_CASE("abelianization check accepts both pipelines and spots corruption")
{
	for (int n = 1; n <= 8; ++n)
	{
		CHECK(abelianization_check(bch_direct(n)));
		CHECK(abelianization_check(bch_matrix(n)));
	}

	BchResult corrupted = bch_direct(2);
	// 1/2 xy - 1/2 yx becomes 1/2 xy + 1/2 yx, which sums to 1, not 0
	corrupted.terms[1] = HomogeneousComponent(2);
	corrupted.terms[1].add_term(w({0, 1}), Rational(1, 2));
	corrupted.terms[1].add_term(w({1, 0}), Rational(1, 2));
	CHECK(!abelianization_check(corrupted));
}

TEST_CASE("alternating-degree symmetry: swap x and y, flip odd signs")
{
	const int n = 8;
	const BchResult r = bch_direct(n);
	for (int d = 1; d <= n; ++d)
	{
		HomogeneousComponent swapped(d);
		for (const auto &[word, coeff] : r.term(d).terms())
		{
			std::vector<std::uint8_t> letters;
			for (auto letter : word.letters())
				letters.push_back(letter == 0 ? 1 : 0);
			const Rational sign = d % 2 == 1 ? Rational(1) : Rational(-1);
			swapped.add_term(Word(std::move(letters)), sign * coeff);
		}
		CAPTURE(d);
		CHECK(swapped == r.term(d));
	}
}

TEST_CASE("order zero is a usage error")
{
	CHECK_THROWS_AS(bch_direct(0), std::invalid_argument);
	CHECK_THROWS_AS(bch_matrix(0), std::invalid_argument);
	CHECK_THROWS_AS(build_reinsch_generators(0), std::invalid_argument);
	CHECK_THROWS_AS(bch_direct(-3), std::invalid_argument);
}
