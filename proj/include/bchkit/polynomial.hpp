#ifndef BCHKIT_POLYNOMIAL_HPP
#define BCHKIT_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>

#include "bchkit/mul_counter.hpp"
#include "bchkit/rational.hpp"
#include "bchkit/word.hpp"

namespace bchkit {

using TermMap = std::map<Word, Rational, DegLexLess>;

class HomogeneousComponent;

/// A polynomial of noncommuting variables, truncated at a fixed total degree:
/// a sparse map word -> rational coefficient. Invariants: no stored
/// coefficient is zero, and every stored word has degree <= trunc_order().
/// Arithmetic never mutates its operands (add_term is the builder hook);
/// term iteration is in deg-lex order (degree first, then lexicographic by
/// generator id), which is also the canonical output order.
class Polynomial {
  public:
	explicit Polynomial(int trunc_order);

	static Polynomial zero(int trunc_order) { return Polynomial(trunc_order); }
	static Polynomial one(int trunc_order);
	static Polynomial constant(const Rational &c, int trunc_order);
	/// The generator polynomial x_id at truncation n. At n = 0 the degree-1
	/// word is truncated away and the result is the zero polynomial.
	static Polynomial generator(int id, int trunc_order);

	int trunc_order() const { return trunc_order_; }
	const TermMap &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t term_count() const { return terms_.size(); }

	/// Coefficient of `w`, zero if absent.
	Rational coeff(const Word &w) const;
	Rational constant_term() const { return coeff(Word()); }

	/// Adds `c` to the coefficient of `w`, pruning a zero result. Throws
	/// std::invalid_argument if degree(w) > trunc_order. Counts a coefficient
	/// addition on `meter` when both summands were nonzero.
	void add_term(const Word &w, const Rational &c, MulCounter *meter = nullptr);

	/// Equality compares the coefficient maps only (truncation orders may
	/// differ; zero pruning makes the maps canonical).
	friend bool operator==(const Polynomial &a, const Polynomial &b)
	{
		return a.terms_ == b.terms_;
	}
	friend bool operator!=(const Polynomial &a, const Polynomial &b)
	{
		return !(a == b);
	}

  private:
	int trunc_order_;
	TermMap terms_;
};

/// All degree-i terms of a polynomial: the i-th graded piece. Every stored
/// word has degree exactly degree(); zero coefficients are never stored.
class HomogeneousComponent {
  public:
	explicit HomogeneousComponent(int degree);

	int degree() const { return degree_; }
	const TermMap &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	Rational coeff(const Word &w) const;
	/// Adds `c` to the coefficient of `w`; degree(w) must equal degree().
	void add_term(const Word &w, const Rational &c, MulCounter *meter = nullptr);

	/// Sum of all stored coefficients (the image under the substitution that
	/// sends every generator to one commuting variable).
	Rational coefficient_sum() const;

	/// Equality compares coefficient maps only, so a zero component of one
	/// degree equals a zero component of another.
	friend bool operator==(const HomogeneousComponent &a,
	                       const HomogeneousComponent &b)
	{
		return a.terms_ == b.terms_;
	}
	friend bool operator!=(const HomogeneousComponent &a,
	                       const HomogeneousComponent &b)
	{
		return !(a == b);
	}

  private:
	int degree_;
	TermMap terms_;
};

// --- grading ---------------------------------------------------------------

/// The degree-i terms of `a`. Throws std::out_of_range unless
/// 0 <= i <= a.trunc_order().
HomogeneousComponent component(const Polynomial &a, int i);

/// `hc` as a polynomial at truncation n (n >= hc.degree() required).
Polynomial to_polynomial(const HomogeneousComponent &hc, int trunc_order);

// --- arithmetic ------------------------------------------------------------

/// Coefficient-wise sum. Throws std::invalid_argument on mismatched
/// truncation orders.
Polynomial poly_add(const Polynomial &a, const Polynomial &b,
                    MulCounter *meter = nullptr);
Polynomial poly_sub(const Polynomial &a, const Polynomial &b);

/// Truncated product: component i of the result is the Cauchy convolution
/// sum_{j<=i} a_j b_{i-j}. Term pairs whose degrees sum past the truncation
/// order are never formed; the meter counts one monomial multiplication per
/// pair actually formed, bucketed by product degree.
Polynomial poly_mul(const Polynomial &a, const Polynomial &b,
                    MulCounter &meter);
Polynomial poly_mul(const Polynomial &a, const Polynomial &b);

/// Every coefficient multiplied by q (empty result when q = 0).
Polynomial scalar_mul(const Rational &q, const Polynomial &a);
/// As above, counting one scalar multiplication per stored term on `meter`.
Polynomial scalar_mul(const Rational &q, const Polynomial &a,
                      MulCounter &meter);

/// Keeps words of degree <= m and sets the truncation order to m.
Polynomial truncate(const Polynomial &a, int m);

inline Polynomial operator+(const Polynomial &a, const Polynomial &b)
{
	return poly_add(a, b);
}
inline Polynomial operator-(const Polynomial &a, const Polynomial &b)
{
	return poly_sub(a, b);
}
Polynomial operator-(const Polynomial &a);
inline Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
	return poly_mul(a, b);
}
inline Polynomial operator*(const Rational &q, const Polynomial &a)
{
	return scalar_mul(q, a);
}

// --- homogeneous arithmetic (Toeplitz entry algebra) ------------------------

/// Sum of two components of equal degree.
HomogeneousComponent hc_add(const HomogeneousComponent &a,
                            const HomogeneousComponent &b,
                            MulCounter *meter = nullptr);
/// Product; degrees add. Counts one monomial multiplication per term pair.
HomogeneousComponent hc_mul(const HomogeneousComponent &a,
                            const HomogeneousComponent &b,
                            MulCounter *meter = nullptr);
/// Accumulating product a*b into `acc` (degree acc = degree a + degree b).
void hc_mul_acc(HomogeneousComponent &acc, const HomogeneousComponent &a,
                const HomogeneousComponent &b, MulCounter *meter = nullptr);
HomogeneousComponent hc_scale(const Rational &q, const HomogeneousComponent &a,
                              MulCounter *meter = nullptr);
HomogeneousComponent hc_negate(const HomogeneousComponent &a);

// --- randomized inputs -------------------------------------------------------

/// Deterministic random polynomial: every word of degree <= trunc_order over
/// the first `alphabet` generators is included with probability `density`,
/// with numerator uniform in [-9,9]\{0} and denominator uniform in [1,9].
/// Same (seed, trunc_order, alphabet, density) gives the same polynomial on
/// every run of one build (fixed mt19937_64 draw sequence, documented in the
/// implementation). Throws std::invalid_argument on alphabet < 1,
/// alphabet > kMaxAlphabet, trunc_order < 0, or density outside (0, 1].
Polynomial random_polynomial(std::uint64_t seed, int trunc_order, int alphabet,
                             double density);

// --- plain-text term format --------------------------------------------------

// `<sign> <p>/<q> <word>` per term, terms joined by two spaces in deg-lex
// order; denominator-1 coefficients render bare ("+ 1 x"), the empty word
// renders as "1", the zero polynomial as "0". This is the golden-file format.
std::string to_plain(const Polynomial &a);
std::string to_plain(const HomogeneousComponent &hc);
std::string to_plain_term(const Rational &c, const Word &w);

} // namespace bchkit

#endif
