#ifndef BCHKIT_RATIONAL_HPP
#define BCHKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace bchkit {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; arithmetic never rounds. Numerator and denominator are
/// arbitrary-precision integers (GMP), so deep series denominators stay exact.
class Rational {
  public:
	Rational() : value_(0) {}
	Rational(long n) : value_(n) {} // NOLINT: implicit by design, `2 * p` reads naturally
	Rational(long num, long den);

	/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
	/// on malformed input or a zero denominator.
	static Rational from_string(const std::string &text);

	/// 1/k!, exact.
	static Rational factorial_inverse(unsigned long k);

	bool is_zero() const { return sgn(value_) == 0; }
	int sign() const { return sgn(value_); }
	Rational abs() const;

	/// "p" when the denominator is 1, otherwise "p/q".
	std::string str() const { return value_.get_str(); }
	/// Always "p/q", including "p/1".
	std::string str_slash() const;

	Rational &operator+=(const Rational &o);
	Rational &operator-=(const Rational &o);
	Rational &operator*=(const Rational &o);
	Rational &operator/=(const Rational &o); // throws std::domain_error on /0
	Rational operator-() const;

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	friend bool operator==(const Rational &a, const Rational &b)
	{
		return a.value_ == b.value_;
	}
	friend bool operator!=(const Rational &a, const Rational &b)
	{
		return !(a == b);
	}

	friend std::ostream &operator<<(std::ostream &os, const Rational &q);

  private:
	explicit Rational(mpq_class v) : value_(std::move(v)) {}
	mpq_class value_; // canonical: lowest terms, positive denominator
};

} // namespace bchkit

#endif
