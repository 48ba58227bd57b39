#include "bchkit/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace bchkit {

Rational::Rational(long num, long den)
{
	if (den == 0)
		throw std::invalid_argument("Rational: zero denominator");
	value_ = mpq_class(num, den);
	value_.canonicalize();
}

Rational Rational::from_string(const std::string &text)
{
	mpq_class v;
	if (v.set_str(text, 10) != 0)
		throw std::invalid_argument("Rational: cannot parse '" + text + "'");
	if (v.get_den() == 0)
		throw std::invalid_argument("Rational: zero denominator in '" + text +
		                            "'");
	v.canonicalize();
	return Rational(std::move(v));
}

Rational Rational::factorial_inverse(unsigned long k)
{
	mpz_class f;
	mpz_fac_ui(f.get_mpz_t(), k);
	mpq_class v(1);
	v /= mpq_class(f);
	return Rational(std::move(v));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::str_slash() const
{
	return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator+=(const Rational &o)
{
	value_ += o.value_;
	return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
	value_ -= o.value_;
	return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
	value_ *= o.value_;
	return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw std::domain_error("Rational: division by zero");
	value_ /= o.value_;
	return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream &operator<<(std::ostream &os, const Rational &q)
{
	return os << q.str();
}

} // namespace bchkit
