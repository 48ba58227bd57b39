#include "bchkit/polynomial.hpp"

#include <random>
#include <stdexcept>

namespace bchkit {

Polynomial::Polynomial(int trunc_order) : trunc_order_(trunc_order)
{
	if (trunc_order < 0)
		throw std::invalid_argument("Polynomial: negative truncation order");
}

Polynomial Polynomial::one(int trunc_order)
{
	return constant(Rational(1), trunc_order);
}

Polynomial Polynomial::constant(const Rational &c, int trunc_order)
{
	Polynomial p(trunc_order);
	p.add_term(Word(), c);
	return p;
}

Polynomial Polynomial::generator(int id, int trunc_order)
{
	if (id < 0 || id > kMaxAlphabet)
		throw std::invalid_argument("Polynomial::generator: id out of range");
	Polynomial p(trunc_order);
	if (trunc_order >= 1)
		p.add_term(Word::single(static_cast<std::uint8_t>(id)), Rational(1));
	return p;
}

Rational Polynomial::coeff(const Word &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Word &w, const Rational &c, MulCounter *meter)
{
	if (c.is_zero())
		return;
	if (w.degree() > trunc_order_)
		throw std::invalid_argument("Polynomial::add_term: word degree exceeds truncation order");
	auto [it, inserted] = terms_.emplace(w, c);
	if (!inserted)
	{
		if (meter)
			meter->record_add();
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

HomogeneousComponent::HomogeneousComponent(int degree) : degree_(degree)
{
	if (degree < 0)
		throw std::invalid_argument("HomogeneousComponent: negative degree");
}

Rational HomogeneousComponent::coeff(const Word &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Rational(0) : it->second;
}

void HomogeneousComponent::add_term(const Word &w, const Rational &c,
                                    MulCounter *meter)
{
	if (c.is_zero())
		return;
	if (w.degree() != degree_)
		throw std::invalid_argument("HomogeneousComponent::add_term: word degree mismatch");
	auto [it, inserted] = terms_.emplace(w, c);
	if (!inserted)
	{
		if (meter)
			meter->record_add();
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Rational HomogeneousComponent::coefficient_sum() const
{
	Rational s(0);
	for (const auto &[w, c] : terms_)
		s += c;
	return s;
}

HomogeneousComponent component(const Polynomial &a, int i)
{
	if (i < 0 || i > a.trunc_order())
		throw std::out_of_range("component: degree out of range");
	HomogeneousComponent hc(i);
	// deg-lex order keeps equal-degree terms contiguous, but a full scan is
	// simplest and the maps are small.
	for (const auto &[w, c] : a.terms())
	{
		if (w.degree() == i)
			hc.add_term(w, c);
		else if (w.degree() > i)
			break;
	}
	return hc;
}

Polynomial to_polynomial(const HomogeneousComponent &hc, int trunc_order)
{
	if (hc.degree() > trunc_order)
		throw std::invalid_argument("to_polynomial: component degree exceeds truncation order");
	Polynomial p(trunc_order);
	for (const auto &[w, c] : hc.terms())
		p.add_term(w, c);
	return p;
}

Polynomial poly_add(const Polynomial &a, const Polynomial &b, MulCounter *meter)
{
	if (a.trunc_order() != b.trunc_order())
		throw std::invalid_argument("poly_add: mismatched truncation orders");
	Polynomial out = a;
	for (const auto &[w, c] : b.terms())
		out.add_term(w, c, meter);
	return out;
}

Polynomial poly_sub(const Polynomial &a, const Polynomial &b)
{
	if (a.trunc_order() != b.trunc_order())
		throw std::invalid_argument("poly_sub: mismatched truncation orders");
	Polynomial out = a;
	for (const auto &[w, c] : b.terms())
		out.add_term(w, -c);
	return out;
}

Polynomial operator-(const Polynomial &a)
{
	Polynomial out(a.trunc_order());
	for (const auto &[w, c] : a.terms())
		out.add_term(w, -c);
	return out;
}

namespace {

Polynomial poly_mul_impl(const Polynomial &a, const Polynomial &b,
                         MulCounter *meter)
{
	if (a.trunc_order() != b.trunc_order())
		throw std::invalid_argument("poly_mul: mismatched truncation orders");
	const int n = a.trunc_order();
	Polynomial out(n);
	for (const auto &[u, ca] : a.terms())
	{
		const int budget = n - u.degree();
		for (const auto &[v, cb] : b.terms())
		{
			// terms are deg-lex sorted: once v is too long, all later ones are,
			// so over-truncation products are never formed
			if (v.degree() > budget)
				break;
			if (meter)
				meter->record_mul(u.degree() + v.degree());
			out.add_term(word_concat(u, v), ca * cb, meter);
		}
	}
	return out;
}

} // namespace

Polynomial poly_mul(const Polynomial &a, const Polynomial &b, MulCounter &meter)
{
	return poly_mul_impl(a, b, &meter);
}

Polynomial poly_mul(const Polynomial &a, const Polynomial &b)
{
	return poly_mul_impl(a, b, nullptr);
}

Polynomial scalar_mul(const Rational &q, const Polynomial &a)
{
	Polynomial out(a.trunc_order());
	if (q.is_zero())
		return out;
	for (const auto &[w, c] : a.terms())
		out.add_term(w, q * c);
	return out;
}

Polynomial scalar_mul(const Rational &q, const Polynomial &a, MulCounter &meter)
{
	Polynomial out(a.trunc_order());
	if (q.is_zero())
		return out;
	for (const auto &[w, c] : a.terms())
	{
		meter.record_scalar();
		out.add_term(w, q * c);
	}
	return out;
}

Polynomial truncate(const Polynomial &a, int m)
{
	Polynomial out(m);
	for (const auto &[w, c] : a.terms())
	{
		if (w.degree() > m)
			break;
		out.add_term(w, c);
	}
	return out;
}

HomogeneousComponent hc_add(const HomogeneousComponent &a,
                            const HomogeneousComponent &b, MulCounter *meter)
{
	if (a.degree() != b.degree())
		throw std::invalid_argument("hc_add: mismatched degrees");
	HomogeneousComponent out = a;
	for (const auto &[w, c] : b.terms())
		out.add_term(w, c, meter);
	return out;
}

HomogeneousComponent hc_mul(const HomogeneousComponent &a,
                            const HomogeneousComponent &b, MulCounter *meter)
{
	HomogeneousComponent out(a.degree() + b.degree());
	hc_mul_acc(out, a, b, meter);
	return out;
}

void hc_mul_acc(HomogeneousComponent &acc, const HomogeneousComponent &a,
                const HomogeneousComponent &b, MulCounter *meter)
{
	if (acc.degree() != a.degree() + b.degree())
		throw std::invalid_argument("hc_mul_acc: degree mismatch");
	for (const auto &[u, ca] : a.terms())
		for (const auto &[v, cb] : b.terms())
		{
			if (meter)
				meter->record_mul(acc.degree());
			acc.add_term(word_concat(u, v), ca * cb, meter);
		}
}

HomogeneousComponent hc_scale(const Rational &q, const HomogeneousComponent &a,
                              MulCounter *meter)
{
	HomogeneousComponent out(a.degree());
	if (q.is_zero())
		return out;
	for (const auto &[w, c] : a.terms())
	{
		if (meter)
			meter->record_scalar();
		out.add_term(w, q * c);
	}
	return out;
}

HomogeneousComponent hc_negate(const HomogeneousComponent &a)
{
	HomogeneousComponent out(a.degree());
	for (const auto &[w, c] : a.terms())
		out.add_term(w, -c);
	return out;
}

Polynomial random_polynomial(std::uint64_t seed, int trunc_order, int alphabet,
                             double density)
{
	if (alphabet < 1 || alphabet > kMaxAlphabet)
		throw std::invalid_argument("random_polynomial: alphabet size out of range");
	if (trunc_order < 0)
		throw std::invalid_argument("random_polynomial: negative truncation order");
	if (!(density > 0.0) || density > 1.0)
		throw std::invalid_argument("random_polynomial: density must be in (0, 1]");

	// Fixed draw sequence for reproducibility: per candidate word (deg-lex
	// order) one 53-bit uniform for inclusion, then numerator magnitude, sign,
	// denominator. mt19937_64 output is standardized, so this is stable.
	std::mt19937_64 rng(seed);
	Polynomial out(trunc_order);
	std::vector<std::uint8_t> odometer;
	for (int deg = 0; deg <= trunc_order; ++deg)
	{
		odometer.assign(static_cast<std::size_t>(deg), 0);
		while (true)
		{
			const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
			if (u < density)
			{
				const long mag = 1 + static_cast<long>(rng() % 9);
				const bool negative = (rng() % 2) != 0;
				const long den = 1 + static_cast<long>(rng() % 9);
				out.add_term(Word(odometer), Rational(negative ? -mag : mag, den));
			}
			// next word of this degree (base-`alphabet` odometer, most
			// significant letter first so words come out in lex order)
			int pos = deg - 1;
			while (pos >= 0)
			{
				if (++odometer[static_cast<std::size_t>(pos)] < alphabet)
					break;
				odometer[static_cast<std::size_t>(pos)] = 0;
				--pos;
			}
			if (pos < 0)
				break;
		}
	}
	return out;
}

std::string to_plain_term(const Rational &c, const Word &w)
{
	std::string s = c.sign() < 0 ? "- " : "+ ";
	s += c.abs().str();
	s += ' ';
	s += w.empty() ? "1" : w.str();
	return s;
}

namespace {

std::string to_plain_terms(const TermMap &terms)
{
	if (terms.empty())
		return "0";
	std::string s;
	for (const auto &[w, c] : terms)
	{
		if (!s.empty())
			s += "  ";
		s += to_plain_term(c, w);
	}
	return s;
}

} // namespace

std::string to_plain(const Polynomial &a) { return to_plain_terms(a.terms()); }

std::string to_plain(const HomogeneousComponent &hc)
{
	return to_plain_terms(hc.terms());
}

} // namespace bchkit
