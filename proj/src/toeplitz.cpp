#include "bchkit/toeplitz.hpp"

namespace bchkit {

// --- compact backend ---------------------------------------------------------

ToeplitzRep::ToeplitzRep(int order) : order_(order)
{
	if (order < 0)
		throw std::invalid_argument("ToeplitzRep: negative order");
	diag_.reserve(static_cast<std::size_t>(order) + 1);
	for (int d = 0; d <= order; ++d)
		diag_.emplace_back(d);
}

ToeplitzRep ToeplitzRep::identity(int order)
{
	ToeplitzRep m(order);
	m.diag_[0].add_term(Word(), Rational(1));
	return m;
}

ToeplitzRep ToeplitzRep::embed(const Polynomial &a)
{
	ToeplitzRep m(a.trunc_order());
	for (const auto &[w, c] : a.terms())
		m.diag_[static_cast<std::size_t>(w.degree())].add_term(w, c);
	return m;
}

const HomogeneousComponent &ToeplitzRep::diagonal(int offset) const
{
	if (offset < 0 || offset > order_)
		throw std::out_of_range("ToeplitzRep::diagonal: offset out of range");
	return diag_[static_cast<std::size_t>(offset)];
}

HomogeneousComponent &ToeplitzRep::diagonal(int offset)
{
	if (offset < 0 || offset > order_)
		throw std::out_of_range("ToeplitzRep::diagonal: offset out of range");
	return diag_[static_cast<std::size_t>(offset)];
}

const HomogeneousComponent &ToeplitzRep::entry(int i, int j) const
{
	if (i < 1 || i > size() || j < 1 || j > size())
		throw std::out_of_range("ToeplitzRep::entry: index out of range");
	if (j < i)
	{
		static const HomogeneousComponent zero(0); // structural zero
		return zero;
	}
	return diag_[static_cast<std::size_t>(j - i)];
}

void validate(const ToeplitzRep &a)
{
	// compact storage is valid by construction; verify the bookkeeping anyway
	for (int d = 0; d <= a.order(); ++d)
		if (a.diagonal(d).degree() != d)
			throw StructureError("ToeplitzRep: diagonal " + std::to_string(d) +
			                     " holds the wrong degree");
}

ToeplitzRep mat_add(const ToeplitzRep &a, const ToeplitzRep &b, MulCounter *meter)
{
	if (a.order() != b.order())
		throw std::invalid_argument("mat_add: size mismatch");
	ToeplitzRep out = a;
	for (int d = 0; d <= a.order(); ++d)
		for (const auto &[w, c] : b.diagonal(d).terms())
			out.diagonal(d).add_term(w, c, meter);
	return out;
}

ToeplitzRep mat_sub(const ToeplitzRep &a, const ToeplitzRep &b)
{
	if (a.order() != b.order())
		throw std::invalid_argument("mat_sub: size mismatch");
	ToeplitzRep out = a;
	for (int d = 0; d <= a.order(); ++d)
		for (const auto &[w, c] : b.diagonal(d).terms())
			out.diagonal(d).add_term(w, -c);
	return out;
}

ToeplitzRep mat_scale(const Rational &q, const ToeplitzRep &a, MulCounter *meter)
{
	ToeplitzRep out(a.order());
	for (int d = 0; d <= a.order(); ++d)
		out.diagonal(d) = hc_scale(q, a.diagonal(d), meter);
	return out;
}

namespace {

ToeplitzRep mat_mul_impl(const ToeplitzRep &a, const ToeplitzRep &b,
                         MulCounter *meter)
{
	if (a.order() != b.order())
		throw std::invalid_argument("mat_mul: size mismatch");
	const int n = a.order();
	ToeplitzRep out(n);
	// one convolution per diagonal; entry order preserved (A entry times B entry)
	for (int d = 0; d <= n; ++d)
		for (int j = 0; j <= d; ++j)
			hc_mul_acc(out.diagonal(d), a.diagonal(j), b.diagonal(d - j), meter);
	return out;
}

} // namespace

ToeplitzRep mat_mul(const ToeplitzRep &a, const ToeplitzRep &b, MulCounter &meter)
{
	return mat_mul_impl(a, b, &meter);
}

ToeplitzRep mat_mul(const ToeplitzRep &a, const ToeplitzRep &b)
{
	return mat_mul_impl(a, b, nullptr);
}

// --- dense backend -----------------------------------------------------------

std::size_t DenseToeplitzRep::index(int i, int j) const
{
	if (i < 1 || i > size() || j < 1 || j > size())
		throw std::out_of_range("DenseToeplitzRep: index out of range");
	return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(size()) +
	       static_cast<std::size_t>(j - 1);
}

DenseToeplitzRep::DenseToeplitzRep(int order) : order_(order)
{
	if (order < 0)
		throw std::invalid_argument("DenseToeplitzRep: negative order");
	const int m = order + 1;
	cells_.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
	for (int i = 1; i <= m; ++i)
		for (int j = 1; j <= m; ++j)
			cells_.emplace_back(j >= i ? j - i : 0);
}

DenseToeplitzRep DenseToeplitzRep::identity(int order)
{
	DenseToeplitzRep m(order);
	for (int i = 1; i <= m.size(); ++i)
		m.entry_mut(i, i).add_term(Word(), Rational(1));
	return m;
}

DenseToeplitzRep DenseToeplitzRep::embed(const Polynomial &a)
{
	DenseToeplitzRep m(a.trunc_order());
	// every cell is populated; the Toeplitz redundancy is the point of this
	// backend
	for (const auto &[w, c] : a.terms())
	{
		const int d = w.degree();
		for (int i = 1; i + d <= m.size(); ++i)
			m.entry_mut(i, i + d).add_term(w, c);
	}
	return m;
}

const HomogeneousComponent &DenseToeplitzRep::entry(int i, int j) const
{
	return cells_[index(i, j)];
}

HomogeneousComponent &DenseToeplitzRep::entry_mut(int i, int j)
{
	return cells_[index(i, j)];
}

void validate(const DenseToeplitzRep &a)
{
	for (int i = 1; i <= a.size(); ++i)
		for (int j = 1; j <= a.size(); ++j)
		{
			const auto &e = a.entry(i, j);
			if (j < i)
			{
				if (!e.is_zero())
					throw StructureError("DenseToeplitzRep: nonzero entry below the diagonal at (" +
					                     std::to_string(i) + ", " + std::to_string(j) + ")");
				continue;
			}
			if (!e.is_zero() && e.degree() != j - i)
				throw StructureError("DenseToeplitzRep: entry (" + std::to_string(i) + ", " +
				                     std::to_string(j) + ") is not homogeneous of degree j - i");
			if (i + 1 <= a.size() && j + 1 <= a.size() &&
			    !(e == a.entry(i + 1, j + 1)))
				throw StructureError("DenseToeplitzRep: Toeplitz constancy violated at (" +
				                     std::to_string(i) + ", " + std::to_string(j) + ")");
		}
}

DenseToeplitzRep mat_add(const DenseToeplitzRep &a, const DenseToeplitzRep &b,
                         MulCounter *meter)
{
	if (a.order() != b.order())
		throw std::invalid_argument("mat_add: size mismatch");
	DenseToeplitzRep out = a;
	for (int i = 1; i <= a.size(); ++i)
		for (int j = 1; j <= a.size(); ++j)
			for (const auto &[w, c] : b.entry(i, j).terms())
				out.entry_mut(i, j).add_term(w, c, meter);
	return out;
}

DenseToeplitzRep mat_sub(const DenseToeplitzRep &a, const DenseToeplitzRep &b)
{
	if (a.order() != b.order())
		throw std::invalid_argument("mat_sub: size mismatch");
	DenseToeplitzRep out = a;
	for (int i = 1; i <= a.size(); ++i)
		for (int j = 1; j <= a.size(); ++j)
			for (const auto &[w, c] : b.entry(i, j).terms())
				out.entry_mut(i, j).add_term(w, -c);
	return out;
}

DenseToeplitzRep mat_scale(const Rational &q, const DenseToeplitzRep &a,
                           MulCounter *meter)
{
	DenseToeplitzRep out(a.order());
	for (int i = 1; i <= a.size(); ++i)
		for (int j = 1; j <= a.size(); ++j)
			out.entry_mut(i, j) = hc_scale(q, a.entry(i, j), meter);
	return out;
}

namespace {

DenseToeplitzRep mat_mul_impl(const DenseToeplitzRep &a,
                              const DenseToeplitzRep &b, MulCounter *meter)
{
	if (a.order() != b.order())
		throw std::invalid_argument("mat_mul: size mismatch");
	const int m = a.size();
	DenseToeplitzRep out(a.order());
	// textbook triple loop over the full grid, zero cells visited like any
	// other; they hold no terms, so they form no products
	for (int i = 1; i <= m; ++i)
		for (int j = 1; j <= m; ++j)
		{
			auto &cell = out.entry_mut(i, j);
			for (int k = 1; k <= m; ++k)
				for (const auto &[u, cu] : a.entry(i, k).terms())
					for (const auto &[v, cv] : b.entry(k, j).terms())
					{
						if (meter)
							meter->record_mul(u.degree() + v.degree());
						cell.add_term(word_concat(u, v), cu * cv, meter);
					}
		}
	return out;
}

} // namespace

DenseToeplitzRep mat_mul(const DenseToeplitzRep &a, const DenseToeplitzRep &b,
                         MulCounter &meter)
{
	return mat_mul_impl(a, b, &meter);
}

DenseToeplitzRep mat_mul(const DenseToeplitzRep &a, const DenseToeplitzRep &b)
{
	return mat_mul_impl(a, b, nullptr);
}

} // namespace bchkit
