#ifndef BCHKIT_TOEPLITZ_HPP
#define BCHKIT_TOEPLITZ_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "bchkit/polynomial.hpp"
#include "bchkit/series.hpp"

namespace bchkit {

/// A matrix's Toeplitz/upper-triangular structure was violated.
struct StructureError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// The (n+1) x (n+1) upper-triangular Toeplitz representation of a polynomial
/// truncated at order n: entry (i, j) is the homogeneous degree-(j-i) part,
/// constant along each diagonal. Matrix coordinates are 1-based throughout.
///
/// Storage is one homogeneous polynomial per diagonal offset, so the
/// upper-triangular and Toeplitz-constancy invariants hold by construction;
/// the full grid is a view. DenseToeplitzRep below is the literal-grid
/// backend kept for differential tests.
class ToeplitzRep {
  public:
	explicit ToeplitzRep(int order); // zero matrix
	static ToeplitzRep identity(int order);
	/// Embedding of a polynomial: offset-k diagonal = degree-k component.
	static ToeplitzRep embed(const Polynomial &a);

	int order() const { return order_; }
	int size() const { return order_ + 1; }

	const HomogeneousComponent &diagonal(int offset) const;
	HomogeneousComponent &diagonal(int offset);

	/// Entry at 1-based (i, j); the structural zero below the diagonal.
	const HomogeneousComponent &entry(int i, int j) const;

	friend bool operator==(const ToeplitzRep &a, const ToeplitzRep &b)
	{
		return a.order_ == b.order_ && a.diag_ == b.diag_;
	}
	friend bool operator!=(const ToeplitzRep &a, const ToeplitzRep &b)
	{
		return !(a == b);
	}

  private:
	int order_;
	std::vector<HomogeneousComponent> diag_;
};

/// Naive dense backend: the full (n+1)^2 grid stored cell by cell and
/// multiplied by the textbook triple loop, Toeplitz redundancy included.
class DenseToeplitzRep {
  public:
	explicit DenseToeplitzRep(int order);
	static DenseToeplitzRep identity(int order);
	static DenseToeplitzRep embed(const Polynomial &a);

	int order() const { return order_; }
	int size() const { return order_ + 1; }

	const HomogeneousComponent &entry(int i, int j) const;
	/// Mutable cell access; breaks invariants on purpose (corruption tests).
	HomogeneousComponent &entry_mut(int i, int j);

	friend bool operator==(const DenseToeplitzRep &a, const DenseToeplitzRep &b)
	{
		return a.order_ == b.order_ && a.cells_ == b.cells_;
	}
	friend bool operator!=(const DenseToeplitzRep &a, const DenseToeplitzRep &b)
	{
		return !(a == b);
	}

  private:
	std::size_t index(int i, int j) const;
	int order_;
	std::vector<HomogeneousComponent> cells_;
};

// --- embedding / extraction --------------------------------------------------

inline ToeplitzRep to_toeplitz(const Polynomial &a)
{
	return ToeplitzRep::embed(a);
}
inline DenseToeplitzRep to_dense_toeplitz(const Polynomial &a)
{
	return DenseToeplitzRep::embed(a);
}

/// Checks all structural invariants (upper-triangular, entries homogeneous of
/// degree j - i, Toeplitz constancy); throws StructureError on violation.
void validate(const ToeplitzRep &a);
void validate(const DenseToeplitzRep &a);

/// The polynomial read off the first row: component i = entry (1, i+1).
/// Validates the invariants first; exact inverse of the embedding.
template <class Rep> Polynomial from_first_row(const Rep &a)
{
	validate(a);
	Polynomial p(a.order());
	for (int d = 0; d <= a.order(); ++d)
		for (const auto &[w, c] : a.entry(1, d + 1).terms())
			p.add_term(w, c);
	return p;
}

// --- matrix arithmetic -------------------------------------------------------

ToeplitzRep mat_add(const ToeplitzRep &a, const ToeplitzRep &b,
                    MulCounter *meter = nullptr);
ToeplitzRep mat_sub(const ToeplitzRep &a, const ToeplitzRep &b);
ToeplitzRep mat_scale(const Rational &q, const ToeplitzRep &a,
                      MulCounter *meter = nullptr);
ToeplitzRep mat_mul(const ToeplitzRep &a, const ToeplitzRep &b,
                    MulCounter &meter);
ToeplitzRep mat_mul(const ToeplitzRep &a, const ToeplitzRep &b);

DenseToeplitzRep mat_add(const DenseToeplitzRep &a, const DenseToeplitzRep &b,
                         MulCounter *meter = nullptr);
DenseToeplitzRep mat_sub(const DenseToeplitzRep &a, const DenseToeplitzRep &b);
DenseToeplitzRep mat_scale(const Rational &q, const DenseToeplitzRep &a,
                           MulCounter *meter = nullptr);
DenseToeplitzRep mat_mul(const DenseToeplitzRep &a, const DenseToeplitzRep &b,
                         MulCounter &meter);
DenseToeplitzRep mat_mul(const DenseToeplitzRep &a, const DenseToeplitzRep &b);

namespace detail {

template <class Rep>
void check_series_domain(const SeriesFunction &f, const Rep &a)
{
	for (int i = 1; i <= a.size(); ++i)
	{
		const auto &diag = a.entry(i, i);
		switch (f.domain_constraint)
		{
		case DomainConstraint::constant_term_zero:
			if (!diag.is_zero())
				throw std::domain_error("mat_apply_series: '" + f.name +
				                        "' requires a zero diagonal");
			break;
		case DomainConstraint::constant_term_one:
			if (diag.coeff(Word()) != Rational(1) || diag.terms().size() != 1)
				throw std::domain_error("mat_apply_series: '" + f.name +
				                        "' requires a unit diagonal");
			break;
		case DomainConstraint::none:
			break;
		}
	}
}

} // namespace detail

/// sum_{k=0..n} f_k U^k with U = A (zero-diagonal functions) or U = A - I
/// (unit-diagonal functions), evaluated with the same left-fold power scheme
/// as apply_series so multiplication meters compare like for like. A strictly
/// upper-triangular U satisfies U^(n+1) = 0, so the bound is exact. The first
/// row of the result equals apply_series(f, from_first_row(A)).
template <class Rep>
Rep mat_apply_series(const SeriesFunction &f, const Rep &a, MulCounter *meter = nullptr)
{
	detail::check_series_domain(f, a);
	const int n = a.order();
	const Rep u = f.domain_constraint == DomainConstraint::constant_term_one
	                  ? mat_sub(a, Rep::identity(n))
	                  : a;
	Rep acc = mat_scale(f.coeff(0), Rep::identity(n), meter);
	Rep power = u;
	for (int k = 1; k <= n; ++k)
	{
		if (k > 1)
			power = meter ? mat_mul(power, u, *meter) : mat_mul(power, u);
		acc = mat_add(acc, mat_scale(f.coeff(k), power, meter), meter);
	}
	return acc;
}

template <class Rep>
Rep mat_apply_series(const SeriesFunction &f, const Rep &a, MulCounter &meter)
{
	return mat_apply_series(f, a, &meter);
}

/// True when the two representations present identical (n+1) x (n+1) grids.
template <class RepA, class RepB>
bool same_entries(const RepA &a, const RepB &b)
{
	if (a.order() != b.order())
		return false;
	for (int i = 1; i <= a.size(); ++i)
		for (int j = 1; j <= a.size(); ++j)
			if (!(a.entry(i, j) == b.entry(i, j)))
				return false;
	return true;
}

/// Debug dump: row-major, one row per line, entries in the plain-text term
/// format separated by " | ", "0" for zero entries.
template <class Rep> std::string dump(const Rep &a)
{
	std::string out;
	for (int i = 1; i <= a.size(); ++i)
	{
		for (int j = 1; j <= a.size(); ++j)
		{
			if (j > 1)
				out += " | ";
			out += to_plain(a.entry(i, j));
		}
		out += '\n';
	}
	return out;
}

} // namespace bchkit

#endif
