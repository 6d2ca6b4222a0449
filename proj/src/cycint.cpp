#include "cyclores/cycint.hpp"

#include <optional>

#include "cyclores/errors.hpp"

namespace cyclores {

namespace {

using Coeffs = std::vector<mpz_class>;

// length-p vector (index = power of zeta mod p) -> length p-1 canonical vector
Coeffs eliminate_top(Coeffs full)
{
	const mpz_class top = full.back();
	full.pop_back();
	if (top != 0)
	{
		for (mpz_class & c : full) c -= top;
	}
	return full;
}

Coeffs mul_coeffs(u64 p, const Coeffs & a, const Coeffs & b)
{
	const std::size_t n = std::size_t(p - 1);
	Coeffs full(std::size_t(p), 0);
	for (std::size_t i = 0; i < n; ++i)
	{
		if (a[i] == 0) continue;
		for (std::size_t j = 0; j < n; ++j)
		{
			if (b[j] == 0) continue;
			std::size_t idx = i + j;
			if (idx >= p) idx -= p;
			mpz_addmul(full[idx].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
		}
	}
	return eliminate_top(std::move(full));
}

// Solve a * u = 1 over Q on the power basis; returns u when it is integral.
std::optional<Coeffs> solve_inverse(u64 p, const Coeffs & a)
{
	const std::size_t n = std::size_t(p - 1);
	// column j of the multiplication matrix is a * zeta^j
	std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1, 0));
	Coeffs zj(n, 0);
	for (std::size_t j = 0; j < n; ++j)
	{
		std::fill(zj.begin(), zj.end(), 0);
		zj[j] = 1;
		const Coeffs col = mul_coeffs(p, a, zj);
		for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
	}
	m[0][n] = 1;

	for (std::size_t c = 0; c < n; ++c)
	{
		std::size_t piv = c;
		while (piv < n && m[piv][c] == 0) ++piv;
		if (piv == n) return std::nullopt;	// singular: a == 0
		std::swap(m[piv], m[c]);
		const mpq_class inv = 1 / m[c][c];
		for (std::size_t k = c; k <= n; ++k)
		{
			if (m[c][k] != 0) m[c][k] *= inv;
		}
		for (std::size_t r = 0; r < n; ++r)
		{
			if (r == c || m[r][c] == 0) continue;
			const mpq_class f = m[r][c];
			for (std::size_t k = c; k <= n; ++k)
			{
				if (m[c][k] != 0) m[r][k] -= f * m[c][k];
			}
		}
	}

	Coeffs u(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		if (m[i][n].get_den() != 1) return std::nullopt;
		u[i] = m[i][n].get_num();
	}
	return u;
}

}

FieldCtx::FieldCtx(u64 p) : _p(p)
{
	if (p <= 3 || !is_prime_u64(p)) throw UsageError("p must be a prime > 3, got " + std::to_string(p));
	_inv2 = (p + 1) / 2;
	_inv4 = mul_mod(_inv2, _inv2, p);

	Coeffs one_plus_zeta(dim(), 0);
	one_plus_zeta[0] = 1;
	one_plus_zeta[1] = 1;
	auto inv = solve_inverse(p, one_plus_zeta);
	if (!inv) throw InternalError("1 + zeta has no integral inverse");
	_inv_one_plus_zeta = std::move(*inv);
}

FieldCtxPtr FieldCtx::make(u64 p)
{
	return std::make_shared<const FieldCtx>(p);
}

CycInt::CycInt(FieldCtxPtr ctx) : _ctx(std::move(ctx)), _c(_ctx->dim(), 0) {}

CycInt CycInt::reduce(FieldCtxPtr ctx, std::vector<mpz_class> full)
{
	return CycInt(std::move(ctx), eliminate_top(std::move(full)));
}

CycInt CycInt::from_terms(FieldCtxPtr ctx, std::span<const Term> raw)
{
	const u64 p = ctx->p();
	std::vector<mpz_class> full(std::size_t(p), 0);
	for (const Term & t : raw) full[reduce_mod(t.exponent, p)] += t.coeff;
	return reduce(std::move(ctx), std::move(full));
}

CycInt CycInt::from_coeffs(FieldCtxPtr ctx, std::vector<mpz_class> coeffs)
{
	if (coeffs.size() != ctx->dim())
	{
		throw UsageError("coefficient vector must have length p - 1 = " + std::to_string(ctx->dim()));
	}
	return CycInt(std::move(ctx), std::move(coeffs));
}

CycInt CycInt::integer(FieldCtxPtr ctx, const mpz_class & n)
{
	CycInt r(std::move(ctx));
	r._c[0] = n;
	return r;
}

CycInt CycInt::zeta_power(FieldCtxPtr ctx, std::int64_t e)
{
	const Term t{e, 1};
	return from_terms(std::move(ctx), std::span<const Term>(&t, 1));
}

CycInt CycInt::binomial(FieldCtxPtr ctx, const mpz_class & x, std::int64_t k, const mpz_class & y)
{
	const Term t[2] = {{0, x}, {k, y}};
	return from_terms(std::move(ctx), t);
}

bool CycInt::is_zero() const
{
	for (const mpz_class & c : _c) if (c != 0) return false;
	return true;
}

bool CycInt::is_rational() const
{
	for (std::size_t i = 1; i < _c.size(); ++i) if (_c[i] != 0) return false;
	return true;
}

void CycInt::check_same(const CycInt & rhs) const
{
	if (_ctx != rhs._ctx && _ctx->p() != rhs._ctx->p()) throw ContextMismatch();
}

CycInt CycInt::operator-() const
{
	CycInt r = *this;
	for (mpz_class & c : r._c) c = -c;
	return r;
}

CycInt & CycInt::operator+=(const CycInt & rhs)
{
	check_same(rhs);
	for (std::size_t i = 0; i < _c.size(); ++i) _c[i] += rhs._c[i];
	return *this;
}

CycInt & CycInt::operator-=(const CycInt & rhs)
{
	check_same(rhs);
	for (std::size_t i = 0; i < _c.size(); ++i) _c[i] -= rhs._c[i];
	return *this;
}

CycInt operator*(const CycInt & lhs, const CycInt & rhs)
{
	lhs.check_same(rhs);
	return CycInt(lhs._ctx, mul_coeffs(lhs.p(), lhs._c, rhs._c));
}

bool operator==(const CycInt & lhs, const CycInt & rhs)
{
	return lhs.p() == rhs.p() && lhs._c == rhs._c;
}

GaloisElt::GaloisElt(u64 p, std::int64_t k) : _k(reduce_mod(k, p))
{
	if (_k == 0) throw UsageError("Galois element s_k needs k not divisible by p");
}

GaloisElt GaloisElt::compose(const GaloisElt & other, u64 p) const
{
	return GaloisElt(p, std::int64_t(mul_mod(_k, other._k, p)));
}

CycInt galois(const CycInt & a, const GaloisElt & s)
{
	const u64 p = a.p();
	std::vector<Term> terms;
	terms.reserve(a.coeffs().size());
	for (std::size_t i = 0; i < a.coeffs().size(); ++i)
	{
		if (a.coeffs()[i] != 0) terms.push_back({std::int64_t(mul_mod(i, s.k(), p)), a.coeffs()[i]});
	}
	return CycInt::from_terms(a.ctx(), terms);
}

CycInt galois(const CycInt & a, std::int64_t k)
{
	return galois(a, GaloisElt(a.p(), k));
}

CycInt pow(const CycInt & a, unsigned e)
{
	CycInt r = CycInt::integer(a.ctx(), 1), b = a;
	while (e != 0)
	{
		if (e & 1) r = r * b;
		e >>= 1;
		if (e != 0) b = b * b;
	}
	return r;
}

mpz_class norm(const CycInt & a)
{
	// The Galois group is cyclic, generated by s_g for a primitive root g.
	// acc = prod_{i < m} s_g^i(a); doubling uses acc_{2m} = acc_m * s_g^m(acc_m).
	const u64 p = a.p();
	const u64 g = primitive_root(p);
	const u64 n = p - 1;

	int top = 63;
	while (((n >> top) & 1) == 0) --top;

	CycInt acc = a;
	u64 m = 1;
	for (int bit = top - 1; bit >= 0; --bit)
	{
		acc = acc * galois(acc, GaloisElt(p, std::int64_t(pow_mod(g, m, p))));
		m *= 2;
		if ((n >> bit) & 1)
		{
			acc = acc * galois(a, GaloisElt(p, std::int64_t(pow_mod(g, m, p))));
			m += 1;
		}
	}
	if (!acc.is_rational()) throw InternalError("norm: product of conjugates is not rational");
	return acc.coeffs()[0];
}

CycInt unit_inverse(const CycInt & a)
{
	auto inv = solve_inverse(a.p(), a.coeffs());
	if (!inv) throw UsageError("element is not a unit of Z[zeta]");
	return CycInt::from_coeffs(a.ctx(), std::move(*inv));
}

}
