#pragma once

// Test-only reference computations, independent of the library's algorithms.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "cyclores/cycint.hpp"

namespace oracle {

using cyclores::u64;

inline u64 powm(u64 b, u64 e, u64 m)
{
	unsigned __int128 r = 1, x = b % m;
	for (; e; e >>= 1, x = x * x % m)
	{
		if (e & 1) r = r * x % m;
	}
	return u64(r);
}

inline bool is_prime(u64 n)
{
	if (n < 2) return false;
	for (u64 d = 2; d * d <= n; ++d)
	{
		if (n % d == 0) return false;
	}
	return true;
}

// p-th roots of unity != 1 mod q by exhaustive search
inline std::vector<u64> roots_of_unity(u64 p, u64 q)
{
	std::vector<u64> r;
	for (u64 w = 2; w < q; ++w)
	{
		if (powm(w, p, q) == 1) r.push_back(w);
	}
	return r;
}

// {u^p : u in F_q^x}
inline std::set<u64> pth_powers(u64 p, u64 q)
{
	std::set<u64> s;
	for (u64 u = 1; u < q; ++u) s.insert(powm(u, p, q));
	return s;
}

// Product of the p-1 conjugates, one ring multiplication at a time.
inline mpz_class naive_norm(const cyclores::CycInt & a)
{
	cyclores::CycInt acc = a;
	for (std::int64_t k = 2; k < std::int64_t(a.p()); ++k) acc = acc * cyclores::galois(a, k);
	return acc.coeffs()[0];
}

// Horner evaluation of the coefficient vector at w mod q.
inline u64 eval_at(const cyclores::CycInt & a, u64 w, u64 q)
{
	unsigned __int128 acc = 0;
	const auto & c = a.coeffs();
	for (std::size_t i = c.size(); i-- > 0;)
	{
		const u64 ci = mpz_fdiv_ui(c[i].get_mpz_t(), q);
		acc = (acc * w + ci) % q;
	}
	return u64(acc);
}

inline cyclores::CycInt random_element(const cyclores::FieldCtxPtr & ctx, std::mt19937_64 & rng, int bound = 5)
{
	std::uniform_int_distribution<int> d(-bound, bound);
	std::vector<mpz_class> c(ctx->dim());
	for (auto & x : c) x = d(rng);
	return cyclores::CycInt::from_coeffs(ctx, std::move(c));
}

// Akiyama-Tanigawa: produces B_n with the B_1 = +1/2 convention.
inline mpq_class akiyama_tanigawa(unsigned n)
{
	std::vector<mpq_class> a(n + 1);
	for (unsigned m = 0; m <= n; ++m)
	{
		a[m] = mpq_class(1, m + 1);
		for (unsigned j = m; j >= 1; --j)
		{
			a[j - 1] = j * (a[j - 1] - a[j]);
			a[j - 1].canonicalize();
		}
	}
	return a[0];
}

// Fraction-free (Bareiss) determinant of an integer matrix.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m)
{
	const std::size_t n = m.size();
	mpz_class prev = 1;
	int sign = 1;
	for (std::size_t k = 0; k + 1 < n; ++k)
	{
		if (m[k][k] == 0)
		{
			std::size_t r = k + 1;
			while (r < n && m[r][k] == 0) ++r;
			if (r == n) return 0;
			std::swap(m[r], m[k]);
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i)
		{
			for (std::size_t j = k + 1; j < n; ++j)
			{
				m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
			}
		}
		prev = m[k][k];
	}
	return sign * m[n - 1][n - 1];
}

// h^- exactly: with F(X) = sum_i (g^i mod p) X^i, prod_{chi odd} sum_a a chi(a) is the norm of F
// from Q[X]/(X^m + 1), m = (p-1)/2, i.e. the determinant of multiplication by F there.
// Then h^- = 2p * (-1/(2p))^m * det.
inline mpz_class exact_h_minus(u64 p, u64 g)
{
	const std::size_t m = std::size_t((p - 1) / 2);
	std::vector<mpz_class> f(m, 0);	// F mod X^m + 1
	u64 gi = 1;
	for (std::size_t i = 0; i < p - 1; ++i, gi = gi * g % p)
	{
		if (i < m) f[i] += gi;
		else f[i - m] -= gi;
	}
	std::vector<std::vector<mpz_class>> mat(m, std::vector<mpz_class>(m, 0));
	for (std::size_t j = 0; j < m; ++j)	// column j = F * X^j
	{
		for (std::size_t i = 0; i < m; ++i)
		{
			const std::size_t idx = i + j;
			if (idx < m) mat[idx][j] += f[i];
			else mat[idx - m][j] -= f[i];
		}
	}
	const mpz_class det = bareiss_det(mat);
	mpz_class den;
	mpz_ui_pow_ui(den.get_mpz_t(), 2 * p, m);
	mpz_class h = 2 * mpz_class(std::to_string(p)) * det;
	if (m % 2 == 1) h = -h;
	mpz_class r;
	mpz_divexact(r.get_mpz_t(), h.get_mpz_t(), den.get_mpz_t());
	return r;
}

}
