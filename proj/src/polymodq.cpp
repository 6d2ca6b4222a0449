#include "cyclores/polymodq.hpp"

#include <algorithm>
#include <random>

#include "cyclores/errors.hpp"

namespace cyclores::fq {

void trim(FqPoly & a)
{
	while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const FqPoly & a) { return int(a.size()) - 1; }

FqPoly add(const FqPoly & a, const FqPoly & b, u64 q)
{
	FqPoly r(std::max(a.size(), b.size()), 0);
	for (std::size_t i = 0; i < r.size(); ++i)
	{
		r[i] = add_mod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, q);
	}
	trim(r);
	return r;
}

FqPoly sub(const FqPoly & a, const FqPoly & b, u64 q)
{
	FqPoly r(std::max(a.size(), b.size()), 0);
	for (std::size_t i = 0; i < r.size(); ++i)
	{
		r[i] = sub_mod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, q);
	}
	trim(r);
	return r;
}

FqPoly mul(const FqPoly & a, const FqPoly & b, u64 q)
{
	if (a.empty() || b.empty()) return {};
	FqPoly r(a.size() + b.size() - 1, 0);
	for (std::size_t i = 0; i < a.size(); ++i)
	{
		if (a[i] == 0) continue;
		for (std::size_t j = 0; j < b.size(); ++j)
		{
			r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], q), q);
		}
	}
	trim(r);
	return r;
}

FqPoly divrem(FqPoly a, const FqPoly & m, u64 q, FqPoly & r)
{
	if (m.empty()) throw UsageError("polynomial division by zero");
	trim(a);
	const int dm = degree(m);
	if (degree(a) < dm) { r = std::move(a); return {}; }
	FqPoly quo(std::size_t(degree(a) - dm + 1), 0);
	const u64 lead_inv = inv_mod(m.back(), q);
	for (int i = degree(a); i >= dm; --i)
	{
		const u64 c = mul_mod(a[std::size_t(i)], lead_inv, q);
		quo[std::size_t(i - dm)] = c;
		if (c == 0) continue;
		for (int j = 0; j <= dm; ++j)
		{
			u64 & t = a[std::size_t(i - dm + j)];
			t = sub_mod(t, mul_mod(c, m[std::size_t(j)], q), q);
		}
	}
	trim(a);
	r = std::move(a);
	return quo;
}

FqPoly rem(FqPoly a, const FqPoly & m, u64 q)
{
	FqPoly r;
	divrem(std::move(a), m, q, r);
	return r;
}

FqPoly mulmod(const FqPoly & a, const FqPoly & b, const FqPoly & m, u64 q)
{
	return rem(mul(a, b, q), m, q);
}

FqPoly powmod(const FqPoly & a, const mpz_class & e, const FqPoly & m, u64 q)
{
	FqPoly r = rem(FqPoly{1}, m, q);
	const FqPoly base = rem(a, m, q);
	for (long bit = long(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit)
	{
		r = mulmod(r, r, m, q);
		if (mpz_tstbit(e.get_mpz_t(), mp_bitcnt_t(bit))) r = mulmod(r, base, m, q);
	}
	return r;
}

FqPoly monic(FqPoly a, u64 q)
{
	trim(a);
	if (a.empty()) return a;
	const u64 inv = inv_mod(a.back(), q);
	for (u64 & c : a) c = mul_mod(c, inv, q);
	return a;
}

FqPoly gcd(FqPoly a, FqPoly b, u64 q)
{
	trim(a);
	trim(b);
	while (!b.empty())
	{
		FqPoly r = rem(a, b, q);
		a = std::move(b);
		b = std::move(r);
	}
	return monic(std::move(a), q);
}

FqPoly cyclotomic(u64 p, u64 q)
{
	FqPoly r(std::size_t(p), 1 % q);
	trim(r);
	return r;
}

bool lex_less(const FqPoly & a, const FqPoly & b)
{
	if (a.size() != b.size()) return a.size() < b.size();
	return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// Equal-degree factorization (Cantor-Zassenhaus) of a squarefree monic g whose
// irreducible factors all have degree f.
void split_equal_degree(const FqPoly & g, int f, u64 q, std::mt19937_64 & rng, std::vector<FqPoly> & out)
{
	if (degree(g) == f) { out.push_back(g); return; }

	const mpz_class qf = [&] { mpz_class r; mpz_ui_pow_ui(r.get_mpz_t(), q, unsigned(f)); return r; }();
	std::uniform_int_distribution<u64> coeff(0, q - 1);
	while (true)
	{
		FqPoly a(std::size_t(degree(g)), 0);
		for (u64 & c : a) c = coeff(rng);
		trim(a);
		if (degree(a) < 1) continue;

		FqPoly h;
		if (q == 2)
		{
			// absolute trace F_{2^f} -> F_2 of a, computed in F_2[t]/g
			FqPoly term = rem(a, g, q);
			h = term;
			for (int i = 1; i < f; ++i)
			{
				term = mulmod(term, term, g, q);
				h = add(h, term, q);
			}
		}
		else
		{
			const mpz_class e = (qf - 1) / 2;
			h = sub(powmod(a, e, g, q), FqPoly{1}, q);
		}
		const FqPoly d = gcd(g, h, q);
		if (degree(d) <= 0 || degree(d) == degree(g)) continue;
		FqPoly r;
		const FqPoly other = monic(divrem(g, d, q, r), q);
		split_equal_degree(d, f, q, rng, out);
		split_equal_degree(other, f, q, rng, out);
		return;
	}
}

}

std::vector<FqPoly> factor_cyclotomic(u64 p, u64 q)
{
	if (q == p) throw UsageError("q = p is ramified");
	const int f = int(mult_order(q % p, p));
	std::vector<FqPoly> out;
	// fixed seed: the factor set does not depend on the random choices, only the search time does
	std::mt19937_64 rng(0x5eed0000ULL ^ (p << 20) ^ q);
	split_equal_degree(cyclotomic(p, q), f, q, rng, out);
	for (FqPoly & m : out) m = monic(std::move(m), q);
	std::sort(out.begin(), out.end(), lex_less);
	return out;
}

}
