#include "cyclores/modarith.hpp"

#include <stdexcept>

namespace cyclores {

u64 pow_mod(u64 base, u64 exp, u64 m)
{
	return pow_mod(base, u128(exp), m);
}

u64 pow_mod(u64 base, u128 exp, u64 m)
{
	u64 r = 1 % m, b = base % m;
	while (exp != 0)
	{
		if (exp & 1) r = mul_mod(r, b, m);
		b = mul_mod(b, b, m);
		exp >>= 1;
	}
	return r;
}

u64 inv_mod(u64 a, u64 m)
{
	// extended Euclid on signed 128-bit values
	__int128 t = 0, newt = 1;
	__int128 r = m, newr = a % m;
	while (newr != 0)
	{
		const __int128 quo = r / newr;
		__int128 tmp = t - quo * newt; t = newt; newt = tmp;
		tmp = r - quo * newr; r = newr; newr = tmp;
	}
	if (r != 1) throw std::domain_error("inv_mod: element is not invertible");
	if (t < 0) t += m;
	return u64(t);
}

u64 reduce_mod(std::int64_t a, u64 m)
{
	if (a >= 0) return u64(a) % m;
	const u64 r = u64(-(a + 1)) % m;	// |a| - 1, avoids overflow at INT64_MIN
	return (m - 1) - r;
}

u64 reduce_mod(const mpz_class & a, u64 m)
{
	static_assert(sizeof(unsigned long) == sizeof(u64));
	return mpz_fdiv_ui(a.get_mpz_t(), m);
}

bool is_prime_u64(u64 n)
{
	if (n < 2) return false;
	for (u64 sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
	{
		if (n % sp == 0) return n == sp;
	}
	u64 d = n - 1;
	int s = 0;
	while ((d & 1) == 0) { d >>= 1; ++s; }
	// this witness set is deterministic below 3.3 * 10^24
	for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
	{
		u64 x = pow_mod(a, d, n);
		if (x == 1 || x == n - 1) continue;
		bool composite = true;
		for (int i = 1; i < s; ++i)
		{
			x = mul_mod(x, x, n);
			if (x == n - 1) { composite = false; break; }
		}
		if (composite) return false;
	}
	return true;
}

bool is_probable_prime(const mpz_class & n)
{
	if (n < 2) return false;
	if (fits_u64(n)) return is_prime_u64(to_u64(n));
	return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<u64> prime_factors(u64 n)
{
	std::vector<u64> f;
	for (u64 d = 2; d * d <= n; d += (d == 2) ? 1 : 2)
	{
		if (n % d == 0)
		{
			f.push_back(d);
			while (n % d == 0) n /= d;
		}
	}
	if (n > 1) f.push_back(n);
	return f;
}

u64 mult_order(u64 a, u64 n)
{
	u64 ord = n - 1;
	for (u64 l : prime_factors(n - 1))
	{
		while (ord % l == 0 && pow_mod(a, ord / l, n) == 1) ord /= l;
	}
	return ord;
}

u64 primitive_root(u64 n)
{
	if (n == 2) return 1;
	const std::vector<u64> f = prime_factors(n - 1);
	for (u64 g = 2; g < n; ++g)
	{
		bool ok = true;
		for (u64 l : f)
		{
			if (pow_mod(g, (n - 1) / l, n) == 1) { ok = false; break; }
		}
		if (ok) return g;
	}
	throw std::domain_error("primitive_root: modulus is not prime");
}

bool fits_u64(const mpz_class & n)
{
	return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

u64 to_u64(const mpz_class & n)
{
	if (!fits_u64(n)) throw std::out_of_range("to_u64: value does not fit in 64 bits");
	return mpz_get_ui(n.get_mpz_t());
}

mpz_class from_u64(u64 n)
{
	mpz_class r;
	mpz_set_ui(r.get_mpz_t(), n);
	return r;
}

}
