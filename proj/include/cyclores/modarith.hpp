#pragma once

// Word-sized modular arithmetic: q < 2^64, products through unsigned __int128.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace cyclores {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return u64((u128(a) * b) % m); }

inline u64 add_mod(u64 a, u64 b, u64 m)
{
	const u64 t = a + b;
	return (t < a || t >= m) ? t - m : t;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return (a >= b) ? a - b : a + (m - b); }

u64 pow_mod(u64 base, u64 exp, u64 m);
u64 pow_mod(u64 base, u128 exp, u64 m);

// Inverse of a modulo m; a must be a unit.
u64 inv_mod(u64 a, u64 m);

// Signed integer reduced into [0, m).
u64 reduce_mod(std::int64_t a, u64 m);
u64 reduce_mod(const mpz_class & a, u64 m);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(u64 n);

// Deterministic below 2^64, GMP's probable-prime test above.
bool is_probable_prime(const mpz_class & n);

// Multiplicative order of a modulo the prime n (a coprime to n).
u64 mult_order(u64 a, u64 n);

// Smallest positive primitive root modulo the prime n.
u64 primitive_root(u64 n);

// Distinct prime factors, ascending. Trial division; intended for n < 2^40 or so.
std::vector<u64> prime_factors(u64 n);

bool fits_u64(const mpz_class & n);
u64 to_u64(const mpz_class & n);
mpz_class from_u64(u64 n);

}
