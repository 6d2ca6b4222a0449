#pragma once

// Dense polynomials over F_q (q prime < 2^64), coefficient of t^i at index i.
// The zero polynomial is the empty vector; nonzero polynomials have a nonzero leading coefficient.

#include <vector>

#include <gmpxx.h>

#include "cyclores/modarith.hpp"

namespace cyclores {

using FqPoly = std::vector<u64>;

namespace fq {

void trim(FqPoly & a);
int degree(const FqPoly & a);	// -1 for zero

FqPoly add(const FqPoly & a, const FqPoly & b, u64 q);
FqPoly sub(const FqPoly & a, const FqPoly & b, u64 q);
FqPoly mul(const FqPoly & a, const FqPoly & b, u64 q);
FqPoly rem(FqPoly a, const FqPoly & m, u64 q);
// quotient and remainder; m nonzero
FqPoly divrem(FqPoly a, const FqPoly & m, u64 q, FqPoly & r);
FqPoly mulmod(const FqPoly & a, const FqPoly & b, const FqPoly & m, u64 q);
FqPoly powmod(const FqPoly & a, const mpz_class & e, const FqPoly & m, u64 q);
FqPoly monic(FqPoly a, u64 q);
FqPoly gcd(FqPoly a, FqPoly b, u64 q);

// Phi_p(t) = 1 + t + ... + t^(p-1) mod q
FqPoly cyclotomic(u64 p, u64 q);

// Irreducible factors of Phi_p mod q (q != p); all have degree f = ord_p(q).
// Sorted lexicographically by coefficient vector, constant term first.
std::vector<FqPoly> factor_cyclotomic(u64 p, u64 q);

// Lexicographic order on coefficient vectors of equal length, constant term first.
bool lex_less(const FqPoly & a, const FqPoly & b);

}

}
