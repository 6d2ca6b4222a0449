#pragma once

// Regularity data for p: Bernoulli numbers, irregular pairs, the relative class number h^-,
// and one-sided witnesses that a cyclotomic-unit eigencomponent is not a p-th power.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cyclores/powsym.hpp"

namespace cyclores {

// Reduced rational with positive denominator.
using BigRational = mpq_class;

// Exact B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2). Memoized, thread safe.
BigRational bernoulli(unsigned n);

struct IrregularPair
{
	u64 p;
	unsigned k;	// even, 2 <= k <= p-3
	friend bool operator==(const IrregularPair &, const IrregularPair &) = default;
};

// Every even k in [2, p-3] with p | numerator(B_k). Empty iff p is regular.
std::vector<IrregularPair> irregular_pairs(u64 p);

struct HMinusResult
{
	mpz_class value;
	double distance;	// |approx - value| before rounding (real part), imaginary part included
	double error_bound;
	unsigned precision_bits;
};

// h^- = 2p prod_{chi odd} (-B_{1,chi} / 2) at a fixed working precision.
// Throws InternalError when the error bound is >= 1/4 or the distance to the nearest integer exceeds it.
HMinusResult h_minus_at_precision(u64 p, unsigned bits);

// Same, doubling the precision after each failure (up to a cap).
HMinusResult h_minus_detailed(u64 p);
mpz_class h_minus(u64 p);

struct VandiverWitness
{
	IrregularPair pair;
	u64 g;	// smallest primitive root mod p
	u64 q;	// q = 1 mod p
	u64 w;	// image of zeta at the witnessing ideal
	SymbolExp e;	// nonzero
};

// e = sum_a n_a * symbol(s_a(varpi_g), ideal), n_a = a^-k mod p in [0, p), evaluated in F_q.
// The ideal must have degree one.
SymbolExp eigen_unit_symbol(const PrimeIdealRep & ideal, u64 g, unsigned k);

// Scan the first q_candidates primes q = 1 mod p and all ideals above each; return the first
// ideal with nonzero e. nullopt means inconclusive. Throws UsageError if (p, k) is not irregular.
std::optional<VandiverWitness> vandiver_witness(u64 p, unsigned k, unsigned q_candidates);

// Primes q = 1 mod p in increasing order.
std::vector<u64> split_primes(u64 p, unsigned count);

}
