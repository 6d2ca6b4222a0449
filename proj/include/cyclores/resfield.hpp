#pragma once

// Splitting of a rational prime q != p in Z[zeta_p] and the residue maps Z[zeta] -> F_{q^f}.
//
// An ideal above q is (q, m(zeta)) for an irreducible factor m of Phi_p mod q
// (Kummer-Dedekind). Its residue field is F_q[t]/m and zeta maps to w = t mod m;
// for f = 1 the modulus is t - w and w is an ordinary residue mod q.

#include <optional>
#include <vector>

#include "cyclores/cycint.hpp"
#include "cyclores/polymodq.hpp"

namespace cyclores {

// An element of F_q[t]/modulus, coefficients in [0, q), length exactly f.
struct ResElt
{
	std::vector<u64> value;

	friend bool operator==(const ResElt &, const ResElt &) = default;
	// Canonical total order: lexicographic on the coefficient vector, constant term first.
	friend bool operator<(const ResElt & a, const ResElt & b) { return a.value < b.value; }
};

class PrimeIdealRep
{
public:
	// The ideal with residue field F_q[t]/modulus and zeta -> w.
	// Checks that modulus is a monic factor of Phi_p mod q of degree ord_p(q) and that w has order p.
	PrimeIdealRep(FieldCtxPtr ctx, u64 q, FqPoly modulus, ResElt w);

	// f = 1 convenience: zeta -> w in F_q.
	static PrimeIdealRep degree_one(FieldCtxPtr ctx, u64 q, u64 w);

	const FieldCtxPtr & ctx() const { return _ctx; }
	u64 p() const { return _ctx->p(); }
	u64 q() const { return _q; }
	unsigned f() const { return _f; }
	const FqPoly & modulus() const { return _modulus; }
	const ResElt & w() const { return _w; }
	// for f = 1
	u64 root() const { return _w.value[0]; }

	// residue field arithmetic
	ResElt zero() const;
	ResElt one() const;
	ResElt from_integer(const mpz_class & n) const;
	ResElt add(const ResElt & a, const ResElt & b) const;
	ResElt sub(const ResElt & a, const ResElt & b) const;
	ResElt mul(const ResElt & a, const ResElt & b) const;
	ResElt pow(const ResElt & a, const mpz_class & e) const;
	ResElt pow(const ResElt & a, u64 e) const;
	bool is_zero(const ResElt & a) const;

	// q^f as a big integer
	mpz_class field_order() const;

	friend bool operator==(const PrimeIdealRep & a, const PrimeIdealRep & b)
	{
		return a.p() == b.p() && a._q == b._q && a._modulus == b._modulus && a._w == b._w;
	}

private:
	ResElt from_poly(FqPoly poly) const;

	FieldCtxPtr _ctx;
	u64 _q;
	unsigned _f;
	FqPoly _modulus;
	ResElt _w;
};

// All (p-1)/f ideals above q. f = 1: ordered by increasing root w.
// f > 1: ordered by modulus coefficient vector, constant term first.
std::vector<PrimeIdealRep> split_prime(const FieldCtxPtr & ctx, u64 q);

// Residue degree of q: multiplicative order of q mod p.
unsigned residue_degree(u64 p, u64 q);

// a mod the ideal.
ResElt residue(const CycInt & a, const PrimeIdealRep & ideal);

// The ideal s_k(ideal): same modulus orbit, zeta -> the conjugate root w^(1/k).
// Returned in canonical form, i.e. equal to the matching entry of split_prime.
PrimeIdealRep galois_ideal(const PrimeIdealRep & ideal, const GaloisElt & s);

enum class Sign { plus, minus };

struct IdealSearch
{
	enum class Status { found, no_matching_root, no_degree_one_ideal };
	Status status;
	std::optional<PrimeIdealRep> ideal;
};

// The degree-one ideal dividing x*zeta + y (plus) or x*zeta - y (minus), when q splits completely.
// Precondition: q prime, q does not divide p*x*y.
IdealSearch ideal_dividing(const FieldCtxPtr & ctx, u64 q, const mpz_class & x, const mpz_class & y, Sign sign);

}
