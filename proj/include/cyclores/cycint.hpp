#pragma once

// Exact arithmetic in Z[zeta_p], zeta a primitive p-th root of unity.
//
// Elements are stored on the power basis 1, zeta, ..., zeta^(p-2); zeta^(p-1) is
// eliminated with Phi_p, so equal elements have equal coefficient vectors.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "cyclores/modarith.hpp"

namespace cyclores {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx
{
public:
	// p must be a prime > 3.
	static FieldCtxPtr make(u64 p);

	u64 p() const { return _p; }
	std::size_t dim() const { return std::size_t(_p - 1); }
	u64 inv2() const { return _inv2; }
	u64 inv4() const { return _inv4; }

	// (1 + zeta)^-1 on the power basis, computed once by an exact integer solve.
	const std::vector<mpz_class> & one_plus_zeta_inverse() const { return _inv_one_plus_zeta; }

	explicit FieldCtx(u64 p);

private:
	u64 _p, _inv2, _inv4;
	std::vector<mpz_class> _inv_one_plus_zeta;
};

// sum c * zeta^e, e any integer
struct Term
{
	std::int64_t exponent;
	mpz_class coeff;
};

class CycInt
{
public:
	explicit CycInt(FieldCtxPtr ctx);	// zero

	// Canonical form of sum c_i zeta^(e_i): exponents are folded mod p, then zeta^(p-1) is eliminated.
	static CycInt from_terms(FieldCtxPtr ctx, std::span<const Term> raw);
	// coeffs must already have length p - 1
	static CycInt from_coeffs(FieldCtxPtr ctx, std::vector<mpz_class> coeffs);
	static CycInt integer(FieldCtxPtr ctx, const mpz_class & n);
	static CycInt zeta_power(FieldCtxPtr ctx, std::int64_t e);
	// x + zeta^k y
	static CycInt binomial(FieldCtxPtr ctx, const mpz_class & x, std::int64_t k, const mpz_class & y);

	const FieldCtxPtr & ctx() const { return _ctx; }
	u64 p() const { return _ctx->p(); }
	const std::vector<mpz_class> & coeffs() const { return _c; }

	bool is_zero() const;
	bool is_rational() const;	// only the constant coefficient may be nonzero

	CycInt operator-() const;
	CycInt & operator+=(const CycInt & rhs);
	CycInt & operator-=(const CycInt & rhs);

	friend CycInt operator+(CycInt lhs, const CycInt & rhs) { lhs += rhs; return lhs; }
	friend CycInt operator-(CycInt lhs, const CycInt & rhs) { lhs -= rhs; return lhs; }
	friend CycInt operator*(const CycInt & lhs, const CycInt & rhs);
	friend bool operator==(const CycInt & lhs, const CycInt & rhs);

private:
	CycInt(FieldCtxPtr ctx, std::vector<mpz_class> c) : _ctx(std::move(ctx)), _c(std::move(c)) {}
	// length-p vector on 1..zeta^(p-1) -> canonical
	static CycInt reduce(FieldCtxPtr ctx, std::vector<mpz_class> full);
	void check_same(const CycInt & rhs) const;

	FieldCtxPtr _ctx;
	std::vector<mpz_class> _c;
};

// s_k : zeta -> zeta^k, k not divisible by p. s_{-1} is k = p - 1.
class GaloisElt
{
public:
	GaloisElt(u64 p, std::int64_t k);
	u64 k() const { return _k; }
	GaloisElt compose(const GaloisElt & other, u64 p) const;	// this o other = s_{jk}
private:
	u64 _k;
};

CycInt galois(const CycInt & a, const GaloisElt & s);
CycInt galois(const CycInt & a, std::int64_t k);

CycInt pow(const CycInt & a, unsigned e);

// Product of all p - 1 conjugates; throws InternalError if the product is not rational.
mpz_class norm(const CycInt & a);

// Exact inverse of a unit by an integer linear solve on the power basis.
// Throws UsageError when a is not a unit of Z[zeta].
CycInt unit_inverse(const CycInt & a);

}
