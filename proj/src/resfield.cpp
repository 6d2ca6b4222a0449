#include "cyclores/resfield.hpp"

#include <algorithm>

#include "cyclores/errors.hpp"

namespace cyclores {

unsigned residue_degree(u64 p, u64 q)
{
	if (q % p == 0) throw UsageError("q = p is ramified in Q(zeta_p)");
	return unsigned(mult_order(q % p, p));
}

PrimeIdealRep::PrimeIdealRep(FieldCtxPtr ctx, u64 q, FqPoly modulus, ResElt w)
	: _ctx(std::move(ctx)), _q(q), _f(0), _modulus(std::move(modulus)), _w(std::move(w))
{
	const u64 p = _ctx->p();
	if (!is_prime_u64(q)) throw UsageError("q = " + std::to_string(q) + " is not prime");
	if (q == p) throw UsageError("q = p is ramified; no residue symbol");
	_f = residue_degree(p, q);
	fq::trim(_modulus);
	if (fq::degree(_modulus) != int(_f) || _modulus.back() != 1)
	{
		throw UsageError("modulus must be monic of degree f = " + std::to_string(_f));
	}
	if (!fq::rem(fq::cyclotomic(p, q), _modulus, q).empty())
	{
		throw UsageError("modulus does not divide Phi_p mod q");
	}
	if (_w.value.size() != _f) throw UsageError("w must have f coefficients");
	for (u64 c : _w.value)
	{
		if (c >= q) throw UsageError("w coefficients must lie in [0, q)");
	}
	if (pow(_w, p) != one() || _w == one())
	{
		throw UsageError("w is not a primitive p-th root of unity in the residue field");
	}
}

PrimeIdealRep PrimeIdealRep::degree_one(FieldCtxPtr ctx, u64 q, u64 w)
{
	FqPoly m{q > 0 ? (q - w % q) % q : 0, 1};
	return PrimeIdealRep(std::move(ctx), q, std::move(m), ResElt{{w % q}});
}

ResElt PrimeIdealRep::from_poly(FqPoly poly) const
{
	poly = fq::rem(std::move(poly), _modulus, _q);
	poly.resize(_f, 0);
	return ResElt{std::move(poly)};
}

ResElt PrimeIdealRep::zero() const { return ResElt{std::vector<u64>(_f, 0)}; }

ResElt PrimeIdealRep::one() const
{
	ResElt r = zero();
	r.value[0] = 1 % _q;
	return r;
}

ResElt PrimeIdealRep::from_integer(const mpz_class & n) const
{
	ResElt r = zero();
	r.value[0] = reduce_mod(n, _q);
	return r;
}

ResElt PrimeIdealRep::add(const ResElt & a, const ResElt & b) const
{
	ResElt r = zero();
	for (unsigned i = 0; i < _f; ++i) r.value[i] = add_mod(a.value[i], b.value[i], _q);
	return r;
}

ResElt PrimeIdealRep::sub(const ResElt & a, const ResElt & b) const
{
	ResElt r = zero();
	for (unsigned i = 0; i < _f; ++i) r.value[i] = sub_mod(a.value[i], b.value[i], _q);
	return r;
}

ResElt PrimeIdealRep::mul(const ResElt & a, const ResElt & b) const
{
	if (_f == 1) return ResElt{{mul_mod(a.value[0], b.value[0], _q)}};
	return from_poly(fq::mul(a.value, b.value, _q));
}

ResElt PrimeIdealRep::pow(const ResElt & a, const mpz_class & e) const
{
	if (sgn(e) < 0) throw UsageError("negative exponent");
	if (_f == 1)
	{
		if (a.value[0] == 0) return (e == 0) ? one() : zero();
		const u64 er = reduce_mod(e, _q - 1);
		return ResElt{{pow_mod(a.value[0], er, _q)}};
	}
	FqPoly base = a.value;
	fq::trim(base);
	return from_poly(fq::powmod(base, e, _modulus, _q));
}

ResElt PrimeIdealRep::pow(const ResElt & a, u64 e) const
{
	if (_f == 1) return ResElt{{pow_mod(a.value[0], e, _q)}};
	return pow(a, from_u64(e));
}

bool PrimeIdealRep::is_zero(const ResElt & a) const
{
	return std::all_of(a.value.begin(), a.value.end(), [](u64 c) { return c == 0; });
}

mpz_class PrimeIdealRep::field_order() const
{
	mpz_class r;
	mpz_ui_pow_ui(r.get_mpz_t(), _q, _f);
	return r;
}

std::vector<PrimeIdealRep> split_prime(const FieldCtxPtr & ctx, u64 q)
{
	const u64 p = ctx->p();
	if (q == p) throw UsageError("q = p is ramified in Q(zeta_p)");
	if (!is_prime_u64(q)) throw UsageError("q = " + std::to_string(q) + " is not prime");

	std::vector<PrimeIdealRep> out;
	if (q % p == 1)
	{
		// u^((q-1)/p) for u = 2, 3, ... until an element of order p shows up
		const u64 e = (q - 1) / p;
		u64 z = 1;
		for (u64 u = 2; z == 1; ++u) z = pow_mod(u, e, q);
		std::vector<u64> roots;
		roots.reserve(p - 1);
		u64 r = z;
		for (u64 j = 1; j < p; ++j)
		{
			roots.push_back(r);
			r = mul_mod(r, z, q);
		}
		std::sort(roots.begin(), roots.end());
		for (u64 w : roots) out.push_back(PrimeIdealRep::degree_one(ctx, q, w));
		return out;
	}

	const unsigned f = residue_degree(p, q);
	for (FqPoly & m : fq::factor_cyclotomic(p, q))
	{
		ResElt t{std::vector<u64>(f, 0)};
		t.value[1] = 1;
		out.emplace_back(ctx, q, std::move(m), std::move(t));
	}
	return out;
}

ResElt residue(const CycInt & a, const PrimeIdealRep & ideal)
{
	if (a.p() != ideal.p()) throw ContextMismatch();
	const auto & c = a.coeffs();
	const u64 q = ideal.q();
	if (ideal.f() == 1)
	{
		const u64 w = ideal.root();
		u64 acc = 0;
		for (std::size_t i = c.size(); i-- > 0;)
		{
			acc = add_mod(mul_mod(acc, w, q), reduce_mod(c[i], q), q);
		}
		return ResElt{{acc}};
	}
	ResElt acc = ideal.zero();
	for (std::size_t i = c.size(); i-- > 0;)
	{
		acc = ideal.add(ideal.mul(acc, ideal.w()), ideal.from_integer(c[i]));
	}
	return acc;
}

PrimeIdealRep galois_ideal(const PrimeIdealRep & ideal, const GaloisElt & s)
{
	const u64 p = ideal.p();
	const u64 kinv = inv_mod(s.k(), p);
	const ResElt w2 = ideal.pow(ideal.w(), kinv);
	if (ideal.f() == 1) return PrimeIdealRep::degree_one(ideal.ctx(), ideal.q(), w2.value[0]);

	// minimal polynomial of w2 over F_q: prod_{i<f} (X - w2^(q^i)), coefficients in the residue field
	const u64 q = ideal.q();
	std::vector<ResElt> poly{ideal.one()};
	ResElt conj = w2;
	for (unsigned i = 0; i < ideal.f(); ++i)
	{
		std::vector<ResElt> next(poly.size() + 1, ideal.zero());
		for (std::size_t j = 0; j < poly.size(); ++j)
		{
			next[j + 1] = ideal.add(next[j + 1], poly[j]);
			next[j] = ideal.sub(next[j], ideal.mul(poly[j], conj));
		}
		poly = std::move(next);
		conj = ideal.pow(conj, q);
	}
	FqPoly m(poly.size());
	for (std::size_t j = 0; j < poly.size(); ++j)
	{
		for (unsigned i = 1; i < ideal.f(); ++i)
		{
			if (poly[j].value[i] != 0) throw InternalError("minimal polynomial not defined over F_q");
		}
		m[j] = poly[j].value[0];
	}
	ResElt t{std::vector<u64>(ideal.f(), 0)};
	t.value[1] = 1;
	return PrimeIdealRep(ideal.ctx(), q, std::move(m), std::move(t));
}

IdealSearch ideal_dividing(const FieldCtxPtr & ctx, u64 q, const mpz_class & x, const mpz_class & y, Sign sign)
{
	const u64 p = ctx->p();
	if (!is_prime_u64(q)) throw UsageError("q = " + std::to_string(q) + " is not prime");
	if (q == p) throw UsageError("q must differ from p");
	const u64 xr = reduce_mod(x, q), yr = reduce_mod(y, q);
	if (xr == 0 || yr == 0) throw UsageError("q must not divide x*y");
	if (q % p != 1) return {IdealSearch::Status::no_degree_one_ideal, std::nullopt};

	// x*w + y = 0  =>  w = -y/x ;  x*w - y = 0  =>  w = y/x
	u64 w = mul_mod(yr, inv_mod(xr, q), q);
	if (sign == Sign::plus) w = sub_mod(0, w, q);
	if (w == 1 || pow_mod(w, p, q) != 1) return {IdealSearch::Status::no_matching_root, std::nullopt};
	return {IdealSearch::Status::found, PrimeIdealRep::degree_one(ctx, q, w)};
}

}
