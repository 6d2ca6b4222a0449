#include "cyclores/regulab.hpp"

#include <cmath>
#include <vector>

#include <mpfr.h>

#include "cyclores/errors.hpp"

namespace cyclores {

namespace {

class Real
{
public:
	explicit Real(mpfr_prec_t prec) { mpfr_init2(_v, prec); mpfr_set_zero(_v, 1); }
	Real(const Real & o) { mpfr_init2(_v, mpfr_get_prec(o._v)); mpfr_set(_v, o._v, MPFR_RNDN); }
	Real & operator=(const Real & o) { mpfr_set(_v, o._v, MPFR_RNDN); return *this; }
	~Real() { mpfr_clear(_v); }
	mpfr_ptr get() { return _v; }
	mpfr_srcptr get() const { return _v; }
private:
	mpfr_t _v;
};

struct Complex
{
	Real re, im;
	explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
};

// z = z * w
void mul_into(Complex & z, const Complex & w, mpfr_prec_t prec)
{
	Real a(prec), b(prec);
	mpfr_mul(a.get(), z.re.get(), w.re.get(), MPFR_RNDN);
	mpfr_mul(b.get(), z.im.get(), w.im.get(), MPFR_RNDN);
	Real c(prec), d(prec);
	mpfr_mul(c.get(), z.re.get(), w.im.get(), MPFR_RNDN);
	mpfr_mul(d.get(), z.im.get(), w.re.get(), MPFR_RNDN);
	mpfr_sub(z.re.get(), a.get(), b.get(), MPFR_RNDN);
	mpfr_add(z.im.get(), c.get(), d.get(), MPFR_RNDN);
}

double abs_d(const Complex & z)
{
	return std::hypot(mpfr_get_d(z.re.get(), MPFR_RNDN), mpfr_get_d(z.im.get(), MPFR_RNDN));
}

}

HMinusResult h_minus_at_precision(u64 p, unsigned bits)
{
	if (p < 3 || !is_prime_u64(p)) throw UsageError("p must be an odd prime");
	const mpfr_prec_t prec = mpfr_prec_t(bits);
	const u64 n = p - 1;
	const u64 g = primitive_root(p);
	const double u = std::ldexp(1.0, 1 - int(bits));

	// roots of unity exp(2 pi i k / (p-1))
	Real two_pi(prec);
	mpfr_const_pi(two_pi.get(), MPFR_RNDN);
	mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);
	std::vector<Complex> roots;
	roots.reserve(n);
	for (u64 k = 0; k < n; ++k)
	{
		Complex z(prec);
		Real angle(prec);
		mpfr_mul_ui(angle.get(), two_pi.get(), k, MPFR_RNDN);
		mpfr_div_ui(angle.get(), angle.get(), n, MPFR_RNDN);
		mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), MPFR_RNDN);
		roots.push_back(std::move(z));
	}

	// g^i mod p for i = 0..p-2, so chi_j(g^i) = root[j*i mod (p-1)]
	std::vector<u64> gpow(n);
	gpow[0] = 1;
	for (u64 i = 1; i < n; ++i) gpow[i] = mul_mod(gpow[i - 1], g, p);

	// Each root carries error <= 4u; a sum of p-1 terms of size <= p then has absolute error
	// <= (p-1) p (4u) + (p-1) * (accumulation) <= 8 p^2 u |largest partial| -> bound below.
	const double pd = double(p);
	const double sum_err = 8.0 * pd * pd * pd * u;

	Complex prod(prec);
	mpfr_set_ui(prod.re.get(), 1, MPFR_RNDN);
	double rel_err = 0;
	for (u64 j = 1; j < n; j += 2)	// odd characters: chi(-1) = root[j * (p-1)/2] = -1
	{
		Complex s(prec);
		Real t(prec);
		for (u64 i = 0; i < n; ++i)
		{
			const Complex & z = roots[(j * i) % n];
			mpfr_mul_ui(t.get(), z.re.get(), gpow[i], MPFR_RNDN);
			mpfr_add(s.re.get(), s.re.get(), t.get(), MPFR_RNDN);
			mpfr_mul_ui(t.get(), z.im.get(), gpow[i], MPFR_RNDN);
			mpfr_add(s.im.get(), s.im.get(), t.get(), MPFR_RNDN);
		}
		// -B_{1,chi}/2 = -s / (2p)
		mpfr_div_si(s.re.get(), s.re.get(), -2 * long(p), MPFR_RNDN);
		mpfr_div_si(s.im.get(), s.im.get(), -2 * long(p), MPFR_RNDN);
		const double mag = abs_d(s);
		const double abs_err = sum_err / (2 * pd);
		if (!(mag > 2 * abs_err)) throw InternalError("h_minus: character sum indistinguishable from zero");
		rel_err += abs_err / (mag - abs_err) + 8 * u;
		mul_into(prod, s, prec);
	}
	mpfr_mul_ui(prod.re.get(), prod.re.get(), 2 * p, MPFR_RNDN);
	mpfr_mul_ui(prod.im.get(), prod.im.get(), 2 * p, MPFR_RNDN);

	HMinusResult r;
	r.precision_bits = bits;
	const double magnitude = abs_d(prod);
	r.error_bound = 2.0 * magnitude * (std::expm1(rel_err) + 4 * u) + 2 * u;

	Real rounded(prec);
	mpfr_round(rounded.get(), prod.re.get());
	mpfr_get_z(r.value.get_mpz_t(), rounded.get(), MPFR_RNDN);
	Real diff(prec);
	mpfr_sub(diff.get(), prod.re.get(), rounded.get(), MPFR_RNDN);
	r.distance = std::hypot(mpfr_get_d(diff.get(), MPFR_RNDN), mpfr_get_d(prod.im.get(), MPFR_RNDN));

	if (!(r.error_bound < 0.25)) throw InternalError("h_minus: error bound >= 1/4 at this precision");
	if (!(r.distance <= r.error_bound)) throw InternalError("h_minus: value not within the error bound of an integer");
	return r;
}

HMinusResult h_minus_detailed(u64 p)
{
	// enough bits for h^- itself (log2 h^- ~ (p/4) log2 p) plus the error budget
	unsigned bits = 64 + unsigned(p);
	for (int attempt = 0; attempt < 8; ++attempt, bits *= 2)
	{
		try
		{
			return h_minus_at_precision(p, bits);
		}
		catch (const InternalError &)
		{
			if (attempt == 7) throw;
		}
	}
	throw InternalError("h_minus: precision cap reached");
}

mpz_class h_minus(u64 p)
{
	return h_minus_detailed(p).value;
}

}
