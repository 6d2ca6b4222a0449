#include "cyclores/fltharness.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "cyclores/cycunits.hpp"
#include "cyclores/errors.hpp"

namespace cyclores {

const char * sign_name(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

std::string label_binomial(std::int64_t k) { return "x+zeta^" + std::to_string(k) + "*y"; }

std::string label_unit(Sign sign, u64 index)
{
	return std::string(sign == Sign::plus ? "varpi_" : "epsilon_") + std::to_string(index);
}

const SymbolExp & ScanRecord::symbol(const std::string & label) const
{
	for (const SymbolEntry & s : symbols)
	{
		if (s.label == label) return s.e;
	}
	throw std::out_of_range("no symbol recorded for " + label);
}

mpz_class scan_value(u64 p, const mpz_class & x, const mpz_class & y, Sign sign)
{
	const mpz_class den = (sign == Sign::plus) ? mpz_class(x + y) : mpz_class(x - y);
	if (den == 0) throw UsageError(sign == Sign::plus ? "x = -y: (x^p + y^p)/(x + y) undefined" : "x = y: (x^p - y^p)/(x - y) undefined");
	mpz_class xp, yp;
	mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), p);
	mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), p);
	const mpz_class num = (sign == Sign::plus) ? mpz_class(xp + yp) : mpz_class(xp - yp);
	mpz_class n;
	mpz_divexact(n.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
	return n;
}

ScanRecord make_record(const FieldCtxPtr & ctx, const mpz_class & x, const mpz_class & y, Sign sign, u64 q)
{
	const u64 p = ctx->p();
	ScanRecord rec;
	rec.p = p;
	rec.x = x;
	rec.y = y;
	rec.sign = sign;
	rec.n = scan_value(p, x, y, sign);
	rec.q = q;

	mpz_class rest = rec.n;
	while (rest != 0 && mpz_divisible_ui_p(rest.get_mpz_t(), q))
	{
		mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
		++rec.multiplicity;
	}
	if (rec.multiplicity == 0) throw UsageError("q = " + std::to_string(q) + " does not divide N");
	if (q % p != 1)
	{
		throw VerificationFailure("q = " + std::to_string(q) + " divides N but q != 1 mod p");
	}
	rec.qmod_p2 = q % (p * p);

	const IdealSearch found = ideal_dividing(ctx, q, x, y, sign);
	if (found.status != IdealSearch::Status::found)
	{
		throw VerificationFailure("no degree-one ideal above q = " + std::to_string(q) + " divides x*zeta " + (sign == Sign::plus ? "+" : "-") + " y");
	}
	rec.ideal = *found.ideal;
	const PrimeIdealRep & ideal = *rec.ideal;

	auto put = [&](std::string label, const CycInt & a) {
		const ResElt r = residue(a, ideal);
		if (!ideal.is_zero(r)) rec.symbols.push_back({std::move(label), symbol_of_residue(r, ideal)});
	};
	rec.symbols.push_back({label_zeta, zeta_symbol(ideal)});
	put(label_x_plus_y, CycInt::integer(ctx, x + y));
	put(label_x_minus_y, CycInt::integer(ctx, x - y));
	for (u64 k = 1; k + 2 <= p; ++k) put(label_binomial(std::int64_t(k)), CycInt::binomial(ctx, x, std::int64_t(k), y));
	for (u64 k = 1; k + 2 <= p; ++k)
	{
		const UnitKind kind = (sign == Sign::plus) ? UnitKind::varpi : UnitKind::epsilon;
		put(label_unit(sign, k + 1), cyc_unit(ctx, {kind, k + 1}));
	}
	return rec;
}

namespace {

struct Factoring
{
	std::vector<u64> primes;
	std::vector<mpz_class> large_primes;
	std::vector<mpz_class> unfactored;
};

Factoring trial_factor(mpz_class n, u64 bound)
{
	Factoring out;
	if (n < 0) n = -n;
	u64 d = 2;
	bool exhausted = false;	// every prime <= sqrt(cofactor) has been tried
	while (n > 1)
	{
		if (fits_u64(n))
		{
			u64 m = to_u64(n);
			for (; d <= bound; d += (d == 2) ? 1 : 2)
			{
				if (u128(d) * d > m) { exhausted = true; break; }
				if (m % d == 0)
				{
					out.primes.push_back(d);
					while (m % d == 0) m /= d;
				}
			}
			n = from_u64(m);
			break;
		}
		if (d > bound) break;
		if (mpz_divisible_ui_p(n.get_mpz_t(), d))
		{
			out.primes.push_back(d);
			while (mpz_divisible_ui_p(n.get_mpz_t(), d)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
		}
		d += (d == 2) ? 1 : 2;
	}
	if (n > 1)
	{
		if (exhausted || is_probable_prime(n))
		{
			if (fits_u64(n)) out.primes.push_back(to_u64(n));
			else out.large_primes.push_back(n);
		}
		else
		{
			out.unfactored.push_back(n);
		}
	}
	std::sort(out.primes.begin(), out.primes.end());
	return out;
}

}

ScanResult scan(const FieldCtxPtr & ctx, const mpz_class & x, const mpz_class & y, Sign sign,
	u64 trial_bound, unsigned jobs)
{
	if (x == 0 || y == 0) throw UsageError("x and y must be nonzero");
	mpz_class g;
	mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
	if (g != 1) throw UsageError("x and y must be coprime");
	if (trial_bound > (u64(1) << 40)) throw UsageError("trial bound must be <= 2^40");

	const u64 p = ctx->p();
	ScanResult result;
	result.n = scan_value(p, x, y, sign);
	if (result.n == 1 || result.n == -1) throw UsageError("N = 1: nothing to scan");

	Factoring fac = trial_factor(result.n, std::max<u64>(trial_bound, 2));
	result.large_primes = std::move(fac.large_primes);
	result.unfactored = std::move(fac.unfactored);

	const mpz_class lin = (sign == Sign::plus) ? mpz_class(x + y) : mpz_class(x - y);
	std::vector<u64> hits;
	for (u64 q : fac.primes)
	{
		const bool excluded = q == p || reduce_mod(x, q) == 0 || reduce_mod(y, q) == 0 || reduce_mod(lin, q) == 0;
		(excluded ? result.excluded : hits).push_back(q);
	}

	result.records.resize(hits.size());
	const unsigned workers = std::max(1u, std::min<unsigned>(jobs, unsigned(hits.size())));
	if (workers <= 1)
	{
		for (std::size_t i = 0; i < hits.size(); ++i) result.records[i] = make_record(ctx, x, y, sign, hits[i]);
	}
	else
	{
		std::vector<std::future<void>> tasks;
		for (unsigned w = 0; w < workers; ++w)
		{
			tasks.push_back(std::async(std::launch::async, [&, w] {
				for (std::size_t i = w; i < hits.size(); i += workers)
				{
					result.records[i] = make_record(ctx, x, y, sign, hits[i]);
				}
			}));
		}
		for (auto & t : tasks) t.get();
	}
	return result;
}

}
