#include "cyclores/regulab.hpp"

#include "cyclores/cycunits.hpp"
#include "cyclores/errors.hpp"

namespace cyclores {

std::vector<u64> split_primes(u64 p, unsigned count)
{
	std::vector<u64> out;
	for (u64 q = 2 * p + 1; out.size() < count; q += 2 * p)
	{
		if (is_prime_u64(q)) out.push_back(q);
	}
	return out;
}

SymbolExp eigen_unit_symbol(const PrimeIdealRep & ideal, u64 g, unsigned k)
{
	if (ideal.f() != 1) throw UsageError("eigencomponent symbols are evaluated at degree-one ideals");
	const FieldCtxPtr & ctx = ideal.ctx();
	const u64 p = ctx->p();
	const CycInt unit = varpi(ctx, g);

	// map each conjugate into F_q, take its symbol, and combine the exponents
	SymbolExp e(p, 0);
	for (u64 a = 1; a < p; ++a)
	{
		const u64 n_a = pow_mod(inv_mod(a, p), u64(k), p);
		e = e + symbol(galois(unit, std::int64_t(a)), ideal).scaled(n_a);
	}
	return e;
}

std::optional<VandiverWitness> vandiver_witness(u64 p, unsigned k, unsigned q_candidates)
{
	if (q_candidates < 1) throw UsageError("need at least one candidate prime");
	bool irregular = false;
	for (const IrregularPair & ip : irregular_pairs(p)) irregular = irregular || ip.k == k;
	if (!irregular)
	{
		throw UsageError("(" + std::to_string(p) + ", " + std::to_string(k) + ") is not an irregular pair");
	}
	const FieldCtxPtr ctx = FieldCtx::make(p);
	const u64 g = primitive_root(p);
	for (u64 q : split_primes(p, q_candidates))
	{
		for (const PrimeIdealRep & ideal : split_prime(ctx, q))
		{
			const SymbolExp e = eigen_unit_symbol(ideal, g, k);
			if (e.e != 0) return VandiverWitness{{p, k}, g, q, ideal.root(), e};
		}
	}
	return std::nullopt;
}

}
