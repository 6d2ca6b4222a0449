#include "cyclores/powsym.hpp"

#include "cyclores/errors.hpp"

namespace cyclores {

namespace {

// discrete log of r in <w> by linear scan
SymbolExp log_in_mu_p(const ResElt & r, const PrimeIdealRep & ideal)
{
	const u64 p = ideal.p();
	ResElt acc = ideal.one();
	for (u64 e = 0; e < p; ++e)
	{
		if (acc == r) return SymbolExp(p, e);
		acc = ideal.mul(acc, ideal.w());
	}
	throw InternalError("Euler criterion value is not a power of w");
}

mpz_class euler_exponent(const PrimeIdealRep & ideal)
{
	return (ideal.field_order() - 1) / mpz_class(from_u64(ideal.p()));
}

}

bool symbol_supported(const PrimeIdealRep & ideal)
{
	if (ideal.f() == 1) return true;
	return ideal.f() <= 4 && mpz_sizeinbase(ideal.field_order().get_mpz_t(), 2) <= 128;
}

SymbolExp symbol_of_residue(const ResElt & r, const PrimeIdealRep & ideal)
{
	if (!symbol_supported(ideal)) throw UsageError("symbols need f <= 4 and q^f < 2^128");
	if (ideal.is_zero(r)) throw NotCoprime("element is not coprime to the ideal");
	if (ideal.f() == 1)
	{
		const u64 q = ideal.q();
		const u64 v = pow_mod(r.value[0], (q - 1) / ideal.p(), q);
		return log_in_mu_p(ResElt{{v}}, ideal);
	}
	return log_in_mu_p(ideal.pow(r, euler_exponent(ideal)), ideal);
}

SymbolExp symbol(const CycInt & a, const PrimeIdealRep & ideal)
{
	return symbol_of_residue(residue(a, ideal), ideal);
}

SymbolExp zeta_symbol(const PrimeIdealRep & ideal)
{
	const u64 p = ideal.p();
	return SymbolExp(p, reduce_mod(euler_exponent(ideal), p));
}

std::vector<SymbolExp> symbol_vector(std::span<const CycInt> items, const PrimeIdealRep & ideal)
{
	if (!symbol_supported(ideal)) throw UsageError("symbols need f <= 4 and q^f < 2^128");
	const mpz_class e = euler_exponent(ideal);
	std::vector<SymbolExp> out;
	out.reserve(items.size());
	for (std::size_t i = 0; i < items.size(); ++i)
	{
		const ResElt r = residue(items[i], ideal);
		if (ideal.is_zero(r))
		{
			throw NotCoprime("item " + std::to_string(i) + " is not coprime to the ideal", i);
		}
		out.push_back(log_in_mu_p(ideal.pow(r, e), ideal));
	}
	return out;
}

}
