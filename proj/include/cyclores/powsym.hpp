#pragma once

// p-th power residue symbols (alpha / q_K) recorded as exponents: (alpha / q_K) = zeta^e, e in Z/p.
// The trivial symbol (value 1) is e = 0, and symbols multiply by adding exponents mod p.
// A symbol depends on the ideal, i.e. on the image w of zeta.

#include <span>
#include <vector>

#include "cyclores/resfield.hpp"

namespace cyclores {

struct SymbolExp
{
	u64 p = 0;
	u64 e = 0;	// in [0, p)

	SymbolExp() = default;
	SymbolExp(u64 p_, u64 e_) : p(p_), e(e_ % p_) {}
	friend bool operator==(const SymbolExp &, const SymbolExp &) = default;
	friend SymbolExp operator+(SymbolExp a, SymbolExp b) { return SymbolExp(a.p, add_mod(a.e, b.e, a.p)); }
	friend SymbolExp operator-(SymbolExp a, SymbolExp b) { return SymbolExp(a.p, sub_mod(a.e, b.e, a.p)); }
	SymbolExp scaled(u64 k) const { return SymbolExp(p, mul_mod(e, k % p, p)); }
};

// Symbols are supported for f = 1, and for f <= 4 with q^f < 2^128.
bool symbol_supported(const PrimeIdealRep & ideal);

// Euler criterion: residue^((q^f - 1)/p) = w^e.
// Throws NotCoprime when the residue is zero.
SymbolExp symbol(const CycInt & a, const PrimeIdealRep & ideal);

// Symbol of an element already reduced to the residue field.
SymbolExp symbol_of_residue(const ResElt & r, const PrimeIdealRep & ideal);

// (zeta / q_K) in closed form: (q^f - 1)/p mod p.
SymbolExp zeta_symbol(const PrimeIdealRep & ideal);

// Elementwise symbols sharing one exponent; NotCoprime carries the failing index.
std::vector<SymbolExp> symbol_vector(std::span<const CycInt> items, const PrimeIdealRep & ideal);

}
