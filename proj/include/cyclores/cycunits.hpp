#pragma once

// The totally real cyclotomic units
//   varpi_a   = zeta^((1-a)/2) (1 - zeta^a) / (1 - zeta)
//   epsilon_a = zeta^((1-a)/2) (1 + zeta^a) / (1 + zeta)
// for 1 <= a <= p-1. The exponent (1-a)/2 is read mod p.

#include "cyclores/cycint.hpp"

namespace cyclores {

enum class UnitKind { varpi, epsilon };

struct CycUnitLabel
{
	UnitKind kind;
	u64 a;
};

// (1-a)/2 mod p
u64 half_shift(const FieldCtx & ctx, u64 a);

CycInt varpi(const FieldCtxPtr & ctx, u64 a);
CycInt epsilon(const FieldCtxPtr & ctx, u64 a);
CycInt cyc_unit(const FieldCtxPtr & ctx, CycUnitLabel label);

CycInt one_plus_zeta_inverse(const FieldCtxPtr & ctx);

// prod_{a=1}^{p-1} epsilon_a * (1+zeta)^(p-1) == zeta^(-1/2)
bool unit_product_check(const FieldCtxPtr & ctx);

}
