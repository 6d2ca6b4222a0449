#include "cyclores/cycunits.hpp"

#include "cyclores/errors.hpp"

namespace cyclores {

namespace {

void check_index(const FieldCtx & ctx, u64 a)
{
	if (a < 1 || a > ctx.p() - 1)
	{
		throw UsageError("unit index a = " + std::to_string(a) + " outside 1..p-1");
	}
}

}

u64 half_shift(const FieldCtx & ctx, u64 a)
{
	const u64 p = ctx.p();
	return mul_mod(sub_mod(1, a % p, p), ctx.inv2(), p);
}

CycInt varpi(const FieldCtxPtr & ctx, u64 a)
{
	check_index(*ctx, a);
	// (1 - zeta^a)/(1 - zeta) = 1 + zeta + ... + zeta^(a-1), shifted by zeta^((1-a)/2)
	const std::int64_t shift = std::int64_t(half_shift(*ctx, a));
	std::vector<Term> terms;
	terms.reserve(a);
	for (u64 i = 0; i < a; ++i) terms.push_back({shift + std::int64_t(i), 1});
	return CycInt::from_terms(ctx, terms);
}

CycInt one_plus_zeta_inverse(const FieldCtxPtr & ctx)
{
	return CycInt::from_coeffs(ctx, ctx->one_plus_zeta_inverse());
}

CycInt epsilon(const FieldCtxPtr & ctx, u64 a)
{
	check_index(*ctx, a);
	const std::int64_t shift = std::int64_t(half_shift(*ctx, a));
	const Term t[2] = {{shift, 1}, {shift + std::int64_t(a), 1}};
	return CycInt::from_terms(ctx, t) * one_plus_zeta_inverse(ctx);
}

CycInt cyc_unit(const FieldCtxPtr & ctx, CycUnitLabel label)
{
	return label.kind == UnitKind::varpi ? varpi(ctx, label.a) : epsilon(ctx, label.a);
}

bool unit_product_check(const FieldCtxPtr & ctx)
{
	const u64 p = ctx->p();
	CycInt prod = CycInt::integer(ctx, 1);
	for (u64 a = 1; a < p; ++a) prod = prod * epsilon(ctx, a);
	const CycInt one_plus_zeta = CycInt::binomial(ctx, 1, 1, 1);
	prod = prod * pow(one_plus_zeta, unsigned(p - 1));
	return prod == CycInt::zeta_power(ctx, -std::int64_t(ctx->inv2()));
}

}
