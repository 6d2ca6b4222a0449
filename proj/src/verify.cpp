#include "cyclores/fltharness.hpp"

#include <algorithm>

#include "cyclores/cycunits.hpp"
#include "cyclores/errors.hpp"

namespace cyclores {

std::size_t Report::count(Check::Outcome o) const
{
	return std::size_t(std::count_if(checks.begin(), checks.end(), [o](const Check & c) { return c.outcome == o; }));
}

namespace {

const PrimeIdealRep & ideal_of(const ScanRecord & rec)
{
	if (!rec.ideal) throw UsageError("scan record has no ideal");
	return *rec.ideal;
}

Check::Outcome outcome(bool ok) { return ok ? Check::Outcome::pass : Check::Outcome::fail; }

std::string show(const SymbolExp & s) { return std::to_string(s.e); }

const SymbolExp * find_symbol(const ScanRecord & rec, const std::string & label)
{
	for (const SymbolEntry & s : rec.symbols)
	{
		if (s.label == label) return &s.e;
	}
	return nullptr;
}

}

Report verify_congruences(const ScanRecord & rec)
{
	const PrimeIdealRep & ideal = ideal_of(rec);
	const FieldCtxPtr & ctx = ideal.ctx();
	const u64 p = rec.p;
	const mpz_class sgn_unit = (rec.sign == Sign::plus) ? -1 : 1;	// 1 -+ zeta^(k+1)

	Report report;
	for (u64 k = 1; k + 2 <= p; ++k)
	{
		const ResElt lhs = residue(CycInt::binomial(ctx, rec.x, std::int64_t(k), rec.y), ideal);
		const ResElt rhs = residue(CycInt::binomial(ctx, rec.x, std::int64_t(k + 1), sgn_unit * rec.x), ideal);
		report.checks.push_back({"congruence k=" + std::to_string(k), outcome(lhs == rhs),
			"residues " + std::to_string(lhs.value[0]) + " vs " + std::to_string(rhs.value[0])});
	}
	return report;
}

Report verify_symbol_identities(const ScanRecord & rec)
{
	const PrimeIdealRep & ideal = ideal_of(rec);
	const u64 p = rec.p;
	const u64 inv2 = ideal.ctx()->inv2();

	Report report;
	const SymbolExp * zeta = find_symbol(rec, label_zeta);
	const SymbolExp * xy = find_symbol(rec, label_x_plus_y);
	if (zeta == nullptr || xy == nullptr)
	{
		report.checks.push_back({"symbol table", Check::Outcome::fail, "missing zeta or x+y symbol"});
		return report;
	}
	const bool specialize = xy->e == 0 && zeta->e == 0;
	for (u64 k = 1; k + 2 <= p; ++k)
	{
		const std::string name = "identity k=" + std::to_string(k);
		const SymbolExp * lhs = find_symbol(rec, label_binomial(std::int64_t(k)));
		const SymbolExp * unit = find_symbol(rec, label_unit(rec.sign, k + 1));
		if (lhs == nullptr || unit == nullptr)
		{
			report.checks.push_back({name, Check::Outcome::skip, "skipped: not coprime"});
			continue;
		}
		const SymbolExp shift = zeta->scaled(mul_mod(k, inv2, p));
		const SymbolExp rhs = *xy + shift + *unit;
		report.checks.push_back({name, outcome(*lhs == rhs),
			show(*lhs) + " = " + show(*xy) + " + " + show(shift) + " + " + show(*unit) + " (mod " + std::to_string(p) + ")"});

		if (specialize)
		{
			// specialized forms: varpi_{k+1} alone (plus), zeta^(k/2) epsilon_{k+1} (minus)
			const SymbolExp display = (rec.sign == Sign::plus) ? *unit : shift + *unit;
			report.checks.push_back({"specialized k=" + std::to_string(k), outcome(*lhs == display),
				show(*lhs) + " vs " + show(display)});
		}
	}
	return report;
}

FurtwanglerReport furtwangler_report(const ScanRecord & rec)
{
	const PrimeIdealRep & ideal = ideal_of(rec);
	const FieldCtxPtr & ctx = ideal.ctx();
	const u64 p = rec.p;

	FurtwanglerReport r;
	r.p2_divides_q_minus_1 = (rec.q - 1) % (p * p) == 0;
	r.zeta = zeta_symbol(ideal);
	r.p_symbol = symbol(CycInt::integer(ctx, from_u64(p)), ideal);

	const mpz_class s = (rec.sign == Sign::plus) ? -1 : 1;
	SymbolExp sum_one_minus(p, 0);
	for (u64 j = 1; j < p; ++j)
	{
		r.family.push_back(symbol(CycInt::binomial(ctx, 1, std::int64_t(j), s), ideal));
		if (rec.sign == Sign::minus)
		{
			sum_one_minus = sum_one_minus + symbol(CycInt::binomial(ctx, 1, std::int64_t(j), -1), ideal);
		}
	}
	if (rec.sign == Sign::plus)
	{
		for (const SymbolExp & e : r.family) sum_one_minus = sum_one_minus + e;
		r.conditional_display_holds = std::all_of(r.family.begin(), r.family.end(), [&](const SymbolExp & e) { return e == r.p_symbol; });
	}
	else
	{
		r.conditional_display_holds = std::all_of(r.family.begin(), r.family.end(), [](const SymbolExp & e) { return e.e == 0; });
	}

	r.checks.checks.push_back({"zeta symbol vanishes iff p^2 | q-1", outcome((r.zeta.e == 0) == r.p2_divides_q_minus_1),
		"zeta_symbol=" + show(r.zeta)});
	r.checks.checks.push_back({"sym(p) = sum_j sym(1 - zeta^j)", outcome(r.p_symbol == sum_one_minus),
		show(r.p_symbol) + " vs " + show(sum_one_minus)});

	for (u64 k = 2; k + 2 <= p; ++k)
	{
		const SymbolExp * a = find_symbol(rec, label_binomial(std::int64_t(k)));
		const SymbolExp * b = find_symbol(rec, label_binomial(std::int64_t(p - k)));
		if (a && b) r.conjugate_relation[k] = (*a == *b);
	}
	return r;
}

}
