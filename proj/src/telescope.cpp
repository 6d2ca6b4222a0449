#include "cyclores/fltharness.hpp"

#include "cyclores/cycunits.hpp"

namespace cyclores {

namespace {

// sym(u_target) = sym(u_source) + step * t, t the formal symbol of zeta
struct Relation
{
	u64 target, source, step;
};

// Propagate known exponents through the relations until nothing changes.
// Returns false on a contradiction.
bool propagate(std::vector<std::optional<u64>> & value, const std::vector<Relation> & rels, u64 p)
{
	bool changed = true;
	while (changed)
	{
		changed = false;
		for (const Relation & r : rels)
		{
			auto & t = value[r.target];
			auto & s = value[r.source];
			if (s && !t) { t = add_mod(*s, r.step, p); changed = true; }
			else if (t && !s) { s = sub_mod(*t, r.step, p); changed = true; }
			else if (t && s && *t != add_mod(*s, r.step, p)) return false;
		}
	}
	return true;
}

}

TelescopeReport telescope_replay(const FieldCtxPtr & ctx)
{
	const u64 p = ctx->p();
	TelescopeReport rep;
	rep.p = p;

	// exact facts in Z[zeta] the derivation uses
	const CycInt one = CycInt::integer(ctx, 1);
	std::vector<CycInt> eps{one}, vp{one};	// 1-based
	for (u64 a = 1; a < p; ++a)
	{
		eps.push_back(epsilon(ctx, a));
		vp.push_back(varpi(ctx, a));
	}
	bool facts = eps[1] == one && eps[p - 1] == one && vp[1] == one && vp[p - 1] == -one;
	for (u64 k = 2; k + 2 <= p; ++k)
	{
		facts = facts && eps[p - k - 1] == eps[k + 1] && vp[k + 1] == -vp[p - k - 1];
	}
	rep.unit_facts = facts;

	// epsilon: E_{p-k+1} = k t + E_{k+1} (k = 2..p-2); with E_{k+1} = E_{p-k-1} this becomes
	// E_{p-k-1} = E_{p-k+1} - k t. Bases E_1 = E_{p-1} = 0 since epsilon_1 = epsilon_{p-1} = 1.
	std::vector<Relation> original, telescoped;
	for (u64 k = 2; k + 2 <= p; ++k)
	{
		original.push_back({p - k + 1, k + 1, k});
		telescoped.push_back({p - k - 1, p - k + 1, p - k});
	}
	std::vector<std::optional<u64>> e(p);
	e[1] = 0;
	e[p - 1] = 0;
	const bool solvable = propagate(e, telescoped, p);

	bool match = solvable && facts;
	for (u64 kp = 1; 2 * kp + 3 <= p; ++kp)
	{
		const u64 k2 = mul_mod(kp, kp, p);
		rep.closed_even[kp] = sub_mod(0, mul_mod(kp, kp + 1, p), p);
		rep.closed_odd[kp] = sub_mod(ctx->inv4(), k2, p);
		const auto & ev = e[p - 2 * kp - 1];
		const auto & od = e[p - 2 * kp];
		if (ev) rep.even_chain[kp] = *ev;
		if (od) rep.odd_chain[kp] = *od;
		match = match && ev && od && *ev == rep.closed_even[kp] && *od == rep.closed_odd[kp];
	}
	rep.match = match;

	bool consistent = solvable;
	for (u64 i = 1; i < p && consistent; ++i) consistent = e[i].has_value();
	for (const Relation & r : original)
	{
		if (!consistent) break;
		consistent = *e[r.target] == add_mod(*e[r.source], r.step, p);
	}
	rep.consistent = consistent;

	// varpi: W_{k+1} = W_{p-k+1} and W_{k+1} = W_{p-k-1} give W_{p-k+1} = W_{p-k-1};
	// W_1 = 0 (varpi_1 = 1) and W_{p-1} = 0 (varpi_{p-1} = -1, a p-th power)
	std::vector<Relation> vrel;
	for (u64 k = 2; k + 2 <= p; ++k) vrel.push_back({p - k + 1, p - k - 1, 0});
	std::vector<std::optional<u64>> w(p);
	w[1] = 0;
	w[p - 1] = 0;
	bool collapse = propagate(w, vrel, p) && facts;
	for (u64 i = 1; i < p; ++i)
	{
		if (w[i]) rep.varpi_exponents[i] = *w[i];
		collapse = collapse && w[i] && *w[i] == 0;
	}
	rep.varpi_collapse = collapse;
	return rep;
}

}
