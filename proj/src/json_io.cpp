#include "cyclores/json_io.hpp"

#include <sstream>

#include "cyclores/errors.hpp"

namespace cyclores {

mpz_class parse_integer(const std::string & s)
{
	mpz_class r;
	std::string t = s;
	if (!t.empty() && t[0] == '+') t.erase(0, 1);
	if (t.empty() || r.set_str(t, 10) != 0) throw UsageError("not an integer: '" + s + "'");
	return r;
}

namespace {

mpz_class integer_from_json(const Json & j)
{
	if (j.is_string()) return parse_integer(j.get<std::string>());
	if (j.is_number_integer())
	{
		if (j.is_number_unsigned()) return from_u64(j.get<u64>());
		return mpz_class(std::to_string(j.get<std::int64_t>()));
	}
	throw UsageError("expected an integer or a decimal string");
}

u64 u64_from_json(const Json & j)
{
	const mpz_class v = integer_from_json(j);
	if (!fits_u64(v)) throw UsageError("value does not fit in 64 bits");
	return to_u64(v);
}

std::string join(const std::vector<u64> & v)
{
	std::string s;
	for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
	return s;
}

const char * outcome_name(Check::Outcome o)
{
	switch (o)
	{
		case Check::Outcome::pass: return "pass";
		case Check::Outcome::fail: return "fail";
		case Check::Outcome::skip: return "skip";
		case Check::Outcome::note: return "note";
	}
	return "?";
}

Json chain_json(const std::map<u64, u64> & m)
{
	Json j = Json::object();
	for (const auto & [k, v] : m) j[std::to_string(k)] = v;
	return j;
}

}

Json to_json(const CycInt & a)
{
	Json j = Json::array();
	for (const mpz_class & c : a.coeffs()) j.push_back(c.get_str());
	return j;
}

CycInt cycint_from_json(const FieldCtxPtr & ctx, const Json & j)
{
	if (!j.is_array()) throw UsageError("element must be a JSON array of p-1 integers");
	std::vector<mpz_class> c;
	for (const Json & e : j) c.push_back(integer_from_json(e));
	return CycInt::from_coeffs(ctx, std::move(c));
}

Json to_json(const PrimeIdealRep & ideal)
{
	Json j;
	j["q"] = ideal.q();
	j["f"] = ideal.f();
	j["w"] = ideal.f() == 1 ? std::to_string(ideal.root()) : join(ideal.w().value);
	Json m = Json::array();
	for (u64 c : ideal.modulus()) m.push_back(std::to_string(c));
	j["modulus"] = m;
	return j;
}

PrimeIdealRep ideal_from_json(const FieldCtxPtr & ctx, const Json & j)
{
	try
	{
		const u64 q = u64_from_json(j.at("q"));
		FqPoly modulus;
		for (const Json & c : j.at("modulus")) modulus.push_back(u64_from_json(c));
		ResElt w;
		std::stringstream ss(j.at("w").get<std::string>());
		for (std::string item; std::getline(ss, item, ',');) w.value.push_back(to_u64(parse_integer(item)));
		return PrimeIdealRep(ctx, q, std::move(modulus), std::move(w));
	}
	catch (const Json::exception & e)
	{
		throw UsageError(std::string("malformed ideal: ") + e.what());
	}
}

Json to_json(const ScanRecord & rec)
{
	Json j;
	j["p"] = rec.p;
	j["x"] = rec.x.get_str();
	j["y"] = rec.y.get_str();
	j["sign"] = sign_name(rec.sign);
	j["N"] = rec.n.get_str();
	j["q"] = rec.q;
	j["multiplicity"] = rec.multiplicity;
	j["ideal"] = rec.ideal ? to_json(*rec.ideal) : Json();
	j["qmod_p2"] = rec.qmod_p2;
	Json s = Json::object();
	for (const SymbolEntry & e : rec.symbols) s[e.label] = e.e.e;
	j["symbols"] = s;
	return j;
}

ScanRecord record_from_json(const Json & j)
{
	try
	{
		ScanRecord rec;
		rec.p = u64_from_json(j.at("p"));
		const FieldCtxPtr ctx = FieldCtx::make(rec.p);
		rec.x = integer_from_json(j.at("x"));
		rec.y = integer_from_json(j.at("y"));
		const std::string sign = j.at("sign").get<std::string>();
		if (sign != "plus" && sign != "minus") throw UsageError("sign must be plus or minus");
		rec.sign = (sign == "plus") ? Sign::plus : Sign::minus;
		rec.n = integer_from_json(j.at("N"));
		rec.q = u64_from_json(j.at("q"));
		rec.multiplicity = j.value("multiplicity", 0u);
		rec.ideal = ideal_from_json(ctx, j.at("ideal"));
		rec.qmod_p2 = u64_from_json(j.at("qmod_p2"));
		for (const auto & [label, e] : j.at("symbols").items())
		{
			rec.symbols.push_back({label, SymbolExp(rec.p, u64_from_json(e))});
		}
		return rec;
	}
	catch (const Json::exception & e)
	{
		throw UsageError(std::string("malformed scan record: ") + e.what());
	}
}

Json to_json(const Report & report)
{
	Json j;
	j["ok"] = report.ok();
	j["failures"] = report.failures();
	Json checks = Json::array();
	for (const Check & c : report.checks)
	{
		checks.push_back({{"name", c.name}, {"outcome", outcome_name(c.outcome)}, {"detail", c.detail}});
	}
	j["checks"] = checks;
	return j;
}

Json to_json(const FurtwanglerReport & rep)
{
	Json j;
	j["p2_divides_q_minus_1"] = rep.p2_divides_q_minus_1;
	j["zeta_symbol"] = rep.zeta.e;
	j["p_symbol"] = rep.p_symbol.e;
	Json fam = Json::array();
	for (const SymbolExp & e : rep.family) fam.push_back(e.e);
	j["family"] = fam;
	j["conditional_display_holds"] = rep.conditional_display_holds;
	Json conj = Json::object();
	for (const auto & [k, v] : rep.conjugate_relation) conj[std::to_string(k)] = v;
	j["conjugate_relation"] = conj;
	j["checks"] = to_json(rep.checks);
	return j;
}

Json to_json(const TelescopeReport & rep)
{
	Json j;
	j["p"] = rep.p;
	j["match"] = rep.match;
	j["varpi_collapse"] = rep.varpi_collapse;
	j["consistent"] = rep.consistent;
	j["unit_facts"] = rep.unit_facts;
	j["even_chain"] = chain_json(rep.even_chain);
	j["odd_chain"] = chain_json(rep.odd_chain);
	j["closed_even"] = chain_json(rep.closed_even);
	j["closed_odd"] = chain_json(rep.closed_odd);
	j["varpi_exponents"] = chain_json(rep.varpi_exponents);
	return j;
}

Json to_json(const BarlowAbelReport & rep)
{
	Json j;
	j["p"] = rep.p;
	j["x"] = rep.x.get_str();
	j["y"] = rep.y.get_str();
	j["z"] = rep.z.get_str();
	Json checks = Json::array();
	for (const Check & c : rep.checks)
	{
		checks.push_back({{"relation", c.name}, {"holds", c.outcome == Check::Outcome::pass}, {"detail", c.detail}});
	}
	j["checks"] = checks;
	return j;
}

}
