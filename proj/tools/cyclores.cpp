// cyclores: command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 usage, 2 verification failure, 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cyclores/cyclores.hpp"

using namespace cyclores;

namespace {

enum Exit { ok = 0, usage = 1, verification = 2, internal = 3 };

void emit(const Json & j) { std::cout << j.dump() << '\n'; }

Sign parse_sign(const std::string & s)
{
	if (s == "plus") return Sign::plus;
	if (s == "minus") return Sign::minus;
	throw UsageError("--sign must be plus or minus");
}

Json parse_json_arg(const std::string & flag, const std::string & text)
{
	try
	{
		return Json::parse(text);
	}
	catch (const Json::exception &)
	{
		throw UsageError(flag + " is not valid JSON: " + text);
	}
}

// An ideal above q, by its degree-one root or by its modulus coefficients (constant term first).
PrimeIdealRep pick_ideal(const FieldCtxPtr & ctx, u64 q, const std::optional<u64> & w, const std::string & modulus)
{
	if (!is_prime_u64(q)) throw UsageError("q = " + std::to_string(q) + " is not prime");
	if (w && !modulus.empty()) throw UsageError("give either --w or --modulus, not both");
	if (w) return PrimeIdealRep::degree_one(ctx, q, *w);
	if (modulus.empty()) throw UsageError("an ideal needs --w or --modulus");
	FqPoly m;
	for (const Json & c : parse_json_arg("--modulus", modulus))
	{
		const mpz_class v = c.is_string() ? parse_integer(c.get<std::string>()) : mpz_class(c.dump());
		if (v < 0 || v >= from_u64(q)) throw UsageError("modulus coefficients must lie in [0, q)");
		m.push_back(to_u64(v));
	}
	for (const auto & ideal : split_prime(ctx, q))
	{
		if (ideal.modulus() == m) return ideal;
	}
	throw UsageError("no prime ideal above q has that modulus");
}

unsigned default_jobs()
{
	if (const char * env = std::getenv("CYCLORES_JOBS"))
	{
		try
		{
			const unsigned long n = std::stoul(env);
			if (n >= 1 && n <= 256) return unsigned(n);
		}
		catch (const std::exception &)
		{
		}
		std::cerr << "ignoring CYCLORES_JOBS=" << env << '\n';
	}
	return 1;
}

Json verify_record(const ScanRecord & stored, bool & all_ok)
{
	const FieldCtxPtr ctx = FieldCtx::make(stored.p);
	Json out;
	out["q"] = stored.q;
	out["x"] = stored.x.get_str();
	out["y"] = stored.y.get_str();
	out["sign"] = sign_name(stored.sign);

	// re-derive everything from (p, x, y, sign, q) and compare with what was stored
	const ScanRecord fresh = make_record(ctx, stored.x, stored.y, stored.sign, stored.q);
	Report stored_check;
	const Json a = to_json(fresh), b = to_json(stored);
	for (const char * key : {"N", "ideal", "qmod_p2"})
	{
		const bool same = a[key] == b[key];
		stored_check.checks.push_back({std::string("stored ") + key,
			same ? Check::Outcome::pass : Check::Outcome::fail, same ? "" : "recomputed " + a[key].dump()});
	}
	for (const SymbolEntry & s : fresh.symbols)
	{
		const auto it = b["symbols"].find(s.label);
		const bool same = it != b["symbols"].end() && *it == s.e.e;
		stored_check.checks.push_back({"stored symbol " + s.label,
			same ? Check::Outcome::pass : Check::Outcome::fail, same ? "" : "recomputed " + std::to_string(s.e.e)});
	}
	if (b["symbols"].size() != fresh.symbols.size())
	{
		stored_check.checks.push_back({"stored symbol labels", Check::Outcome::fail, "unexpected labels"});
	}

	const Report cong = verify_congruences(stored);
	const Report ident = verify_symbol_identities(stored);
	const FurtwanglerReport furt = furtwangler_report(stored);
	out["stored"] = to_json(stored_check);
	out["congruences"] = to_json(cong);
	out["symbol_identities"] = to_json(ident);
	out["furtwangler"] = to_json(furt);
	const bool good = stored_check.ok() && cong.ok() && ident.ok() && furt.checks.ok();
	out["ok"] = good;
	all_ok = all_ok && good;
	return out;
}

}

int main(int argc, char ** argv)
{
	CLI::App app{"exact arithmetic and power residue symbols in Z[zeta_p]", "cyclores"};
	app.require_subcommand(1);
	app.set_help_all_flag("--help-all");

	u64 p = 0, q = 0, pmax = 97;
	unsigned k = 0, candidates = 10, jobs = default_jobs();
	u64 trial_bound = 1000000;
	std::optional<u64> w, a_index;
	std::string modulus, alpha, xs, ys, zs, sign = "plus", out_path, in_path;

	auto * split = app.add_subcommand("split", "prime ideals above q");
	split->add_option("--p", p)->required();
	split->add_option("--q", q)->required();

	auto * sym = app.add_subcommand("symbol", "power residue symbol exponent");
	sym->add_option("--p", p)->required();
	sym->add_option("--q", q)->required();
	sym->add_option("--w", w, "image of zeta (degree-one ideals)");
	sym->add_option("--modulus", modulus, "JSON list of modulus coefficients, constant term first");
	sym->add_option("--alpha", alpha, "JSON list of p-1 coefficients")->required();

	auto * units = app.add_subcommand("units", "cyclotomic units varpi_a, epsilon_a");
	units->add_option("--p", p)->required();
	units->add_option("--a", a_index, "single index (default: all)");

	auto * irr = app.add_subcommand("irregular", "irregular pairs (p, k)");
	irr->add_option("--p", p)->required();

	auto * hm = app.add_subcommand("hminus", "relative class number");
	hm->add_option("--p", p)->required();

	auto * van = app.add_subcommand("vandiver", "search for a non-p-th-power certificate");
	van->add_option("--p", p)->required();
	van->add_option("--k", k)->required();
	van->add_option("--candidates", candidates)->check(CLI::Range(1u, 100000u));

	auto * sc = app.add_subcommand("scan", "primes dividing (x^p +- y^p)/(x +- y)");
	sc->add_option("--p", p)->required();
	sc->add_option("--x", xs)->required();
	sc->add_option("--y", ys)->required();
	sc->add_option("--sign", sign)->check(CLI::IsMember({"plus", "minus"}));
	sc->add_option("--trial-bound", trial_bound);
	sc->add_option("--out", out_path, "JSON-lines file for the records");
	sc->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

	auto * ver = app.add_subcommand("verify", "re-derive and check stored scan records");
	ver->add_option("--in", in_path)->required();

	auto * tel = app.add_subcommand("telescope", "symbolic replay of the telescoping chains");
	tel->add_option("--pmax", pmax);

	auto * bar = app.add_subcommand("barlow", "Barlow-Abel relation format check");
	bar->add_option("--p", p)->required();
	bar->add_option("--x", xs)->required();
	bar->add_option("--y", ys)->required();
	bar->add_option("--z", zs)->required();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp & e)
	{
		return app.exit(e);
	}
	catch (const CLI::CallForAllHelp & e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError & e)
	{
		app.exit(e);
		return usage;
	}

	try
	{
		if (*split)
		{
			const auto ctx = FieldCtx::make(p);
			if (!is_prime_u64(q)) throw UsageError("q = " + std::to_string(q) + " is not prime");
			const auto ideals = split_prime(ctx, q);
			Json j{{"p", p}, {"q", q}, {"f", ideals.front().f()}, {"count", ideals.size()}};
			Json list = Json::array();
			for (const auto & i : ideals) list.push_back(to_json(i));
			j["ideals"] = list;
			emit(j);
		}
		else if (*sym)
		{
			const auto ctx = FieldCtx::make(p);
			const PrimeIdealRep ideal = pick_ideal(ctx, q, w, modulus);
			const CycInt a = cycint_from_json(ctx, parse_json_arg("--alpha", alpha));
			emit(Json{{"e", symbol(a, ideal).e}});
		}
		else if (*units)
		{
			const auto ctx = FieldCtx::make(p);
			Json list = Json::array();
			for (u64 a = 1; a < p; ++a)
			{
				if (a_index && *a_index != a) continue;
				const CycInt v = varpi(ctx, a), e = epsilon(ctx, a);
				list.push_back({{"a", a}, {"varpi", to_json(v)}, {"epsilon", to_json(e)},
					{"norm_varpi", norm(v).get_str()}, {"norm_epsilon", norm(e).get_str()}});
			}
			if (a_index) (void)varpi(ctx, *a_index);	// range check
			const bool prod = unit_product_check(ctx);
			emit(Json{{"p", p}, {"units", list}, {"product_identity", prod}});
			if (!prod) return verification;
		}
		else if (*irr)
		{
			Json ks = Json::array();
			const auto pairs = irregular_pairs(p);
			for (const auto & pr : pairs) ks.push_back(pr.k);
			emit(Json{{"p", p}, {"regular", pairs.empty()}, {"k", ks}});
		}
		else if (*hm)
		{
			if (!is_prime_u64(p) || p < 3) throw UsageError("p must be an odd prime");
			const HMinusResult r = h_minus_detailed(p);
			const bool divides = mpz_divisible_ui_p(r.value.get_mpz_t(), p) != 0;
			emit(Json{{"p", p}, {"h_minus", r.value.get_str()}, {"p_divides", divides},
				{"precision_bits", r.precision_bits}, {"error_bound", r.error_bound}, {"distance", r.distance}});
		}
		else if (*van)
		{
			const auto wit = vandiver_witness(p, k, candidates);
			Json j{{"p", p}, {"k", k}, {"candidates", candidates}};
			if (wit)
			{
				j["status"] = "witness";
				j["g"] = wit->g;
				j["q"] = wit->q;
				j["w"] = std::to_string(wit->w);
				j["e"] = wit->e.e;
			}
			else
			{
				j["status"] = "inconclusive";
				j["g"] = primitive_root(p);
			}
			emit(j);
		}
		else if (*sc)
		{
			const auto ctx = FieldCtx::make(p);
			const mpz_class x = parse_integer(xs), y = parse_integer(ys);
			const ScanResult res = scan(ctx, x, y, parse_sign(sign), trial_bound, jobs);

			Json summary{{"p", p}, {"x", x.get_str()}, {"y", y.get_str()}, {"sign", sign},
				{"N", res.n.get_str()}, {"records", res.records.size()}};
			Json qs = Json::array(), ex = Json::array(), big = Json::array(), rest = Json::array();
			for (const auto & r : res.records) qs.push_back(r.q);
			for (u64 e : res.excluded) ex.push_back(e);
			for (const auto & l : res.large_primes) big.push_back(l.get_str());
			for (const auto & u : res.unfactored) rest.push_back(u.get_str());
			summary["q"] = qs;
			summary["excluded"] = ex;
			summary["large_primes"] = big;
			summary["unfactored"] = rest;
			summary["partial"] = res.partial();

			if (!out_path.empty())
			{
				std::ofstream f(out_path, std::ios::binary);
				if (!f) throw UsageError("cannot write " + out_path);
				for (const auto & r : res.records) f << to_json(r).dump() << '\n';
				if (!f.flush()) throw UsageError("write failed: " + out_path);
				emit(summary);
			}
			else
			{
				for (const auto & r : res.records) emit(to_json(r));
				std::cerr << summary.dump() << '\n';
			}
			if (res.partial()) std::cerr << "warning: N not completely factored\n";
		}
		else if (*ver)
		{
			std::ifstream f(in_path);
			if (!f) throw UsageError("cannot read " + in_path);
			bool all_ok = true;
			Json recs = Json::array();
			std::size_t line_no = 0;
			for (std::string line; std::getline(f, line);)
			{
				++line_no;
				if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
				Json j;
				try
				{
					j = Json::parse(line);
				}
				catch (const Json::exception &)
				{
					throw UsageError(in_path + ":" + std::to_string(line_no) + ": not JSON");
				}
				recs.push_back(verify_record(record_from_json(j), all_ok));
			}
			std::size_t bad = 0;
			for (const auto & r : recs) bad += r["ok"].get<bool>() ? 0 : 1;
			emit(Json{{"ok", all_ok}, {"records", recs.size()}, {"failed_records", bad}, {"results", recs}});
			if (!all_ok) return verification;
		}
		else if (*tel)
		{
			if (pmax < 5 || pmax > 2000) throw UsageError("--pmax must lie in [5, 2000]");
			bool all = true;
			Json list = Json::array();
			for (u64 pp = 5; pp <= pmax; pp += 2)
			{
				if (!is_prime_u64(pp)) continue;
				const TelescopeReport r = telescope_replay(FieldCtx::make(pp));
				all = all && r.match && r.varpi_collapse && r.consistent && r.unit_facts;
				list.push_back(to_json(r));
			}
			emit(Json{{"match", all}, {"pmax", pmax}, {"primes", list}});
			if (!all) return verification;
		}
		else if (*bar)
		{
			if (!is_prime_u64(p) || p < 3) throw UsageError("p must be an odd prime");
			const mpz_class x = parse_integer(xs), y = parse_integer(ys), z = parse_integer(zs);
			if (x == 0 || y == 0 || z == 0) throw UsageError("x, y, z must be nonzero");
			emit(to_json(barlow_abel_check(p, x, y, z)));
		}
		return ok;
	}
	catch (const UsageError & e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return usage;
	}
	catch (const NotCoprime & e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return usage;
	}
	catch (const ContextMismatch & e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return usage;
	}
	catch (const VerificationFailure & e)
	{
		std::cerr << "verification failure: " << e.what() << '\n';
		return verification;
	}
	catch (const std::exception & e)
	{
		std::cerr << "internal error: " << e.what() << '\n';
		return internal;
	}
}
