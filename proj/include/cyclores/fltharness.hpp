#pragma once

// Verification harness for the congruence and symbol identities satisfied by primes q dividing
// (x^p + y^p)/(x + y) (plus-scans) or (x^p - y^p)/(x - y) (minus-scans).
//
// At the ideal q_K dividing x*zeta + y (resp. x*zeta - y) one has y = -x*zeta (resp. x*zeta) mod q_K, so
//   x + zeta^k y = x (1 - zeta^(k+1))   (plus)     x + zeta^k y = x (1 + zeta^(k+1))   (minus)
// and, dividing by x + y = x (1 -/+ zeta), for k = 1..p-2
//   sym(x + zeta^k y) = sym(x + y) + (k/2) sym(zeta) + sym(varpi_{k+1})     (plus)
//   sym(x + zeta^k y) = sym(x + y) + (k/2) sym(zeta) + sym(epsilon_{k+1})   (minus)
// These hold for every coprime (x, y), with no hypothesis on x + y.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclores/powsym.hpp"

namespace cyclores {

const char * sign_name(Sign s);

struct SymbolEntry
{
	std::string label;
	SymbolExp e;
};

struct ScanRecord
{
	u64 p = 0;
	mpz_class x, y;
	Sign sign = Sign::plus;
	mpz_class n;	// (x^p +- y^p)/(x +- y)
	u64 q = 0;
	unsigned multiplicity = 0;
	std::optional<PrimeIdealRep> ideal;
	u64 qmod_p2 = 0;
	std::vector<SymbolEntry> symbols;

	// throws std::out_of_range for unknown labels
	const SymbolExp & symbol(const std::string & label) const;
};

// Labels used in ScanRecord::symbols.
std::string label_binomial(std::int64_t k);	// "x+zeta^k*y"
std::string label_unit(Sign sign, u64 index);	// "varpi_i" / "epsilon_i"
inline const char * label_x_plus_y = "x+y";
inline const char * label_x_minus_y = "x-y";
inline const char * label_zeta = "zeta";

struct ScanResult
{
	mpz_class n;
	std::vector<ScanRecord> records;	// increasing q
	std::vector<u64> excluded;	// prime factors dividing p*x*y*(x +- y)
	std::vector<mpz_class> large_primes;	// prime factors >= 2^64, not processed
	std::vector<mpz_class> unfactored;	// composite cofactors left after trial division
	bool partial() const { return !unfactored.empty() || !large_primes.empty(); }
};

// (x^p +- y^p)/(x +- y); throws UsageError when x +- y = 0.
mpz_class scan_value(u64 p, const mpz_class & x, const mpz_class & y, Sign sign);

// Factor N by trial division up to trial_bound plus a primality test on the cofactor, then build
// one record per prime q with q not dividing p*x*y*(x +- y). Throws VerificationFailure if a hit has
// q != 1 mod p or no ideal divides x*zeta +- y; UsageError for invalid input or N = 1.
ScanResult scan(const FieldCtxPtr & ctx, const mpz_class & x, const mpz_class & y, Sign sign,
	u64 trial_bound, unsigned jobs = 1);

// Record for a known prime q | N, with its ideal located and its symbol table computed.
ScanRecord make_record(const FieldCtxPtr & ctx, const mpz_class & x, const mpz_class & y, Sign sign, u64 q);

struct Check
{
	enum class Outcome { pass, fail, skip, note };
	std::string name;
	Outcome outcome;
	std::string detail;
};

struct Report
{
	std::vector<Check> checks;
	std::size_t count(Check::Outcome o) const;
	std::size_t failures() const { return count(Check::Outcome::fail); }
	bool ok() const { return failures() == 0; }
};

// residue(x + zeta^k y) == residue(x (1 -+ zeta^(k+1))) for k = 1..p-2.
Report verify_congruences(const ScanRecord & rec);

// The symbol identities above for k = 1..p-2, plus the hypothesis-free specialization whenever
// sym(x + y) = 0 and sym(zeta) = 0.
Report verify_symbol_identities(const ScanRecord & rec);

struct FurtwanglerReport
{
	bool p2_divides_q_minus_1 = false;
	SymbolExp zeta;
	SymbolExp p_symbol;
	std::vector<SymbolExp> family;	// sym(1 - zeta^j) (plus) or sym(1 + zeta^j) (minus), j = 1..p-1
	bool conditional_display_holds = false;	// plus: sym(p) = sym(1 - zeta^j) all j; minus: sym(1 + zeta^j) = 0 all j
	std::map<u64, bool> conjugate_relation;	// k = 2..p-2: sym(x + zeta^k y) == sym(x + zeta^(p-k) y)
	Report checks;	// asserted consistency checks only
};

FurtwanglerReport furtwangler_report(const ScanRecord & rec);

struct TelescopeReport
{
	u64 p = 0;
	std::map<u64, u64> even_chain;	// k' -> t-exponent of sym(epsilon_{p-2k'-1})
	std::map<u64, u64> odd_chain;	// k' -> t-exponent of sym(epsilon_{p-2k'})
	std::map<u64, u64> closed_even;	// -k'(k'+1)
	std::map<u64, u64> closed_odd;	// 1/4 - k'^2
	std::map<u64, u64> varpi_exponents;	// i -> t-exponent of sym(varpi_i), i = 1..p-1
	bool unit_facts = false;	// the exact unit identities the replay relies on
	bool varpi_collapse = false;	// every varpi exponent is 0
	bool consistent = false;	// the replayed values satisfy every original recurrence
	bool match = false;	// both chains equal their closed forms
};

// Symbolic replay over Z/p, with sym(zeta) a formal unit t and the exact unit identities checked in Z[zeta].
TelescopeReport telescope_replay(const FieldCtxPtr & ctx);

struct BarlowAbelReport
{
	u64 p = 0;
	mpz_class x, y, z;
	std::vector<Check> checks;	// outcome pass = relation holds, fail = does not hold
	bool holds(const std::string & name) const;
};

inline const char * rel_x_plus_y_power = "x+y is a p-th power";
inline const char * rel_x_plus_z_form = "x+z = p^(nu*p-1) * (p-th power)";
inline const char * rel_y_div_p = "y = 0 mod p";
inline const char * rel_coprime = "x, y, z pairwise coprime";
inline const char * rel_fermat = "x^p + y^p + z^p = 0";

BarlowAbelReport barlow_abel_check(u64 p, const mpz_class & x, const mpz_class & y, const mpz_class & z);

}
