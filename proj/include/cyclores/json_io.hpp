#pragma once

// JSON forms used by the command-line tool. Big integers are decimal strings.

#include <json.hpp>

#include "cyclores/fltharness.hpp"
#include "cyclores/regulab.hpp"

namespace cyclores {

using Json = nlohmann::ordered_json;

// CycInt <-> array of p-1 decimal strings, coefficient of zeta^i at index i.
Json to_json(const CycInt & a);
CycInt cycint_from_json(const FieldCtxPtr & ctx, const Json & j);

// {"q": u64, "f": u32, "w": string, "modulus": [strings]}; for f > 1, "w" lists the
// coefficients of the image of zeta, comma separated, constant term first.
Json to_json(const PrimeIdealRep & ideal);
PrimeIdealRep ideal_from_json(const FieldCtxPtr & ctx, const Json & j);

Json to_json(const ScanRecord & rec);
// The stored symbol table is read back as-is; callers re-derive it to check it.
ScanRecord record_from_json(const Json & j);

Json to_json(const Report & report);
Json to_json(const FurtwanglerReport & rep);
Json to_json(const TelescopeReport & rep);
Json to_json(const BarlowAbelReport & rep);

mpz_class parse_integer(const std::string & s);

}
