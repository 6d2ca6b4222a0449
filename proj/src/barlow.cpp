#include "cyclores/fltharness.hpp"

#include "cyclores/errors.hpp"

namespace cyclores {

namespace {

// exact p-th root of n (p odd, so negative n is allowed)
std::optional<mpz_class> pth_root(const mpz_class & n, u64 p)
{
	mpz_class r;
	if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), p) != 0) return r;
	return std::nullopt;
}

Check relation(const char * name, bool holds, std::string detail)
{
	return {name, holds ? Check::Outcome::pass : Check::Outcome::fail, std::move(detail)};
}

}

bool BarlowAbelReport::holds(const std::string & name) const
{
	for (const Check & c : checks)
	{
		if (c.name == name) return c.outcome == Check::Outcome::pass;
	}
	throw std::out_of_range("unknown relation " + name);
}

BarlowAbelReport barlow_abel_check(u64 p, const mpz_class & x, const mpz_class & y, const mpz_class & z)
{
	if (p < 3 || !is_prime_u64(p)) throw UsageError("p must be an odd prime");
	BarlowAbelReport rep;
	rep.p = p;
	rep.x = x;
	rep.y = y;
	rep.z = z;

	const mpz_class xy = x + y;
	const auto z0 = pth_root(xy, p);
	rep.checks.push_back(relation(rel_x_plus_y_power, z0.has_value(),
		z0 ? "z0=" + z0->get_str() : "x+y=" + xy.get_str() + " is not a p-th power"));

	// x + z = p^(nu p - 1) y0^p: strip every factor p, then the valuation must be = -1 mod p
	const mpz_class xz = x + z;
	if (xz == 0)
	{
		rep.checks.push_back(relation(rel_x_plus_z_form, true, "x+z=0, nu=1, y0=0"));
	}
	else
	{
		mpz_class rest = xz;
		const mpz_class pz = from_u64(p);
		const u64 v = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t());
		const auto root = pth_root(rest, p);
		const bool ok = v >= p - 1 && (v + 1) % p == 0 && root.has_value();
		std::string detail;
		if (ok) detail = "nu=" + std::to_string((v + 1) / p) + ", y0=" + root->get_str();
		else detail = "v_p(x+z)=" + std::to_string(v) + (root ? "" : ", cofactor not a p-th power");
		rep.checks.push_back(relation(rel_x_plus_z_form, ok, detail));
	}

	rep.checks.push_back(relation(rel_y_div_p, reduce_mod(y, p) == 0, "y mod p = " + std::to_string(reduce_mod(y, p))));

	mpz_class gxy, gyz, gzx;
	mpz_gcd(gxy.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
	mpz_gcd(gyz.get_mpz_t(), y.get_mpz_t(), z.get_mpz_t());
	mpz_gcd(gzx.get_mpz_t(), z.get_mpz_t(), x.get_mpz_t());
	rep.checks.push_back(relation(rel_coprime, gxy == 1 && gyz == 1 && gzx == 1,
		"gcds " + gxy.get_str() + ", " + gyz.get_str() + ", " + gzx.get_str()));

	mpz_class xp, yp, zp;
	mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), p);
	mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), p);
	mpz_pow_ui(zp.get_mpz_t(), z.get_mpz_t(), p);
	const mpz_class sum = xp + yp + zp;
	rep.checks.push_back(relation(rel_fermat, sum == 0, "x^p+y^p+z^p=" + sum.get_str()));
	return rep;
}

}
