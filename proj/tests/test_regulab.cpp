#include <doctest.h>

#include "cyclores/errors.hpp"
#include "cyclores/regulab.hpp"
#include "oracles.hpp"

using namespace cyclores;

namespace {

bool irregular_from_scratch(u64 p)
{
	for (unsigned k = 2; k + 3 <= p; k += 2)
	{
		mpq_class b = oracle::akiyama_tanigawa(k);
		if (mpz_divisible_ui_p(b.get_num_mpz_t(), p)) return true;
	}
	return false;
}

}

TEST_CASE("bernoulli examples")
{
	CHECK(bernoulli(0) == 1);
	CHECK(bernoulli(1) == mpq_class(-1, 2));
	CHECK(bernoulli(2) == mpq_class(1, 6));
	CHECK(bernoulli(3) == 0);
	CHECK(bernoulli(12) == mpq_class(-691, 2730));
}

TEST_CASE("bernoulli agrees with Akiyama-Tanigawa")
{
	for (unsigned n = 0; n <= 80; ++n)
	{
		mpq_class b = oracle::akiyama_tanigawa(n);
		if (n == 1) b = -b;
		CHECK(bernoulli(n) == b);
	}
}

TEST_CASE("von Staudt-Clausen denominators")
{
	for (unsigned n = 2; n <= 120; n += 2)
	{
		mpz_class den = 1;
		for (u64 l = 2; l <= n + 1; ++l)
		{
			if (oracle::is_prime(l) && n % (l - 1) == 0) den *= mpz_class(std::to_string(l));
		}
		CHECK(bernoulli(n).get_den() == den);
	}
}

TEST_CASE("irregular pairs")
{
	CHECK(irregular_pairs(7).empty());
	CHECK(irregular_pairs(3).empty());
	CHECK(irregular_pairs(37) == std::vector<IrregularPair>{{37, 32}});
	CHECK(irregular_pairs(59) == std::vector<IrregularPair>{{59, 44}});
	CHECK(irregular_pairs(67) == std::vector<IrregularPair>{{67, 58}});
	CHECK_THROWS_AS(irregular_pairs(9), UsageError);
	for (u64 p = 5; p < 70; p += 2)
	{
		if (!oracle::is_prime(p)) continue;
		CHECK(irregular_pairs(p).empty() == !irregular_from_scratch(p));
	}
}

TEST_CASE("h^- examples")
{
	CHECK(h_minus(3) == 1);
	CHECK(h_minus(5) == 1);
	CHECK(h_minus(7) == 1);
	CHECK(h_minus(23) == 3);
	CHECK(h_minus(31) == 9);
	CHECK(h_minus(37) == 37);
	CHECK(h_minus(41) == 121);
}

TEST_CASE("h^- agrees with the exact determinant")
{
	for (u64 p = 3; p < 110; p += 2)
	{
		if (!oracle::is_prime(p)) continue;
		CAPTURE(p);
		CHECK(h_minus(p) == oracle::exact_h_minus(p, primitive_root(p)));
	}
}

TEST_CASE("h^- is stable under doubled precision")
{
	for (u64 p : {23, 59, 97})
	{
		const HMinusResult r = h_minus_detailed(p);
		CHECK(r.distance <= r.error_bound);
		CHECK(r.error_bound < 0.25);
		CHECK(h_minus_at_precision(p, 2 * r.precision_bits).value == r.value);
	}
}

TEST_CASE("Vandiver witness for (37, 32)")
{
	const auto w = vandiver_witness(37, 32, 10);
	REQUIRE(w.has_value());
	CHECK(w->g == 2);
	CHECK(w->q % 37 == 1);
	CHECK(w->e.e != 0);
	// regression: first witnessing ideal in scan order
	CHECK(w->q == 149u);
	CHECK(w->w == 5u);
	CHECK(w->e.e == 23);

	const auto ctx = FieldCtx::make(37);
	const auto ideal = PrimeIdealRep::degree_one(ctx, w->q, w->w);
	CHECK(eigen_unit_symbol(ideal, w->g, 32) == w->e);

	// vanishing does not depend on the ideal above a fixed q
	for (u64 q : split_primes(37, 10))
	{
		const auto ideals = split_prime(ctx, q);
		const bool zero = eigen_unit_symbol(ideals[0], 2, 32).e == 0;
		for (const auto & i : ideals) CHECK((eigen_unit_symbol(i, 2, 32).e == 0) == zero);
	}

	// same input, same answer
	const auto again = vandiver_witness(37, 32, 10);
	CHECK(again->q == w->q);
	CHECK(again->e == w->e);

	CHECK_THROWS_AS(vandiver_witness(7, 2, 10), UsageError);
	CHECK_THROWS_AS(vandiver_witness(37, 30, 10), UsageError);
}

TEST_CASE("split primes")
{
	CHECK(split_primes(5, 4) == std::vector<u64>{11, 31, 41, 61});
	CHECK(split_primes(37, 2) == std::vector<u64>{149, 223});
}
