#include <doctest.h>

#include "cyclores/cycunits.hpp"
#include "cyclores/errors.hpp"
#include "cyclores/resfield.hpp"
#include "oracles.hpp"

using namespace cyclores;

TEST_CASE("completely split prime: roots by exhaustive search")
{
	const auto ctx = FieldCtx::make(5);
	const auto ideals = split_prime(ctx, 11);
	REQUIRE(ideals.size() == 4);
	std::vector<u64> roots;
	for (const auto & i : ideals)
	{
		CHECK(i.f() == 1);
		roots.push_back(i.root());
	}
	CHECK(roots == std::vector<u64>{3, 4, 5, 9});
	CHECK(roots == oracle::roots_of_unity(5, 11));
}

TEST_CASE("residue degree and number of ideals")
{
	const auto ctx = FieldCtx::make(5);
	auto i19 = split_prime(ctx, 19);
	CHECK(i19.size() == 2);
	CHECK(i19[0].f() == 2);
	auto i7 = split_prime(ctx, 7);
	CHECK(i7.size() == 1);
	CHECK(i7[0].f() == 4);

	for (u64 p : {5, 7, 11, 13})
	{
		const auto c = FieldCtx::make(p);
		for (u64 q = 2; q < 120; ++q)
		{
			if (!oracle::is_prime(q) || q == p) continue;
			const auto ideals = split_prime(c, q);
			REQUIRE(!ideals.empty());
			CHECK(ideals.size() * ideals[0].f() == p - 1);
			u64 order = 1;
			while (oracle::powm(q, order, p) != 1) ++order;
			CHECK(ideals[0].f() == order);
			for (const auto & i : ideals)
			{
				CHECK(i.pow(i.w(), p) == i.one());
				CHECK(!(i.w() == i.one()));
			}
		}
	}
}

TEST_CASE("moduli of inert-type splittings match an independent factorization")
{
	// factors of Phi_p mod q computed with a computer algebra system, constant term first
	struct Case { u64 p, q; std::vector<FqPoly> mods; };
	const std::vector<Case> cases = {
		{5, 19, {{1, 5, 1}, {1, 15, 1}}},
		{7, 2, {{1, 0, 1, 1}, {1, 1, 0, 1}}},
		{5, 7, {{1, 1, 1, 1, 1}}},
		{11, 3, {{2, 0, 1, 2, 1, 1}, {2, 2, 1, 2, 0, 1}}},
		{13, 5, {{1, 1, 4, 1, 1}, {1, 2, 1, 2, 1}, {1, 3, 0, 3, 1}}},
	};
	for (const Case & c : cases)
	{
		const auto ideals = split_prime(FieldCtx::make(c.p), c.q);
		REQUIRE(ideals.size() == c.mods.size());
		for (std::size_t i = 0; i < ideals.size(); ++i) CHECK(ideals[i].modulus() == c.mods[i]);
	}
}

TEST_CASE("ramified and composite q are rejected")
{
	const auto ctx = FieldCtx::make(5);
	CHECK_THROWS_AS(split_prime(ctx, 5), UsageError);
	CHECK_THROWS_AS(split_prime(ctx, 21), UsageError);
	CHECK_THROWS_AS(PrimeIdealRep::degree_one(ctx, 11, 1), UsageError);	// w = 1
	CHECK_THROWS_AS(PrimeIdealRep::degree_one(ctx, 11, 2), UsageError);	// 2^5 != 1 mod 11
}

TEST_CASE("residue examples")
{
	const auto ctx = FieldCtx::make(5);
	const auto ideal = PrimeIdealRep::degree_one(ctx, 11, 5);
	CHECK(residue(CycInt::binomial(ctx, 2, 1, 1), ideal).value[0] == 7);
	CHECK(residue(CycInt(ctx), ideal).value[0] == 0);
	CHECK(residue(varpi(ctx, 2), ideal).value[0] == 7);
}

TEST_CASE("residue is a ring homomorphism")
{
	std::mt19937_64 rng(5);
	for (u64 p : {5, 7})
	{
		const auto ctx = FieldCtx::make(p);
		for (u64 q = 2; q < 100; ++q)
		{
			if (!oracle::is_prime(q) || q == p) continue;
			for (const auto & ideal : split_prime(ctx, q))
			{
				for (int trial = 0; trial < 4; ++trial)
				{
					const CycInt a = oracle::random_element(ctx, rng, 20);
					const CycInt b = oracle::random_element(ctx, rng, 20);
					CHECK(residue(a * b, ideal) == ideal.mul(residue(a, ideal), residue(b, ideal)));
					CHECK(residue(a + b, ideal) == ideal.add(residue(a, ideal), residue(b, ideal)));
				}
				if (ideal.f() == 1)
				{
					const CycInt a = oracle::random_element(ctx, rng, 50);
					CHECK(residue(a, ideal).value[0] == oracle::eval_at(a, ideal.root(), q));
				}
			}
		}
	}
}

TEST_CASE("product of (1 - w) over the split ideals is p mod q")
{
	for (u64 p : {5, 7, 11})
	{
		const auto ctx = FieldCtx::make(p);
		for (u64 q = 2 * p + 1; q < 600; q += 2 * p)
		{
			if (!oracle::is_prime(q)) continue;
			u64 prod = 1;
			for (const auto & ideal : split_prime(ctx, q))
			{
				prod = mul_mod(prod, residue(CycInt::binomial(ctx, 1, 1, -1), ideal).value[0], q);
			}
			CHECK(prod == p % q);
		}
	}
}

TEST_CASE("ideal dividing x zeta +- y")
{
	const auto ctx = FieldCtx::make(5);
	auto plus = ideal_dividing(ctx, 11, 2, 1, Sign::plus);
	REQUIRE(plus.status == IdealSearch::Status::found);
	CHECK(plus.ideal->root() == 5);

	auto minus = ideal_dividing(ctx, 31, 2, 1, Sign::minus);
	REQUIRE(minus.status == IdealSearch::Status::found);
	CHECK(minus.ideal->root() == 16);

	auto inert = ideal_dividing(ctx, 19, 2, 1, Sign::plus);
	CHECK(inert.status == IdealSearch::Status::no_degree_one_ideal);
	CHECK(!inert.ideal);

	// w = -y/x = -1 has order 2, so no ideal above 11 divides zeta + 1
	auto none = ideal_dividing(ctx, 11, 1, 1, Sign::plus);
	CHECK(none.status == IdealSearch::Status::no_matching_root);

	CHECK_THROWS_AS(ideal_dividing(ctx, 11, 11, 1, Sign::plus), UsageError);
}

TEST_CASE("galois image of an ideal")
{
	const auto ctx = FieldCtx::make(7);
	for (u64 q : {29, 43, 13, 2})
	{
		const auto ideals = split_prime(ctx, q);
		for (const auto & ideal : ideals)
		{
			for (std::int64_t k = 1; k < 7; ++k)
			{
				const PrimeIdealRep img = galois_ideal(ideal, GaloisElt(7, k));
				CHECK(std::find(ideals.begin(), ideals.end(), img) != ideals.end());
				// s_k(a) mod s_k(q_K) corresponds to a mod q_K
				const CycInt a = CycInt::binomial(ctx, 3, 2, 5);
				if (ideal.f() == 1) CHECK(residue(galois(a, k), img) == residue(a, ideal));
			}
			CHECK(galois_ideal(ideal, GaloisElt(7, 1)) == ideal);
		}
	}
}
