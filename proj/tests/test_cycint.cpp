#include <doctest.h>

#include "cyclores/cycint.hpp"
#include "cyclores/cycunits.hpp"
#include "cyclores/errors.hpp"
#include "oracles.hpp"

using namespace cyclores;

namespace {

std::vector<mpz_class> v(std::initializer_list<long> xs)
{
	std::vector<mpz_class> r;
	for (long x : xs) r.emplace_back(x);
	return r;
}

}

TEST_CASE("canonical construction folds exponents and eliminates zeta^(p-1)")
{
	const auto ctx = FieldCtx::make(5);
	const Term unit[] = {{0, 1}};
	CHECK(CycInt::from_terms(ctx, unit).coeffs() == v({1, 0, 0, 0}));
	const Term top[] = {{4, 1}};
	CHECK(CycInt::from_terms(ctx, top).coeffs() == v({-1, -1, -1, -1}));
	const Term mid[] = {{2, 1}, {3, 1}};
	CHECK(CycInt::from_terms(ctx, mid).coeffs() == v({0, 0, 1, 1}));
	// exponents are read mod p, including negative ones
	const Term neg[] = {{-1, 1}, {7, 2}};
	CHECK(CycInt::from_terms(ctx, neg) == CycInt::from_terms(ctx, std::vector<Term>{{4, 1}, {2, 2}}));
}

TEST_CASE("addition")
{
	const auto ctx = FieldCtx::make(5);
	const CycInt z = CycInt::zeta_power(ctx, 1);
	CHECK((z + z).coeffs() == v({0, 2, 0, 0}));
	CHECK(z + CycInt(ctx) == z);
	CHECK((CycInt::zeta_power(ctx, 3) + CycInt::zeta_power(ctx, 4)).coeffs() == v({-1, -1, -1, 0}));
}

TEST_CASE("multiplication examples")
{
	const auto ctx = FieldCtx::make(5);
	const CycInt one = CycInt::integer(ctx, 1);
	const CycInt z2 = CycInt::zeta_power(ctx, 2);
	CHECK((z2 * CycInt::binomial(ctx, 1, 1, 1)).coeffs() == v({0, 0, 1, 1}));
	const CycInt tail = CycInt::from_coeffs(ctx, v({1, 1, 1, 1}));
	CHECK((CycInt::binomial(ctx, 1, 1, -1) * tail).coeffs() == v({2, 1, 1, 1}));
	CHECK(tail * one == tail);
}

TEST_CASE("context mismatch and bad inputs are rejected")
{
	const auto c5 = FieldCtx::make(5);
	const auto c7 = FieldCtx::make(7);
	CHECK_THROWS_AS(CycInt::integer(c5, 1) + CycInt::integer(c7, 1), ContextMismatch);
	CHECK_THROWS_AS(CycInt::integer(c5, 1) * CycInt::integer(c7, 1), ContextMismatch);
	CHECK_THROWS_AS(FieldCtx::make(3), UsageError);
	CHECK_THROWS_AS(FieldCtx::make(9), UsageError);
	CHECK_THROWS_AS(CycInt::from_coeffs(c5, v({1, 2, 3})), UsageError);
	CHECK_THROWS_AS(GaloisElt(5, 10), UsageError);
}

TEST_CASE("galois action")
{
	const auto ctx = FieldCtx::make(5);
	CHECK(galois(CycInt::zeta_power(ctx, 1), 2) == CycInt::zeta_power(ctx, 2));
	CHECK(galois(CycInt::binomial(ctx, 1, 1, -1), 4).coeffs() == v({2, 1, 1, 1}));

	std::mt19937_64 rng(7);
	const auto c7 = FieldCtx::make(7);
	for (int trial = 0; trial < 20; ++trial)
	{
		const CycInt a = oracle::random_element(c7, rng);
		const CycInt b = oracle::random_element(c7, rng);
		CHECK(galois(a, 1) == a);
		for (std::int64_t j = 1; j < 7; ++j)
		{
			for (std::int64_t k = 1; k < 7; ++k)
			{
				CHECK(galois(galois(a, j), k) == galois(a, (j * k) % 7));
			}
			CHECK(galois(a * b, j) == galois(a, j) * galois(b, j));
		}
	}
}

TEST_CASE("ring axioms on random elements")
{
	std::mt19937_64 rng(11);
	for (u64 p : {5, 7, 11})
	{
		const auto ctx = FieldCtx::make(p);
		for (int trial = 0; trial < 25; ++trial)
		{
			const CycInt a = oracle::random_element(ctx, rng);
			const CycInt b = oracle::random_element(ctx, rng);
			const CycInt c = oracle::random_element(ctx, rng);
			CHECK(a * b == b * a);
			CHECK((a * b) * c == a * (b * c));
			CHECK(a * (b + c) == a * b + a * c);
			CHECK(CycInt::from_coeffs(ctx, a.coeffs()) == a);
			// round trip through the raw term form
			std::vector<Term> terms;
			for (std::size_t i = 0; i < a.coeffs().size(); ++i) terms.push_back({std::int64_t(i), a.coeffs()[i]});
			CHECK(CycInt::from_terms(ctx, terms) == a);
		}
	}
}

TEST_CASE("norm")
{
	const auto ctx = FieldCtx::make(5);
	CHECK(norm(CycInt::binomial(ctx, 1, 1, -1)) == 5);
	CHECK(norm(CycInt::integer(ctx, 1)) == 1);
	const mpz_class n = norm(varpi(ctx, 2));
	CHECK((n == 1 || n == -1));
	CHECK(n == oracle::naive_norm(varpi(ctx, 2)));
	// rational integers: N(n) = n^(p-1)
	CHECK(norm(CycInt::integer(ctx, 3)) == 81);
}

TEST_CASE("norm agrees with the naive conjugate product and is multiplicative")
{
	std::mt19937_64 rng(3);
	for (u64 p : {5, 7, 11, 13})
	{
		const auto ctx = FieldCtx::make(p);
		for (int trial = 0; trial < 6; ++trial)
		{
			const CycInt a = oracle::random_element(ctx, rng, 3);
			const CycInt b = oracle::random_element(ctx, rng, 3);
			CHECK(norm(a) == oracle::naive_norm(a));
			CHECK(norm(a * b) == norm(a) * norm(b));
		}
		for (std::int64_t j = 1; j < std::int64_t(p); ++j)
		{
			CHECK(norm(CycInt::binomial(ctx, 1, j, -1)) == mpz_class(std::to_string(p)));
		}
	}
}

TEST_CASE("unit inverse")
{
	const auto ctx = FieldCtx::make(7);
	const CycInt u = CycInt::binomial(ctx, 1, 1, 1);
	CHECK(u * unit_inverse(u) == CycInt::integer(ctx, 1));
	CHECK_THROWS_AS(unit_inverse(CycInt::integer(ctx, 2)), UsageError);
	CHECK_THROWS_AS(unit_inverse(CycInt::binomial(ctx, 1, 1, -1)), UsageError);
}
