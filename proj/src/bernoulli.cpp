#include "cyclores/regulab.hpp"

#include <mutex>

#include "cyclores/errors.hpp"

namespace cyclores {

namespace {

std::mutex memo_lock;
std::vector<BigRational> memo{BigRational(1), BigRational(-1, 2)};

}

BigRational bernoulli(unsigned n)
{
	std::lock_guard<std::mutex> guard(memo_lock);
	while (memo.size() <= n)
	{
		const unsigned m = unsigned(memo.size());
		if (m % 2 == 1) { memo.emplace_back(0); continue; }
		// B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
		BigRational acc = 0;
		mpz_class binom = 1;	// C(m+1, j)
		for (unsigned j = 0; j < m; ++j)
		{
			if (memo[j] != 0) acc += binom * memo[j];
			binom = binom * (m + 1 - j) / (j + 1);
		}
		BigRational b = -acc / (m + 1);
		b.canonicalize();
		memo.push_back(b);
	}
	return memo[n];
}

std::vector<IrregularPair> irregular_pairs(u64 p)
{
	if (p < 3 || !is_prime_u64(p)) throw UsageError("p must be an odd prime");
	std::vector<IrregularPair> out;
	for (unsigned k = 2; k + 3 <= p; k += 2)
	{
		const BigRational b = bernoulli(k);
		if (reduce_mod(b.get_num(), p) == 0) out.push_back({p, k});
	}
	return out;
}

}
