#pragma once

// The braidings used throughout the tests.

#include "nichols/tensor.hpp"

#include <vector>

namespace specs {

using nichols::BraidingSpec;
using nichols::RatFunc;
using nichols::Scalar;

inline BraidingSpec exterior(int dim = 3)
{
    std::vector<std::vector<Scalar>> q(static_cast<std::size_t>(dim), std::vector<Scalar>(static_cast<std::size_t>(dim), Scalar(-1)));
    return BraidingSpec({}, q);
}

inline BraidingSpec sl3()
{
    return BraidingSpec::from_cartan({"E1", "E2"}, {{2, -1}, {-1, 2}}, {1, 1});
}

inline BraidingSpec b2()
{
    return BraidingSpec::from_cartan({"E1", "E2"}, {{2, -1}, {-2, 2}}, {2, 1});
}

/// q_ij = the (6i + j)-th prime.
inline BraidingSpec primes6()
{
    std::vector<int> primes;
    for (int k = 2; primes.size() < 36; ++k) {
        bool prime = true;
        for (int p : primes) prime = prime && k % p != 0;
        if (prime) primes.push_back(k);
    }
    std::vector<std::vector<Scalar>> q(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) q[i].push_back(Scalar(primes[6 * i + j]));
    return BraidingSpec({}, q);
}

/// Every q_ij = 1: the free algebra with the flip.
inline BraidingSpec trivial(int dim)
{
    std::vector<std::vector<Scalar>> q(static_cast<std::size_t>(dim), std::vector<Scalar>(static_cast<std::size_t>(dim), Scalar(1)));
    return BraidingSpec({}, q);
}

}  // namespace specs
