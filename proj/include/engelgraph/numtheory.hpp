#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace engelgraph {

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factorization (Pollard rho), primes ascending.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// q^t, throwing std::overflow_error past 64 bits.
std::uint64_t checked_pow(std::uint64_t q, unsigned t);

}  // namespace engelgraph
