#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gqlab::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Primes <= n, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// (p, k) with n = p^k, or nullopt when n is not a prime power (n >= 2).
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

// Prime factors with multiplicity, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);

// Smallest generator of (Z/p)^*.
std::uint64_t primitive_root(std::uint64_t p);

// a^{-1} mod m, a and m coprime.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

}  // namespace gqlab::nt
