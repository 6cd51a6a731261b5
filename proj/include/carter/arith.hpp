#pragma once

#include <cstdint>
#include <vector>

namespace carter {

bool is_prime(std::uint64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
/// True iff n is a (possibly trivial) power of p.
bool is_power_of(std::uint64_t n, std::uint64_t p);

} // namespace carter
