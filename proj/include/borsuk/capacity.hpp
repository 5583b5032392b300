#ifndef BORSUK_CAPACITY_HPP
#define BORSUK_CAPACITY_HPP

#include <optional>
#include <vector>

#include "borsuk/abelian.hpp"
#include "borsuk/spaces.hpp"

namespace borsuk {

/// How much the capacity value asserts.
///   Exact      - the dominated homotopy types are fully enumerated.
///   CountOnly  - only the count is known; no list is available.
///   UpperBound - value bounds the capacity from above; the list holds the
///                candidate types every dominated space must realize.
enum class CapacityKind { Exact, CountOnly, UpperBound };

struct CapacityResult {
    CapacityKind kind;
    long long value;
    /// Present iff kind != CountOnly; normalized, deduplicated, sorted by
    /// compare(). For Exact it always contains Point and the normalized
    /// input.
    std::optional<std::vector<SpaceDescriptor>> dominated;
};

/// Capacity of the descriptor's homotopy type: the number of homotopy types
/// of spaces it dominates (bounded above for Z_n-complexes, counted only for
/// surfaces and free-pi1 complexes).
CapacityResult capacity_of(const SpaceDescriptor& d);

/// The dominated (or candidate) list of capacity_of(d). Throws
/// EnumerationUnavailable for count-only families.
std::vector<SpaceDescriptor> enumerate_dominated(const SpaceDescriptor& d);

/// The unitary decomposition of n: its prime-power components and all
/// 2^(distinct primes) subset products m with gcd(m, n/m) = 1.
struct UnitaryFactorization {
    long long n;
    std::vector<PrimePower> components;
    std::vector<long long> products;  // sorted ascending
};

UnitaryFactorization unitary_divisor_products(long long n);

/// Capacity bound for a Z_n-complex with rank-r H_2:
/// 2^(distinct primes of n) * (r + 1).
long long zn_bound(long long n, long long r);

}  // namespace borsuk

#endif  // BORSUK_CAPACITY_HPP
