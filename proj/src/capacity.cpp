#include "borsuk/capacity.hpp"

#include <algorithm>
#include <string>

namespace borsuk {

namespace {

std::vector<SpaceDescriptor> sorted_unique(std::vector<SpaceDescriptor> list) {
    std::sort(list.begin(), list.end(), [](const SpaceDescriptor& a, const SpaceDescriptor& b) {
        return compare(a, b) < 0;
    });
    list.erase(std::unique(list.begin(), list.end(),
                           [](const SpaceDescriptor& a, const SpaceDescriptor& b) {
                               return compare(a, b) == 0;
                           }),
               list.end());
    return list;
}

CapacityResult exact(std::vector<SpaceDescriptor> dominated) {
    auto list = sorted_unique(std::move(dominated));
    long long value = static_cast<long long>(list.size());
    return {CapacityKind::Exact, value, std::move(list)};
}

CapacityResult count_only(long long value) { return {CapacityKind::CountOnly, value, {}}; }

SpaceDescriptor moore_or_degenerate(const AbelianGroup& a, int degree) {
    if (a.is_trivial()) return Point{};
    return normalize(MooreSpace(a, degree));
}

SpaceDescriptor em_or_degenerate(const AbelianGroup& a, int degree) {
    if (a.is_trivial()) return Point{};
    return normalize(EilenbergMacLane(a, degree));
}

// All sub-wedges of a wedge of spheres: one entry per choice of
// 0 <= j_n <= i_n in every dimension.
std::vector<SpaceDescriptor> sub_wedges(const WedgeOfSpheres& w) {
    std::vector<int> dims;
    std::vector<long long> limits;
    for (const auto& [dim, count] : w.counts) {
        dims.push_back(dim);
        limits.push_back(count);
    }
    std::vector<long long> take(dims.size(), 0);
    std::vector<SpaceDescriptor> result;
    while (true) {
        std::map<int, long long> counts;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (take[i] > 0) counts[dims[i]] = take[i];
        }
        result.push_back(normalize(WedgeOfSpheres(std::move(counts))));
        std::size_t i = 0;
        for (; i < take.size(); ++i) {
            if (take[i] < limits[i]) {
                ++take[i];
                break;
            }
            take[i] = 0;
        }
        if (i == take.size()) break;
    }
    return result;
}

struct Capacity {
    CapacityResult operator()(const Point&) const {
        return exact({Point{}});
    }

    CapacityResult operator()(const Sphere& d) const {
        return exact({Point{}, d});
    }

    CapacityResult operator()(const WedgeOfSpheres& d) const {
        return exact(sub_wedges(d));
    }

    CapacityResult operator()(const MooreSpace& d) const {
        std::vector<SpaceDescriptor> dominated;
        for (const AbelianGroup& s : summands_up_to_iso(d.group)) {
            dominated.push_back(moore_or_degenerate(s, d.degree));
        }
        return exact(std::move(dominated));
    }

    CapacityResult operator()(const EilenbergMacLane& d) const {
        std::vector<SpaceDescriptor> dominated;
        for (const AbelianGroup& s : summands_up_to_iso(d.group)) {
            dominated.push_back(em_or_degenerate(s, d.degree));
        }
        return exact(std::move(dominated));
    }

    CapacityResult operator()(const ProductOfSpheres& d) const {
        if (d.n == d.m) {
            return exact({Point{}, Sphere(d.n), d});
        }
        return exact({Point{}, Sphere(d.n), Sphere(d.m), d});
    }

    CapacityResult operator()(const LensSpace& d) const {
        return exact({Point{}, d});
    }

    CapacityResult operator()(const RealProjective& d) const {
        return exact({Point{}, d});
    }

    CapacityResult operator()(const Surface& d) const {
        // Genus 0 and cross-cap 1 never reach here (normalized away).
        if (d.orientable) return count_only(d.genus + 2);
        return count_only(d.genus / 2 + 2);
    }

    CapacityResult operator()(const ZnComplex& d) const { return zn_candidates(d.n, d.h2_rank); }

    CapacityResult operator()(const PseudoProjectivePlane& d) const {
        return zn_candidates(d.n, 0);
    }

    CapacityResult operator()(const FreePi1Complex& d) const {
        return count_only((d.pi1_rank + 1) * (d.h2_rank + 1));
    }

private:
    // Candidate list of the Z_n-complex normal form: one Z_{m}-complex per
    // unitary divisor product m of n and per 0 <= k <= r. The count realizes
    // the bound, but domination of every candidate is not asserted, so the
    // result is an upper bound rather than exact.
    static CapacityResult zn_candidates(long long n, long long r) {
        std::vector<SpaceDescriptor> candidates;
        for (long long m : unitary_divisor_products(n).products) {
            for (long long k = 0; k <= r; ++k) {
                candidates.push_back(normalize(ZnComplex(m, k)));
            }
        }
        auto list = sorted_unique(std::move(candidates));
        long long value = static_cast<long long>(list.size());
        return {CapacityKind::UpperBound, value, std::move(list)};
    }
};

}  // namespace

CapacityResult capacity_of(const SpaceDescriptor& d) {
    return std::visit(Capacity{}, normalize(d));
}

std::vector<SpaceDescriptor> enumerate_dominated(const SpaceDescriptor& d) {
    CapacityResult result = capacity_of(d);
    if (result.kind == CapacityKind::CountOnly) {
        throw EnumerationUnavailable(
            "enumeration unavailable: capacity of this family is known only as a count (" +
            std::to_string(result.value) + ")");
    }
    return std::move(*result.dominated);
}

UnitaryFactorization unitary_divisor_products(long long n) {
    if (n < 1) throw std::invalid_argument("unitary_divisor_products: n must be >= 1");
    UnitaryFactorization result;
    result.n = n;
    result.components = factorize(Int(n));
    result.products.assign(1, 1);
    for (const PrimePower& c : result.components) {
        const long long value = c.value().convert_to<long long>();
        const std::size_t size = result.products.size();
        for (std::size_t i = 0; i < size; ++i) {
            result.products.push_back(result.products[i] * value);
        }
    }
    std::sort(result.products.begin(), result.products.end());
    return result;
}

long long zn_bound(long long n, long long r) {
    if (n < 2) throw std::invalid_argument("zn_bound: n must be >= 2");
    long long count = 1;
    for (std::size_t i = 0; i < unitary_divisor_products(n).components.size(); ++i) count *= 2;
    return count * (r + 1);
}

}  // namespace borsuk
