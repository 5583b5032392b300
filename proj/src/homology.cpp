#include "borsuk/homology.hpp"

#include <algorithm>
#include <string>

namespace borsuk {

namespace {

const AbelianGroup kZero{};

void put(std::map<int, AbelianGroup>& table, int dim, const AbelianGroup& g) {
    if (!g.is_trivial()) table[dim] = g;
}

// Full (untruncated) closed-form table for every finite-support family.
// K(Z_m, 1) is handled separately since its support is unbounded.
std::map<int, AbelianGroup> finite_table(const SpaceDescriptor& d);

struct FiniteTable {
    using Table = std::map<int, AbelianGroup>;

    Table operator()(const Point&) const { return {{0, AbelianGroup::free(1)}}; }

    Table operator()(const Sphere& d) const {
        Table t{{0, AbelianGroup::free(1)}};
        put(t, d.n, AbelianGroup::free(1));
        return t;
    }

    Table operator()(const WedgeOfSpheres& d) const {
        // Reduced homology adds over wedge summands.
        Table t{{0, AbelianGroup::free(1)}};
        for (const auto& [dim, count] : d.counts) {
            put(t, dim, AbelianGroup::free(count));
        }
        return t;
    }

    Table operator()(const MooreSpace& d) const {
        Table t{{0, AbelianGroup::free(1)}};
        put(t, d.degree, d.group);
        return t;
    }

    Table operator()(const EilenbergMacLane&) const {
        // Only K(Z, 1), the circle, has a finite table.
        Table t{{0, AbelianGroup::free(1)}};
        put(t, 1, AbelianGroup::free(1));
        return t;
    }

    Table operator()(const ProductOfSpheres&) const {
        return {};  // handled through kunneth
    }

    Table operator()(const LensSpace& d) const {
        Table t{{0, AbelianGroup::free(1)}};
        put(t, 1, AbelianGroup::cyclic(d.p));
        put(t, 3, AbelianGroup::free(1));
        return t;
    }

    Table operator()(const RealProjective& d) const {
        Table t{{0, AbelianGroup::free(1)}};
        for (int i = 1; i < d.n; i += 2) put(t, i, AbelianGroup::cyclic(2));
        if (d.n % 2 == 1) put(t, d.n, AbelianGroup::free(1));
        return t;
    }

    Table operator()(const Surface& d) const {
        Table t{{0, AbelianGroup::free(1)}};
        if (d.orientable) {
            put(t, 1, AbelianGroup::free(2 * d.genus));
            put(t, 2, AbelianGroup::free(1));
        } else {
            put(t, 1, direct_sum(AbelianGroup::free(d.genus - 1), AbelianGroup::cyclic(2)));
        }
        return t;
    }

    Table operator()(const ZnComplex& d) const {
        Table t{{0, AbelianGroup::free(1)}};
        put(t, 1, AbelianGroup::cyclic(d.n));
        put(t, 2, AbelianGroup::free(d.h2_rank));
        return t;
    }

    Table operator()(const PseudoProjectivePlane& d) const {
        Table t{{0, AbelianGroup::free(1)}};
        put(t, 1, AbelianGroup::cyclic(d.n));
        return t;
    }

    Table operator()(const FreePi1Complex& d) const {
        Table t{{0, AbelianGroup::free(1)}};
        put(t, 1, AbelianGroup::free(d.pi1_rank));
        put(t, 2, AbelianGroup::free(d.h2_rank));
        return t;
    }
};

std::map<int, AbelianGroup> finite_table(const SpaceDescriptor& d) {
    return std::visit(FiniteTable{}, d);
}

bool is_infinite_em(const SpaceDescriptor& d) {
    const auto* em = std::get_if<EilenbergMacLane>(&d);
    return em && !(em->degree == 1 && em->group == AbelianGroup::free(1));
}

GradedGroup truncate_table(std::map<int, AbelianGroup> table, int max_dim) {
    GradedGroup result;
    for (auto& [dim, g] : table) {
        if (dim <= max_dim) {
            result.groups.emplace(dim, std::move(g));
        } else {
            result.truncated_above = max_dim;
        }
    }
    return result;
}

}  // namespace

const AbelianGroup& GradedGroup::at(int dim) const {
    auto it = groups.find(dim);
    return it == groups.end() ? kZero : it->second;
}

int GradedGroup::top_degree() const {
    return groups.empty() ? 0 : groups.rbegin()->first;
}

long long GradedGroup::euler_characteristic() const {
    long long chi = 0;
    for (const auto& [dim, g] : groups) {
        chi += (dim % 2 == 0 ? 1 : -1) * g.free_rank();
    }
    return chi;
}

bool supports_homology(const SpaceDescriptor& d) {
    if (const auto* em = std::get_if<EilenbergMacLane>(&d)) {
        if (em->degree != 1) return false;
        return em->group == AbelianGroup::free(1) || em->group.is_finite_cyclic();
    }
    return true;
}

int default_max_dim(const SpaceDescriptor& d) {
    if (is_infinite_em(d)) {
        return 2 * std::get<EilenbergMacLane>(d).degree + 1;
    }
    if (const auto* p = std::get_if<ProductOfSpheres>(&d)) return p->n + p->m;
    auto table = finite_table(d);
    return table.empty() ? 0 : table.rbegin()->first;
}

GradedGroup homology_of(const SpaceDescriptor& d, int max_dim) {
    if (max_dim < 0) throw std::invalid_argument("homology_of: max_dim must be >= 0");
    if (!supports_homology(d)) {
        throw UnsupportedHomology(
            "no homology table for Eilenberg-MacLane family beyond K(Z,1) and K(Z/m,1); got K(" +
            std::get<EilenbergMacLane>(d).group.to_string() + ", " +
            std::to_string(std::get<EilenbergMacLane>(d).degree) + ")");
    }
    if (const auto* p = std::get_if<ProductOfSpheres>(&d)) {
        return kunneth(homology_of(Sphere(p->n)), homology_of(Sphere(p->m)), max_dim);
    }
    if (is_infinite_em(d)) {
        // K(Z_m, 1): Z_m in every odd degree, zero in positive even degrees.
        const auto& em = std::get<EilenbergMacLane>(d);
        GradedGroup result;
        result.groups[0] = AbelianGroup::free(1);
        for (int i = 1; i <= max_dim; i += 2) result.groups[i] = em.group;
        result.truncated_above = max_dim;
        return result;
    }
    return truncate_table(finite_table(d), max_dim);
}

GradedGroup homology_of(const SpaceDescriptor& d) { return homology_of(d, default_max_dim(d)); }

GradedGroup kunneth(const GradedGroup& hx, const GradedGroup& hy, int max_dim) {
    if (max_dim < 0) throw std::invalid_argument("kunneth: max_dim must be >= 0");
    for (const GradedGroup* h : {&hx, &hy}) {
        if (h->truncated_above && *h->truncated_above < max_dim) {
            throw TruncationTooLow("kunneth: input truncated above " +
                                   std::to_string(*h->truncated_above) +
                                   " cannot determine degrees up to " + std::to_string(max_dim));
        }
    }

    // With complete inputs, evaluate the full support so the result can be
    // certified complete (or flagged truncated exactly when it is).
    const bool inputs_complete = hx.complete() && hy.complete();
    const int full_top = hx.top_degree() + hy.top_degree() + 1;
    const int compute_to = inputs_complete ? std::max(max_dim, full_top) : max_dim;

    std::map<int, AbelianGroup> table;
    for (int n = 0; n <= compute_to; ++n) {
        AbelianGroup hn;
        for (const auto& [i, gx] : hx.groups) {
            if (i > n) break;
            hn = direct_sum(hn, tensor(gx, hy.at(n - i)));
        }
        for (const auto& [i, gx] : hx.groups) {
            if (i > n - 1) break;
            hn = direct_sum(hn, tor(gx, hy.at(n - 1 - i)));
        }
        put(table, n, hn);
    }

    bool overflow = false;
    for (auto it = table.begin(); it != table.end();) {
        if (it->first > max_dim) {
            overflow = true;
            it = table.erase(it);
        } else {
            ++it;
        }
    }

    GradedGroup result;
    result.groups = std::move(table);
    if (!inputs_complete || overflow) result.truncated_above = max_dim;
    return result;
}

}  // namespace borsuk
