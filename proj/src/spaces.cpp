#include "borsuk/spaces.hpp"

#include <numeric>
#include <sstream>
#include <string>

namespace borsuk {

namespace {

[[noreturn]] void invalid(const std::string& message) { throw InvalidDescriptor(message); }

}  // namespace

Sphere::Sphere(int n) : n(n) {
    if (n < 1) invalid("sphere dimension must be >= 1");
}

WedgeOfSpheres::WedgeOfSpheres(std::map<int, long long> counts) : counts(std::move(counts)) {
    for (const auto& [dim, count] : this->counts) {
        if (dim < 1) invalid("wedge sphere dimension must be >= 1");
        if (count < 1) invalid("wedge copy count must be >= 1");
    }
}

MooreSpace::MooreSpace(AbelianGroup group, int degree)
    : group(std::move(group)), degree(degree) {
    if (degree < 2) invalid("Moore space degree must be >= 2");
    if (this->group.is_trivial()) invalid("Moore space group must be nontrivial");
}

EilenbergMacLane::EilenbergMacLane(AbelianGroup group, int degree)
    : group(std::move(group)), degree(degree) {
    if (degree < 1) invalid("Eilenberg-MacLane degree must be >= 1");
    if (this->group.is_trivial()) invalid("Eilenberg-MacLane group must be nontrivial");
}

ProductOfSpheres::ProductOfSpheres(int n, int m) : n(std::min(n, m)), m(std::max(n, m)) {
    if (this->n < 1) invalid("product factor dimension must be >= 1");
}

LensSpace::LensSpace(long long p, long long q) : p(p), q(q) {
    if (p < 1) invalid("lens space requires p >= 1");
    if (std::gcd(p, q) != 1) invalid("lens space requires gcd(p, q) = 1");
    this->q = ((q % p) + p) % p;
}

RealProjective::RealProjective(int n) : n(n) {
    if (n < 1) invalid("projective space dimension must be >= 1");
}

Surface::Surface(bool orientable, long long genus) : orientable(orientable), genus(genus) {
    if (genus < 0) invalid("surface genus must be >= 0");
    if (!orientable && genus < 1) invalid("non-orientable surface genus must be >= 1");
}

ZnComplex::ZnComplex(long long n, long long h2_rank) : n(n), h2_rank(h2_rank) {
    if (n < 1) invalid("ZnComplex requires n >= 1");
    if (h2_rank < 0) invalid("ZnComplex requires rank H_2 >= 0");
}

PseudoProjectivePlane::PseudoProjectivePlane(long long n) : n(n) {
    if (n < 2) invalid("pseudo projective plane requires n >= 2");
}

FreePi1Complex::FreePi1Complex(long long pi1_rank, long long h2_rank)
    : pi1_rank(pi1_rank), h2_rank(h2_rank) {
    if (pi1_rank < 0) invalid("free-pi1 complex requires rank pi1 >= 0");
    if (h2_rank < 0) invalid("free-pi1 complex requires rank H_2 >= 0");
}

namespace {

SpaceDescriptor wedge_or_degenerate(std::map<int, long long> counts) {
    if (counts.empty()) return Point{};
    if (counts.size() == 1 && counts.begin()->second == 1) return Sphere(counts.begin()->first);
    return WedgeOfSpheres(std::move(counts));
}

struct Normalizer {
    SpaceDescriptor operator()(const Point& d) const { return d; }
    SpaceDescriptor operator()(const Sphere& d) const { return d; }

    SpaceDescriptor operator()(const WedgeOfSpheres& d) const {
        return wedge_or_degenerate(d.counts);
    }

    SpaceDescriptor operator()(const MooreSpace& d) const {
        if (d.group.is_free()) {
            return wedge_or_degenerate({{d.degree, d.group.free_rank()}});
        }
        return d;
    }

    SpaceDescriptor operator()(const EilenbergMacLane& d) const {
        if (d.degree == 1 && d.group == AbelianGroup::free(1)) return Sphere(1);
        return d;
    }

    SpaceDescriptor operator()(const ProductOfSpheres& d) const { return d; }

    SpaceDescriptor operator()(const LensSpace& d) const {
        if (d.p == 1) return Sphere(3);
        return d;
    }

    SpaceDescriptor operator()(const RealProjective& d) const { return d; }

    SpaceDescriptor operator()(const Surface& d) const {
        if (d.orientable && d.genus == 0) return Sphere(2);
        if (!d.orientable && d.genus == 1) return RealProjective(2);
        return d;
    }

    SpaceDescriptor operator()(const ZnComplex& d) const {
        if (d.n == 1) {
            if (d.h2_rank == 0) return Point{};
            return wedge_or_degenerate({{2, d.h2_rank}});
        }
        if (d.h2_rank == 0) return PseudoProjectivePlane(d.n);
        return d;
    }

    SpaceDescriptor operator()(const PseudoProjectivePlane& d) const { return d; }
    SpaceDescriptor operator()(const FreePi1Complex& d) const { return d; }
};

GroupDescriptor normalize_group(GroupDescriptor g) {
    if (const auto* f = std::get_if<FreeGroup>(&g)) {
        if (f->rank == 0) return TrivialGroup{};
        if (f->rank == 1) return AbelianGroup::free(1);
    }
    if (const auto* a = std::get_if<AbelianGroup>(&g)) {
        if (a->is_trivial()) return TrivialGroup{};
    }
    if (const auto* s = std::get_if<SurfaceGroup>(&g)) {
        if (s->orientable && s->genus == 1) return AbelianGroup::free(2);
        if (!s->orientable && s->genus == 1) return AbelianGroup::cyclic(2);
    }
    return g;
}

struct Pi1 {
    GroupDescriptor operator()(const Point&) const { return TrivialGroup{}; }

    GroupDescriptor operator()(const Sphere& d) const {
        if (d.n == 1) return AbelianGroup::free(1);
        return TrivialGroup{};
    }

    GroupDescriptor operator()(const WedgeOfSpheres& d) const {
        auto it = d.counts.find(1);
        long long circles = it == d.counts.end() ? 0 : it->second;
        return normalize_group(FreeGroup{circles});
    }

    GroupDescriptor operator()(const MooreSpace&) const { return TrivialGroup{}; }

    GroupDescriptor operator()(const EilenbergMacLane& d) const {
        if (d.degree == 1) return d.group;
        return TrivialGroup{};
    }

    GroupDescriptor operator()(const ProductOfSpheres& d) const {
        long long circles = (d.n == 1 ? 1 : 0) + (d.m == 1 ? 1 : 0);
        return normalize_group(AbelianGroup::free(circles));
    }

    GroupDescriptor operator()(const LensSpace& d) const {
        return AbelianGroup::cyclic(d.p);  // trivial when p = 1
    }

    GroupDescriptor operator()(const RealProjective& d) const {
        if (d.n == 1) return AbelianGroup::free(1);
        return AbelianGroup::cyclic(2);
    }

    GroupDescriptor operator()(const Surface& d) const {
        if (d.orientable && d.genus == 0) return TrivialGroup{};
        return normalize_group(SurfaceGroup{d.orientable, d.genus});
    }

    GroupDescriptor operator()(const ZnComplex& d) const {
        return normalize_group(AbelianGroup::cyclic(d.n));
    }

    GroupDescriptor operator()(const PseudoProjectivePlane& d) const {
        return AbelianGroup::cyclic(d.n);
    }

    GroupDescriptor operator()(const FreePi1Complex& d) const {
        return normalize_group(FreeGroup{d.pi1_rank});
    }
};

}  // namespace

SpaceDescriptor normalize(const SpaceDescriptor& d) { return std::visit(Normalizer{}, d); }

GroupDescriptor fundamental_group(const SpaceDescriptor& d) {
    return std::visit(Pi1{}, normalize(d));
}

bool descriptor_equal(const SpaceDescriptor& a, const SpaceDescriptor& b) {
    return normalize(a) == normalize(b);
}

namespace {

template <typename T>
int cmp(const T& a, const T& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

struct FieldCompare {
    const SpaceDescriptor& other;

    int operator()(const Point&) const { return 0; }
    int operator()(const Sphere& d) const { return cmp(d.n, std::get<Sphere>(other).n); }

    int operator()(const WedgeOfSpheres& d) const {
        const auto& o = std::get<WedgeOfSpheres>(other).counts;
        if (d.counts != o) return d.counts < o ? -1 : 1;
        return 0;
    }

    int operator()(const MooreSpace& d) const {
        const auto& o = std::get<MooreSpace>(other);
        if (int c = cmp(d.degree, o.degree)) return c;
        return compare(d.group, o.group);
    }

    int operator()(const EilenbergMacLane& d) const {
        const auto& o = std::get<EilenbergMacLane>(other);
        if (int c = cmp(d.degree, o.degree)) return c;
        return compare(d.group, o.group);
    }

    int operator()(const ProductOfSpheres& d) const {
        const auto& o = std::get<ProductOfSpheres>(other);
        if (int c = cmp(d.n, o.n)) return c;
        return cmp(d.m, o.m);
    }

    int operator()(const LensSpace& d) const {
        const auto& o = std::get<LensSpace>(other);
        if (int c = cmp(d.p, o.p)) return c;
        return cmp(d.q, o.q);
    }

    int operator()(const RealProjective& d) const {
        return cmp(d.n, std::get<RealProjective>(other).n);
    }

    int operator()(const Surface& d) const {
        const auto& o = std::get<Surface>(other);
        if (d.orientable != o.orientable) return d.orientable ? -1 : 1;
        return cmp(d.genus, o.genus);
    }

    int operator()(const ZnComplex& d) const {
        const auto& o = std::get<ZnComplex>(other);
        if (int c = cmp(d.n, o.n)) return c;
        return cmp(d.h2_rank, o.h2_rank);
    }

    int operator()(const PseudoProjectivePlane& d) const {
        return cmp(d.n, std::get<PseudoProjectivePlane>(other).n);
    }

    int operator()(const FreePi1Complex& d) const {
        const auto& o = std::get<FreePi1Complex>(other);
        if (int c = cmp(d.pi1_rank, o.pi1_rank)) return c;
        return cmp(d.h2_rank, o.h2_rank);
    }
};

}  // namespace

int compare(const SpaceDescriptor& a, const SpaceDescriptor& b) {
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
    return std::visit(FieldCompare{b}, a);
}

std::string to_string(const GroupDescriptor& g) {
    std::ostringstream out;
    if (std::holds_alternative<TrivialGroup>(g)) {
        out << "1";
    } else if (const auto* f = std::get_if<FreeGroup>(&g)) {
        out << "free of rank " << f->rank;
    } else if (const auto* a = std::get_if<AbelianGroup>(&g)) {
        out << a->to_string();
    } else {
        const auto& s = std::get<SurfaceGroup>(g);
        out << "pi_1 of the " << (s.orientable ? "orientable" : "non-orientable")
            << " surface of genus " << s.genus;
    }
    return out.str();
}

}  // namespace borsuk
