#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "borsuk/capacity.hpp"
#include "borsuk/homology.hpp"
#include "borsuk/oracle.hpp"
#include "support.hpp"

using namespace borsuk;
using namespace borsuk::testing;

namespace {

bool contains(const std::vector<SpaceDescriptor>& list, const SpaceDescriptor& d) {
    return std::any_of(list.begin(), list.end(),
                       [&](const SpaceDescriptor& x) { return descriptor_equal(x, d); });
}

// The workhorse necessary condition: every homology group of a dominated
// space is a direct summand of the ambient one, degree by degree.
void check_summand_condition(const SpaceDescriptor& ambient) {
    CapacityResult result = capacity_of(ambient);
    REQUIRE(result.dominated.has_value());
    if (!supports_homology(ambient)) return;
    GradedGroup hp = homology_of(ambient);
    const int top = hp.truncated_above.value_or(hp.top_degree());
    for (const SpaceDescriptor& x : *result.dominated) {
        if (!supports_homology(x)) continue;
        GradedGroup hx = homology_of(x, top);
        for (int i = 0; i <= top; ++i) {
            auto classes = summands_up_to_iso(hp.at(i));
            CHECK(std::binary_search(classes.begin(), classes.end(), hx.at(i)));
        }
    }
}

}  // namespace

TEST_CASE("unitary divisor products") {
    UnitaryFactorization u12 = unitary_divisor_products(12);
    CHECK(u12.products == std::vector<long long>{1, 3, 4, 12});
    CHECK(u12.components.size() == 2);

    CHECK(unitary_divisor_products(7).products == std::vector<long long>{1, 7});
    CHECK(unitary_divisor_products(1).products == std::vector<long long>{1});
    CHECK(unitary_divisor_products(360).products ==
          std::vector<long long>{1, 5, 8, 9, 40, 45, 72, 360});
}

TEST_CASE("zn bound formula") {
    CHECK(zn_bound(12, 1) == 8);
    CHECK(zn_bound(30, 0) == 8);
    CHECK(zn_bound(8, 2) == 6);
    CHECK_THROWS(zn_bound(1, 0));
}

TEST_CASE("pinned capacities per family") {
    CHECK(capacity_of(Point{}).value == 1);
    CHECK(capacity_of(Point{}).kind == CapacityKind::Exact);

    CHECK(capacity_of(Sphere(5)).value == 2);

    CHECK(capacity_of(wedge({{1, 3}})).value == 4);
    CHECK(capacity_of(wedge({{2, 2}, {5, 1}})).value == 6);

    // The summand count of Z_4 + Z_2 is 4; the oracle agrees on the
    // order-8 group.
    AbelianGroup z4z2 = direct_sum(AbelianGroup::cyclic(4), AbelianGroup::cyclic(2));
    CHECK(bruteforce_summand_classes(ExplicitFiniteGroup({4, 2})).size() == 4);
    CapacityResult moore = capacity_of(MooreSpace(z4z2, 3));
    CHECK(moore.kind == CapacityKind::Exact);
    CHECK(moore.value == 4);
    CHECK(contains(*moore.dominated, MooreSpace(AbelianGroup::cyclic(4), 3)));
    CHECK(contains(*moore.dominated, Point{}));

    CapacityResult em = capacity_of(EilenbergMacLane(AbelianGroup::cyclic(6), 1));
    CHECK(em.kind == CapacityKind::Exact);
    CHECK(em.value == 4);
    CHECK(contains(*em.dominated, EilenbergMacLane(AbelianGroup::cyclic(3), 1)));

    CapacityResult s23 = capacity_of(ProductOfSpheres(2, 3));
    CHECK(s23.kind == CapacityKind::Exact);
    CHECK(s23.value == 4);
    CHECK(*s23.dominated ==
          std::vector<SpaceDescriptor>{Point{}, Sphere(2), Sphere(3), ProductOfSpheres(2, 3)});

    CapacityResult s33 = capacity_of(ProductOfSpheres(3, 3));
    CHECK(s33.value == 3);
    CHECK(*s33.dominated ==
          std::vector<SpaceDescriptor>{Point{}, Sphere(3), ProductOfSpheres(3, 3)});

    CHECK(capacity_of(LensSpace(7, 2)).value == 2);
    CHECK(capacity_of(RealProjective(6)).value == 2);

    CHECK(capacity_of(Surface(true, 2)).kind == CapacityKind::CountOnly);
    CHECK(capacity_of(Surface(true, 2)).value == 4);
    CHECK(capacity_of(Surface(false, 3)).value == 3);
    CHECK_FALSE(capacity_of(Surface(false, 3)).dominated.has_value());

    CHECK(capacity_of(FreePi1Complex(2, 1)).kind == CapacityKind::CountOnly);
    CHECK(capacity_of(FreePi1Complex(2, 1)).value == 6);

    CapacityResult zc = capacity_of(ZnComplex(12, 1));
    CHECK(zc.kind == CapacityKind::UpperBound);
    CHECK(zc.value == 8);
}

TEST_CASE("dominated lists on pinned inputs") {
    CHECK(enumerate_dominated(wedge({{1, 2}})) ==
          std::vector<SpaceDescriptor>{Point{}, Sphere(1), wedge({{1, 2}})});
    CHECK(enumerate_dominated(Sphere(5)) == std::vector<SpaceDescriptor>{Point{}, Sphere(5)});

    // Theorem-form candidates for ZC(12; 1): unitary products {1,3,4,12}
    // against 0 <= k <= 1, normalized.
    auto zc = enumerate_dominated(ZnComplex(12, 1));
    std::vector<SpaceDescriptor> expected{Point{},
                                          Sphere(2),
                                          PseudoProjectivePlane(3),
                                          PseudoProjectivePlane(4),
                                          PseudoProjectivePlane(12),
                                          ZnComplex(3, 1),
                                          ZnComplex(4, 1),
                                          ZnComplex(12, 1)};
    std::sort(expected.begin(), expected.end(),
              [](const SpaceDescriptor& a, const SpaceDescriptor& b) {
                  return compare(a, b) < 0;
              });
    CHECK(zc == expected);

    CHECK_THROWS_AS(enumerate_dominated(Surface(true, 2)), EnumerationUnavailable);
    CHECK_THROWS_AS(enumerate_dominated(FreePi1Complex(1, 1)), EnumerationUnavailable);
}

TEST_CASE("exact results enumerate what they count") {
    Rng rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        SpaceDescriptor d = random_descriptor(rng);
        CapacityResult result = capacity_of(d);
        if (result.kind == CapacityKind::CountOnly) {
            CHECK_FALSE(result.dominated.has_value());
            continue;
        }
        REQUIRE(result.dominated.has_value());
        const auto& list = *result.dominated;
        CHECK(static_cast<long long>(list.size()) == result.value);
        CHECK(contains(list, Point{}));
        if (result.kind == CapacityKind::Exact) CHECK(contains(list, normalize(d)));
        for (std::size_t i = 0; i + 1 < list.size(); ++i) {
            CHECK(compare(list[i], list[i + 1]) < 0);
        }
        for (const SpaceDescriptor& x : list) CHECK(normalize(x) == x);
    }
}

TEST_CASE("dominated homology is a summand of the ambient homology") {
    check_summand_condition(ProductOfSpheres(2, 3));
    check_summand_condition(ProductOfSpheres(4, 4));
    check_summand_condition(ProductOfSpheres(1, 3));
    check_summand_condition(LensSpace(9, 2));
    check_summand_condition(RealProjective(7));
    check_summand_condition(MooreSpace(
        direct_sum(AbelianGroup::cyclic(8), AbelianGroup::cyclic(6)), 4));
    check_summand_condition(EilenbergMacLane(AbelianGroup::cyclic(30), 1));
    check_summand_condition(wedge({{1, 2}, {3, 2}}));
    check_summand_condition(ZnComplex(60, 2));

    Rng rng(79);
    for (int trial = 0; trial < 120; ++trial) {
        SpaceDescriptor d = random_descriptor(rng);
        if (capacity_of(d).kind == CapacityKind::CountOnly) continue;
        check_summand_condition(d);
    }
}

TEST_CASE("Z_n candidate lists realize the bound and respect unitary pi_1") {
    for (long long n : {2, 6, 12, 30, 360}) {
        for (long long r : {0, 1, 3}) {
            CapacityResult result = capacity_of(ZnComplex(n, r));
            CHECK(result.kind == CapacityKind::UpperBound);
            CHECK(result.value == zn_bound(n, r));
            CHECK(static_cast<long long>(result.dominated->size()) == zn_bound(n, r));

            const auto& unitary = unitary_divisor_products(n).products;
            for (const SpaceDescriptor& candidate : *result.dominated) {
                GroupDescriptor pi1 = fundamental_group(candidate);
                long long order = 1;
                if (const auto* a = std::get_if<AbelianGroup>(&pi1)) {
                    order = a->torsion_order().convert_to<long long>();
                }
                CHECK(std::binary_search(unitary.begin(), unitary.end(), order));
                // H_1 of the candidate must be a summand of Z_n.
                auto classes = summands_up_to_iso(AbelianGroup::cyclic(n));
                CHECK(std::binary_search(classes.begin(), classes.end(),
                                         homology_of(candidate, 2).at(1)));
            }
        }
    }
}

TEST_CASE("capacity is invariant under normalization, record for record") {
    Rng rng(83);
    for (int trial = 0; trial < 500; ++trial) {
        SpaceDescriptor d = random_descriptor(rng);
        CapacityResult a = capacity_of(d);
        CapacityResult b = capacity_of(normalize(d));
        CHECK(a.kind == b.kind);
        CHECK(a.value == b.value);
        CHECK(a.dominated.has_value() == b.dominated.has_value());
        if (a.dominated) CHECK(*a.dominated == *b.dominated);
    }
}

TEST_CASE("cross-family consistency") {
    CHECK(capacity_of(Surface(true, 1)).value == capacity_of(ProductOfSpheres(1, 1)).value);
    CHECK(capacity_of(ProductOfSpheres(1, 1)).value == 3);
    CHECK(capacity_of(Surface(false, 1)).value == capacity_of(RealProjective(2)).value);
    CHECK(capacity_of(RealProjective(2)).value == 2);
    for (int k = 1; k <= 4; ++k) {
        for (int n = 2; n <= 4; ++n) {
            CHECK(capacity_of(MooreSpace(AbelianGroup::free(k), n)).value ==
                  capacity_of(wedge({{n, k}})).value);
            CHECK(capacity_of(wedge({{n, k}})).value == k + 1);
        }
    }
    CHECK(capacity_of(EilenbergMacLane(AbelianGroup::free(1), 1)).value ==
          capacity_of(Sphere(1)).value);
    CHECK(capacity_of(Sphere(1)).value == 2);
}

TEST_CASE("torus route: S1 x S1 dominates pt, the circle, and itself") {
    CapacityResult torus = capacity_of(ProductOfSpheres(1, 1));
    CHECK(torus.kind == CapacityKind::Exact);
    CHECK(torus.value == 3);
    CHECK(*torus.dominated ==
          std::vector<SpaceDescriptor>{Point{}, Sphere(1), ProductOfSpheres(1, 1)});
}
