#ifndef BORSUK_SPACES_HPP
#define BORSUK_SPACES_HPP

#include <map>
#include <string>
#include <variant>

#include "borsuk/abelian.hpp"
#include "borsuk/errors.hpp"

namespace borsuk {

// ---------------------------------------------------------------------------
// Space descriptors. One variant per classified polyhedron family; each
// constructor enforces the family's constraints and throws InvalidDescriptor
// on violation, so a constructed descriptor is always valid.
// ---------------------------------------------------------------------------

struct Point {
    friend bool operator==(const Point&, const Point&) { return true; }
};

struct Sphere {
    int n;
    explicit Sphere(int n);
    friend bool operator==(const Sphere&, const Sphere&) = default;
};

/// Wedge of spheres: map from dimension to copy count. An empty map is
/// accepted and normalizes to Point.
struct WedgeOfSpheres {
    std::map<int, long long> counts;
    explicit WedgeOfSpheres(std::map<int, long long> counts);
    friend bool operator==(const WedgeOfSpheres&, const WedgeOfSpheres&) = default;
};

/// M(A, n): simply connected, reduced homology A concentrated in degree n.
struct MooreSpace {
    AbelianGroup group;
    int degree;
    MooreSpace(AbelianGroup group, int degree);
    friend bool operator==(const MooreSpace&, const MooreSpace&) = default;
};

/// K(A, n) for abelian A.
struct EilenbergMacLane {
    AbelianGroup group;
    int degree;
    EilenbergMacLane(AbelianGroup group, int degree);
    friend bool operator==(const EilenbergMacLane&, const EilenbergMacLane&) = default;
};

/// S^n x S^m; stored with n <= m since the factors commute.
struct ProductOfSpheres {
    int n;
    int m;
    ProductOfSpheres(int n, int m);
    friend bool operator==(const ProductOfSpheres&, const ProductOfSpheres&) = default;
};

/// L(p, q) with gcd(p, q) = 1; q is stored reduced mod p.
struct LensSpace {
    long long p;
    long long q;
    LensSpace(long long p, long long q);
    friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

struct RealProjective {
    int n;
    explicit RealProjective(int n);
    friend bool operator==(const RealProjective&, const RealProjective&) = default;
};

/// Closed surface. Non-orientable genus counts cross-caps (genus 1 is the
/// projective plane, genus 2 the Klein bottle).
struct Surface {
    bool orientable;
    long long genus;
    Surface(bool orientable, long long genus);
    friend bool operator==(const Surface&, const Surface&) = default;
};

/// Connected finite 2-complex with fundamental group Z_n and H_2 of rank r.
/// (n, r) is a complete homotopy invariant for these, so no attaching data
/// is stored.
struct ZnComplex {
    long long n;
    long long h2_rank;
    ZnComplex(long long n, long long h2_rank);
    friend bool operator==(const ZnComplex&, const ZnComplex&) = default;
};

/// The pseudo projective plane: a circle with one 2-cell attached by a
/// degree-n map. Normal form of ZnComplex(n, 0) for n >= 2.
struct PseudoProjectivePlane {
    long long n;
    explicit PseudoProjectivePlane(long long n);
    friend bool operator==(const PseudoProjectivePlane&, const PseudoProjectivePlane&) = default;
};

/// 2-complex with free fundamental group of the given rank and H_2 of rank r.
struct FreePi1Complex {
    long long pi1_rank;
    long long h2_rank;
    FreePi1Complex(long long pi1_rank, long long h2_rank);
    friend bool operator==(const FreePi1Complex&, const FreePi1Complex&) = default;
};

using SpaceDescriptor =
    std::variant<Point, Sphere, WedgeOfSpheres, MooreSpace, EilenbergMacLane, ProductOfSpheres,
                 LensSpace, RealProjective, Surface, PseudoProjectivePlane, ZnComplex,
                 FreePi1Complex>;

// ---------------------------------------------------------------------------
// Fundamental groups, reported symbolically.
// ---------------------------------------------------------------------------

struct TrivialGroup {
    friend bool operator==(const TrivialGroup&, const TrivialGroup&) { return true; }
};

/// Free (nonabelian) group; rank >= 2 after normalization, since rank 0 is
/// trivial and rank 1 is identified with Z.
struct FreeGroup {
    long long rank;
    friend bool operator==(const FreeGroup&, const FreeGroup&) = default;
};

/// Fundamental group of a closed surface of genus >= 2 (nonabelian).
struct SurfaceGroup {
    bool orientable;
    long long genus;
    friend bool operator==(const SurfaceGroup&, const SurfaceGroup&) = default;
};

using GroupDescriptor = std::variant<TrivialGroup, FreeGroup, AbelianGroup, SurfaceGroup>;

std::string to_string(const GroupDescriptor& g);

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Canonical representative of the homotopy type: collapses the standard
/// identifications (M(Z^k, n) with a wedge of spheres, K(Z,1) with the
/// circle, L(1,q) with S^3, genus-0 / cross-cap-1 surfaces, Z_1-complexes,
/// ZnComplex(n, 0) with the pseudo projective plane, degenerate wedges).
/// Idempotent.
SpaceDescriptor normalize(const SpaceDescriptor& d);

GroupDescriptor fundamental_group(const SpaceDescriptor& d);

/// True when the normal forms coincide structurally.
bool descriptor_equal(const SpaceDescriptor& a, const SpaceDescriptor& b);

/// Total order on descriptors (family rank, then fields); drives every
/// sorted list in the library. Returns <0, 0, >0.
int compare(const SpaceDescriptor& a, const SpaceDescriptor& b);

}  // namespace borsuk

#endif  // BORSUK_SPACES_HPP
