// Shared test helpers: deterministic random generators and the independent
// oracles (gcd-of-minors Smith diagonal, explicit cellular chain complexes,
// tensor-product presentations) used to validate the structure-theory fast
// paths. Everything here stays off the implementation paths it checks.

#ifndef BORSUK_TESTS_SUPPORT_HPP
#define BORSUK_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "borsuk/abelian.hpp"
#include "borsuk/spaces.hpp"

namespace borsuk::testing {

using Rng = std::mt19937_64;

inline long long pick(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// Disambiguates brace-init against the copy constructor.
inline WedgeOfSpheres wedge(std::map<int, long long> counts) {
    return WedgeOfSpheres(std::move(counts));
}

// Every multiset of prime powers (as cyclic orders, ascending) with product
// in [2, max_order].
inline std::vector<std::vector<int>> groups_up_to_order(int max_order) {
    std::vector<int> prime_powers;
    for (int n = 2; n <= max_order; ++n) {
        if (factorize(n).size() == 1) prime_powers.push_back(n);
    }
    std::vector<std::vector<int>> result;
    std::vector<int> current;
    auto recurse = [&](auto&& self, std::size_t next, long long budget) -> void {
        if (!current.empty()) result.push_back(current);
        for (std::size_t i = next; i < prime_powers.size(); ++i) {
            if (prime_powers[i] > budget) break;
            current.push_back(prime_powers[i]);
            self(self, i, budget / prime_powers[i]);
            current.pop_back();
        }
    };
    recurse(recurse, 0, max_order);
    return result;
}

inline AbelianGroup iso_type_of_orders(const std::vector<int>& orders) {
    std::vector<PrimePower> torsion;
    for (int n : orders) {
        for (auto& f : factorize(n)) torsion.push_back(f);
    }
    return AbelianGroup(0, std::move(torsion));
}

// ---------------------------------------------------------------------------
// Random objects
// ---------------------------------------------------------------------------

inline PresentationMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                        long long lo, long long hi) {
    PresentationMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = pick(rng, lo, hi);
    }
    return m;
}

// Product of a handful of elementary row operations: unimodular by
// construction.
inline PresentationMatrix random_unimodular(Rng& rng, std::size_t n, int ops = 12) {
    PresentationMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) u.at(i, i) = 1;
    if (n < 2) return u;
    for (int k = 0; k < ops; ++k) {
        std::size_t a = pick(rng, 0, n - 1);
        std::size_t b = pick(rng, 0, n - 1);
        switch (pick(rng, 0, 2)) {
            case 0:
                if (a != b) {
                    Int c = pick(rng, -3, 3);
                    for (std::size_t j = 0; j < n; ++j) u.at(a, j) += c * u.at(b, j);
                }
                break;
            case 1:
                for (std::size_t j = 0; j < n; ++j) std::swap(u.at(a, j), u.at(b, j));
                break;
            default:
                for (std::size_t j = 0; j < n; ++j) u.at(a, j) = -u.at(a, j);
        }
    }
    return u;
}

inline PresentationMatrix matrix_product(const PresentationMatrix& a,
                                         const PresentationMatrix& b) {
    PresentationMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return c;
}

inline AbelianGroup random_finite_group(Rng& rng, int max_factors = 3) {
    static const long long primes[] = {2, 3, 5, 7};
    std::vector<PrimePower> torsion;
    const int count = static_cast<int>(pick(rng, 0, max_factors));
    for (int i = 0; i < count; ++i) {
        torsion.emplace_back(Int(primes[pick(rng, 0, 3)]), static_cast<int>(pick(rng, 1, 3)));
    }
    return AbelianGroup(0, std::move(torsion));
}

inline AbelianGroup random_group(Rng& rng, long long max_free = 2, int max_factors = 3) {
    AbelianGroup torsion = random_finite_group(rng, max_factors);
    return direct_sum(AbelianGroup::free(pick(rng, 0, max_free)), torsion);
}

inline AbelianGroup random_nontrivial_group(Rng& rng) {
    AbelianGroup g = random_group(rng);
    return g.is_trivial() ? AbelianGroup::cyclic(2) : g;
}

inline SpaceDescriptor random_descriptor(Rng& rng) {
    switch (pick(rng, 0, 11)) {
        case 0: return Point{};
        case 1: return Sphere(static_cast<int>(pick(rng, 1, 8)));
        case 2: {
            std::map<int, long long> counts;
            const int entries = static_cast<int>(pick(rng, 0, 3));
            for (int i = 0; i < entries; ++i) {
                counts[static_cast<int>(pick(rng, 1, 6))] = pick(rng, 1, 3);
            }
            return WedgeOfSpheres(std::move(counts));
        }
        case 3: return MooreSpace(random_nontrivial_group(rng), static_cast<int>(pick(rng, 2, 5)));
        case 4:
            return EilenbergMacLane(random_nontrivial_group(rng),
                                    static_cast<int>(pick(rng, 1, 3)));
        case 5:
            return ProductOfSpheres(static_cast<int>(pick(rng, 1, 6)),
                                    static_cast<int>(pick(rng, 1, 6)));
        case 6: {
            long long p = pick(rng, 1, 30);
            long long q = 0;
            do {
                q = pick(rng, 0, 2 * p);
            } while (std::gcd(p, q) != 1);
            return LensSpace(p, q);
        }
        case 7: return RealProjective(static_cast<int>(pick(rng, 1, 9)));
        case 8: {
            bool orientable = pick(rng, 0, 1) == 0;
            return Surface(orientable, pick(rng, orientable ? 0 : 1, 5));
        }
        case 9: return ZnComplex(pick(rng, 1, 360), pick(rng, 0, 3));
        case 10: return PseudoProjectivePlane(pick(rng, 2, 60));
        default: return FreePi1Complex(pick(rng, 0, 4), pick(rng, 0, 4));
    }
}

// ---------------------------------------------------------------------------
// gcd-of-minors oracle for the Smith diagonal
// ---------------------------------------------------------------------------

inline Int minor_determinant(const PresentationMatrix& m, const std::vector<std::size_t>& ri,
                             const std::vector<std::size_t>& ci) {
    const std::size_t k = ri.size();
    if (k == 1) return m.at(ri[0], ci[0]);
    Int det = 0;
    std::vector<std::size_t> rest(ri.begin() + 1, ri.end());
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::size_t> cols;
        for (std::size_t t = 0; t < k; ++t) {
            if (t != j) cols.push_back(ci[t]);
        }
        Int cofactor = m.at(ri[0], ci[j]) * minor_determinant(m, rest, cols);
        det += (j % 2 == 0) ? cofactor : -cofactor;
    }
    return det;
}

inline void subsets_of_size(std::size_t n, std::size_t k,
                            std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> current;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (current.size() == k) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i + (k - current.size()) <= n; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
}

// d_k = gcd(k-minors) / gcd((k-1)-minors); zero once the minors vanish.
inline std::vector<Int> minor_gcd_diagonal(const PresentationMatrix& m) {
    const std::size_t r = std::min(m.rows(), m.cols());
    std::vector<Int> diagonal(r, 0);
    Int previous = 1;
    for (std::size_t k = 1; k <= r; ++k) {
        std::vector<std::vector<std::size_t>> row_sets, col_sets;
        subsets_of_size(m.rows(), k, row_sets);
        subsets_of_size(m.cols(), k, col_sets);
        Int g = 0;
        for (const auto& ri : row_sets) {
            for (const auto& ci : col_sets) {
                g = boost::multiprecision::gcd(g, minor_determinant(m, ri, ci));
            }
        }
        if (g == 0) break;  // this and all larger minors vanish
        diagonal[k - 1] = g / previous;
        previous = g;
    }
    return diagonal;
}

// ---------------------------------------------------------------------------
// Explicit cellular chain complexes (independent homology oracle)
// ---------------------------------------------------------------------------

struct ChainComplex {
    // cells[k] = number of k-cells; boundary[k]: C_k -> C_{k-1} for k >= 1,
    // stored as a (cells[k-1] x cells[k]) matrix.
    std::vector<std::size_t> cells;
    std::vector<PresentationMatrix> boundary;

    int dimension() const { return static_cast<int>(cells.size()) - 1; }
};

// H_k as free part (n_k - rank d_k - rank d_{k+1}) plus the elementary
// divisors of d_{k+1}.
inline AbelianGroup chain_homology(const ChainComplex& c, int k) {
    if (k < 0 || k > c.dimension()) return AbelianGroup::zero();
    auto rank_of = [&](int t) -> long long {
        if (t < 1 || t > c.dimension()) return 0;
        long long rank = 0;
        for (const Int& d : smith_normal_form(c.boundary[t])) {
            if (d != 0) ++rank;
        }
        return rank;
    };
    long long free_rank = static_cast<long long>(c.cells[k]) - rank_of(k) - rank_of(k + 1);
    std::vector<PrimePower> torsion;
    if (k + 1 <= c.dimension()) {
        for (const Int& d : smith_normal_form(c.boundary[k + 1])) {
            if (d > 1) {
                for (auto& f : factorize(d)) torsion.push_back(f);
            }
        }
    }
    return AbelianGroup(free_rank, std::move(torsion));
}

// Product complex: cells are pairs, d(a x b) = da x b + (-1)^|a| a x db.
inline ChainComplex product_complex(const ChainComplex& x, const ChainComplex& y) {
    ChainComplex p;
    const int dim = x.dimension() + y.dimension();
    p.cells.assign(dim + 1, 0);

    // offsets[k][i] = column offset of the (i-cell x (k-i)-cell) block.
    std::vector<std::vector<std::size_t>> offsets(dim + 1);
    for (int k = 0; k <= dim; ++k) {
        offsets[k].assign(x.dimension() + 2, 0);
        std::size_t total = 0;
        for (int i = 0; i <= x.dimension(); ++i) {
            offsets[k][i] = total;
            int j = k - i;
            if (j >= 0 && j <= y.dimension()) total += x.cells[i] * y.cells[j];
        }
        offsets[k][x.dimension() + 1] = total;
        p.cells[k] = total;
    }

    p.boundary.emplace_back(0, 0);  // unused k = 0 slot
    for (int k = 1; k <= dim; ++k) {
        PresentationMatrix d(p.cells[k - 1], p.cells[k]);
        for (int i = 0; i <= x.dimension(); ++i) {
            int j = k - i;
            if (j < 0 || j > y.dimension()) continue;
            for (std::size_t a = 0; a < x.cells[i]; ++a) {
                for (std::size_t b = 0; b < y.cells[static_cast<std::size_t>(j)]; ++b) {
                    std::size_t col =
                        offsets[k][i] + a * y.cells[static_cast<std::size_t>(j)] + b;
                    if (i >= 1) {
                        const PresentationMatrix& dx = x.boundary[i];
                        for (std::size_t a2 = 0; a2 < x.cells[i - 1]; ++a2) {
                            if (dx.at(a2, a) == 0) continue;
                            std::size_t row = offsets[k - 1][i - 1] +
                                              a2 * y.cells[static_cast<std::size_t>(j)] + b;
                            d.at(row, col) += dx.at(a2, a);
                        }
                    }
                    if (j >= 1) {
                        const PresentationMatrix& dy = y.boundary[j];
                        const Int sign = (i % 2 == 0) ? 1 : -1;
                        for (std::size_t b2 = 0; b2 < y.cells[static_cast<std::size_t>(j - 1)];
                             ++b2) {
                            if (dy.at(b2, b) == 0) continue;
                            std::size_t row =
                                offsets[k - 1][i] +
                                a * y.cells[static_cast<std::size_t>(j - 1)] + b2;
                            d.at(row, col) += sign * dy.at(b2, b);
                        }
                    }
                }
            }
        }
        p.boundary.push_back(std::move(d));
    }
    return p;
}

// Minimal CW structures used by the Kunneth cross-checks.
inline ChainComplex sphere_complex(int n) {
    ChainComplex c;
    c.cells.assign(n + 1, 0);
    c.cells[0] = 1;
    c.cells[n] += 1;  // n = 0 collapses to a single point cell... n >= 1 here
    c.boundary.emplace_back(0, 0);
    for (int k = 1; k <= n; ++k) {
        c.boundary.emplace_back(c.cells[k - 1], c.cells[k]);
    }
    return c;
}

inline ChainComplex projective_plane_complex() {
    ChainComplex c;
    c.cells = {1, 1, 1};
    c.boundary.emplace_back(0, 0);
    c.boundary.emplace_back(1, 1);  // d1 = 0
    PresentationMatrix d2(1, 1);
    d2.at(0, 0) = 2;
    c.boundary.push_back(std::move(d2));
    return c;
}

// ---------------------------------------------------------------------------
// Tensor product via presentations (oracle for tensor())
// ---------------------------------------------------------------------------

// Presentation of A with one generator per invariant factor / free rank.
inline PresentationMatrix presentation_of(const AbelianGroup& a) {
    std::vector<Int> factors = invariant_factors(a);
    const std::size_t cols = factors.size() + static_cast<std::size_t>(a.free_rank());
    PresentationMatrix m(factors.size(), cols);
    for (std::size_t i = 0; i < factors.size(); ++i) m.at(i, i) = factors[i];
    return m;
}

// A (x) B presented on generator pairs with relations M (x) I and I (x) N.
inline AbelianGroup tensor_by_presentation(const AbelianGroup& a, const AbelianGroup& b) {
    PresentationMatrix ma = presentation_of(a);
    PresentationMatrix mb = presentation_of(b);
    const std::size_t gens = ma.cols() * mb.cols();
    PresentationMatrix m(ma.rows() * mb.cols() + mb.rows() * ma.cols(), gens);
    std::size_t row = 0;
    for (std::size_t r = 0; r < ma.rows(); ++r) {
        for (std::size_t j = 0; j < mb.cols(); ++j, ++row) {
            for (std::size_t i = 0; i < ma.cols(); ++i) {
                m.at(row, i * mb.cols() + j) = ma.at(r, i);
            }
        }
    }
    for (std::size_t r = 0; r < mb.rows(); ++r) {
        for (std::size_t i = 0; i < ma.cols(); ++i, ++row) {
            for (std::size_t j = 0; j < mb.cols(); ++j) {
                m.at(row, i * mb.cols() + j) = mb.at(r, j);
            }
        }
    }
    return group_from_presentation(m);
}

}  // namespace borsuk::testing

#endif  // BORSUK_TESTS_SUPPORT_HPP
