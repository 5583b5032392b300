#ifndef BORSUK_ABELIAN_HPP
#define BORSUK_ABELIAN_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "borsuk/errors.hpp"

namespace borsuk {

/// Exact integer type used throughout. Smith normal form intermediates grow
/// far beyond machine words, so fixed-width integers are not an option.
using Int = boost::multiprecision::cpp_int;

/// Deterministic primality test by trial division. Intended for desk-scale
/// inputs (torsion orders well below 2^63).
bool is_prime(const Int& n);

/// Prime-power factorization of n >= 1 by trial division, sorted by prime.
struct PrimePower;
std::vector<PrimePower> factorize(Int n);

/// A prime power p^a, the indecomposable building block of finite abelian
/// groups.
struct PrimePower {
    Int p;
    int a;

    PrimePower(Int prime, int exponent);

    /// p^a.
    Int value() const;

    friend bool operator==(const PrimePower& x, const PrimePower& y) {
        return x.p == y.p && x.a == y.a;
    }
    friend bool operator<(const PrimePower& x, const PrimePower& y) {
        return x.p != y.p ? x.p < y.p : x.a < y.a;
    }
};

/// A finitely generated abelian group in primary decomposition:
/// Z^free_rank plus one cyclic factor Z_{p^a} per torsion entry. The torsion
/// list is kept sorted by (p, a) with repeats for multiplicity, so two values
/// compare equal exactly when the groups are isomorphic (Krull-Schmidt).
class AbelianGroup {
public:
    /// The zero group.
    AbelianGroup() = default;
    AbelianGroup(long long free_rank, std::vector<PrimePower> torsion);

    static AbelianGroup zero();
    static AbelianGroup free(long long rank);
    /// Z/n for n >= 1 (n == 1 gives the zero group).
    static AbelianGroup cyclic(const Int& n);

    long long free_rank() const { return free_rank_; }
    const std::vector<PrimePower>& torsion() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_free() const { return torsion_.empty(); }
    /// Finite cyclic, i.e. at most one factor per prime (0 counts: Z/1).
    bool is_finite_cyclic() const;
    /// Order of the torsion part (1 when torsion-free).
    Int torsion_order() const;

    /// Canonical literal: "0", "Z", "Z^2", "Z/12", "Z + Z/2 + Z/12", with the
    /// torsion part written in invariant-factor form. This string is the
    /// canonical form fixed for hashing and sorting.
    std::string to_string() const;

    friend bool operator==(const AbelianGroup& x, const AbelianGroup& y) {
        return x.free_rank_ == y.free_rank_ && x.torsion_ == y.torsion_;
    }

private:
    long long free_rank_ = 0;
    std::vector<PrimePower> torsion_;
};

/// Canonical total order: free rank, then torsion order, then the torsion
/// list lexicographically. Returns <0, 0, >0.
int compare(const AbelianGroup& x, const AbelianGroup& y);

inline bool operator<(const AbelianGroup& x, const AbelianGroup& y) {
    return compare(x, y) < 0;
}

/// Rectangular integer matrix of relations: rows are relations, columns are
/// generators of a free abelian group. Entries are arbitrary precision.
class PresentationMatrix {
public:
    PresentationMatrix(std::size_t rows, std::size_t cols);

    /// Build from explicit rows; every row must have length `cols`.
    static PresentationMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                                        std::size_t cols);
    /// Convenience overload inferring the width from the first row.
    static PresentationMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

/// Smith normal form diagonal d_1 | d_2 | ... | d_r, all >= 0, with
/// r = min(rows, cols). Zeros, if any, sit at the end of the chain.
std::vector<Int> smith_normal_form(const PresentationMatrix& m);

/// Full decomposition U * M * V = diag(d), with U and V unimodular.
struct SmithDecomposition {
    std::vector<Int> diagonal;
    PresentationMatrix left;   // rows x rows
    PresentationMatrix right;  // cols x cols
};
SmithDecomposition smith_decompose(const PresentationMatrix& m);

/// Basis of { x in Z^cols : M x = 0 } (M acting on column vectors), one basis
/// vector per returned row.
std::vector<std::vector<Int>> kernel_basis(const PresentationMatrix& m);

/// Cokernel Z^cols / rowspace(M) in canonical form.
AbelianGroup group_from_presentation(const PresentationMatrix& m);

/// Invariant factors m_1 | m_2 | ... (each > 1) of the torsion part;
/// A is isomorphic to Z^free_rank + sum of Z_{m_i}.
std::vector<Int> invariant_factors(const AbelianGroup& a);

/// True exactly when the canonical forms coincide.
bool is_isomorphic(const AbelianGroup& a, const AbelianGroup& b);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// All isomorphism classes of direct summands of A: every (s, T') with
/// 0 <= s <= free_rank and T' a sub-multiset of the torsion list, sorted
/// canonically. Contains the zero group and A itself.
std::vector<AbelianGroup> summands_up_to_iso(const AbelianGroup& a);

/// length of summands_up_to_iso(a), computed without materializing it.
long long count_summands(const AbelianGroup& a);

/// Tensor product over Z: bilinear, Z (x) X = X, Z_a (x) Z_b = Z_gcd(a,b).
AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b);

/// Tor_1 over Z: vanishes against free groups, Tor(Z_a, Z_b) = Z_gcd(a,b).
AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b);

/// Parse the group literal syntax shared with the CLI: `0`, `Z`, `Z^k`,
/// `Z/n`, joined by `+`; whitespace insignificant.
AbelianGroup parse_group_literal(const std::string& text);

/// Same as AbelianGroup::to_string.
std::string render_group(const AbelianGroup& a);

}  // namespace borsuk

#endif  // BORSUK_ABELIAN_HPP
