#ifndef BORSUK_HOMOLOGY_HPP
#define BORSUK_HOMOLOGY_HPP

#include <map>
#include <optional>

#include "borsuk/abelian.hpp"
#include "borsuk/spaces.hpp"

namespace borsuk {

/// Integral homology table. Dimensions with zero homology are absent from
/// the map. truncated_above is set exactly when the true support extends
/// beyond the stored degrees (K(Z_m, 1) and truncated Kunneth outputs);
/// otherwise the table is complete.
struct GradedGroup {
    std::map<int, AbelianGroup> groups;
    std::optional<int> truncated_above;

    bool complete() const { return !truncated_above.has_value(); }

    /// Group in the given dimension; the zero group when absent.
    const AbelianGroup& at(int dim) const;

    /// Largest dimension carrying a nonzero group (0 for the empty table).
    int top_degree() const;

    /// Alternating sum of free ranks over the stored table.
    long long euler_characteristic() const;

    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;
};

/// True when homology_of is defined for the family: everything except
/// Eilenberg-MacLane spaces other than K(Z, 1) and K(Z_m, 1).
bool supports_homology(const SpaceDescriptor& d);

/// Homology table of d for degrees 0..max_dim. Throws UnsupportedHomology
/// for families without a table.
GradedGroup homology_of(const SpaceDescriptor& d, int max_dim);

/// Same, with max_dim defaulted per family (top nonzero degree; 2n+1 for
/// K(Z_m, n), whose support is unbounded).
GradedGroup homology_of(const SpaceDescriptor& d);

int default_max_dim(const SpaceDescriptor& d);

/// H_n(X x Y) for n <= max_dim from the tables of the factors:
/// the direct sum of H_i (x) H_j over i+j = n and Tor(H_i, H_j) over
/// i+j = n-1. Inputs must be complete or truncated no lower than max_dim;
/// otherwise TruncationTooLow.
GradedGroup kunneth(const GradedGroup& hx, const GradedGroup& hy, int max_dim);

}  // namespace borsuk

#endif  // BORSUK_HOMOLOGY_HPP
