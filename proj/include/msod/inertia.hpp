#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msod/loci.hpp"

namespace msod {

struct CoarseType {
    enum class Kind { AffineSpace, ProjSpace, Point, Undetermined };
    Kind kind = Kind::Undetermined;
    int dim = 0;

    friend bool operator==(const CoarseType&, const CoarseType&) = default;
};

std::string_view to_string(CoarseType::Kind kind);
CoarseType::Kind coarse_kind_from_string(std::string_view s);
std::string describe(const CoarseType& t);

enum class Smoothness { Smooth, Unknown };

/// Result of classifying the coarse space of one inertia component.
struct CoarseClass {
    CoarseType type;
    Smoothness smooth = Smoothness::Unknown;
    /// Degree of the quotient map on O(1): 2 for the coordinate-squaring map,
    /// 1 when the group acts trivially on the piece. 0 when not a projective space.
    int quotient_degree = 0;
};

/// Connected component [C/G] of the inertia stack, C a piece of X^g.
struct InertiaComponent {
    GroupElement element;
    LocusPiece piece;
    /// 0 unless a point pair splits into two components (then 1 and 2).
    int split_index = 0;
    /// g acts on the piece's coordinates by -1 (projective "minus" sector).
    bool negated = false;
    int coarse_dim = 0;
    /// chi_c of the coarse space = K_0 rank of the decomposition piece.
    std::int64_t rank = 0;
    CoarseType coarse_type;
    Smoothness smooth = Smoothness::Unknown;
    int quotient_degree = 0;

    friend bool operator==(const InertiaComponent&, const InertiaComponent&) = default;
};

/// Some element swaps the two points of x_a^2 + x_b^2 = 0 iff chi_a != chi_b
/// on it.
bool pair_is_swapped(const ActionSpec& spec, const LocusPiece& pair);

/// All inertia components, in (element ascending, sector, split index) order.
std::vector<InertiaComponent> components(const ActionSpec& spec);

/// chi_c of the coarse space by Burnside averaging over G. Throws
/// std::logic_error if the average is not integral.
std::int64_t coarse_chi(const ActionSpec& spec, const InertiaComponent& comp);

CoarseClass coarse_type(const ActionSpec& spec, const InertiaComponent& comp);

/// "g=10 P1{x1,x2}".
std::string label(const InertiaComponent& comp);

}  // namespace msod
