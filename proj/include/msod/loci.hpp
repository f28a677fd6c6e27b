#pragma once

#include <string>
#include <vector>

#include "msod/action.hpp"

namespace msod {

/// Coordinates on which a subgroup H acts through the same restricted character.
struct Sector {
    std::vector<int> coords;
    /// Character of the first coordinate; any coordinate of the sector restricts
    /// to the same character of H.
    Character representative;
};

enum class Geometry { AffineSpace, ProjSpace, FermatSub, PointPair, ReducedPoint, Empty };

std::string_view to_string(Geometry g);
Geometry geometry_from_string(std::string_view s);

/// Geometric piece of a fixed locus, cut out by one sector.
///
///   AffineSpace(T)  coordinate subspace A^|T|            chi_c 1
///   ProjSpace(T)    P(V_T), |T| >= 2                      chi_c |T|
///   ReducedPoint(T) the coordinate point, |T| = 1         chi_c 1
///   FermatSub(T)    sum_{i in T} x_i^2 = 0, |T| >= 3      chi_c dim+2 (even dim) / dim+1 (odd)
///   PointPair(T)    x_a^2 + x_b^2 = 0, two points          chi_c 2
///   Empty           |T| <= 1 on a quadric                  chi_c 0
struct LocusPiece {
    Geometry geometry = Geometry::Empty;
    std::vector<int> support;

    int dim() const;
    bool empty() const { return geometry == Geometry::Empty; }

    friend bool operator==(const LocusPiece&, const LocusPiece&) = default;
};

/// Euler characteristic with compact support.
int chi_c(const LocusPiece& piece);

/// Piece cut out on the sector `coords` for the given space kind (projective or
/// quadric). Affine fixed loci are not sector-wise; see fixed_pieces_subgroup.
LocusPiece sector_piece(SpaceKind kind, std::vector<int> coords);

/// Coordinates grouped by their character restricted to H, ordered by the
/// smallest coordinate index of each sector.
std::vector<Sector> sectors(const ActionSpec& spec, const std::vector<GroupElement>& subgroup);

/// Fixed locus X^g as a list of pieces.
std::vector<LocusPiece> fixed_pieces(const ActionSpec& spec, const GroupElement& g);

/// Fixed locus X^H. Empty quadric pieces are kept so sums never skip terms.
std::vector<LocusPiece> fixed_pieces_subgroup(const ActionSpec& spec, const std::vector<GroupElement>& subgroup);

/// Sum of chi_c over the pieces.
int chi_c(const std::vector<LocusPiece>& pieces);

/// Human label such as "P1{x1,x2}".
std::string describe(const LocusPiece& piece);

}  // namespace msod
