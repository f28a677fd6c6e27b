#include "msod/inertia.hpp"

#include <set>

namespace msod {

std::string_view to_string(CoarseType::Kind kind) {
    switch (kind) {
        case CoarseType::Kind::AffineSpace: return "affine_space";
        case CoarseType::Kind::ProjSpace: return "proj_space";
        case CoarseType::Kind::Point: return "point";
        case CoarseType::Kind::Undetermined: return "undetermined";
    }
    return "?";
}

CoarseType::Kind coarse_kind_from_string(std::string_view s) {
    for (auto k : {CoarseType::Kind::AffineSpace, CoarseType::Kind::ProjSpace, CoarseType::Kind::Point,
                   CoarseType::Kind::Undetermined})
        if (to_string(k) == s) return k;
    throw InputError("unknown coarse type '" + std::string(s) + "'");
}

std::string describe(const CoarseType& t) {
    switch (t.kind) {
        case CoarseType::Kind::AffineSpace: return "A^" + std::to_string(t.dim);
        case CoarseType::Kind::ProjSpace: return "P^" + std::to_string(t.dim);
        case CoarseType::Kind::Point: return "pt";
        case CoarseType::Kind::Undetermined: return "?(" + std::to_string(t.dim) + ")";
    }
    return "?";
}

bool pair_is_swapped(const ActionSpec& spec, const LocusPiece& pair) {
    if (pair.geometry != Geometry::PointPair) throw std::invalid_argument("pair_is_swapped: not a point pair");
    const auto& a = spec.character(pair.support[0]);
    const auto& b = spec.character(pair.support[1]);
    // Some h has chi_a(h) != chi_b(h) iff the characters differ.
    return a != b;
}

namespace {

/// Number of points of the pair fixed by h: both or neither.
int pair_fixed_points(const ActionSpec& spec, const LocusPiece& pair, const GroupElement& h) {
    const auto sa = pairing(spec.character(pair.support[0]), h);
    const auto sb = pairing(spec.character(pair.support[1]), h);
    return sa == sb ? 2 : 0;
}

/// chi_c(C cap X^h): split C's support by the sign of h, then apply the piece
/// table inside each part.
int chi_c_fixed_by(const ActionSpec& spec, const LocusPiece& piece, const GroupElement& h) {
    if (piece.geometry == Geometry::AffineSpace) return 1;
    std::vector<int> plus, minus;
    for (int i : piece.support) (pairing(spec.character(i), h) > 0 ? plus : minus).push_back(i);
    int total = 0;
    for (auto* part : {&plus, &minus})
        if (!part->empty()) total += chi_c(sector_piece(spec.kind(), std::move(*part)));
    return total;
}

/// Sign patterns of G on the coordinates T, as bitmasks over positions of T,
/// modulo the global sign.
std::set<std::uint32_t> residual_signs(const ActionSpec& spec, const std::vector<int>& support) {
    const std::uint32_t full = (1u << support.size()) - 1u;
    std::set<std::uint32_t> out;
    for (const auto& h : all_elements(spec.rank())) {
        std::uint32_t mask = 0;
        for (std::size_t j = 0; j < support.size(); ++j)
            if (pairing(spec.character(support[j]), h) < 0) mask |= 1u << j;
        out.insert(std::min(mask, mask ^ full));
    }
    return out;
}

}  // namespace

std::int64_t coarse_chi(const ActionSpec& spec, const InertiaComponent& comp) {
    if (comp.split_index != 0) return 1;
    std::int64_t sum = 0;
    for (const auto& h : all_elements(spec.rank())) {
        sum += comp.piece.geometry == Geometry::PointPair ? pair_fixed_points(spec, comp.piece, h)
                                                           : chi_c_fixed_by(spec, comp.piece, h);
    }
    const auto order = static_cast<std::int64_t>(spec.order());
    if (sum % order != 0)
        throw std::logic_error("Burnside average " + std::to_string(sum) + "/" + std::to_string(order) +
                               " is not integral for " + label(comp));
    return sum / order;
}

CoarseClass coarse_type(const ActionSpec& spec, const InertiaComponent& comp) {
    using K = CoarseType::Kind;
    const auto& piece = comp.piece;
    if (piece.geometry == Geometry::AffineSpace) return {{K::AffineSpace, piece.dim()}, Smoothness::Smooth, 0};
    if (piece.dim() == 0) return {{K::Point, 0}, Smoothness::Smooth, 0};

    const auto t = piece.support.size();
    const auto residual = residual_signs(spec, piece.support);
    const bool full = residual.size() == (std::size_t{1} << (t - 1));
    const bool trivial = residual.size() == 1;

    if (piece.geometry == Geometry::ProjSpace) {
        if (full && !trivial) return {{K::ProjSpace, piece.dim()}, Smoothness::Smooth, 2};
        // Nothing acts on the piece: the coarse space is the piece itself.
        if (trivial) return {{K::ProjSpace, piece.dim()}, Smoothness::Smooth, 1};
        return {{K::Undetermined, piece.dim()}, Smoothness::Unknown, 0};
    }
    if (piece.geometry == Geometry::FermatSub && full)
        // The squares satisfy one linear relation: a hyperplane in P^{|T|-1}.
        return {{K::ProjSpace, piece.dim()}, Smoothness::Smooth, 2};
    return {{K::Undetermined, piece.dim()}, Smoothness::Unknown, 0};
}

std::vector<InertiaComponent> components(const ActionSpec& spec) {
    std::vector<InertiaComponent> out;
    for (const auto& g : all_elements(spec.rank())) {
        for (const auto& piece : fixed_pieces(spec, g)) {
            if (piece.empty()) continue;
            InertiaComponent base;
            base.element = g;
            base.piece = piece;
            base.negated = spec.kind() != SpaceKind::Affine && pairing(spec.character(piece.support[0]), g) < 0;
            base.coarse_dim = piece.dim();

            std::vector<InertiaComponent> made;
            if (piece.geometry == Geometry::PointPair && !pair_is_swapped(spec, piece)) {
                for (int s : {1, 2}) {
                    made.push_back(base);
                    made.back().split_index = s;
                }
            } else {
                made.push_back(base);
            }
            for (auto& c : made) {
                c.rank = coarse_chi(spec, c);
                const auto cls = coarse_type(spec, c);
                c.coarse_type = cls.type;
                c.smooth = cls.smooth;
                c.quotient_degree = cls.quotient_degree;
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

std::string label(const InertiaComponent& comp) {
    std::string s = "g=" + comp.element.str() + " " + describe(comp.piece);
    if (comp.split_index) s += "#" + std::to_string(comp.split_index);
    return s;
}

}  // namespace msod
