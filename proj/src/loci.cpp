#include "msod/loci.hpp"

#include <array>
#include <map>

namespace msod {

std::string_view to_string(Geometry g) {
    switch (g) {
        case Geometry::AffineSpace: return "affine_space";
        case Geometry::ProjSpace: return "proj_space";
        case Geometry::FermatSub: return "fermat_sub";
        case Geometry::PointPair: return "point_pair";
        case Geometry::ReducedPoint: return "reduced_point";
        case Geometry::Empty: return "empty";
    }
    return "?";
}

Geometry geometry_from_string(std::string_view s) {
    for (auto g : {Geometry::AffineSpace, Geometry::ProjSpace, Geometry::FermatSub, Geometry::PointPair,
                   Geometry::ReducedPoint, Geometry::Empty})
        if (to_string(g) == s) return g;
    throw InputError("unknown geometry '" + std::string(s) + "'");
}

int LocusPiece::dim() const {
    const int t = static_cast<int>(support.size());
    switch (geometry) {
        case Geometry::AffineSpace: return t;
        case Geometry::ProjSpace: return t - 1;
        case Geometry::FermatSub: return t - 2;
        case Geometry::PointPair:
        case Geometry::ReducedPoint: return 0;
        case Geometry::Empty: return -1;
    }
    return -1;
}

int chi_c(const LocusPiece& piece) {
    switch (piece.geometry) {
        case Geometry::AffineSpace: return 1;
        case Geometry::ProjSpace: return static_cast<int>(piece.support.size());
        case Geometry::FermatSub: {
            const int d = piece.dim();
            return d % 2 == 0 ? d + 2 : d + 1;
        }
        case Geometry::PointPair: return 2;
        case Geometry::ReducedPoint: return 1;
        case Geometry::Empty: return 0;
    }
    return 0;
}

int chi_c(const std::vector<LocusPiece>& pieces) {
    int total = 0;
    for (const auto& p : pieces) total += chi_c(p);
    return total;
}

LocusPiece sector_piece(SpaceKind kind, std::vector<int> coords) {
    const auto t = coords.size();
    switch (kind) {
        case SpaceKind::Projective:
            if (t == 0) return {Geometry::Empty, {}};
            return {t == 1 ? Geometry::ReducedPoint : Geometry::ProjSpace, std::move(coords)};
        case SpaceKind::FermatQuadric:
            if (t <= 1) return {Geometry::Empty, std::move(coords)};
            if (t == 2) return {Geometry::PointPair, std::move(coords)};
            return {Geometry::FermatSub, std::move(coords)};
        case SpaceKind::Affine: break;
    }
    throw std::logic_error("sector_piece: affine fixed loci are not sector pieces");
}

namespace {

void check_members(const ActionSpec& spec, const std::vector<GroupElement>& subgroup) {
    for (const auto& h : subgroup)
        if (h.length != spec.rank()) throw std::invalid_argument("group element length differs from rank");
}

/// Greedy F_2 basis; the restriction of a character to span(basis) is fixed by
/// its values on the basis.
std::vector<GroupElement> basis_of(const std::vector<GroupElement>& elements) {
    std::vector<GroupElement> basis;
    std::array<std::uint32_t, 32> pivot{};  // pivot[b]: reduced row with leading bit b
    for (const auto& e : elements) {
        std::uint32_t v = e.bits;
        for (int b = 31; b >= 0 && v != 0; --b) {
            if (!((v >> b) & 1u)) continue;
            if (pivot[static_cast<std::size_t>(b)] == 0) {
                pivot[static_cast<std::size_t>(b)] = v;
                basis.push_back(e);
                break;
            }
            v ^= pivot[static_cast<std::size_t>(b)];
        }
    }
    return basis;
}

}  // namespace

std::vector<Sector> sectors(const ActionSpec& spec, const std::vector<GroupElement>& subgroup) {
    check_members(spec, subgroup);
    const auto basis = basis_of(subgroup);
    std::map<std::uint32_t, std::size_t> index_of_key;
    std::vector<Sector> out;
    for (int i = 0; i < spec.coords(); ++i) {
        std::uint32_t key = 0;
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (pairing(spec.character(i), basis[b]) < 0) key |= 1u << b;
        auto [it, inserted] = index_of_key.try_emplace(key, out.size());
        if (inserted) out.push_back({{}, spec.character(i)});
        out[it->second].coords.push_back(i);
    }
    return out;
}

std::vector<LocusPiece> fixed_pieces_subgroup(const ActionSpec& spec, const std::vector<GroupElement>& subgroup) {
    check_members(spec, subgroup);
    if (!is_subgroup(subgroup)) throw std::invalid_argument("fixed_pieces_subgroup: not a subgroup");
    if (spec.kind() == SpaceKind::Affine) {
        LocusPiece piece{Geometry::AffineSpace, {}};
        for (int i = 0; i < spec.coords(); ++i) {
            bool fixed = true;
            for (const auto& h : subgroup) fixed = fixed && pairing(spec.character(i), h) > 0;
            if (fixed) piece.support.push_back(i);
        }
        return {piece};
    }
    std::vector<LocusPiece> out;
    for (auto& s : sectors(spec, subgroup)) out.push_back(sector_piece(spec.kind(), std::move(s.coords)));
    return out;
}

std::vector<LocusPiece> fixed_pieces(const ActionSpec& spec, const GroupElement& g) {
    return fixed_pieces_subgroup(spec, span({g}, spec.rank()));
}

std::string describe(const LocusPiece& piece) {
    std::string name;
    switch (piece.geometry) {
        case Geometry::AffineSpace: name = "A" + std::to_string(piece.dim()); break;
        case Geometry::ProjSpace: name = "P" + std::to_string(piece.dim()); break;
        case Geometry::FermatSub: name = "Q" + std::to_string(piece.dim()); break;
        case Geometry::PointPair: name = "pair"; break;
        case Geometry::ReducedPoint: name = "pt"; break;
        case Geometry::Empty: name = "empty"; break;
    }
    name += "{";
    for (std::size_t i = 0; i < piece.support.size(); ++i) {
        if (i) name += ",";
        name += "x" + std::to_string(piece.support[i]);
    }
    return name + "}";
}

}  // namespace msod
