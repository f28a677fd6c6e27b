#include "msod/action.hpp"

#include <json.hpp>

namespace msod {

using nlohmann::json;

std::string_view to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::Affine: return "affine";
        case SpaceKind::Projective: return "projective";
        case SpaceKind::FermatQuadric: return "fermat_quadric";
    }
    return "?";
}

SpaceKind space_kind_from_string(std::string_view s) {
    if (s == "affine") return SpaceKind::Affine;
    if (s == "projective") return SpaceKind::Projective;
    if (s == "fermat_quadric") return SpaceKind::FermatQuadric;
    throw InputError("unknown space kind '" + std::string(s) + "'");
}

int ActionSpec::coords_for(SpaceKind kind, int dim) {
    switch (kind) {
        case SpaceKind::Affine: return dim;
        case SpaceKind::Projective: return dim + 1;
        case SpaceKind::FermatQuadric: return dim + 2;
    }
    return 0;
}

ActionSpec::ActionSpec(SpaceKind kind, int dim, int rank, std::vector<Character> characters)
    : kind_(kind), dim_(dim), rank_(rank), characters_(std::move(characters)) {
    if (dim < 0) throw InputError("space dimension must be non-negative");
    if (rank < 0) throw InputError("group rank must be non-negative");
    if (rank > kMaxRank) throw InputError("group rank exceeds " + std::to_string(kMaxRank));
    const int c = coords_for(kind, dim);
    if (c < 1 && kind != SpaceKind::Affine) throw InputError("space has no coordinates");
    if (static_cast<int>(characters_.size()) != c)
        throw InputError("action has " + std::to_string(characters_.size()) + " columns, " +
                         std::string(to_string(kind)) + " of dim " + std::to_string(dim) + " needs " +
                         std::to_string(c));
    for (const auto& chi : characters_)
        if (chi.length != rank) throw InputError("character length differs from group rank");
    if (kind == SpaceKind::Affine && rank > c)
        throw InputError("affine action of rank " + std::to_string(rank) + " on " + std::to_string(c) +
                         " coordinates cannot be effective");
    // Diagonal signs preserve sum x_i^2 automatically; nothing further to check
    // for the quadric.
}

ActionSpec ActionSpec::from_matrix(SpaceKind kind, int dim, const std::vector<std::vector<int>>& rows) {
    const int c = coords_for(kind, dim);
    const int k = static_cast<int>(rows.size());
    if (k > kMaxRank) throw InputError("group rank exceeds " + std::to_string(kMaxRank));
    std::vector<Character> chars;
    for (int col = 0; col < c; ++col) {
        std::uint32_t bits = 0;
        for (int r = 0; r < k; ++r) {
            const auto& row = rows[static_cast<std::size_t>(r)];
            if (static_cast<int>(row.size()) != c)
                throw InputError("action row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(c));
            const int v = row[static_cast<std::size_t>(col)];
            if (v != 0 && v != 1) throw InputError("action entries must be 0 or 1");
            if (v) bits |= 1u << r;
        }
        chars.emplace_back(bits, k);
    }
    return ActionSpec(kind, dim, k, std::move(chars));
}

int ActionSpec::weight(const GroupElement& g) const {
    int w = 0;
    for (const auto& chi : characters_) w += pairing(chi, g) < 0;
    return w;
}

std::vector<std::vector<int>> ActionSpec::matrix() const {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(rank_), std::vector<int>(characters_.size()));
    for (std::size_t col = 0; col < characters_.size(); ++col)
        for (int r = 0; r < rank_; ++r) rows[static_cast<std::size_t>(r)][col] = characters_[col].test(r);
    return rows;
}

ActionSpec parse_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed action-spec document: ") + e.what());
    }
    try {
        const auto& space = doc.at("space");
        const auto kind = space_kind_from_string(space.at("kind").get<std::string>());
        const int dim = space.at("dim").get<int>();
        const int k = doc.at("group_rank").get<int>();
        if (k < 0) throw InputError("group_rank must be non-negative");
        const auto rows = doc.at("action").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(rows.size()) != k)
            throw InputError("action has " + std::to_string(rows.size()) + " rows but group_rank is " +
                             std::to_string(k));
        return ActionSpec::from_matrix(kind, dim, rows);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid action-spec document: ") + e.what());
    }
}

std::vector<GroupElement> projective_kernel(const ActionSpec& spec) {
    std::vector<GroupElement> out;
    for (const auto& g : all_elements(spec.rank())) {
        bool trivial = true;
        const int first = spec.coords() > 0 ? pairing(spec.character(0), g) : 1;
        for (const auto& chi : spec.characters()) {
            const int s = pairing(chi, g);
            if (spec.kind() == SpaceKind::Affine ? s != 1 : s != first) {
                trivial = false;
                break;
            }
        }
        if (trivial) out.push_back(g);
    }
    return out;
}

}  // namespace msod
