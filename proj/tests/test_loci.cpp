#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "msod/loci.hpp"
#include "msod/presets.hpp"

using namespace msod;

namespace {

GroupElement el(std::vector<int> bits) { return GroupElement::from_bits(bits); }

/// Oracle: group coordinates by the full sign vector over every element of H.
std::set<std::vector<int>> oracle_sectors(const ActionSpec& spec, const std::vector<GroupElement>& h) {
    std::map<std::vector<int>, std::vector<int>> by_signs;
    for (int i = 0; i < spec.coords(); ++i) {
        std::vector<int> signs;
        for (const auto& e : h) signs.push_back(pairing(spec.character(i), e));
        by_signs[signs].push_back(i);
    }
    std::set<std::vector<int>> out;
    for (auto& [_, coords] : by_signs) out.insert(coords);
    return out;
}

std::set<std::vector<int>> as_set(const std::vector<Sector>& s) {
    std::set<std::vector<int>> out;
    for (const auto& x : s) out.insert(x.coords);
    return out;
}

ActionSpec random_spec(std::mt19937& rng, SpaceKind kind, int max_dim, int max_rank) {
    const int dim = (kind == SpaceKind::Affine ? 0 : 1) + static_cast<int>(rng() % static_cast<unsigned>(max_dim));
    const int c = ActionSpec::coords_for(kind, dim);
    int k = static_cast<int>(rng() % static_cast<unsigned>(max_rank + 1));
    if (kind == SpaceKind::Affine) k = std::min(k, c);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(c)));
    for (auto& row : rows)
        for (auto& v : row) v = static_cast<int>(rng() % 2);
    return ActionSpec::from_matrix(kind, dim, rows);
}

}  // namespace

TEST_CASE("sectors on the P^2 example") {
    const auto spec = presets::p2_example();
    const auto s = sectors(spec, span({el({1, 0})}, 2));
    REQUIRE(s.size() == 2);
    CHECK(s[0].coords == std::vector{0});
    CHECK(s[1].coords == std::vector{1, 2});

    CHECK(sectors(spec, {el({0, 0})}).size() == 1);
    CHECK(sectors(spec, {el({0, 0})})[0].coords == std::vector{0, 1, 2});

    const auto full = sectors(spec, all_elements(2));
    CHECK(as_set(full) == oracle_sectors(spec, all_elements(2)));
    CHECK(full.size() == 3);

    CHECK_THROWS_AS(sectors(spec, {el({1})}), std::invalid_argument);
}

TEST_CASE("fixed_pieces examples") {
    const auto p2 = presets::p2_example();
    CHECK(fixed_pieces(p2, el({1, 0})) ==
          std::vector<LocusPiece>{{Geometry::ReducedPoint, {0}}, {Geometry::ProjSpace, {1, 2}}});

    const auto affine = presets::etale(3, 2);
    const auto a = fixed_pieces(affine, el({1, 1}));
    REQUIRE(a.size() == 1);
    CHECK(a[0].geometry == Geometry::AffineSpace);
    CHECK(a[0].dim() == 1);

    const auto q = presets::quadric(2);
    const auto pairs = fixed_pieces(q, el({1, 1, 0}));
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].geometry == Geometry::PointPair);
    CHECK(pairs[1].geometry == Geometry::PointPair);
}

TEST_CASE("fixed_pieces_subgroup examples") {
    const auto p2 = presets::p2_example();
    CHECK(fixed_pieces_subgroup(p2, {el({0, 0})}) == std::vector<LocusPiece>{{Geometry::ProjSpace, {0, 1, 2}}});
    CHECK(fixed_pieces_subgroup(p2, all_elements(2)) ==
          std::vector<LocusPiece>{{Geometry::ReducedPoint, {0}}, {Geometry::ReducedPoint, {1}},
                                  {Geometry::ReducedPoint, {2}}});

    const auto q = presets::quadric(2);
    const auto pieces = fixed_pieces_subgroup(q, all_elements(3));
    CHECK(pieces.size() == 4);
    for (const auto& p : pieces) CHECK(p.empty());
    CHECK(chi_c(pieces) == 0);

    CHECK_THROWS_AS(fixed_pieces_subgroup(p2, {el({1, 0})}), std::invalid_argument);
}

TEST_CASE("chi_c table") {
    CHECK(chi_c(LocusPiece{Geometry::AffineSpace, {0, 1, 2, 3, 4}}) == 1);
    CHECK(chi_c(LocusPiece{Geometry::ProjSpace, {0, 1, 2}}) == 3);
    CHECK(chi_c(LocusPiece{Geometry::FermatSub, {0, 1, 2, 3}}) == 4);
    CHECK(chi_c(LocusPiece{Geometry::FermatSub, {0, 1, 2}}) == 2);       // conic
    CHECK(chi_c(LocusPiece{Geometry::FermatSub, {0, 1, 2, 3, 4}}) == 4);  // quadric threefold
    CHECK(chi_c(LocusPiece{Geometry::PointPair, {0, 1}}) == 2);
    CHECK(chi_c(LocusPiece{Geometry::Empty, {0}}) == 0);
    CHECK(LocusPiece{Geometry::Empty, {}}.dim() == -1);
    CHECK(LocusPiece{Geometry::FermatSub, {0, 1, 2, 3}}.dim() == 2);
}

TEST_CASE("sector degeneracy on quadrics") {
    CHECK(sector_piece(SpaceKind::FermatQuadric, {3}).empty());
    CHECK(sector_piece(SpaceKind::FermatQuadric, {1, 3}).geometry == Geometry::PointPair);
    CHECK(sector_piece(SpaceKind::FermatQuadric, {0, 1, 3}).geometry == Geometry::FermatSub);
    CHECK(sector_piece(SpaceKind::Projective, {2}).geometry == Geometry::ReducedPoint);
}

TEST_CASE("properties over random specs") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 300; ++trial) {
        const auto kind = std::array{SpaceKind::Affine, SpaceKind::Projective, SpaceKind::FermatQuadric}[trial % 3];
        const auto spec = random_spec(rng, kind, 5, 4);
        const auto elems = all_elements(spec.rank());
        for (const auto& g : elems) {
            const auto h = span({g, elems[rng() % elems.size()]}, spec.rank());
            // partition + agreement with the oracle
            const auto s = sectors(spec, h);
            std::vector<int> seen;
            for (const auto& sec : s) seen.insert(seen.end(), sec.coords.begin(), sec.coords.end());
            std::sort(seen.begin(), seen.end());
            std::vector<int> all(static_cast<std::size_t>(spec.coords()));
            std::iota(all.begin(), all.end(), 0);
            REQUIRE(seen == all);
            REQUIRE(as_set(s) == oracle_sectors(spec, h));

            // single element == its span
            REQUIRE(fixed_pieces(spec, g) == fixed_pieces_subgroup(spec, span({g}, spec.rank())));

            if (kind == SpaceKind::Projective) {
                int total = 0;
                for (const auto& p : fixed_pieces(spec, g)) total += static_cast<int>(p.support.size());
                REQUIRE(total == spec.coords());
                // chi of P(V_+) u P(V_-) is |T_+| + |T_-|
                REQUIRE(chi_c(fixed_pieces(spec, g)) == spec.coords());
            }
        }
    }
}

TEST_CASE("affine dimension law n - |I|, exhaustive n <= 6") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto spec = presets::etale(n, k);
            for (const auto& g : all_elements(k)) {
                const auto pieces = fixed_pieces(spec, g);
                REQUIRE(pieces.size() == 1);
                REQUIRE(pieces[0].dim() == n - g.weight());
            }
        }
}
