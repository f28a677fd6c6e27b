#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "msod/inertia.hpp"
#include "msod/presets.hpp"

using namespace msod;

namespace {

GroupElement el(std::vector<int> bits) { return GroupElement::from_bits(bits); }

std::int64_t total_rank(const std::vector<InertiaComponent>& comps) {
    std::int64_t t = 0;
    for (const auto& c : comps) t += c.rank;
    return t;
}

}  // namespace

TEST_CASE("P^2 example components") {
    const auto spec = presets::p2_example();
    const auto comps = components(spec);
    REQUIRE(comps.size() == 7);
    CHECK(comps[0].element == el({0, 0}));
    CHECK(comps[0].piece.geometry == Geometry::ProjSpace);
    CHECK(comps[0].rank == 3);
    CHECK(comps[0].coarse_type == CoarseType{CoarseType::Kind::ProjSpace, 2});
    CHECK(comps[0].quotient_degree == 2);
    CHECK_FALSE(comps[0].negated);

    int lines = 0, points = 0;
    for (const auto& c : comps) {
        if (c.coarse_dim == 1) {
            ++lines;
            CHECK(c.rank == 2);
            CHECK(c.coarse_type == CoarseType{CoarseType::Kind::ProjSpace, 1});
        } else if (c.coarse_dim == 0) {
            ++points;
            CHECK(c.rank == 1);
            CHECK(c.coarse_type.kind == CoarseType::Kind::Point);
        }
    }
    CHECK(lines == 3);
    CHECK(points == 3);
    CHECK(total_rank(comps) == 12);

    // g = (1,0) negates x: the point x0 is the minus sector.
    CHECK(comps[1].element == el({1, 0}));
    CHECK(comps[1].negated);
    CHECK(label(comps[1]) == "g=10 pt{x0}");
}

TEST_CASE("etale: one affine component per element") {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto comps = components(presets::etale(n, k));
            REQUIRE(comps.size() == (std::size_t{1} << k));
            for (const auto& c : comps) {
                CHECK(c.rank == 1);
                CHECK(c.coarse_type.kind == CoarseType::Kind::AffineSpace);
                CHECK(c.coarse_dim == n - c.element.weight());
            }
        }
}

TEST_CASE("quadric point pairs") {
    // Full group on the quadric surface: every pair is swapped by something.
    const auto q = presets::quadric(2);
    for (const auto& c : components(q)) CHECK(c.split_index == 0);

    // One generator negating x0, x1: both pairs of g are fixed pointwise.
    const auto spec = ActionSpec::from_matrix(SpaceKind::FermatQuadric, 2, {{1, 1, 0, 0}});
    const auto comps = components(spec);
    REQUIRE(comps.size() == 5);
    CHECK(comps[0].piece.geometry == Geometry::FermatSub);
    CHECK(comps[0].rank == 4);
    CHECK(comps[0].coarse_type.kind == CoarseType::Kind::Undetermined);
    for (std::size_t i = 1; i < comps.size(); ++i) {
        CHECK(comps[i].piece.geometry == Geometry::PointPair);
        CHECK(comps[i].rank == 1);
        CHECK(comps[i].split_index == static_cast<int>((i - 1) % 2 + 1));
    }
    CHECK(label(comps[1]).ends_with("#1"));
}

TEST_CASE("coarse chi and type examples") {
    const auto conic = presets::quadric(1);
    const auto comps = components(conic);
    CHECK(comps[0].piece.geometry == Geometry::FermatSub);
    CHECK(coarse_chi(conic, comps[0]) == 2);
    CHECK(comps[0].coarse_type == CoarseType{CoarseType::Kind::ProjSpace, 1});

    // P^3 with one element negating x0.
    const auto spec = ActionSpec::from_matrix(SpaceKind::Projective, 3, {{1, 0, 0, 0}});
    const auto c3 = components(spec);
    REQUIRE(c3.size() == 3);
    CHECK(c3[0].coarse_type == CoarseType{CoarseType::Kind::Undetermined, 3});
    CHECK(c3[0].smooth == Smoothness::Unknown);
    CHECK(c3[0].rank == 4);
    // the plane x0 = 0 is fixed pointwise: trivial residual action
    CHECK(c3[2].piece.support == std::vector{1, 2, 3});
    CHECK(c3[2].coarse_type == CoarseType{CoarseType::Kind::ProjSpace, 2});
    CHECK(c3[2].quotient_degree == 1);
    CHECK(c3[2].rank == 3);
}

TEST_CASE("projective ranks: full residual group gives dim + 1") {
    for (int n = 1; n <= 4; ++n) {
        const auto comps = components(presets::pn_full(n));
        for (const auto& c : comps) CHECK(c.rank == c.coarse_dim + 1);
        CHECK(total_rank(comps) == (n + 1) * (std::int64_t{1} << n));
    }
}

TEST_CASE("random specs: integrality and split pairing") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto kind = trial % 2 ? SpaceKind::Projective : SpaceKind::FermatQuadric;
        const int dim = 1 + static_cast<int>(rng() % 4);
        const int c = ActionSpec::coords_for(kind, dim);
        const int k = static_cast<int>(rng() % 4);
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(c)));
        for (auto& r : rows)
            for (auto& v : r) v = static_cast<int>(rng() % 2);
        const auto spec = ActionSpec::from_matrix(kind, dim, rows);

        std::vector<InertiaComponent> comps;
        REQUIRE_NOTHROW(comps = components(spec));
        std::map<std::pair<std::uint32_t, std::vector<int>>, std::vector<int>> splits;
        for (const auto& comp : comps) {
            REQUIRE(comp.rank >= 1);
            REQUIRE_FALSE(comp.piece.empty());
            if (comp.split_index) splits[{comp.element.bits, comp.piece.support}].push_back(comp.split_index);
            if (comp.piece.geometry == Geometry::PointPair)
                REQUIRE((comp.split_index != 0) == !pair_is_swapped(spec, comp.piece));
        }
        for (const auto& [_, idx] : splits) REQUIRE(idx == std::vector{1, 2});
    }
}
