#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "msod/euler.hpp"
#include "msod/presets.hpp"
#include "msod/sod.hpp"

using namespace msod;

namespace {

GroupElement el(std::vector<int> bits) { return GroupElement::from_bits(bits); }

std::vector<GroupElement> elements_of(const SodReport& r, const std::vector<std::size_t>& order) {
    std::vector<GroupElement> out;
    for (auto i : order) out.push_back(r.components.at(i).element);
    return out;
}

bool contiguous(const std::vector<GroupElement>& seq) {
    std::set<std::uint32_t> closed;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (closed.contains(seq[i].bits)) return false;
        if (i + 1 < seq.size() && seq[i + 1] != seq[i]) closed.insert(seq[i].bits);
    }
    return true;
}

ActionSpec random_projective(std::mt19937& rng, int max_n, int max_k) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
    const int k = static_cast<int>(rng() % static_cast<unsigned>(max_k + 1));
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n + 1)));
    for (auto& r : rows)
        for (auto& v : r) v = static_cast<int>(rng() % 2);
    return ActionSpec::from_matrix(SpaceKind::Projective, n, rows);
}

}  // namespace

TEST_CASE("P^2 example order") {
    const auto r = assemble(presets::p2_example());
    REQUIRE(r.size() == 7);
    CHECK(r.total_rank == 12);
    const std::vector<std::string> want = {"g=00 P2{x0,x1,x2}", "g=10 P1{x1,x2}", "g=01 P1{x0,x2}", "g=11 P1{x0,x1}",
                                           "g=10 pt{x0}",       "g=01 pt{x1}",    "g=11 pt{x2}"};
    for (std::size_t p = 0; p < r.size(); ++p) CHECK(label(r.at(p)) == want[p]);
    CHECK(r.flags.effective);
    CHECK(r.flags.kernel == std::vector{el({0, 0})});

    REQUIRE(r.grouping.size() == 4);
    CHECK(r.grouping[1].first == el({1, 0}));
    CHECK(r.grouping[1].second == std::vector<std::size_t>{1, 4});
}

TEST_CASE("trivial group and etale") {
    const auto r = assemble(ActionSpec::from_matrix(SpaceKind::Projective, 3, {}));
    REQUIRE(r.size() == 1);
    CHECK(r.total_rank == 4);

    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto e = assemble(presets::etale(n, k));
            CHECK(e.size() == (std::size_t{1} << k));
            CHECK(e.total_rank == (std::int64_t{1} << k));
        }
}

TEST_CASE("non-effective action is flagged") {
    const auto spec = ActionSpec::from_matrix(SpaceKind::Projective, 2, {{1, 1, 1}, {1, 0, 0}});
    const auto r = assemble(spec);
    CHECK_FALSE(r.flags.effective);
    CHECK(r.flags.kernel.size() == 2);
    CHECK_FALSE(r.flags.warnings.empty());
}

TEST_CASE("P^2 regrouping plan") {
    const auto r = assemble(presets::p2_example());
    const auto plan = msodc_plan(r);
    REQUIRE(plan.moves.size() == 3);
    CHECK(plan.moves[0].move == Move{4, Direction::Left});
    CHECK(plan.moves[1].move == Move{3, Direction::Left});
    CHECK(plan.moves[2].move == Move{5, Direction::Left});
    for (const auto& m : plan.moves) CHECK(m.orthogonal == Orthogonality::Unknown);

    const auto grouped = elements_of(r, plan.final_order);
    CHECK(grouped == std::vector{el({0, 0}), el({1, 0}), el({1, 0}), el({0, 1}), el({0, 1}), el({1, 1}), el({1, 1})});

    // Replayed on the Gram, none of the three moves is orthogonal.
    const auto g = compute_gram(presets::p2_example(), r);
    const auto annotated = msodc_plan(r, g.blocked());
    for (const auto& m : annotated.moves) CHECK(m.orthogonal == Orthogonality::No);
    CHECK(annotated.final_order == plan.final_order);
}

TEST_CASE("plan_grouping edge cases") {
    CHECK(plan_grouping({}).empty());
    CHECK(plan_grouping({el({0})}).empty());
    CHECK(plan_grouping({el({0}), el({1}), el({1})}).empty());
    const auto moves = plan_grouping({el({1}), el({0}), el({1})});
    CHECK(moves == std::vector{Move{2, Direction::Left}});
    CHECK(msodc_plan(assemble(presets::etale(3, 2))).moves.empty());
}

TEST_CASE("plan_grouping on random sequences") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const int rank = 1 + static_cast<int>(rng() % 3);
        std::vector<GroupElement> seq(1 + rng() % 12);
        for (auto& g : seq) g = GroupElement(rng() % (1u << rank), rank);
        const auto moves = plan_grouping(seq);
        for (const auto& m : moves) REQUIRE(m.direction == Direction::Left);
        const auto out = permute_by_moves(seq, moves);
        REQUIRE(contiguous(out));
        REQUIRE(plan_grouping(out).empty());
        // element blocks keep their first-occurrence order
        std::vector<GroupElement> first_seen, out_seen;
        for (const auto& g : seq)
            if (std::find(first_seen.begin(), first_seen.end(), g) == first_seen.end()) first_seen.push_back(g);
        for (const auto& g : out)
            if (std::find(out_seen.begin(), out_seen.end(), g) == out_seen.end()) out_seen.push_back(g);
        REQUIRE(first_seen == out_seen);
    }
}

TEST_CASE("random projective specs: ordering invariants") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        const auto spec = random_projective(rng, 4, 4);
        const auto r = assemble(spec);
        std::vector<std::size_t> sorted = r.order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) REQUIRE(sorted[i] == i);

        std::int64_t total = 0;
        for (std::size_t p = 0; p < r.size(); ++p) {
            total += r.at(p).rank;
            if (p) REQUIRE(r.at(p - 1).coarse_dim >= r.at(p).coarse_dim);
        }
        REQUIRE(total == r.total_rank);
        REQUIRE(assemble(spec) == r);
    }
}
