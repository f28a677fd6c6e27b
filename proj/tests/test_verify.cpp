#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "msod/presets.hpp"
#include "msod/sod.hpp"
#include "msod/verify.hpp"

using namespace msod;

namespace {

/// Direct double sum. On a projective space every sign class T contributes |T|;
/// on a quadric 2 floor(|T| / 2).
std::int64_t double_sum_oracle(const ActionSpec& spec) {
    std::int64_t sum = 0;
    const auto elems = all_elements(spec.rank());
    for (const auto& g : elems)
        for (const auto& h : elems) {
            std::map<std::pair<int, int>, int> classes;
            for (const auto& chi : spec.characters()) ++classes[{pairing(chi, g), pairing(chi, h)}];
            for (const auto& [_, t] : classes) sum += spec.kind() == SpaceKind::Projective ? t : 2 * (t / 2);
        }
    return sum / static_cast<std::int64_t>(elems.size());
}

}  // namespace

TEST_CASE("etale checks") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto r = check_etale(n, k);
            INFO(r.name << ": " << r.actual);
            CHECK(r.passed());
        }
}

TEST_CASE("projective rank and Burnside totals") {
    for (int n = 1; n <= 4; ++n) {
        const auto spec = presets::pn_full(n);
        CHECK(check_projective_rank(spec).passed());
        CHECK(check_burnside_total(spec).passed());
        CHECK(burnside_double_sum(spec) == (n + 1) * (std::int64_t{1} << n));
    }
    const auto kernel = ActionSpec::from_matrix(SpaceKind::Projective, 2, {{1, 1, 1}});
    CHECK(check_projective_rank(kernel).status == CheckStatus::Skipped);
}

TEST_CASE("quadric exceptional-object counts") {
    const std::int64_t fixture[] = {5, 17, 49, 129, 321};
    for (int q = 1; q <= 5; ++q) {
        const auto spec = presets::quadric(q);
        CHECK(burnside_double_sum(spec) == double_sum_oracle(spec));
        CHECK(burnside_double_sum(spec) == fixture[q - 1]);
        CHECK(assemble(spec).total_rank == fixture[q - 1]);
        const auto r = check_quadric(q);
        INFO(r.actual);
        CHECK(r.passed());
    }
}

TEST_CASE("double sum matches the oracle on random specs") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        const auto kind = trial % 2 ? SpaceKind::Projective : SpaceKind::FermatQuadric;
        const int dim = 1 + static_cast<int>(rng() % 4);
        const int c = ActionSpec::coords_for(kind, dim);
        const int k = static_cast<int>(rng() % 5);
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(c)));
        for (auto& r : rows)
            for (auto& v : r) v = static_cast<int>(rng() % 2);
        const auto spec = ActionSpec::from_matrix(kind, dim, rows);
        REQUIRE(burnside_double_sum(spec) == double_sum_oracle(spec));
        REQUIRE(check_burnside_total(spec).passed());
    }
}

TEST_CASE("gram checks") {
    CHECK(check_gram(presets::p2_example(), "p2").passed());
    CHECK(check_gram_presets().passed());
    const auto odd = ActionSpec::from_matrix(SpaceKind::Projective, 3, {{1, 0, 0, 0}});
    bool skipped = false;
    for (const auto& r : checks_for(odd))
        if (r.name.starts_with("gram")) skipped = r.status == CheckStatus::Skipped;
    CHECK(skipped);
    for (const auto& r : checks_for(presets::etale(3, 2))) CHECK_FALSE(r.name.starts_with("gram"));
}

TEST_CASE("default suite passes") {
    const auto results = run_suite();
    CHECK(results.size() > 40);
    for (const auto& r : results) {
        INFO(r.name << ": expected " << r.expected << ", got " << r.actual);
        CHECK(r.passed());
    }
}
