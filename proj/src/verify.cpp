#include "msod/verify.hpp"

#include <map>
#include <sstream>

#include "msod/euler.hpp"
#include "msod/presets.hpp"
#include "msod/sod.hpp"

namespace msod {

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

namespace {

CheckResult make(std::string name, bool ok, std::string expected, std::string actual, std::string context = {}) {
    return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(expected), std::move(actual),
            std::move(context)};
}

std::string spec_name(const ActionSpec& spec) {
    return std::string(to_string(spec.kind())) + "(" + std::to_string(spec.dim()) + ")/mu2^" +
           std::to_string(spec.rank());
}

std::string dims_string(const std::map<int, int, std::greater<>>& dims) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto [d, count] : dims) {
        os << (first ? "" : ", ") << "dim " << d << ": " << count;
        first = false;
    }
    os << "}";
    return os.str();
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

CheckResult check_etale(int n, int k) {
    const std::string name = "etale(" + std::to_string(n) + "," + std::to_string(k) + ")";
    if (k < 0 || k > n) return {name, CheckStatus::Skipped, "", "", "requires 0 <= k <= n"};
    const auto report = assemble(presets::etale(n, k));

    std::map<int, int, std::greater<>> expected_dims, dims;
    for (int j = 0; j <= k; ++j) expected_dims[n - j] = static_cast<int>(binomial(k, j));
    bool ranks_one = true;
    for (std::size_t p = 0; p < report.size(); ++p) {
        ++dims[report.at(p).coarse_dim];
        ranks_one = ranks_one && report.at(p).rank == 1;
    }
    const auto pieces = std::int64_t{1} << k;
    const bool ok = static_cast<std::int64_t>(report.size()) == pieces && ranks_one && dims == expected_dims &&
                    report.total_rank == pieces;
    return make(name, ok,
                std::to_string(pieces) + " pieces, total rank " + std::to_string(pieces) + ", " +
                    dims_string(expected_dims),
                std::to_string(report.size()) + " pieces, total rank " + std::to_string(report.total_rank) + ", " +
                    dims_string(dims),
                ranks_one ? "" : "a piece has rank != 1");
}

CheckResult check_projective_rank(const ActionSpec& spec) {
    const std::string name = "projective_rank " + spec_name(spec);
    if (spec.kind() != SpaceKind::Projective) return {name, CheckStatus::Skipped, "", "", "not a projective spec"};
    if (!is_effective(spec)) return {name, CheckStatus::Skipped, "", "", "action has a nontrivial kernel"};
    const auto expected = static_cast<std::int64_t>(spec.dim() + 1) * static_cast<std::int64_t>(spec.order());
    const auto report = assemble(spec);
    return make(name, report.total_rank == expected, std::to_string(expected), std::to_string(report.total_rank));
}

std::int64_t burnside_double_sum(const ActionSpec& spec) {
    const auto elements = all_elements(spec.rank());
    std::int64_t sum = 0;
    for (const auto& g : elements)
        for (const auto& h : elements) sum += chi_c(fixed_pieces_subgroup(spec, span({g, h}, spec.rank())));
    const auto order = static_cast<std::int64_t>(spec.order());
    if (sum % order != 0)
        throw std::logic_error("Burnside double sum " + std::to_string(sum) + " not divisible by " +
                               std::to_string(order));
    return sum / order;
}

CheckResult check_burnside_total(const ActionSpec& spec) {
    const std::string name = "burnside_total " + spec_name(spec);
    std::int64_t oracle = 0;
    try {
        oracle = burnside_double_sum(spec);
    } catch (const std::logic_error& e) {
        return make(name, false, "integral double sum", "non-integral", e.what());
    }
    const auto report = assemble(spec);
    return make(name, report.total_rank == oracle, std::to_string(oracle), std::to_string(report.total_rank));
}

CheckResult check_quadric(int q_dim) {
    const std::string name = "quadric(" + std::to_string(q_dim) + ")";
    if (q_dim < 1) return {name, CheckStatus::Skipped, "", "", "requires q_dim >= 1"};
    const auto spec = presets::quadric(q_dim);
    const auto report = assemble(spec);
    std::string bad;
    for (const auto& c : report.components)
        if (c.coarse_type.kind != CoarseType::Kind::ProjSpace && c.coarse_type.kind != CoarseType::Kind::Point)
            bad += (bad.empty() ? "" : "; ") + label(c) + " is " + describe(c.coarse_type);
    const auto oracle = burnside_double_sum(spec);
    const bool ok = bad.empty() && report.total_rank == oracle;
    return make(name, ok, "all pieces P^k or points, " + std::to_string(oracle) + " exceptional objects",
                (bad.empty() ? std::string("all pieces P^k or points, ") : bad + ", ") +
                    std::to_string(report.total_rank) + " exceptional objects");
}

CheckResult check_gram(const ActionSpec& spec, const std::string& name) {
    const auto report = assemble(spec);
    const auto g = compute_gram(spec, report);
    const auto& gens = g.generators;
    std::string problems;
    for (std::size_t b = 0; b < gens.block_sizes.size(); ++b) {
        const auto s = gens.block_start(b);
        const auto len = static_cast<std::int64_t>(gens.block_sizes[b]);
        const auto m = len - 1;
        for (std::int64_t i = 0; i < len; ++i)
            for (std::int64_t j = 0; j < len; ++j) {
                const auto want = i <= j ? binomial(m + j - i, m) : 0;
                if (g.matrix[s + static_cast<std::size_t>(i)][s + static_cast<std::size_t>(j)] != want) {
                    problems += "diagonal block " + gens.labels[b] + " differs from binomials; ";
                    i = j = len;
                }
            }
    }
    if (!g.unipotent) problems += "not unipotent upper-triangular; ";
    std::string context = g.normalized ? "normalized with block twists" : "trivial characters";
    return make(name, problems.empty(), "binomial diagonal blocks, unipotent upper-triangular",
                problems.empty() ? "binomial diagonal blocks, unipotent upper-triangular" : problems,
                std::to_string(g.matrix.size()) + " generators, " + context);
}

CheckResult check_gram_presets() {
    const std::string name = "gram_presets";
    std::string failures;
    for (int n = 1; n <= 4; ++n) {
        const auto r = check_gram(presets::pn_full(n), "pn-full(" + std::to_string(n) + ")");
        if (!r.passed()) failures += r.name + ": " + r.actual;
    }

    // Cross-block pattern on the P^2 example.
    const auto spec = presets::p2_example();
    const auto report = assemble(spec);
    const auto g = compute_gram(spec, report);
    const auto& gens = g.generators;
    auto block_zero = [&](std::size_t a, std::size_t b) {
        const auto sa = gens.block_start(a), sb = gens.block_start(b);
        for (std::size_t i = 0; i < gens.block_sizes[a]; ++i)
            for (std::size_t j = 0; j < gens.block_sizes[b]; ++j)
                if (g.matrix[sa + i][sb + j] != 0) return false;
        return true;
    };
    bool one_sided_line_point = false;
    for (std::size_t a = 0; a < gens.block_sizes.size(); ++a)
        for (std::size_t b = a + 1; b < gens.block_sizes.size(); ++b) {
            const int da = gens.block_dims[a], db = gens.block_dims[b];
            if (da == db && (da == 1 || da == 0) && !(block_zero(a, b) && block_zero(b, a)))
                failures += "p2-example: " + gens.labels[a] + " and " + gens.labels[b] + " not orthogonal; ";
            if (da == 1 && db == 0) {
                if (!block_zero(b, a)) failures += "p2-example: point " + gens.labels[b] + " pairs into a line; ";
                one_sided_line_point = one_sided_line_point || !block_zero(a, b);
            }
        }
    if (!one_sided_line_point) failures += "p2-example: every line-point block vanishes; ";
    return make(name, failures.empty(), "pn-full(1..4) triangular with binomial blocks; p2-example cross pattern",
                failures.empty() ? "as expected" : failures);
}

std::vector<CheckResult> checks_for(const ActionSpec& spec) {
    std::vector<CheckResult> out;
    if (spec.kind() == SpaceKind::Projective) {
        out.push_back(check_projective_rank(spec));
        out.push_back(check_burnside_total(spec));
        const auto report = assemble(spec);
        bool classified = true;
        for (const auto& c : report.components) classified = classified && c.smooth == Smoothness::Smooth;
        if (classified)
            out.push_back(check_gram(spec, "gram " + spec_name(spec)));
        else
            out.push_back({"gram " + spec_name(spec), CheckStatus::Skipped, "", "", "unclassified coarse spaces"});
    } else {
        out.push_back(check_burnside_total(spec));
    }
    return out;
}

std::vector<CheckResult> run_suite() {
    std::vector<CheckResult> out;
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) out.push_back(check_etale(n, k));
    for (int n = 1; n <= 4; ++n) {
        out.push_back(check_projective_rank(presets::pn_full(n)));
        out.push_back(check_burnside_total(presets::pn_full(n)));
    }
    for (int q = 1; q <= 5; ++q) {
        out.push_back(check_quadric(q));
        out.push_back(check_burnside_total(presets::quadric(q)));
    }
    out.push_back(check_gram_presets());
    return out;
}

}  // namespace msod
