#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msod/action.hpp"

namespace msod {

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string expected;
    std::string actual;
    /// Extra detail; the reason for Skipped.
    std::string context;

    bool passed() const { return status == CheckStatus::Pass; }
};

/// Etale-local preset A^n / mu_2^k: 2^k rank-one pieces, C(k, j) of dim n - j.
CheckResult check_etale(int n, int k);

/// total_rank == (n + 1) 2^k. Skipped for non-effective specs.
CheckResult check_projective_rank(const ActionSpec& spec);

/// (1/|G|) sum_{g,h} chi_c(X^{<g,h>}) computed straight from the fixed loci, no
/// component splitting. Throws std::logic_error if not integral.
std::int64_t burnside_double_sum(const ActionSpec& spec);

/// Sum of component ranks against burnside_double_sum.
CheckResult check_burnside_total(const ActionSpec& spec);

/// Quadric preset: no Undetermined coarse types and the exceptional-object
/// count equals the Burnside total.
CheckResult check_quadric(int q_dim);

/// Canonical-generator Gram on one projective spec: binomial diagonal blocks and
/// unipotent upper-triangular overall.
CheckResult check_gram(const ActionSpec& spec, const std::string& name);

/// check_gram on [P^n/mu_2^n], n = 1..4, plus the cross-block pattern of the
/// [P^2/mu_2^2] example.
CheckResult check_gram_presets();

/// Default bounded suite: etale n <= 6, pn-full n <= 4, quadric q_dim <= 5,
/// Gram presets.
std::vector<CheckResult> run_suite();

/// Checks that apply to a given spec.
std::vector<CheckResult> checks_for(const ActionSpec& spec);

}  // namespace msod
