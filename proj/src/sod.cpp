#include "msod/sod.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace msod {

std::string_view to_string(Orthogonality o) {
    switch (o) {
        case Orthogonality::Yes: return "yes";
        case Orthogonality::No: return "no";
        case Orthogonality::Unknown: return "unknown";
    }
    return "?";
}

SodReport assemble(const ActionSpec& spec) {
    SodReport report{spec, components(spec), {}, 0, {}, {}};
    const auto& comps = report.components;

    report.order.resize(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) report.order[i] = i;
    auto key = [&](std::size_t i) {
        const auto& c = comps[i];
        return std::make_tuple(-c.coarse_dim, spec.weight(c.element), c.element.bits, c.negated, c.split_index);
    };
    std::stable_sort(report.order.begin(), report.order.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

    std::map<std::uint32_t, std::vector<std::size_t>> grouping;
    for (std::size_t p = 0; p < report.order.size(); ++p) {
        const auto& c = comps[report.order[p]];
        report.total_rank += c.rank;
        grouping[c.element.bits].push_back(p);
    }
    for (auto& [bits, positions] : grouping)
        report.grouping.emplace_back(GroupElement(bits, spec.rank()), std::move(positions));

    report.flags.kernel = projective_kernel(spec);
    report.flags.effective = report.flags.kernel.size() == 1;
    if (!report.flags.effective)
        report.flags.warnings.push_back("action is not effective: kernel has " +
                                        std::to_string(report.flags.kernel.size()) + " elements");
    for (const auto& c : comps)
        if (c.smooth == Smoothness::Unknown)
            report.flags.warnings.push_back(label(c) + ": coarse space not classified, smoothness unverified");
    return report;
}

std::vector<Move> plan_grouping(const std::vector<GroupElement>& sequence) {
    std::vector<GroupElement> first_seen;
    for (const auto& g : sequence)
        if (std::find(first_seen.begin(), first_seen.end(), g) == first_seen.end()) first_seen.push_back(g);

    std::vector<std::size_t> target;  // indices into `sequence`, stably grouped
    for (const auto& g : first_seen)
        for (std::size_t i = 0; i < sequence.size(); ++i)
            if (sequence[i] == g) target.push_back(i);

    std::vector<std::size_t> current(sequence.size());
    for (std::size_t i = 0; i < current.size(); ++i) current[i] = i;

    std::vector<Move> moves;
    for (std::size_t t = 0; t < target.size(); ++t) {
        auto j = static_cast<std::size_t>(std::find(current.begin(), current.end(), target[t]) - current.begin());
        for (; j > t; --j) {
            moves.push_back({j, Direction::Left});
            std::swap(current[j - 1], current[j]);
        }
    }
    return moves;
}

MutationPlan msodc_plan(const SodReport& report, const std::optional<BlockGram>& gram) {
    std::vector<GroupElement> elements;
    for (std::size_t p = 0; p < report.size(); ++p) elements.push_back(report.at(p).element);

    MutationPlan plan;
    const auto moves = plan_grouping(elements);
    plan.final_order = permute_by_moves(report.order, moves);
    for (const auto& m : moves) plan.moves.push_back({m, Orthogonality::Unknown});

    if (gram) {
        if (gram->block_sizes.size() != report.size())
            throw std::invalid_argument("msodc_plan: Gram blocks do not match the report");
        const auto seq = ExceptionalSequence::standard(gram->matrix, gram->block_sizes);
        const auto replay = apply_script(seq, moves);
        for (std::size_t i = 0; i < moves.size(); ++i)
            plan.moves[i].orthogonal = replay.records[i].orthogonal ? Orthogonality::Yes : Orthogonality::No;
    }
    return plan;
}

}  // namespace msod
