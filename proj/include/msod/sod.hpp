#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msod/inertia.hpp"
#include "msod/lattice.hpp"

namespace msod {

struct SodFlags {
    bool effective = true;
    std::vector<GroupElement> kernel;
    std::vector<std::string> warnings;

    friend bool operator==(const SodFlags&, const SodFlags&) = default;
};

/// Decomposition <D(X_1), ..., D(X_r)> ordered by decreasing dimension of the
/// coarse inertia components.
struct SodReport {
    ActionSpec spec;
    /// In enumeration order (see components()).
    std::vector<InertiaComponent> components;
    /// order[p] is the component at position p of the decomposition.
    std::vector<std::size_t> order;
    std::int64_t total_rank = 0;
    /// Element -> positions holding its pieces, elements ascending.
    std::vector<std::pair<GroupElement, std::vector<std::size_t>>> grouping;
    SodFlags flags;

    const InertiaComponent& at(std::size_t position) const { return components.at(order.at(position)); }
    std::size_t size() const { return order.size(); }

    friend bool operator==(const SodReport&, const SodReport&) = default;
};

/// Sort key: dim descending, weight of g ascending, g ascending, "+" sector
/// before "-", split index.
SodReport assemble(const ActionSpec& spec);

enum class Orthogonality { Yes, No, Unknown };
std::string_view to_string(Orthogonality o);

struct PlannedMove {
    Move move;
    Orthogonality orthogonal = Orthogonality::Unknown;

    friend bool operator==(const PlannedMove&, const PlannedMove&) = default;
};

struct MutationPlan {
    std::vector<PlannedMove> moves;
    /// Component indices in the regrouped order.
    std::vector<std::size_t> final_order;
};

/// Gram matrix of generator objects, rows in report order, one block per piece.
struct BlockGram {
    IntMatrix matrix;
    std::vector<std::size_t> block_sizes;
};

/// Leftward single-block moves that make each element's pieces contiguous,
/// element blocks in order of first occurrence.
std::vector<Move> plan_grouping(const std::vector<GroupElement>& sequence);

/// Applies block moves to a sequence of labels (pure reordering).
template <class T>
std::vector<T> permute_by_moves(std::vector<T> seq, const std::vector<Move>& moves) {
    for (const auto& m : moves) {
        if (m.direction == Direction::Left)
            std::swap(seq.at(m.block - 1), seq.at(m.block));
        else
            std::swap(seq.at(m.block), seq.at(m.block + 1));
    }
    return seq;
}

/// Regrouping plan for the MSODC. With a Gram matrix the orthogonality of each
/// move is decided by replaying it on K_0; otherwise it is Unknown.
MutationPlan msodc_plan(const SodReport& report, const std::optional<BlockGram>& gram = std::nullopt);

}  // namespace msod
