#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace msod {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Mutated classes can outgrow int64 after a few dozen moves.
using BigInt = boost::multiprecision::cpp_int;
using BigVector = std::vector<BigInt>;
using BigMatrix = std::vector<BigVector>;

BigMatrix widen(const IntMatrix& m);
/// Throws std::overflow_error if an entry does not fit.
IntMatrix narrow(const BigMatrix& m);

IntMatrix identity_matrix(std::size_t n);

/// Exact determinant (arbitrary precision internally). Throws std::overflow_error
/// if the result does not fit in int64.
std::int64_t determinant(const IntMatrix& m);
BigInt exact_determinant(const BigMatrix& m);

/// M[i][j] == 0 for i > j and M[i][i] == 1.
bool is_unipotent_upper(const IntMatrix& m);

enum class Direction { Left, Right };

std::string_view to_string(Direction d);
Direction direction_from_string(std::string_view s);

/// Block move in a mutation script: the block at `block` (0-based, current
/// block order) passes its left or right neighbour.
struct Move {
    std::size_t block = 0;
    Direction direction = Direction::Left;

    friend bool operator==(const Move&, const Move&) = default;
};

/// Ordered basis v_1..v_N of Z^N with a fixed bilinear form B, grouped into
/// contiguous blocks. pairing(i, j) = v_i^T B v_j. Order convention: a
/// semiorthogonal sequence has pairing(i, j) == 0 for i > j.
///
/// Values are immutable; mutations return new sequences.
class ExceptionalSequence {
public:
    struct Block {
        std::size_t id;
        std::string label;
        std::vector<std::size_t> positions;
    };

    /// Throws std::invalid_argument on shape errors or a non-unimodular basis.
    ExceptionalSequence(IntMatrix form, BigMatrix vectors, const std::vector<std::size_t>& block_sizes,
                        std::vector<std::string> labels = {});
    ExceptionalSequence(IntMatrix form, const IntMatrix& vectors, const std::vector<std::size_t>& block_sizes,
                        std::vector<std::string> labels = {})
        : ExceptionalSequence(std::move(form), widen(vectors), block_sizes, std::move(labels)) {}

    /// Identity basis.
    static ExceptionalSequence standard(IntMatrix form, const std::vector<std::size_t>& block_sizes,
                                        std::vector<std::string> labels = {});

    std::size_t size() const { return vectors_.size(); }
    const IntMatrix& form() const { return form_; }
    const BigMatrix& vectors() const { return vectors_; }

    /// 0-based. Throws std::out_of_range.
    BigInt pairing(std::size_t i, std::size_t j) const;
    /// pairing(i, j) over all positions.
    BigMatrix gram() const;

    bool is_semiorthogonal() const;
    bool is_unimodular() const;

    /// Blocks in positional order. Throws std::logic_error if a block is not
    /// contiguous (only possible in the middle of a hand-rolled block move).
    std::vector<Block> blocks() const;
    std::vector<std::size_t> block_sizes() const;
    /// Block id owning each position.
    const std::vector<std::size_t>& owners() const { return owner_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Positions (i-1, i) become (v_i - pairing(i-1, i) v_{i-1}, v_{i-1}).
    /// Requires 1 <= i < N.
    ExceptionalSequence mutate_left(std::size_t i) const;
    /// Positions (i, i+1) become (v_{i+1}, v_i - pairing(i, i+1) v_{i+1}).
    /// Requires 0 <= i < N-1.
    ExceptionalSequence mutate_right(std::size_t i) const;

private:
    ExceptionalSequence() = default;

    IntMatrix form_;
    BigMatrix vectors_;
    std::vector<std::size_t> owner_;
    std::vector<std::string> labels_;
};

struct MoveRecord {
    Move move;
    /// Both-direction pairings between the two blocks vanished before the move.
    bool orthogonal = false;
    std::string moved;
    std::string passed;
};

struct ScriptResult {
    ExceptionalSequence sequence;
    std::vector<MoveRecord> records;
};

/// Applies block moves in order. A leftward move of block B over its left
/// neighbour A mutates B's elements one at a time, leftmost first, each passing
/// A's elements from the rightmost; a rightward move sends A's elements past B,
/// rightmost first. Throws InputError on an invalid block index.
ScriptResult apply_script(const ExceptionalSequence& seq, const std::vector<Move>& moves);

}  // namespace msod
