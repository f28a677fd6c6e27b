#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "msod/group.hpp"

namespace msod {

/// Malformed or inconsistent user input (CLI exit status 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SpaceKind { Affine, Projective, FermatQuadric };

std::string_view to_string(SpaceKind kind);
SpaceKind space_kind_from_string(std::string_view s);

/// Diagonal action of mu_2^k on A^n, P^n or the Fermat quadric sum x_i^2 = 0.
///
/// `characters[i]` is the character by which the group acts on coordinate i;
/// it is column i of the k x c action matrix.
class ActionSpec {
public:
    ActionSpec(SpaceKind kind, int dim, int rank, std::vector<Character> characters);

    /// Build from the k x c action matrix (rows = generators).
    static ActionSpec from_matrix(SpaceKind kind, int dim, const std::vector<std::vector<int>>& rows);

    SpaceKind kind() const { return kind_; }
    /// n for affine/projective, the quadric's own dimension for Fermat quadrics.
    int dim() const { return dim_; }
    int rank() const { return rank_; }
    /// Number of (ambient) coordinates.
    int coords() const { return static_cast<int>(characters_.size()); }
    std::size_t order() const { return std::size_t{1} << rank_; }

    const Character& character(int coord) const { return characters_.at(static_cast<std::size_t>(coord)); }
    const std::vector<Character>& characters() const { return characters_; }

    /// Number of coordinates negated by g.
    int weight(const GroupElement& g) const;

    /// k x c matrix, row = generator.
    std::vector<std::vector<int>> matrix() const;

    bool has_projective_ambient() const { return kind_ != SpaceKind::Affine; }

    friend bool operator==(const ActionSpec&, const ActionSpec&) = default;

    static int coords_for(SpaceKind kind, int dim);

private:
    SpaceKind kind_;
    int dim_;
    int rank_;
    std::vector<Character> characters_;
};

/// Parse an action-spec document (JSON). Throws InputError.
ActionSpec parse_spec(std::string_view text);

/// Elements acting trivially: all coordinate characters are +1 (affine), or all
/// coordinate characters agree so g is a global scalar (projective, quadric).
std::vector<GroupElement> projective_kernel(const ActionSpec& spec);

inline bool is_effective(const ActionSpec& spec) { return projective_kernel(spec).size() == 1; }

}  // namespace msod
