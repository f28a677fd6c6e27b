#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msod/lattice.hpp"
#include "msod/sod.hpp"

namespace msod {

/// Class of O_{P(V_T)}(d) (x) chi pushed forward to the ambient quotient stack.
struct KObject {
    std::vector<int> support;
    int twist = 0;
    Character character;

    friend bool operator==(const KObject&, const KObject&) = default;
};

/// Skyscrapers carry twist 0: O_p(d) (x) chi == O_p (x) (chi + d chi_p).
KObject normalized(const ActionSpec& spec, KObject obj);

/// Virtual representation of mu_2^k: multiplicity per character, indexed by the
/// character's bits.
struct VirtualRep {
    std::vector<std::int64_t> mult;

    explicit VirtualRep(int rank) : mult(std::size_t{1} << rank, 0) {}

    std::int64_t operator[](const Character& chi) const { return mult.at(chi.bits); }
    std::int64_t invariant_part() const { return mult.at(0); }
    std::int64_t total() const;

    friend bool operator==(const VirtualRep&, const VirtualRep&) = default;
};

/// Alternating sum of H^i(P(V_T), O(e)) as a representation: degree-e monomials
/// for e >= 0, (-1)^m times the monomials x^{-a}, a_i >= 1, sum a = -e for
/// e <= -m-1, zero in between (m = |T| - 1).
VirtualRep cohomology(const ActionSpec& spec, const std::vector<int>& support, int twist);

struct KoszulTerm {
    int twist;
    Character character;
    int sign;

    friend bool operator==(const KoszulTerm&, const KoszulTerm&) = default;
};

/// Equivariant Koszul resolution of E by line bundles: one term per subset S of
/// the complement of T, subsets in ascending bitmask order.
std::vector<KoszulTerm> koszul(const ActionSpec& spec, const KObject& obj);

/// G-invariant Euler pairing chi^G(E, F) = sum_i (-1)^i dim Ext^i(E, F)^G.
std::int64_t euler_pairing(const ActionSpec& spec, const KObject& e, const KObject& f);

IntMatrix gram(const ActionSpec& spec, const std::vector<KObject>& objects);

/// Images of line-bundle generators under the decomposition's embeddings, one
/// block per piece in report order.
struct GeneratorCollection {
    std::vector<KObject> objects;
    std::vector<std::size_t> block_sizes;
    std::vector<std::string> labels;
    /// Character twist applied to each block (trivial unless normalized).
    std::vector<Character> twists;
    std::vector<int> block_dims;

    std::size_t block_start(std::size_t b) const;
};

/// Per ProjSpace(m) piece: (T, q t, trivial) for t = 0..m where q is the
/// quotient degree; per Point piece the skyscraper. Throws InputError on affine
/// or quadric specs and on unclassified pieces.
GeneratorCollection canonical_generators(const ActionSpec& spec, const SodReport& report);

struct GramResult {
    GeneratorCollection generators;
    IntMatrix matrix;
    bool unipotent = false;
    /// A non-trivial block twist was needed.
    bool normalized = false;
    /// Pairs (a, b), a < b, of equal-dimension blocks and whether they pair to
    /// zero in both directions.
    struct EqualDimPair {
        std::size_t a, b;
        bool orthogonal;
    };
    std::vector<EqualDimPair> equal_dim;

    BlockGram blocked() const { return {matrix, generators.block_sizes}; }
};

/// Gram of the canonical generators. If it is not unipotent upper-triangular a
/// backtracking search over per-block character twists is run; the twists that
/// work (if any) are recorded in the generator collection.
GramResult compute_gram(const ActionSpec& spec, const SodReport& report);

/// Gram of an arbitrary block collection, with the same twist search.
GramResult gram_with_normalization(const ActionSpec& spec, GeneratorCollection generators);

}  // namespace msod
