#include "msod/euler.hpp"

#include <bit>
#include <functional>

namespace msod {

namespace {

void require_projective_ambient(const ActionSpec& spec, const char* what) {
    if (!spec.has_projective_ambient())
        throw InputError(std::string(what) + ": Euler pairings need a projective ambient space");
}

void check_support(const ActionSpec& spec, const std::vector<int>& support) {
    if (support.empty()) throw std::invalid_argument("empty support");
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] < 0 || support[i] >= spec.coords()) throw std::invalid_argument("support coordinate out of range");
        if (i && support[i] <= support[i - 1]) throw std::invalid_argument("support must be strictly increasing");
    }
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

KObject normalized(const ActionSpec& spec, KObject obj) {
    if (obj.support.size() == 1) {
        if (obj.twist % 2 != 0) obj.character ^= spec.character(obj.support[0]);
        obj.twist = 0;
    }
    return obj;
}

std::int64_t VirtualRep::total() const {
    std::int64_t t = 0;
    for (auto m : mult) t += m;
    return t;
}

VirtualRep cohomology(const ActionSpec& spec, const std::vector<int>& support, int twist) {
    require_projective_ambient(spec, "cohomology");
    check_support(spec, support);
    VirtualRep rep(spec.rank());
    const auto r = static_cast<std::int64_t>(support.size());
    const auto m = r - 1;
    const std::int64_t e = twist;
    if (e < 0 && e >= -m) return rep;

    // Monomials are grouped by their exponent parity vector p: the character is
    // sum p_i chi_i and the count is a stars-and-bars number.
    const bool top = e < 0;
    const std::int64_t sign = top && (m % 2 != 0) ? -1 : 1;
    for (std::uint32_t p = 0; p < (1u << r); ++p) {
        const std::int64_t odd = std::popcount(p);
        // H^0: a_i = p_i + 2 b_i, b_i >= 0.  H^m: a_i >= 1, so b_i >= 1 where p_i = 0.
        const std::int64_t rest = top ? (-e - odd - 2 * (r - odd)) : (e - odd);
        if (rest < 0 || rest % 2 != 0) continue;
        const auto count = binomial(rest / 2 + r - 1, r - 1);
        std::uint32_t chi = 0;
        for (std::int64_t i = 0; i < r; ++i)
            if ((p >> i) & 1u) chi ^= spec.character(support[static_cast<std::size_t>(i)]).bits;
        rep.mult[chi] += sign * count;
    }
    return rep;
}

std::vector<KoszulTerm> koszul(const ActionSpec& spec, const KObject& obj) {
    require_projective_ambient(spec, "koszul");
    check_support(spec, obj.support);
    std::vector<int> complement;
    for (int i = 0, s = 0; i < spec.coords(); ++i) {
        if (s < static_cast<int>(obj.support.size()) && obj.support[static_cast<std::size_t>(s)] == i)
            ++s;
        else
            complement.push_back(i);
    }
    std::vector<KoszulTerm> terms;
    terms.reserve(std::size_t{1} << complement.size());
    for (std::uint32_t s = 0; s < (1u << complement.size()); ++s) {
        Character chi = obj.character;
        for (std::size_t i = 0; i < complement.size(); ++i)
            if ((s >> i) & 1u) chi ^= spec.character(complement[i]);
        const int size = std::popcount(s);
        terms.push_back({obj.twist - size, chi, size % 2 ? -1 : 1});
    }
    return terms;
}

std::int64_t euler_pairing(const ActionSpec& spec, const KObject& e, const KObject& f) {
    require_projective_ambient(spec, "euler_pairing");
    std::int64_t total = 0;
    for (const auto& term : koszul(spec, e)) {
        const auto h = cohomology(spec, f.support, f.twist - term.twist);
        total += term.sign * h[term.character ^ f.character];
    }
    return total;
}

IntMatrix gram(const ActionSpec& spec, const std::vector<KObject>& objects) {
    IntMatrix m(objects.size(), IntVector(objects.size()));
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j) m[i][j] = euler_pairing(spec, objects[i], objects[j]);
    return m;
}

std::size_t GeneratorCollection::block_start(std::size_t b) const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < b; ++i) s += block_sizes.at(i);
    return s;
}

GeneratorCollection canonical_generators(const ActionSpec& spec, const SodReport& report) {
    require_projective_ambient(spec, "canonical_generators");
    if (spec.kind() == SpaceKind::FermatQuadric)
        throw InputError("canonical_generators: Gram matrices on quadric total spaces are not supported");
    GeneratorCollection out;
    const Character trivial(0, spec.rank());
    for (std::size_t p = 0; p < report.size(); ++p) {
        const auto& c = report.at(p);
        std::size_t made = 0;
        switch (c.coarse_type.kind) {
            case CoarseType::Kind::ProjSpace:
                for (int t = 0; t <= c.coarse_type.dim; ++t, ++made)
                    out.objects.push_back({c.piece.support, c.quotient_degree * t, trivial});
                break;
            case CoarseType::Kind::Point:
                out.objects.push_back({{c.piece.support.front()}, 0, trivial});
                made = 1;
                break;
            default:
                throw InputError("canonical_generators: " + label(c) + " has coarse type " +
                                 describe(c.coarse_type));
        }
        out.block_sizes.push_back(made);
        out.labels.push_back(label(c));
        out.twists.push_back(trivial);
        out.block_dims.push_back(c.coarse_dim);
    }
    return out;
}

namespace {

KObject twisted(const KObject& obj, const Character& psi) {
    KObject out = obj;
    out.character ^= psi;
    return out;
}

/// Every pairing from block `later` (twisted by psi_later) to block `earlier`
/// (twisted by psi_earlier) vanishes.
bool block_vanishes(const ActionSpec& spec, const GeneratorCollection& gens, std::size_t later, const Character& pl,
                    std::size_t earlier, const Character& pe) {
    const auto sl = gens.block_start(later), se = gens.block_start(earlier);
    for (std::size_t i = 0; i < gens.block_sizes[later]; ++i)
        for (std::size_t j = 0; j < gens.block_sizes[earlier]; ++j)
            if (euler_pairing(spec, twisted(gens.objects[sl + i], pl), twisted(gens.objects[se + j], pe)) != 0)
                return false;
    return true;
}

}  // namespace

GramResult compute_gram(const ActionSpec& spec, const SodReport& report) {
    return gram_with_normalization(spec, canonical_generators(spec, report));
}

GramResult gram_with_normalization(const ActionSpec& spec, GeneratorCollection generators) {
    GramResult result;
    result.generators = std::move(generators);
    auto& gens = result.generators;
    result.matrix = gram(spec, gens.objects);
    result.unipotent = is_unipotent_upper(result.matrix);

    if (!result.unipotent) {
        // Backtracking over one character twist per block; a common twist leaves
        // diagonal blocks unchanged, so only cross-block vanishing is searched.
        const auto nblocks = gens.block_sizes.size();
        const auto chars = std::size_t{1} << spec.rank();
        std::vector<Character> chosen(nblocks, Character(0, spec.rank()));
        std::function<bool(std::size_t)> search = [&](std::size_t b) {
            if (b == nblocks) return true;
            for (std::uint32_t c = 0; c < chars; ++c) {
                chosen[b] = Character(c, spec.rank());
                bool ok = true;
                for (std::size_t a = 0; a < b && ok; ++a)
                    ok = block_vanishes(spec, gens, b, chosen[b], a, chosen[a]);
                if (ok && search(b + 1)) return true;
            }
            return false;
        };
        if (search(0)) {
            for (std::size_t b = 0; b < nblocks; ++b) {
                gens.twists[b] ^= chosen[b];
                const auto s = gens.block_start(b);
                for (std::size_t i = 0; i < gens.block_sizes[b]; ++i)
                    gens.objects[s + i] = twisted(gens.objects[s + i], chosen[b]);
            }
            result.matrix = gram(spec, gens.objects);
            result.unipotent = is_unipotent_upper(result.matrix);
            for (const auto& c : chosen) result.normalized = result.normalized || !c.is_zero();
        }
    }

    for (std::size_t a = 0; a < gens.block_sizes.size(); ++a)
        for (std::size_t b = a + 1; b < gens.block_sizes.size(); ++b) {
            if (gens.block_dims[a] != gens.block_dims[b]) continue;
            bool orth = true;
            const auto sa = gens.block_start(a), sb = gens.block_start(b);
            for (std::size_t i = 0; i < gens.block_sizes[a] && orth; ++i)
                for (std::size_t j = 0; j < gens.block_sizes[b] && orth; ++j)
                    orth = result.matrix[sa + i][sb + j] == 0 && result.matrix[sb + j][sa + i] == 0;
            result.equal_dim.push_back({a, b, orth});
        }
    return result;
}

}  // namespace msod
