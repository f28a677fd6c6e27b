#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace msod {

/// Largest supported group rank; elements are enumerated exhaustively.
inline constexpr int kMaxRank = 16;

/// Bit vector over F_2 of fixed length. Bit i is the i-th generator (LSB first),
/// so the integer value of (1,0) is 1 and of (0,1) is 2.
template <class Tag>
struct F2Vector {
    std::uint32_t bits = 0;
    int length = 0;

    F2Vector() = default;
    F2Vector(std::uint32_t b, int len) : bits(b), length(len) {
        if (len < 0 || len > kMaxRank)
            throw std::invalid_argument("bit vector length out of range");
        if (len < 32 && (b >> len) != 0)
            throw std::invalid_argument("bit vector has bits beyond its length");
    }

    static F2Vector from_bits(const std::vector<int>& v) {
        std::uint32_t b = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] != 0 && v[i] != 1) throw std::invalid_argument("bit entries must be 0 or 1");
            if (v[i]) b |= 1u << i;
        }
        return F2Vector(b, static_cast<int>(v.size()));
    }

    bool test(int i) const { return (bits >> i) & 1u; }
    int weight() const { return std::popcount(bits); }
    bool is_zero() const { return bits == 0; }

    std::vector<int> to_bits() const {
        std::vector<int> out(static_cast<std::size_t>(length));
        for (int i = 0; i < length; ++i) out[static_cast<std::size_t>(i)] = test(i) ? 1 : 0;
        return out;
    }

    /// "10" style rendering, generator 1 first.
    std::string str() const {
        std::string s;
        for (int i = 0; i < length; ++i) s.push_back(test(i) ? '1' : '0');
        return s.empty() ? std::string("()") : s;
    }

    F2Vector operator^(const F2Vector& o) const {
        check_same(o);
        return F2Vector(bits ^ o.bits, length);
    }
    F2Vector& operator^=(const F2Vector& o) { return *this = *this ^ o; }

    void check_same(const F2Vector& o) const {
        if (length != o.length) throw std::invalid_argument("bit vector length mismatch");
    }

    friend bool operator==(const F2Vector&, const F2Vector&) = default;
    friend auto operator<=>(const F2Vector& a, const F2Vector& b) {
        if (auto c = a.length <=> b.length; c != 0) return c;
        return a.bits <=> b.bits;
    }
};

struct ElementTag {};
struct CharacterTag {};

/// Element lambda_I of mu_2^k; the group law is XOR.
using GroupElement = F2Vector<ElementTag>;
/// Character of mu_2^k, g -> (-1)^<chi, g>.
using Character = F2Vector<CharacterTag>;

/// (-1)^{<chi, g>}.
int pairing(const Character& chi, const GroupElement& g);

/// All 2^k elements in ascending integer order.
std::vector<GroupElement> all_elements(int rank);

/// F_2-linear span, ascending integer order. An empty input spans {identity}
/// of the given rank.
std::vector<GroupElement> span(const std::vector<GroupElement>& elements, int rank);

/// Closed under XOR and contains the identity.
bool is_subgroup(const std::vector<GroupElement>& elements);

}  // namespace msod
