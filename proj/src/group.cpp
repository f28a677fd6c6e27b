#include "msod/group.hpp"

#include <algorithm>
#include <set>

namespace msod {

int pairing(const Character& chi, const GroupElement& g) {
    if (chi.length != g.length) throw std::invalid_argument("pairing: length mismatch");
    return (std::popcount(chi.bits & g.bits) & 1) ? -1 : 1;
}

std::vector<GroupElement> all_elements(int rank) {
    if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("group rank out of range");
    std::vector<GroupElement> out;
    out.reserve(std::size_t{1} << rank);
    for (std::uint32_t b = 0; b < (1u << rank); ++b) out.emplace_back(b, rank);
    return out;
}

std::vector<GroupElement> span(const std::vector<GroupElement>& elements, int rank) {
    std::set<std::uint32_t> acc{0};
    for (const auto& e : elements) {
        if (e.length != rank) throw std::invalid_argument("span: length mismatch");
        std::set<std::uint32_t> next = acc;
        for (auto a : acc) next.insert(a ^ e.bits);
        acc = std::move(next);
    }
    std::vector<GroupElement> out;
    out.reserve(acc.size());
    for (auto b : acc) out.emplace_back(b, rank);
    return out;
}

bool is_subgroup(const std::vector<GroupElement>& elements) {
    if (elements.empty()) return false;
    std::set<std::uint32_t> s;
    for (const auto& e : elements) s.insert(e.bits);
    if (!s.count(0)) return false;
    for (auto a : s)
        for (auto b : s)
            if (!s.count(a ^ b)) return false;
    return true;
}

}  // namespace msod
