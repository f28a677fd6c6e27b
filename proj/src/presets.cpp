#include "msod/presets.hpp"

namespace msod::presets {

namespace {

ActionSpec negate_leading(SpaceKind kind, int dim, int k) {
    const int c = ActionSpec::coords_for(kind, dim);
    if (k < 0 || k > c) throw InputError("preset: group rank out of range");
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(c), 0));
    for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return ActionSpec::from_matrix(kind, dim, rows);
}

}  // namespace

ActionSpec etale(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw InputError("etale preset needs 0 <= k <= n");
    return negate_leading(SpaceKind::Affine, n, k);
}

ActionSpec pn_full(int n) {
    if (n < 1) throw InputError("pn-full preset needs n >= 1");
    return negate_leading(SpaceKind::Projective, n, n);
}

ActionSpec p2_example() { return pn_full(2); }

ActionSpec quadric(int q_dim) {
    if (q_dim < 1) throw InputError("quadric preset needs q_dim >= 1");
    return negate_leading(SpaceKind::FermatQuadric, q_dim, q_dim + 1);
}

ActionSpec by_name(const std::string& name, const PresetArgs& args) {
    auto need = [&](int v, const char* flag) {
        if (v < 0) throw InputError("preset '" + name + "' requires " + flag);
        return v;
    };
    if (name == "etale") return etale(need(args.n, "--n"), need(args.k, "--k"));
    if (name == "p2-example") return p2_example();
    if (name == "pn-full") return pn_full(need(args.n, "--n"));
    if (name == "quadric") return quadric(need(args.q_dim, "--q-dim"));
    throw InputError("unknown preset '" + name + "' (etale, p2-example, pn-full, quadric)");
}

}  // namespace msod::presets
