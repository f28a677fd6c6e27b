#include "msod/io.hpp"

#include <limits>

namespace msod::io {

namespace {

json element_json(const GroupElement& g) { return g.to_bits(); }

GroupElement element_from(const json& j, int rank) {
    auto g = GroupElement::from_bits(j.get<std::vector<int>>());
    if (g.length != rank) throw InputError("group element length differs from group rank");
    return g;
}

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid ") + what + " document: " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("invalid ") + what + " document: " + e.what());
    }
}

}  // namespace

json to_json(const ActionSpec& spec) {
    return {{"space", {{"kind", to_string(spec.kind())}, {"dim", spec.dim()}}},
            {"group_rank", spec.rank()},
            {"action", spec.matrix()}};
}

ActionSpec spec_from_json(const json& doc) { return parse_spec(doc.dump()); }

json to_json(const InertiaComponent& c) {
    return {{"element", element_json(c.element)},
            {"geometry", to_string(c.piece.geometry)},
            {"support", c.piece.support},
            {"dim", c.coarse_dim},
            {"split_index", c.split_index},
            {"negated", c.negated},
            {"coarse_type", {{"kind", to_string(c.coarse_type.kind)}, {"dim", c.coarse_type.dim}}},
            {"smooth", c.smooth == Smoothness::Smooth ? "smooth" : "unknown"},
            {"quotient_degree", c.quotient_degree},
            {"rank", c.rank},
            {"label", label(c)}};
}

InertiaComponent component_from_json(const json& j, int rank) {
    return guarded("component", [&] {
        InertiaComponent c;
        c.element = element_from(j.at("element"), rank);
        c.piece.geometry = geometry_from_string(j.at("geometry").get<std::string>());
        c.piece.support = j.at("support").get<std::vector<int>>();
        c.coarse_dim = j.at("dim").get<int>();
        c.split_index = j.at("split_index").get<int>();
        c.negated = j.at("negated").get<bool>();
        c.coarse_type.kind = coarse_kind_from_string(j.at("coarse_type").at("kind").get<std::string>());
        c.coarse_type.dim = j.at("coarse_type").at("dim").get<int>();
        const auto smooth = j.at("smooth").get<std::string>();
        if (smooth != "smooth" && smooth != "unknown") throw InputError("unknown smoothness '" + smooth + "'");
        c.smooth = smooth == "smooth" ? Smoothness::Smooth : Smoothness::Unknown;
        c.quotient_degree = j.at("quotient_degree").get<int>();
        c.rank = j.at("rank").get<std::int64_t>();
        return c;
    });
}

json to_json(const SodReport& report) {
    json comps = json::array();
    for (const auto& c : report.components) comps.push_back(to_json(c));
    json grouping = json::array();
    for (const auto& [g, positions] : report.grouping)
        grouping.push_back({{"element", element_json(g)}, {"positions", positions}});
    json kernel = json::array();
    for (const auto& g : report.flags.kernel) kernel.push_back(element_json(g));
    return {{"spec", to_json(report.spec)},
            {"components", comps},
            {"order", report.order},
            {"total_rank", report.total_rank},
            {"grouping", grouping},
            {"flags", {{"effective", report.flags.effective}, {"kernel", kernel}, {"warnings", report.flags.warnings}}}};
}

SodReport report_from_json(const json& doc) {
    return guarded("report", [&] {
        const auto spec = spec_from_json(doc.at("spec"));
        SodReport r{spec, {}, {}, 0, {}, {}};
        for (const auto& c : doc.at("components")) r.components.push_back(component_from_json(c, spec.rank()));
        r.order = doc.at("order").get<std::vector<std::size_t>>();
        for (auto i : r.order)
            if (i >= r.components.size()) throw InputError("report order refers to a missing component");
        r.total_rank = doc.at("total_rank").get<std::int64_t>();
        for (const auto& entry : doc.at("grouping"))
            r.grouping.emplace_back(element_from(entry.at("element"), spec.rank()),
                                    entry.at("positions").get<std::vector<std::size_t>>());
        const auto& flags = doc.at("flags");
        r.flags.effective = flags.at("effective").get<bool>();
        for (const auto& g : flags.at("kernel")) r.flags.kernel.push_back(element_from(g, spec.rank()));
        r.flags.warnings = flags.at("warnings").get<std::vector<std::string>>();
        return r;
    });
}

json to_json(const MutationPlan& plan) {
    json moves = json::array();
    for (const auto& m : plan.moves)
        moves.push_back({{"block", m.move.block},
                         {"direction", to_string(m.move.direction)},
                         {"orthogonal", to_string(m.orthogonal)}});
    return {{"moves", moves}, {"final_order", plan.final_order}};
}

namespace {

/// Entries beyond int64 are written as decimal strings.
json big_to_json(const BigInt& v) {
    if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
        return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const auto digits = std::string_view(s).substr(s.starts_with('-') ? 1 : 0);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
            throw InputError("sequence: '" + s + "' is not an integer");
        return BigInt(s);
    }
    throw InputError("sequence: vector entries must be integers");
}

}  // namespace

json to_json(const ExceptionalSequence& seq) {
    json blocks = json::array();
    for (const auto& b : seq.blocks()) blocks.push_back({{"label", b.label}, {"positions", b.positions}});
    json vectors = json::array();
    for (const auto& v : seq.vectors()) {
        json row = json::array();
        for (const auto& x : v) row.push_back(big_to_json(x));
        vectors.push_back(std::move(row));
    }
    return {{"form", seq.form()}, {"vectors", vectors}, {"blocks", blocks}};
}

ExceptionalSequence sequence_from_json(const json& doc) {
    return guarded("sequence", [&] {
        auto form = doc.at("form").get<IntMatrix>();
        BigMatrix vectors;
        if (doc.contains("vectors")) {
            for (const auto& row : doc.at("vectors")) {
                vectors.emplace_back();
                for (const auto& x : row) vectors.back().push_back(big_from_json(x));
            }
        } else {
            vectors = widen(identity_matrix(form.size()));
        }
        std::vector<std::size_t> sizes;
        std::vector<std::string> labels;
        if (doc.contains("blocks")) {
            std::size_t next = 0;
            for (const auto& b : doc.at("blocks")) {
                const auto positions = b.at("positions").get<std::vector<std::size_t>>();
                for (auto p : positions)
                    if (p != next++) throw InputError("sequence blocks must list consecutive positions in order");
                sizes.push_back(positions.size());
                labels.push_back(b.value("label", "B" + std::to_string(labels.size())));
            }
        } else {
            sizes.assign(form.size(), 1);
        }
        return ExceptionalSequence(std::move(form), std::move(vectors), sizes, std::move(labels));
    });
}

std::vector<Move> moves_from_json(const json& doc) {
    return guarded("mutation script", [&] {
        const json& list = doc.is_array() ? doc : doc.at("moves");
        std::vector<Move> moves;
        for (const auto& m : list) {
            const auto block = m.at("block").get<long long>();
            if (block < 0) throw InputError("mutation script: negative block index");
            moves.push_back({static_cast<std::size_t>(block), direction_from_string(m.at("direction").get<std::string>())});
        }
        return moves;
    });
}

json to_json(const std::vector<Move>& moves) {
    json out = json::array();
    for (const auto& m : moves) out.push_back({{"block", m.block}, {"direction", to_string(m.direction)}});
    return {{"moves", out}};
}

json to_json(const std::vector<MoveRecord>& records) {
    json out = json::array();
    for (const auto& r : records)
        out.push_back({{"block", r.move.block},
                       {"direction", to_string(r.move.direction)},
                       {"orthogonal", r.orthogonal},
                       {"moved", r.moved},
                       {"passed", r.passed}});
    return out;
}

json to_json(const GramResult& g) {
    json blocks = json::array();
    const auto& gens = g.generators;
    for (std::size_t b = 0; b < gens.block_sizes.size(); ++b)
        blocks.push_back({{"label", gens.labels[b]},
                          {"start", gens.block_start(b)},
                          {"size", gens.block_sizes[b]},
                          {"dim", gens.block_dims[b]},
                          {"twist", gens.twists[b].to_bits()}});
    json objects = json::array();
    for (const auto& o : gens.objects)
        objects.push_back({{"support", o.support}, {"twist", o.twist}, {"character", o.character.to_bits()}});
    json equal_dim = json::array();
    for (const auto& e : g.equal_dim) equal_dim.push_back({{"blocks", {e.a, e.b}}, {"orthogonal", e.orthogonal}});
    return {{"matrix", g.matrix},
            {"blocks", blocks},
            {"objects", objects},
            {"unipotent_upper_triangular", g.unipotent},
            {"normalized", g.normalized},
            {"equal_dim_blocks", equal_dim}};
}

json to_json(const CheckResult& c) {
    return {{"name", c.name},
            {"status", to_string(c.status)},
            {"expected", c.expected},
            {"actual", c.actual},
            {"context", c.context}};
}

}  // namespace msod::io
