// msod: inertia components, dimension-ordered decompositions, Gram matrices and
// K_0 mutations for diagonal mu_2^k actions.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "msod/euler.hpp"
#include "msod/io.hpp"
#include "msod/presets.hpp"
#include "msod/sod.hpp"
#include "msod/verify.hpp"

namespace {

using namespace msod;
using nlohmann::json;

struct Options {
    std::string input;
    std::string preset;
    presets::PresetArgs args;
    bool json_out = false;
    std::string out;
    std::string check;
    std::string script;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed " + what + ": " + e.what());
    }
}

bool has_input(const Options& o) { return !o.input.empty() || !o.preset.empty(); }

ActionSpec load_spec(const Options& o) {
    if (!o.input.empty() && !o.preset.empty()) throw InputError("give either an input file or --preset, not both");
    if (!o.preset.empty()) return presets::by_name(o.preset, o.args);
    if (o.input.empty()) throw InputError("no input: give a spec file or --preset");
    return parse_spec(read_file(o.input));
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write '" + o.out + "'");
    f << text;
}

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

std::string component_table(const SodReport& r, const std::vector<std::size_t>& order) {
    std::ostringstream os;
    os << pad("pos", 5) << pad("element", 10) << pad("piece", 22) << pad("coarse", 8) << pad("dim", 5) << "rank\n";
    for (std::size_t p = 0; p < order.size(); ++p) {
        const auto& c = r.components[order[p]];
        std::string piece = describe(c.piece);
        if (c.split_index) piece += "#" + std::to_string(c.split_index);
        os << pad(std::to_string(p), 5) << pad(c.element.str(), 10) << pad(piece, 22)
           << pad(describe(c.coarse_type), 8) << pad(std::to_string(c.coarse_dim), 5) << c.rank << "\n";
    }
    return os.str();
}

bool gram_available(const SodReport& r) {
    if (r.spec.kind() != SpaceKind::Projective) return false;
    for (const auto& c : r.components)
        if (c.smooth != Smoothness::Smooth) return false;
    return true;
}

int run_analyze(const Options& o) {
    const auto spec = load_spec(o);
    const auto comps = components(spec);
    if (o.json_out) {
        json arr = json::array();
        for (const auto& c : comps) arr.push_back(io::to_json(c));
        json doc = {{"spec", io::to_json(spec)}, {"components", arr}};
        const auto kernel = projective_kernel(spec);
        doc["effective"] = kernel.size() == 1;
        emit(o, doc.dump(2) + "\n");
        return 0;
    }
    SodReport shell{spec, comps, {}, 0, {}, {}};
    std::vector<std::size_t> order(comps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::ostringstream os;
    os << comps.size() << " inertia components" << (is_effective(spec) ? "" : " (action not effective)") << "\n"
       << component_table(shell, order);
    emit(o, os.str());
    return 0;
}

int run_sod(const Options& o) {
    const auto spec = load_spec(o);
    const auto report = assemble(spec);
    std::optional<BlockGram> blocked;
    if (gram_available(report)) blocked = compute_gram(spec, report).blocked();
    const auto plan = msodc_plan(report, blocked);
    if (o.json_out) {
        auto doc = io::to_json(report);
        doc["plan"] = io::to_json(plan);
        emit(o, doc.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "decomposition (" << report.size() << " pieces, dimension decreasing)\n"
       << component_table(report, report.order) << "total rank " << report.total_rank << "\n";
    if (plan.moves.empty()) {
        os << "already grouped by element\n";
    } else {
        os << "regrouping moves:\n";
        for (const auto& m : plan.moves)
            os << "  block " << m.move.block << " " << to_string(m.move.direction)
               << " (orthogonal: " << to_string(m.orthogonal) << ")\n";
        os << "grouped order\n" << component_table(report, plan.final_order);
    }
    for (const auto& w : report.flags.warnings) os << "warning: " << w << "\n";
    emit(o, os.str());
    return 0;
}

int run_gram(const Options& o) {
    const auto spec = load_spec(o);
    if (spec.kind() != SpaceKind::Projective) throw InputError("gram: only projective specs are supported");
    const auto report = assemble(spec);
    const auto g = compute_gram(spec, report);
    if (o.json_out) {
        emit(o, io::to_json(g).dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    const auto& gens = g.generators;
    for (std::size_t b = 0; b < gens.block_sizes.size(); ++b)
        os << "block " << b << " [" << gens.block_start(b) << ".." << gens.block_start(b) + gens.block_sizes[b]
           << ") " << gens.labels[b] << (gens.twists[b].is_zero() ? "" : " twist " + gens.twists[b].str()) << "\n";
    for (const auto& row : g.matrix) {
        for (auto v : row) os << std::setw(4) << v;
        os << "\n";
    }
    os << "unipotent upper-triangular: " << (g.unipotent ? "yes" : "no")
       << (g.normalized ? " (after block twists)" : "") << "\n";
    emit(o, os.str());
    return 0;
}

int run_mutate(const Options& o) {
    ExceptionalSequence seq = [&] {
        if (!o.preset.empty()) {
            if (!o.input.empty()) throw InputError("give either a sequence file or --preset, not both");
            const auto spec = presets::by_name(o.preset, o.args);
            if (spec.kind() != SpaceKind::Projective) throw InputError("mutate: preset has no Gram matrix");
            const auto report = assemble(spec);
            const auto g = compute_gram(spec, report);
            return ExceptionalSequence::standard(g.matrix, g.generators.block_sizes, g.generators.labels);
        }
        if (o.input.empty()) throw InputError("no input: give a sequence file or --preset");
        return io::sequence_from_json(parse_json(read_file(o.input), "sequence"));
    }();

    std::vector<Move> moves;
    if (!o.script.empty()) {
        moves = io::moves_from_json(parse_json(read_file(o.script), "mutation script"));
    } else if (!o.preset.empty()) {
        const auto spec = presets::by_name(o.preset, o.args);
        for (const auto& m : msodc_plan(assemble(spec)).moves) moves.push_back(m.move);
    } else {
        throw InputError("mutate: --script is required for sequence files");
    }

    const auto result = apply_script(seq, moves);
    const bool so = result.sequence.is_semiorthogonal();
    const bool uni = result.sequence.is_unimodular();
    if (o.json_out) {
        json doc = {{"sequence", io::to_json(result.sequence)},
                    {"records", io::to_json(result.records)},
                    {"semiorthogonal", so},
                    {"unimodular", uni}};
        emit(o, doc.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    for (const auto& r : result.records)
        os << "move block " << r.move.block << " " << to_string(r.move.direction) << ": " << r.moved << " past "
           << r.passed << (r.orthogonal ? " (orthogonal, transposition)" : "") << "\n";
    os << "block order:\n";
    for (const auto& b : result.sequence.blocks()) os << "  " << b.label << "\n";
    os << "semiorthogonal: " << (so ? "yes" : "no") << ", unimodular: " << (uni ? "yes" : "no") << "\n";
    emit(o, os.str());
    return 0;
}

int run_verify(const Options& o) {
    std::vector<CheckResult> results;
    if (has_input(o)) {
        const auto spec = load_spec(o);
        if (o.preset == "etale") results.push_back(check_etale(o.args.n, o.args.k));
        if (o.preset == "quadric") results.push_back(check_quadric(o.args.q_dim));
        for (auto& r : checks_for(spec)) results.push_back(std::move(r));
        if (!o.check.empty()) {
            std::erase_if(results, [&](const CheckResult& r) { return r.name.rfind(o.check, 0) != 0; });
            if (results.empty()) throw InputError("no check named '" + o.check + "' applies to this input");
        }
    } else if (o.check.empty() || o.check == "all") {
        results = run_suite();
    } else if (o.check == "etale") {
        if (o.args.n < 0 || o.args.k < 0) throw InputError("--check etale requires --n and --k");
        results.push_back(check_etale(o.args.n, o.args.k));
    } else if (o.check == "quadric") {
        if (o.args.q_dim < 0) throw InputError("--check quadric requires --q-dim");
        results.push_back(check_quadric(o.args.q_dim));
    } else if (o.check == "gram_presets") {
        results.push_back(check_gram_presets());
    } else {
        throw InputError("unknown check '" + o.check + "' (etale, quadric, gram_presets, all) or give an input");
    }

    bool ok = true;
    for (const auto& r : results) ok = ok && r.status != CheckStatus::Fail;
    if (o.json_out) {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(io::to_json(r));
        emit(o, json{{"checks", arr}, {"passed", ok}}.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& r : results) {
            os << "[" << to_string(r.status) << "] " << r.name;
            if (r.status == CheckStatus::Skipped)
                os << ": " << r.context;
            else
                os << ": " << r.actual;
            if (r.status == CheckStatus::Fail) os << " (expected " << r.expected << ")";
            os << "\n";
        }
        os << (ok ? "all checks passed" : "verification FAILED") << "\n";
        emit(o, os.str());
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semiorthogonal decompositions for diagonal mu_2^k actions"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, const std::string& input_help) {
        sub->add_option("input", o.input, input_help);
        sub->add_option("--preset", o.preset, "Built-in setting: etale, p2-example, pn-full, quadric");
        sub->add_option("--n", o.args.n, "Dimension n for etale / pn-full");
        sub->add_option("--k", o.args.k, "Group rank k for etale");
        sub->add_option("--q-dim", o.args.q_dim, "Quadric dimension for quadric");
        sub->add_flag("--json", o.json_out, "Structured output");
        sub->add_option("--out", o.out, "Write output to PATH");
    };

    auto* analyze = app.add_subcommand("analyze", "List inertia components");
    add_common(analyze, "Action-spec document");
    auto* sod = app.add_subcommand("sod", "Dimension-ordered decomposition, rank ledger and regrouping plan");
    add_common(sod, "Action-spec document");
    auto* gram = app.add_subcommand("gram", "Gram matrix of canonical generators (projective only)");
    add_common(gram, "Action-spec document");
    auto* mutate = app.add_subcommand("mutate", "Apply a mutation script to an exceptional sequence");
    add_common(mutate, "Serialized sequence document");
    mutate->add_option("--script", o.script, "Mutation script document");
    auto* verify = app.add_subcommand("verify", "Run verification checks");
    add_common(verify, "Action-spec document");
    verify->add_option("--check", o.check, "Named check (etale, quadric, gram_presets, all) or name prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(o);
        if (sod->parsed()) return run_sod(o);
        if (gram->parsed()) return run_gram(o);
        if (mutate->parsed()) return run_mutate(o);
        if (verify->parsed()) return run_verify(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
