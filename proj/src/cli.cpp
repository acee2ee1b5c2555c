#include "zzmod/cli.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zzmod/decomposer.hpp"
#include "zzmod/generator.hpp"
#include "zzmod/json_io.hpp"

namespace zzmod::cli {

namespace {

ZigzagShape parse_shape_spec(const std::string& spec) {
    std::vector<Direction> dirs;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "fwd") dirs.push_back(Direction::Forward);
        else if (tok == "bwd") dirs.push_back(Direction::Backward);
        else throw ParseError("bad shape token \"" + tok + "\" (want fwd/bwd)");
    }
    return ZigzagShape(std::move(dirs));
}

std::string ascii_bar(const Bar& b, int n) {
    std::string line;
    for (int v = 1; v <= n; ++v) line += b.iv.contains(v) ? '#' : '.';
    return line + "  [" + std::to_string(b.iv.lo) + "," + std::to_string(b.iv.hi) + "] x" +
           std::to_string(b.rank);
}

int cmd_pcc(const std::string& input, std::ostream& out) {
    PersModule m = load_module(input);
    PccReport rep = check_all(m);
    out << to_json(rep).dump(2) << "\n";
    return rep.overall ? exit_ok : exit_refused;
}

int cmd_decompose(const std::string& input, const std::string& output, bool bars_only,
                  bool ascii, std::ostream& out) {
    PersModule m = load_module(input);
    DecompOutcome res = decompose(m);
    if (!res.success()) {
        out << Json{{"refused", to_json(*res.refusal)}}.dump(2) << "\n";
        return exit_refused;
    }
    if (!output.empty()) save_json(output, to_json(*res.decomposition));
    if (ascii) {
        Barcode norm = normalize(*res.barcode);
        for (const Bar& b : norm.bars) out << ascii_bar(b, m.shape.vertex_count()) << "\n";
    } else if (bars_only) {
        out << to_json(*res.barcode).dump(2) << "\n";
    } else {
        out << to_json(*res.barcode).dump(2) << "\n";
    }
    return exit_ok;
}

int cmd_verify(const std::string& module_path, const std::string& decomp_path,
               std::ostream& out) {
    PersModule m = load_module(module_path);
    Decomposition d = load_decomposition(decomp_path);
    const std::size_t n = static_cast<std::size_t>(m.shape.vertex_count());
    for (const Submodule& s : d.summands) {
        if (s.gens.size() != n)
            throw ParseError("decomposition has a summand for a different vertex count");
        for (std::size_t v = 0; v < n; ++v)
            if (s.gens[v].rows() != m.ranks[v])
                throw ParseError("summand generators do not match the module ranks");
    }
    VerifyReport rep = verify_decomposition(m, d);
    out << to_json(rep).dump(2) << "\n";
    return rep.ok ? exit_ok : exit_refused;
}

int cmd_gen(std::uint64_t seed, const ZigzagShape& shape, int bars, int max_rank,
            int scramble_level, bool adversarial, int entry_bound,
            const std::string& prefix, std::ostream& out) {
    if (adversarial) {
        PersModule m = gen_adversarial(seed, shape, max_rank, entry_bound);
        save_json(prefix + ".module.json", to_json(m));
        out << "wrote " << prefix << ".module.json\n";
    } else {
        GeneratedInstance inst = gen_decomposable(seed, shape, bars, max_rank, scramble_level);
        save_json(prefix + ".module.json", to_json(inst.module));
        save_json(prefix + ".truth.json", to_json(inst.truth));
        out << "wrote " << prefix << ".module.json and " << prefix << ".truth.json\n";
    }
    return exit_ok;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"interval decomposition of integer zigzag persistence modules"};
    app.require_subcommand(1);

    std::string input, output, module_path, decomp_path, shape_spec, prefix = "instance";
    bool ascii = false, adversarial = false, corrupt = false;
    std::uint64_t seed = 0;
    int bars = 4, max_rank = 1, scramble_level = 3, entry_bound = 2, total_order = 0;

    auto* pcc = app.add_subcommand("pcc", "check the projective colimit conditions");
    pcc->add_option("input", input, "module JSON file")->required();

    auto* dec = app.add_subcommand("decompose", "compute and verify an interval decomposition");
    dec->add_option("input", input, "module JSON file")->required();
    dec->add_option("-o,--out", output, "write the decomposition JSON here");

    auto* bar = app.add_subcommand("barcode", "decompose and print the bars only");
    bar->add_option("input", input, "module JSON file")->required();
    bar->add_flag("--ascii", ascii, "plain-text bar listing");

    auto* ver = app.add_subcommand("verify", "certify a claimed decomposition");
    ver->add_option("module", module_path, "module JSON file")->required();
    ver->add_option("decomposition", decomp_path, "decomposition JSON file")->required();

    auto* gen = app.add_subcommand("gen", "emit a seeded instance (+ ground truth)");
    gen->add_option("--seed", seed, "PRNG seed")->required();
    gen->add_option("--shape", shape_spec, "comma-separated fwd/bwd edge list");
    gen->add_option("--total-order", total_order, "linear shape with n vertices");
    gen->add_option("--bars", bars, "max bars to draw");
    gen->add_option("--max-rank", max_rank, "max rank per bar / per vertex");
    gen->add_option("--scramble", scramble_level, "elementary ops per vertex scramble");
    gen->add_flag("--adversarial", adversarial, "random edge entries, no guarantee");
    gen->add_option("--entry-bound", entry_bound, "adversarial entry bound");
    gen->add_option("-o,--out", prefix, "output file prefix");

    auto* self = app.add_subcommand("selfcheck", "run the embedded acceptance corpus");
    self->add_flag("--corrupt-snf", corrupt, "failure-injection hook: break snf on purpose");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        (code == 0 ? out : err) << os.str();
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (pcc->parsed()) return cmd_pcc(input, out);
        if (dec->parsed()) return cmd_decompose(input, output, false, false, out);
        if (bar->parsed()) return cmd_decompose(input, "", true, ascii, out);
        if (ver->parsed()) return cmd_verify(module_path, decomp_path, out);
        if (gen->parsed()) {
            if (!shape_spec.empty() && total_order > 0)
                throw ParseError("give either --shape or --total-order, not both");
            ZigzagShape shape =
                total_order > 0
                    ? ZigzagShape(std::vector<Direction>(
                          static_cast<std::size_t>(total_order - 1), Direction::Forward))
                    : parse_shape_spec(shape_spec);
            return cmd_gen(seed, shape, bars, max_rank, scramble_level, adversarial,
                           entry_bound, prefix, out);
        }
        if (self->parsed()) {
            testhook::corrupt_snf = corrupt;
            const int failed = run_selfcheck(out);
            testhook::corrupt_snf = false;
            return failed == 0 ? exit_ok : exit_refused;
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const DimensionError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const InternalCheckError& e) {
        err << "internal consistency failure (bug): " << e.what() << "\n";
        return exit_internal_bug;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_internal_bug;
    }
    return exit_input_error;
}

} // namespace zzmod::cli
