#include "fredpair/cli.hpp"

#include "fredpair/errors.hpp"
#include "fredpair/generators.hpp"
#include "fredpair/json_io.hpp"
#include "fredpair/quotient.hpp"
#include "fredpair/report.hpp"
#include "fredpair/subspace.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace fredpair {

namespace {

void emit_json(const Json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_json_file(out, j);
}

void emit_text(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw parse_error("cannot write " + out);
    f << text;
}

OperatorPair load_pair(const std::string& path) {
    return pair_from_json(load_json_file(path));
}

long long checked_index(const DefectProfile& d, const OperatorPair& pr) {
    long long via_defects = static_cast<long long>(d.a) -
                            static_cast<long long>(d.b) +
                            static_cast<long long>(d.d) -
                            static_cast<long long>(d.c);
    long long via_dims = static_cast<long long>(pr.x_dim) -
                         static_cast<long long>(pr.y_dim);
    if (d.index != via_defects || d.index != via_dims)
        throw theorem_violation("index identity a - b + d - c = "
                                "dim X - dim Y");
    return d.index;
}

/// The per-pair invariant battery; returns the verified claims in order
/// and throws theorem_violation at the first failure.
std::vector<std::string> check_pair(const OperatorPair& pr) {
    std::vector<std::string> notes;
    DefectProfile d = defects(pr);
    long long index = checked_index(d, pr);
    notes.push_back("index = a - b + d - c = dim X - dim Y = " +
                    std::to_string(index));

    if (Subspace::span(matmul(pr.s, pr.t)).dim() != d.b)
        throw theorem_violation("dim R(s t) = b");
    if (Subspace::span(matmul(pr.t, pr.s)).dim() != d.d)
        throw theorem_violation("dim R(t s) = d");
    notes.push_back("dim R(s t) = b = " + std::to_string(d.b));
    notes.push_back("dim R(t s) = d = " + std::to_string(d.d));

    AdjointPair ap = adjoint_pair(pr);
    const Matrix& sp = ap.witness.s_prime;
    const Matrix& tp = ap.witness.t_prime;
    if (matmul(pr.s, matmul(sp, pr.s)) != pr.s ||
        matmul(sp, matmul(pr.s, sp)) != sp ||
        matmul(pr.t, matmul(tp, pr.t)) != pr.t ||
        matmul(tp, matmul(pr.t, tp)) != tp)
        throw theorem_violation("adjoint pair satisfies all four "
                                "generalized-inverse identities");
    if (pair_index(ap.pair) != -index)
        throw theorem_violation("adjoint pair negates the index");
    notes.push_back("adjoint pair inverts both operators, index " +
                    std::to_string(-index));

    Classification cls = classify(pr);
    if (cls.p > cls.q + 1 || cls.q > cls.p + 1)
        throw theorem_violation("|p - q| <= 1");
    notes.push_back("case " + to_string(cls.kind) + "-" +
                    std::to_string(cls.number) + " with |p - q| <= 1");

    IndexFormulas f = index_formulas(pr);
    if (f.via_defects != index || f.via_n_blocks != index ||
        f.via_m_blocks != index)
        throw theorem_violation("the three index formulas agree");
    notes.push_back("three index formulas agree at " +
                    std::to_string(index));

    CanonicalReport rep = canonical_form(pr);
    for (const auto& claim : rep.checks)
        notes.push_back("canonical: " + claim);

    TransferReport tr = verify_transfer(pr);
    notes.push_back("quotient transfer: a = " + std::to_string(tr.a) +
                    " and c = " + std::to_string(tr.c) +
                    " survive, quotient index " +
                    std::to_string(tr.quotient_index));
    return notes;
}

std::vector<std::string> check_chain(const ChainComplex& c) {
    std::vector<std::string> notes;
    validate(c);
    ChainReport r = chain_report(c);
    OperatorPair folded = fold(c);
    if (pair_index(folded) != r.index)
        throw theorem_violation("fold index equals the chain index");
    notes.push_back("fold index = chain index = " + std::to_string(r.index));
    if (c.is_complex) {
        long long euler = 0;
        for (std::size_t p = 0; p < c.dims.size(); ++p)
            euler += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dims[p]);
        if (r.index != euler)
            throw theorem_violation("chain index equals the alternating "
                                    "dimension sum");
        if (!is_symmetrical(folded))
            throw theorem_violation("the fold of a complex is symmetrical");
        splitting_homotopy(c); // verifies d h + h d = 1 - k entrywise
        notes.push_back("alternating dimension sum = " +
                        std::to_string(euler));
        notes.push_back("fold is symmetrical");
        notes.push_back("splitting homotopy identity d h + h d = 1 - k "
                        "holds entrywise");
    }
    return notes;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact defect, index and classification calculus for "
                 "operator pairs"};
    app.require_subcommand(1);

    std::string path, out;
    bool as_json = false;
    std::size_t level = 0;

    auto* analyze_cmd =
        app.add_subcommand("analyze", "full report for a pair file");
    analyze_cmd->add_option("path", path, "pair JSON file")->required();
    analyze_cmd->add_flag("--json", as_json, "emit JSON instead of text");
    analyze_cmd->add_option("--level", level,
                            "decomposition level (default: pair number)");
    analyze_cmd->add_option("--out", out, "write to file instead of stdout");
    analyze_cmd->callback([&] {
        AnalysisReport rep = analyze(load_pair(path), level);
        if (as_json)
            emit_json(to_json(rep), out);
        else
            emit_text(render_text(rep), out);
    });

    auto* classify_cmd =
        app.add_subcommand("classify", "case and number for a pair file");
    classify_cmd->add_option("path", path, "pair JSON file")->required();
    classify_cmd->add_flag("--json", as_json, "emit JSON instead of text");
    classify_cmd->add_option("--out", out, "write to file instead of stdout");
    classify_cmd->callback([&] {
        Classification cls = classify(load_pair(path));
        if (as_json)
            emit_json(to_json(cls), out);
        else
            emit_text("case " + to_string(cls.kind) + "-" +
                          std::to_string(cls.number) + "  (p=" +
                          std::to_string(cls.p) + ", q=" +
                          std::to_string(cls.q) + ")\n",
                      out);
    });

    auto* ginv_cmd = app.add_subcommand(
        "ginv", "jointly normalized generalized-inverse pair");
    ginv_cmd->add_option("path", path, "pair JSON file")->required();
    ginv_cmd->add_option("--out", out, "write to file instead of stdout");
    ginv_cmd->callback([&] {
        AdjointPair ap = adjoint_pair(load_pair(path));
        Json j = to_json(ap.pair);
        j["normalized"] = ap.witness.normalized;
        emit_json(j, out);
    });

    auto* fold_cmd =
        app.add_subcommand("fold", "even/odd fold of a chain into a pair");
    fold_cmd->add_option("path", path, "chain JSON file")->required();
    fold_cmd->add_option("--out", out, "write to file instead of stdout");
    fold_cmd->callback([&] {
        emit_json(to_json(fold(chain_from_json(load_json_file(path)))), out);
    });

    auto* quotient_cmd = app.add_subcommand(
        "quotient", "symmetrized quotient pair with projections");
    quotient_cmd->add_option("path", path, "pair JSON file")->required();
    quotient_cmd->add_option("--out", out,
                             "write to file instead of stdout");
    quotient_cmd->callback(
        [&] { emit_json(to_json(quotient_pair(load_pair(path))), out); });

    auto* synth_cmd = app.add_subcommand(
        "synth", "build a pair with prescribed case, number and blocks");
    synth_cmd->add_option("path", path, "spec JSON file")->required();
    synth_cmd->add_option("--out", out, "write to file instead of stdout");
    synth_cmd->callback([&] {
        SynthSpec spec = synth_spec_from_json(load_json_file(path));
        emit_json(to_json(synth_from_case(spec)), out);
    });

    std::size_t rx = 4, ry = 4, rank_s = 2, rank_t = 2;
    std::size_t spaces = 4, max_dim = 3;
    std::uint64_t seed = 0;
    bool chain_mode = false, complex_mode = false;
    auto* random_cmd =
        app.add_subcommand("random", "seeded random pair or chain");
    random_cmd->add_option("--x", rx, "dim X (default 4)");
    random_cmd->add_option("--y", ry, "dim Y (default 4)");
    random_cmd->add_option("--rank-s", rank_s, "rank of s (default 2)");
    random_cmd->add_option("--rank-t", rank_t, "rank of t (default 2)");
    random_cmd->add_option("--seed", seed, "RNG seed (default 0)");
    random_cmd->add_flag("--chain", chain_mode, "generate a chain instead");
    random_cmd->add_option("--spaces", spaces,
                           "chain: number of spaces (default 4)");
    random_cmd->add_option("--max-dim", max_dim,
                           "chain: max space dimension (default 3)");
    random_cmd->add_flag("--complex", complex_mode,
                         "chain: make the boundaries compose to zero");
    random_cmd->add_option("--out", out, "write to file instead of stdout");
    random_cmd->callback([&] {
        if (chain_mode)
            emit_json(
                to_json(random_chain(spaces, max_dim, seed, complex_mode)),
                out);
        else
            emit_json(to_json(random_pair(rx, ry, rank_s, rank_t, seed)),
                      out);
    });

    std::vector<std::string> paths;
    auto* check_cmd = app.add_subcommand(
        "check", "run the full invariant suite on pair or chain files");
    check_cmd->add_option("paths", paths, "pair or chain JSON files")
        ->required();
    check_cmd->add_flag("--json", as_json, "emit JSON instead of text");
    check_cmd->callback([&] {
        Json files = Json::array();
        for (const auto& p : paths) {
            Json j = load_json_file(p);
            std::vector<std::string> notes;
            try {
                if (j.is_object() && j.contains("dims"))
                    notes = check_chain(chain_from_json(j));
                else
                    notes = check_pair(pair_from_json(j));
            } catch (const theorem_violation& e) {
                throw theorem_violation(p + ": " + e.what());
            }
            if (as_json) {
                files.push_back(
                    Json{{"file", p}, {"status", "ok"}, {"checks", notes}});
            } else {
                std::cout << p << ":\n";
                for (const auto& n : notes) std::cout << "  ok: " << n << "\n";
            }
        }
        if (as_json)
            std::cout << Json{{"files", files}}.dump(2) << "\n";
        else
            std::cout << "all invariants hold\n";
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const theorem_violation& e) {
        std::cerr << "violated: " << e.what() << "\n";
        return 4;
    }
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("fredpair");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

} // namespace fredpair
