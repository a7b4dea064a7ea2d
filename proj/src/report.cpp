#include "fredpair/report.hpp"

#include "fredpair/errors.hpp"

#include <iomanip>
#include <sstream>

namespace fredpair {

AnalysisReport analyze(const OperatorPair& pr, std::size_t level) {
    AnalysisReport rep;
    rep.x_dim = pr.x_dim;
    rep.y_dim = pr.y_dim;
    rep.defect_profile = defects(pr);
    rep.classification = classify(pr);
    rep.formulas = index_formulas(pr);
    rep.weyl = is_weyl(pr);
    rep.regular_weyl = is_regular_weyl(pr);
    rep.symmetrical = is_symmetrical(pr);

    FullDecomposition dec = full_decomposition(pr, level);
    rep.level = dec.level;
    for (const auto& b : dec.x_blocks)
        rep.x_blocks.emplace_back(b.name, b.space.dim());
    for (const auto& b : dec.y_blocks)
        rep.y_blocks.emplace_back(b.name, b.space.dim());

    const DefectProfile& d = rep.defect_profile;
    long long dims = static_cast<long long>(pr.x_dim) -
                     static_cast<long long>(pr.y_dim);
    if (d.index != dims ||
        d.index != static_cast<long long>(d.a) - static_cast<long long>(d.b) +
                       static_cast<long long>(d.d) -
                       static_cast<long long>(d.c) ||
        d.index != rep.formulas.via_defects ||
        d.index != rep.formulas.via_n_blocks ||
        d.index != rep.formulas.via_m_blocks)
        throw theorem_violation("index computations disagree");

    if (rep.symmetrical && d.index != 0)
        rep.warnings.push_back("symmetrical pair with nonzero index: both "
                               "compositions vanish yet no inverse pair can "
                               "exist");
    if (rep.level < rep.classification.number)
        rep.warnings.push_back("decomposition level " +
                               std::to_string(rep.level) +
                               " lies below the stabilization number " +
                               std::to_string(rep.classification.number) +
                               "; the towers are still moving");
    return rep;
}

namespace {

Json blocks_json(const std::vector<std::pair<std::string, std::size_t>>& v) {
    Json out = Json::array();
    for (const auto& [name, dim] : v)
        out.push_back(Json{{"name", name}, {"dim", dim}});
    return out;
}

} // namespace

Json to_json(const AnalysisReport& r) {
    return Json{{"x_dim", r.x_dim},
                {"y_dim", r.y_dim},
                {"level", r.level},
                {"defects", to_json(r.defect_profile)},
                {"classification", to_json(r.classification)},
                {"x_blocks", blocks_json(r.x_blocks)},
                {"y_blocks", blocks_json(r.y_blocks)},
                {"index_formulas", to_json(r.formulas)},
                {"weyl", r.weyl},
                {"regular_weyl", r.regular_weyl},
                {"symmetrical", r.symmetrical},
                {"warnings", r.warnings}};
}

namespace {

std::string block_line(
    const std::vector<std::pair<std::string, std::size_t>>& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, dim] : v) {
        if (!first) os << "  ";
        os << name << "=" << dim;
        first = false;
    }
    return os.str();
}

} // namespace

std::string render_text(const AnalysisReport& r) {
    std::ostringstream os;
    auto row = [&os](const char* key, const std::string& value) {
        os << std::left << std::setw(16) << key << value << "\n";
    };
    const DefectProfile& d = r.defect_profile;
    row("pair", "Q^" + std::to_string(r.x_dim) + " <-> Q^" +
                    std::to_string(r.y_dim));
    row("index", std::to_string(d.index));
    {
        std::ostringstream def;
        def << "a=" << d.a << "  b=" << d.b << "  c=" << d.c << "  d=" << d.d;
        row("defects", def.str());
    }
    row("case", to_string(r.classification.kind) + "-" +
                    std::to_string(r.classification.number) + "  (p=" +
                    std::to_string(r.classification.p) + ", q=" +
                    std::to_string(r.classification.q) + ")");
    {
        std::ostringstream f;
        f << "defects=" << r.formulas.via_defects << "  n-blocks="
          << r.formulas.via_n_blocks << "  m-blocks="
          << r.formulas.via_m_blocks;
        row("index formulas", f.str());
    }
    row("weyl", r.weyl ? "yes" : "no");
    row("regular weyl", r.regular_weyl ? "yes" : "no");
    row("symmetrical", r.symmetrical ? "yes" : "no");
    row("level", std::to_string(r.level));
    row("X blocks", block_line(r.x_blocks));
    row("Y blocks", block_line(r.y_blocks));
    for (const auto& w : r.warnings) os << "note: " << w << "\n";
    return os.str();
}

} // namespace fredpair
