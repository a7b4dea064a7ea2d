#pragma once

#include "fredpair/classification.hpp"
#include "fredpair/json_io.hpp"
#include "fredpair/pair.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fredpair {

/// Everything the front end reports about one pair: the defect profile,
/// the classification, the block dimensions of the level decomposition
/// in presentation order, the index computed three ways, and the Weyl
/// flags.  Warnings carry observations, never errors.
struct AnalysisReport {
    std::size_t x_dim = 0, y_dim = 0;
    std::size_t level = 1;
    DefectProfile defect_profile;
    Classification classification;
    std::vector<std::pair<std::string, std::size_t>> x_blocks, y_blocks;
    IndexFormulas formulas;
    bool weyl = false;
    bool regular_weyl = false;
    bool symmetrical = false;
    std::vector<std::string> warnings;
};

/// level = 0 means "use the pair's number".  Cross-checks that the
/// defect index, the two block formulas and x_dim - y_dim all agree and
/// throws theorem_violation otherwise, so a returned report is
/// internally consistent.
AnalysisReport analyze(const OperatorPair& pr, std::size_t level = 0);

Json to_json(const AnalysisReport& r);

/// Aligned, deterministic plain-text rendering.
std::string render_text(const AnalysisReport& r);

} // namespace fredpair
