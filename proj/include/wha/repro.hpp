#pragma once

#include <cstdint>

#include "wha/report.hpp"

namespace wha {

struct ReproOptions {
    std::uint64_t seed = 20240101;
    bool with_fusion_variants = true;
};

// The full reproduction suite: thirteen aggregated criteria, in order. Each
// result's witness summarizes sub-check counts and the first failures.
std::vector<CheckResult> run_repro(const ReproOptions& opts);

// Individual criteria (used by the CLI and the acceptance binary).
CheckResult criterion_classification_table();
CheckResult criterion_orbit_lists();
CheckResult criterion_degenerate_census();
CheckResult criterion_weak_antipode(std::uint64_t seed);
CheckResult criterion_bialgebra_suite(std::uint64_t seed);
CheckResult criterion_no_genuine_antipode();
CheckResult criterion_sweedler_dimensions();
CheckResult criterion_rmatrix();
CheckResult criterion_embedded_copy();
CheckResult criterion_lifted_isomorphisms();
CheckResult criterion_unexpected_isomorphism();
CheckResult criterion_slice_isomorphism();
CheckResult criterion_confluence_smoke(std::uint64_t seed);

} // namespace wha
