#pragma once

// Report and CSV rendering shared by the command line tool and the tests.
// All numeric cells use the 9-significant-digit contract from csvout.

#include <optional>
#include <string>
#include <vector>

#include "vr3c/hetero.hpp"
#include "vr3c/tradeoff.hpp"

namespace vr3c {

std::string symmetric_report(const SymmetricInstance& inst, const SymmetricSolution& sol);
std::string symmetric_solve_csv(const SymmetricInstance& inst, const SymmetricSolution& sol);

std::string hetero_report(const Scenario& scenario, const HeteroSolveResult& result);
std::string hetero_solve_csv(const Scenario& scenario, const HeteroSolveResult& result);

/// CSV of min_average_rate across one axis, or a surface when axis2 is set
/// (axis2-major row order). Device-infeasible f1 rows carry the
/// NOT_LOCALLY_COMPUTABLE marker in the regime column.
std::string symmetric_sweep_csv(const SymmetricInstance& base, SweepAxis axis,
                                const std::vector<double>& grid,
                                std::optional<SweepAxis> axis2 = std::nullopt,
                                const std::vector<double>& grid2 = {});

/// CSV of the greedy solver over normalized cache/energy fractions. Axes
/// other than cache-fraction / energy-fraction are rejected. A missing
/// second axis pins that resource at the scenario's own budget.
std::string hetero_sweep_csv(const Scenario& base, SweepAxis axis, const std::vector<double>& grid,
                             std::optional<SweepAxis> axis2 = std::nullopt,
                             const std::vector<double>& grid2 = {});

/// Average no-offload rate sum(P_i R0_i), the gain baseline.
double base_average_rate(const Scenario& scenario);

} // namespace vr3c
