#pragma once

#include <vector>

#include "vr3c/symmetric.hpp"

namespace vr3c {

/// Which resource a trade-off sweep varies.
enum class SweepAxis {
    CacheFraction,  // C/N in [0,1]
    EnergyFraction, // E / (k*f1^2*I*w), per-task energy budget fraction
    DeviceFreq,     // f1 in cycles/s
    Energy,         // E in Joules
};

const char* to_string(SweepAxis axis);

struct SweepSpec {
    SweepAxis axis = SweepAxis::EnergyFraction;
    std::vector<double> grid; // strictly increasing
    SymmetricInstance base;
};

struct TradeoffPoint {
    double axis_value = 0.0;
    double min_rate = 0.0; // R*
    SymmetricRegime regime = SymmetricRegime::EnergyLimitedCached;
    bool device_infeasible = false; // f1 at or below I*w/tau: forced d*=0, R*=R0
    double gain_fraction = 0.0;     // 1 - R*/R0
    long long offload_count = 0;
    long long cache_count = 0;
    double energy_used_j = 0.0;
    double cache_used_bits = 0.0;
};

/// Evaluates R* across the grid. Grid points are independent; results are
/// ordered by grid index. Throws EmptyGrid / SchemaError on bad grids.
std::vector<TradeoffPoint> sweep(const SweepSpec& spec);

/// Returns a copy of the instance with one axis set to the given value
/// (cache fractions round to whole FOVs). Lets callers nest sweeps.
SymmetricInstance with_axis_value(SymmetricInstance inst, SweepAxis axis, double value);

/// Smallest cache size beyond which R* stops improving:
/// floor(N*E/(k*f1^2*I*w)) clamped to [0, N].
long long min_cache_size(const SymmetricInstance& inst);
long long min_cache_size(const Scenario& scenario);

/// Device frequency minimizing R* when nothing is cached, from the
/// closed-form root of the continuous objective. Throws DomainError naming
/// the violated precondition.
double optimal_f1_no_cache(const ProjectionTask& task, double server_freq_hz);

/// Local shape of R* as a function of f1 at the instance's operating point.
enum class F1Regime {
    MonotoneIncreasing,    // energy budget already covers all cacheable offloads
    Unimodal,              // R* first falls then rises with f1
    FlatThenCacheLimited,  // offloading pays only via caching; f1 does not help
};

const char* to_string(F1Regime regime);

F1Regime classify_f1_regime(const SymmetricInstance& inst);
F1Regime classify_f1_regime(const Scenario& scenario);

} // namespace vr3c
