#pragma once

#include "gwkit/mirror.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gwkit {

struct InvariantRow {
    CurveClass d;
    Q K;
    std::optional<Q> n;          // instanton number after multicover inversion
    bool n_integral = true;      // soft check
};

struct InvariantTable {
    std::string manifold;
    int d_max = 0;
    int s = 0;
    bool chern_variable = false;
    QVec lambda0, lambda0_alt;
    int log_f0_sign = -1;
    std::string mirror_case;
    std::vector<Q> concave_twists;
    std::vector<std::string> warnings;
    std::vector<InvariantRow> rows;
    long runtime_ms = 0;
    std::string content_hash;
    bool oracle = false;

    const InvariantRow* find(const CurveClass& d) const;
};

/* One full pipeline run at a fixed weight sample. */
struct PipelineRun {
    GeometryPtr geo;
    std::shared_ptr<const EulerData> data;
    HGSeries hg;
    MirrorData md;
    ASeries as;
    GaugeReport gauge;
    std::map<CurveClass, Q> K;
};

PipelineRun run_pipeline(const ToricManifold& M, const BundleSpec& spec, int d_max,
                         const WeightSample& sample);

/* K_d for a single degree from a transformed series: (1/2) [alpha^{-3} eps^0 x^s] of
   the localization sum of A_d. */
Q extract_kd(const ASeries& as, int degree_index);

/* The t-linear slice of Theorem KdTheorem: [alpha^{-2} eps^0 x^s] int H_i A_d = d_i K_d. */
bool t_linear_consistency(const ASeries& as, int degree_index, const Q& kd, std::string* detail);

/* Full orchestration: runs the pipeline at two independent weight samples, demands exact
   agreement of every K_d, runs the gauge and t-linear checks, and inverts multicovers. */
InvariantTable compute_invariants(const ToricManifold& M, const BundleSpec& spec, int d_max,
                                  const WeightSample& sample0, const WeightSample& sample1);
InvariantTable compute_invariants(const ToricManifold& M, const BundleSpec& spec, int d_max);

/* Multicover inversion K_d = sum_{d = k d'} k^{-3} n_{d'}; fills rows in place. */
void instanton_numbers(InvariantTable& table);

}  // namespace gwkit
