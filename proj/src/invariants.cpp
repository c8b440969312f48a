#include "gwkit/invariants.hpp"

#include "gwkit/errors.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace gwkit {

namespace {

std::string degree_str(const CurveClass& d)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

/* Localization sum of (Omega A_hat [H_i]) read off at one alpha order.  The alpha-free
   Omega multiplier commutes with the alpha slicing; when it involves x-adic inverses
   the product is taken in the truncated ring so cross-point cancellations survive. */
ScalarPoly integral_slice(const ASeries& as, int degree_index, int alpha_exp,
                          const std::vector<Q>* extra_h)
{
    const Geometry& geo = *as.geo;
    int n = geo.manifold().n;
    int x_trunc = std::max(0, as.data->s_value());
    bool truncated = as.data->chern();
    ScalarPoly acc;
    for (int p = 0; p < geo.num_points(); ++p) {
        const AlphaRational& ah = as.a_hat[degree_index].at(p);
        if (ah.is_zero())
            continue;
        AlphaRational base = ah.scaled(Q(1) / geo.euler_rat(p)).eps_shifted(-n);
        if (extra_h)
            base = base.scaled(ScalarPoly::eps((*extra_h)[p]));
        ScalarPoly slice = base.expand(alpha_exp).coeff(alpha_exp);
        if (slice.is_zero())
            continue;
        ScalarPoly weight = as.data->omega_multiplier(p, x_trunc);
        acc += truncated ? slice.mul_trunc_x(weight, x_trunc) : slice * weight;
    }
    require(acc.eps_regular(), Errc::EpsilonPoleResidue,
            "negative eps power survives in the integral at alpha^" + std::to_string(alpha_exp));
    return acc.eps0_part();
}

}  // namespace

const InvariantRow* InvariantTable::find(const CurveClass& d) const
{
    for (const auto& r : rows)
        if (r.d == d)
            return &r;
    return nullptr;
}

PipelineRun run_pipeline(const ToricManifold& M, const BundleSpec& spec, int d_max,
                         const WeightSample& sample)
{
    PipelineRun run;
    run.geo = std::make_shared<const Geometry>(M, sample);
    run.data = std::make_shared<const EulerData>(run.geo, spec);
    run.hg = build_hg_series(run.data, d_max);
    run.md = extract_mirror_data(run.hg);
    run.as = apply_mirror_transform(run.hg, run.md);
    run.gauge = verify_gauge(run.as);
    if (!run.gauge.pass)
        fail(Errc::GaugeCheckFailed,
             "deg_alpha A_d <= -2 fails at degree " + degree_str(run.gauge.witness_d) + ", point " +
                 std::to_string(run.gauge.witness_p) + " (order " +
                 std::to_string(run.gauge.max_offending_order) + ")");
    for (size_t ix = 0; ix < run.as.degrees.size(); ++ix)
        run.K[run.as.degrees[ix]] = extract_kd(run.as, static_cast<int>(ix));
    return run;
}

Q extract_kd(const ASeries& as, int degree_index)
{
    int s = as.data->s_value();
    require(s >= 0, Errc::NegativeS, "s = rk V+ - rk V- - (n-3) is negative");
    require(s == 0 || as.data->chern(), Errc::UnsupportedSpec,
            "s > 0 extraction needs the Chern-polynomial variable");
    ScalarPoly c = integral_slice(as, degree_index, -3, nullptr);
    auto xs = c.eps0_x_poly();
    Q val = s < static_cast<int>(xs.size()) ? xs[s] : Q(0);
    return val / 2;
}

bool t_linear_consistency(const ASeries& as, int degree_index, const Q& kd, std::string* detail)
{
    const Geometry& geo = *as.geo;
    int m = geo.manifold().m;
    int s = as.data->s_value();
    const CurveClass& d = as.degrees[degree_index];
    for (int i = 0; i < m; ++i) {
        std::vector<Q> h(geo.num_points());
        for (int p = 0; p < geo.num_points(); ++p)
            h[p] = geo.h_eval(i, p);
        ScalarPoly c = integral_slice(as, degree_index, -2, &h);
        auto xs = c.eps0_x_poly();
        Q lhs = s < static_cast<int>(xs.size()) ? xs[s] : Q(0);
        Q rhs = Q(d[i]) * kd;
        if (lhs != rhs) {
            if (detail) {
                std::ostringstream os;
                os << "t-linear slice mismatch at degree " << degree_str(d) << ", i=" << i + 1 << ": got "
                   << q_to_string(lhs) << ", expected " << q_to_string(rhs);
                *detail = os.str();
            }
            return false;
        }
    }
    return true;
}

InvariantTable compute_invariants(const ToricManifold& M, const BundleSpec& spec, int d_max)
{
    auto [s0, s1] = default_samples(M);
    return compute_invariants(M, spec, d_max, s0, s1);
}

InvariantTable compute_invariants(const ToricManifold& M, const BundleSpec& spec, int d_max,
                                  const WeightSample& sample0, const WeightSample& sample1)
{
    auto t0 = std::chrono::steady_clock::now();
    require(spec.s_value(M.n) >= 0, Errc::NegativeS, "s < 0: no K_d extraction for this spec");

    PipelineRun run0 = run_pipeline(M, spec, d_max, sample0);
    PipelineRun run1 = run_pipeline(M, spec, d_max, sample1);

    InvariantTable table;
    table.manifold = M.name;
    table.d_max = d_max;
    table.s = spec.s_value(M.n);
    table.chern_variable = spec.chern_variable;
    table.lambda0 = sample0.lambda;
    table.lambda0_alt = sample1.lambda;
    table.log_f0_sign = run0.md.log_f0_sign;
    table.mirror_case = mirror_case_name(run0.md.kind);
    table.concave_twists = run0.data->concave_twists();
    table.warnings = run0.data->warnings();

    for (size_t ix = 0; ix < run0.as.degrees.size(); ++ix) {
        const CurveClass& d = run0.as.degrees[ix];
        const Q& k0 = run0.K.at(d);
        require(run1.K.at(d) == k0, Errc::DegenerateSample,
                "lambda-sample dependence detected at degree " + degree_str(d) + ": " + q_to_string(k0) +
                    " vs " + q_to_string(run1.K.at(d)));
        std::string detail;
        require(t_linear_consistency(run0.as, static_cast<int>(ix), k0, &detail), Errc::GaugeCheckFailed,
                detail);
        InvariantRow row;
        row.d = d;
        row.K = k0;
        table.rows.push_back(std::move(row));
    }
    instanton_numbers(table);

    auto t1 = std::chrono::steady_clock::now();
    table.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return table;
}

void instanton_numbers(InvariantTable& table)
{
    // Multicover inversion, componentwise: K_d = sum_{k >= 1, d = k d'} k^{-3} n_{d'}.
    std::map<CurveClass, Q> n;
    std::vector<InvariantRow*> order;
    for (auto& r : table.rows)
        order.push_back(&r);
    std::sort(order.begin(), order.end(), [](const InvariantRow* a, const InvariantRow* b) {
        return total_degree(a->d) < total_degree(b->d);
    });
    for (auto* row : order) {
        Q val = row->K;
        for (int k = 2;; ++k) {
            CurveClass dk(row->d.size());
            bool divides = true;
            int tot = 0;
            for (size_t i = 0; i < row->d.size(); ++i) {
                if (row->d[i] % k != 0) {
                    divides = false;
                    break;
                }
                dk[i] = row->d[i] / k;
                tot += dk[i];
            }
            if (total_degree(row->d) / k < 1)
                break;
            if (!divides || tot == 0)
                continue;
            auto it = n.find(dk);
            require(it != n.end(), Errc::MissingDivisorDegree,
                    "multicover inversion needs degree " + degree_str(dk));
            val -= it->second / Q(k * k * k);
        }
        n[row->d] = val;
        row->n = val;
        row->n_integral = denominator(val) == 1;
        if (!row->n_integral)
            table.warnings.push_back("non-integral instanton number at degree " + degree_str(row->d) +
                                     ": " + q_to_string(val));
    }
}

}  // namespace gwkit
