#include "gwkit/errors.hpp"
#include "gwkit/invariants.hpp"
#include "gwkit/io.hpp"
#include "gwkit/oracle.hpp"
#include "gwkit/selfcheck.hpp"
#include "gwkit/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace gwkit;
using nlohmann::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitGauge = 3;
constexpr int kExitConsistency = 4;

int exit_code_for(const Error& e)
{
    switch (e.code()) {
    case Errc::NonSmoothCone:
    case Errc::ChargeRelationViolation:
    case Errc::DanglingFacet:
    case Errc::MoriBasisNotAdapted:
    case Errc::DimensionMismatch:
    case Errc::NegativePairing:
    case Errc::NonNegativePairing:
    case Errc::ParseError:
    case Errc::IoError:
        return kExitValidation;
    case Errc::GaugeCheckFailed:
        return kExitGauge;
    default:
        return kExitConsistency;
    }
}

struct CommonOpts {
    std::string manifold_path;
    std::string bundle_path;
    int d_max = 1;
    std::uint64_t seed = 0;
    bool seeded = false;
    std::string cache_dir;
    std::string out_prefix;
    std::string format = "both";
};

std::pair<WeightSample, WeightSample> samples_for(const ToricManifold& M, const CommonOpts& o)
{
    auto [s0, s1] = default_samples(M);
    if (o.seeded)
        s0 = seeded_sample(M, o.seed);
    return {s0, s1};
}

std::string cache_root(const CommonOpts& o)
{
    if (!o.cache_dir.empty())
        return o.cache_dir;
    if (const char* env = std::getenv("GWKIT_CACHE"))
        return env;
    return "";
}

int cmd_validate(const CommonOpts& o)
{
    ToricManifold M = io::load_manifold(o.manifold_path);
    std::cout << "manifold " << M.name << ": n=" << M.n << " m=" << M.m << " N=" << M.N << "\n";
    std::cout << "  " << fixed_points(M).size() << " fixed points, " << balloons(M).size()
              << " balloons: all invariants hold\n";
    if (!o.bundle_path.empty()) {
        BundleSpec spec = io::load_bundle(o.bundle_path);
        auto [s0, s1] = samples_for(M, o);
        auto geo = std::make_shared<const Geometry>(M, s0);
        EulerData data(geo, spec);
        std::cout << "bundle: N+=" << spec.rank_plus() << " N-=" << spec.rank_minus()
                  << " s=" << spec.s_value(M.n) << (data.cy_type() ? " (Calabi-Yau type)" : "") << "\n";
        for (const auto& w : data.warnings())
            std::cout << "  warning: " << w << "\n";
    }
    std::cout << "validate: pass\n";
    return 0;
}

int cmd_fixed_points(const CommonOpts& o)
{
    ToricManifold M = io::load_manifold(o.manifold_path);
    auto pts = fixed_points(M);
    ordered_json j = ordered_json::array();
    for (const auto& p : pts) {
        ordered_json e;
        ordered_json cone = ordered_json::array();
        for (int ix : p.cone)
            cone.push_back(ix + 1);
        e["cone"] = cone;
        ordered_json w = ordered_json::array();
        for (const auto& wi : p.tangent_weights) {
            ordered_json row = ordered_json::array();
            for (const auto& q : wi)
                row.push_back(q_to_string(q));
            w.push_back(row);
        }
        e["tangent_weights"] = w;
        ordered_json dr = ordered_json::array();
        for (const auto& da : p.divisor_restrictions) {
            ordered_json row = ordered_json::array();
            for (const auto& q : da)
                row.push_back(q_to_string(q));
            dr.push_back(row);
        }
        e["divisor_restrictions"] = dr;
        j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_series(const CommonOpts& o, int order)
{
    BundleSpec spec = io::load_bundle(o.bundle_path);
    ordered_json out;
    if (spec.manual_euler) {
        int m = static_cast<int>(spec.manual_euler->classes.at(0).size());
        QVec h(m, Q(1));
        if (order < 0)
            order = 6;
        auto terms = manual_series(spec, m, h, o.d_max);
        ordered_json arr = ordered_json::array();
        for (const auto& t : terms) {
            ordered_json e;
            e["d"] = t.d;
            AlphaLaurent ex = t.value.expand(-order);
            ordered_json coeffs = ordered_json::array();
            for (const auto& [exp, c] : ex.terms()) {
                ordered_json ce;
                ce["alpha_exp"] = exp;
                ce["coeff"] = c.str();
                coeffs.push_back(ce);
            }
            e["expansion"] = coeffs;
            arr.push_back(e);
        }
        out["mode"] = "manual";
        out["series"] = arr;
    } else {
        ToricManifold M = io::load_manifold(o.manifold_path);
        auto [s0, s1] = samples_for(M, o);
        auto geo = std::make_shared<const Geometry>(M, s0);
        if (order < 0)
            order = M.n + 4;  // default truncation: K_d needs alpha^{-3}, nilpotency adds <= n
        HGSeries hg = build_hg_series(geo, spec, o.d_max);
        ordered_json arr = ordered_json::array();
        for (size_t ix = 0; ix < hg.degrees.size(); ++ix) {
            ordered_json e;
            e["d"] = hg.degrees[ix];
            ordered_json pts = ordered_json::array();
            for (int p = 0; p < geo->num_points(); ++p) {
                AlphaLaurent ex = hg.b_hat[ix].at(p).expand(-order);
                ordered_json pe = ordered_json::array();
                for (const auto& [exp, c] : ex.terms()) {
                    ordered_json ce;
                    ce["alpha_exp"] = exp;
                    ce["coeff"] = c.str();
                    pe.push_back(ce);
                }
                pts.push_back(pe);
            }
            e["b_over_omega"] = pts;
            arr.push_back(e);
        }
        out["mode"] = "localized";
        out["lambda0"] = s0.label;
        out["series"] = arr;
    }
    std::string text = out.dump(2) + "\n";
    if (o.out_prefix.empty())
        std::cout << text;
    else
        io::write_file(o.out_prefix + ".series.json", text);
    return 0;
}

int cmd_mirror_data(const CommonOpts& o)
{
    ToricManifold M = io::load_manifold(o.manifold_path);
    BundleSpec spec = io::load_bundle(o.bundle_path);
    auto [s0, s1] = samples_for(M, o);
    auto geo = std::make_shared<const Geometry>(M, s0);
    HGSeries hg = build_hg_series(geo, spec, o.d_max);
    MirrorData md = extract_mirror_data(hg);
    std::string text = io::mirror_data_to_json(md);
    if (o.out_prefix.empty())
        std::cout << text;
    else
        io::write_file(o.out_prefix + ".mirror.json", text);
    return 0;
}

int cmd_invariants(const CommonOpts& o)
{
    ToricManifold M = io::load_manifold(o.manifold_path);
    BundleSpec spec = io::load_bundle(o.bundle_path);
    auto [s0, s1] = samples_for(M, o);

    std::string mjson = io::manifold_to_json(M);
    std::string bjson = io::bundle_to_json(spec);
    std::string key = io::run_hash(mjson, bjson, o.d_max, s0.lambda, s1.lambda);

    io::Cache cache(cache_root(o));
    std::string json_text;
    if (auto hit = cache.get(key)) {
        json_text = *hit;
        std::cerr << "cache hit " << key.substr(0, 12) << "\n";
    } else {
        InvariantTable table = compute_invariants(M, spec, o.d_max, s0, s1);
        table.content_hash = key;
        json_text = io::table_to_json(table);
        cache.put(key, json_text);
        std::cerr << "computed in " << table.runtime_ms << " ms\n";
    }

    // CSV is regenerated from the (cached or fresh) JSON so both views agree byte-wise.
    auto j = ordered_json::parse(json_text);
    InvariantTable t;
    t.lambda0.resize(j["metadata"]["lambda0"].size());
    for (const auto& row : j["rows"]) {
        InvariantRow r;
        for (const auto& v : row["d"])
            r.d.push_back(v.get<int>());
        r.K = Q(Int(row["K"]["num"].get<std::string>()), Int(row["K"]["den"].get<std::string>()));
        if (row.contains("n")) {
            r.n = Q(Int(row["n"]["num"].get<std::string>()), Int(row["n"]["den"].get<std::string>()));
            r.n_integral = row["n_integral"].get<bool>();
        }
        t.rows.push_back(std::move(r));
    }
    std::string csv_text = io::table_to_csv(t);

    if (o.out_prefix.empty()) {
        if (o.format == "csv")
            std::cout << csv_text;
        else
            std::cout << json_text;
    } else {
        if (o.format == "json" || o.format == "both")
            io::write_file(o.out_prefix + ".json", json_text);
        if (o.format == "csv" || o.format == "both")
            io::write_file(o.out_prefix + ".csv", csv_text);
    }
    return 0;
}

int cmd_oracle(const std::string& kind, int n, int k, const CommonOpts& o,
               const std::vector<int>& monomial)
{
    // K_d-producing oracles emit the invariants result schema with the oracle flag set.
    InvariantTable t;
    t.oracle = true;
    t.d_max = 0;
    if (kind == "lines-convex" || kind == "lines-concave") {
        auto r = kind == "lines-convex" ? oracle::lines_convex(n, k) : oracle::lines_concave(n, k);
        t.manifold = kind + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        t.s = r.s;
        t.d_max = 1;
        t.rows.push_back({{1}, r.value, {}, true});
    } else if (kind == "graph") {
        BundleSpec spec = io::load_bundle(o.bundle_path);
        Q v = oracle::graph_sum_Kd(n, spec, k);
        t.manifold = "graph-sum P^" + std::to_string(n);
        t.d_max = k;
        t.rows.push_back({{k}, v, {}, true});
    } else if (kind == "intersection") {
        ToricManifold M = io::load_manifold(o.manifold_path);
        Q v = oracle::intersection_oracle(M, monomial);
        ordered_json j;
        j["oracle"] = true;
        j["kind"] = "intersection";
        j["monomial"] = monomial;
        j["value"] = q_to_string(v);
        std::cout << j.dump(2) << "\n";
        return 0;
    } else {
        fail(Errc::ParseError, "unknown oracle kind " + kind);
    }
    if (o.format == "csv")
        std::cout << io::table_to_csv(t);
    else
        std::cout << io::table_to_json(t);
    return 0;
}

int cmd_selfcheck(const std::string& data_dir, bool fast)
{
    SelfcheckReport rep = run_selfcheck(data_dir, fast);
    for (const auto& r : rep.results)
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.ms << " ms] " << r.detail
                  << "\n";
    std::cout << (rep.all_pass ? "selfcheck: all properties hold" : "selfcheck: FAILURES above") << " ("
              << rep.total_ms << " ms total)\n";
    return rep.all_pass ? 0 : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Gromov-Witten characteristic numbers for split bundles on toric manifolds"};
    app.set_version_flag("--version", gwkit::kVersion);
    app.require_subcommand(1);

    CommonOpts o;
    int order = -1;  // series: default n + 4
    std::string oracle_kind;
    int oracle_n = 0, oracle_k = 0;
    std::vector<int> monomial;
    std::string data_dir = "data";
    bool fast = false;

    auto add_common = [&](CLI::App* c, bool need_bundle) {
        c->add_option("--manifold", o.manifold_path, "manifold spec JSON");
        if (need_bundle)
            c->add_option("--bundle", o.bundle_path, "bundle spec JSON");
        c->add_option("--d-max", o.d_max, "truncation order (total degree)");
        c->add_option("--seed", o.seed, "weight-sample seed override")->each([&](const std::string&) {
            o.seeded = true;
        });
        c->add_option("--cache-dir", o.cache_dir, "cache directory (or env GWKIT_CACHE)");
        c->add_option("--out", o.out_prefix, "output file prefix (stdout when absent)");
        c->add_option("--format", o.format, "csv|json|both");
    };

    auto* validate = app.add_subcommand("validate", "check all manifold (and bundle) invariants");
    add_common(validate, true);
    auto* fixed = app.add_subcommand("fixed-points", "emit fixed-point data");
    add_common(fixed, false);
    auto* series = app.add_subcommand("series", "emit the hypergeometric series");
    add_common(series, true);
    series->add_option("--order", order, "alpha-expansion order");
    auto* mirror = app.add_subcommand("mirror-data", "extract F0, F, G");
    add_common(mirror, true);
    auto* invariants = app.add_subcommand("invariants", "compute the K_d / n_d table");
    add_common(invariants, true);
    auto* orac = app.add_subcommand("oracle", "independent ground-truth computations");
    add_common(orac, true);
    orac->add_option("--kind", oracle_kind, "lines-convex|lines-concave|graph|intersection")->required();
    orac->add_option("--n", oracle_n, "projective-space dimension");
    orac->add_option("--k", oracle_k, "bundle degree / graph-sum degree d");
    orac->add_option("--monomial", monomial, "H-monomial exponents");
    auto* self = app.add_subcommand("selfcheck", "run the property suite on the built-in examples");
    self->add_option("--data-dir", data_dir, "built-in example directory");
    self->add_flag("--fast", fast, "cap every case at d_max = 1");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed())
            return cmd_validate(o);
        if (fixed->parsed())
            return cmd_fixed_points(o);
        if (series->parsed())
            return cmd_series(o, order);
        if (mirror->parsed())
            return cmd_mirror_data(o);
        if (invariants->parsed())
            return cmd_invariants(o);
        if (orac->parsed())
            return cmd_oracle(oracle_kind, oracle_n, oracle_k, o, monomial);
        if (self->parsed())
            return cmd_selfcheck(data_dir, fast);
    } catch (const gwkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
