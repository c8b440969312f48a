#include "gwkit/selfcheck.hpp"

#include "gwkit/errors.hpp"
#include "gwkit/invariants.hpp"
#include "gwkit/io.hpp"
#include "gwkit/oracle.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <sstream>

namespace gwkit {

namespace {

struct Case {
    std::string name;
    std::string manifold_path;
    std::string bundle_path;
    int d_max = 1;
    int identity_d_max = 3;
    std::vector<int> intersection_monomial;  // empty = skip
};

std::vector<Case> load_cases(const std::string& data_dir)
{
    auto j = nlohmann::ordered_json::parse(io::read_file(data_dir + "/cases.json"));
    std::vector<Case> out;
    for (const auto& c : j.at("cases")) {
        Case e;
        e.name = c.at("name").get<std::string>();
        e.manifold_path = data_dir + "/" + c.at("manifold").get<std::string>();
        e.bundle_path = data_dir + "/" + c.at("bundle").get<std::string>();
        e.d_max = c.at("d_max").get<int>();
        e.identity_d_max = c.value("identity_d_max", 3);
        if (c.contains("intersection_monomial"))
            for (const auto& v : c["intersection_monomial"])
                e.intersection_monomial.push_back(v.get<int>());
        out.push_back(std::move(e));
    }
    return out;
}

void run_one(SelfcheckReport& rep, const std::string& name, const std::function<std::string()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    PropertyResult r;
    r.name = name;
    try {
        r.detail = body();
        r.pass = true;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
        rep.all_pass = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    rep.results.push_back(std::move(r));
}

std::vector<CurveClass> degrees_up_to(const ToricManifold& M, int d_max)
{
    auto ds = enumerate_degrees(M, d_max);
    ds.insert(ds.begin(), CurveClass(M.m, 0));
    return ds;
}

/* A product of degree-1 factors is jointly (x,eps,alpha)-homogeneous: every alpha
   coefficient is (x,eps)-homogeneous of complementary degree. */
void check_factor_homogeneity(const AlphaRational& v, const std::string& where)
{
    const AlphaPoly& num = v.num();
    if (num.is_zero())
        return;
    int j0 = 0;
    while (num.coeff(j0).is_zero())
        ++j0;
    const auto& lead = num.coeff(j0).terms().begin()->first;
    int total = j0 + lead.first + lead.second;
    for (int j = j0; j <= num.degree(); ++j)
        require(num.coeff(j).is_zero() || num.coeff(j).homogeneous(total - j),
                Errc::InconsistentDecomposition, "numerator coefficient not homogeneous in " + where);
    for (const auto& [c, mult] : v.den())
        require(c.is_zero() || c.homogeneous(1), Errc::InconsistentDecomposition,
                "denominator factor not homogeneous in " + where);
}

}  // namespace

SelfcheckReport run_selfcheck(const std::string& data_dir, bool fast)
{
    auto t0 = std::chrono::steady_clock::now();
    SelfcheckReport rep;

    std::vector<Case> cases;
    try {
        cases = load_cases(data_dir);
    } catch (const std::exception& e) {
        rep.all_pass = false;
        rep.results.push_back({"load-cases", false, e.what(), 0});
        return rep;
    }

    for (const auto& c : cases) {
        int d_max = fast ? 1 : c.d_max;
        int id_max = fast ? 1 : c.identity_d_max;

        ToricManifold M = io::load_manifold(c.manifold_path);
        BundleSpec spec = io::load_bundle(c.bundle_path);
        auto [s0, s1] = default_samples(M);
        auto geo = std::make_shared<const Geometry>(M, s0);
        auto data = std::make_shared<const EulerData>(geo, spec);

        run_one(rep, "balloon-relation/" + c.name, [&] {
            auto bs = balloons(M);  // throws BalloonRelationViolated on failure
            return std::to_string(bs.size()) + " balloons";
        });

        run_one(rep, "euler-identity/" + c.name, [&] {
            int checked = 0;
            for (const auto& d : degrees_up_to(M, id_max))
                for (const auto& r : degrees_up_to(M, total_degree(d)))
                    if (dominates(d, r)) {
                        int witness = -1;
                        require(data->check_euler_identity(d, r, &witness),
                                Errc::InconsistentDecomposition,
                                "Euler data identity fails at point " + std::to_string(witness));
                        ++checked;
                    }
            return std::to_string(checked) + " (d,r) pairs";
        });

        run_one(rep, "linking/" + c.name, [&] {
            int checked = 0, corrupt_detected = 0;
            for (const auto& b : geo->balloons())
                for (int delta = 1; delta <= 2; ++delta) {
                    auto lr = data->check_linking(b, delta);
                    require(lr.numerator_equal, Errc::InconsistentDecomposition,
                            "linking numerator mismatch");
                    require(lr.pole_order <= 1, Errc::PoleOrderExceeded,
                            "pole order " + std::to_string(lr.pole_order) + " at alpha = lambda/" +
                                std::to_string(delta));
                    if (!data->check_linking(b, delta, /*corrupt_sign=*/true).numerator_equal)
                        ++corrupt_detected;
                    ++checked;
                }
            // Negative control: the flipped sign convention must be caught somewhere.
            require(corrupt_detected > 0, Errc::InconsistentDecomposition,
                    "corrupted sign convention went undetected");
            return std::to_string(checked) + " balloon specializations, " +
                   std::to_string(corrupt_detected) + " corruption detections";
        });

        run_one(rep, "eps-homogeneity/" + c.name, [&] {
            for (const auto& d : enumerate_degrees(M, std::min(d_max, 2))) {
                LocalizedClass bd = data->b_reduced(d);
                for (int p = 0; p < geo->num_points(); ++p)
                    check_factor_homogeneity(bd.at(p), c.name);
            }
            DivisorPoly h2{{Q(1), {}, std::vector<int>(M.m, 0)}};
            h2[0].h_exps[0] = 2;
            LocalizedClass cls = class_from_divisor_poly(geo, h2);
            for (int p = 0; p < geo->num_points(); ++p) {
                AlphaLaurent ex = cls.at(p).expand(0);
                for (const auto& [e, v] : ex.terms())
                    require(v.homogeneous(2), Errc::InconsistentDecomposition,
                            "divisor-polynomial class not eps-homogeneous");
            }
            return std::string("bookkeeping exact");
        });

        run_one(rep, "gauge-and-lambda-swap/" + c.name, [&] {
            InvariantTable t = compute_invariants(M, spec, d_max, s0, s1);
            std::ostringstream os;
            os << t.rows.size() << " degrees, K";
            for (const auto& r : t.rows)
                os << " " << q_to_string(r.K);
            return os.str();
        });

        if (!c.intersection_monomial.empty())
            run_one(rep, "intersection/" + c.name, [&] {
                Q v = oracle::intersection_oracle(M, c.intersection_monomial);
                return "value " + q_to_string(v);
            });
    }

    run_one(rep, "series-roundtrip", [&] {
        int m = 2, J = 4;
        Rng rng(20240811);
        auto random_series = [&](bool unit_free) {
            NovikovSeries<Q> s(m, J);
            for (const auto& d : lattice_degrees(m, J))
                s.set(d, Q(rng.next_in(-20, 20), rng.next_in(1, 7)));
            if (!unit_free)
                s.set(CurveClass(m, 0), Q(1));
            return s;
        };
        for (int trial = 0; trial < 4; ++trial) {
            NovikovSeries<Q> u = random_series(true);
            require(series_log1p(series_exp(u) - NovikovSeries<Q>::one(m, J)) == u,
                    Errc::InconsistentDecomposition, "log(exp(u)) != u");
            NovikovSeries<Q> v = random_series(true);
            require(series_exp(series_log1p(v)) == NovikovSeries<Q>::one(m, J) + v,
                    Errc::InconsistentDecomposition, "exp(log(1+v)) != 1+v");
            std::vector<NovikovSeries<Q>> shifts{random_series(true), random_series(true)};
            auto inv = invert_mirror_map(shifts);
            NovikovSeries<Q> s = random_series(false);
            require(substitute_exp_shift(substitute_exp_shift(s, shifts), inv) == s,
                    Errc::InconsistentDecomposition, "shift/inverse-shift round trip failed");
        }
        return std::string("4 randomized trials");
    });

    auto t1 = std::chrono::steady_clock::now();
    rep.total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

}  // namespace gwkit
