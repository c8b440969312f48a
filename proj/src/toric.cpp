#include "gwkit/toric.hpp"

#include "gwkit/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gwkit {

int total_degree(const CurveClass& d)
{
    int s = 0;
    for (int c : d)
        s += c;
    return s;
}

bool dominates(const CurveClass& d, const CurveClass& r)
{
    if (d.size() != r.size())
        return false;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] < r[i])
            return false;
    return true;
}

long pairing(const std::vector<long>& c, const CurveClass& d)
{
    require(c.size() == d.size(), Errc::DimensionMismatch, "pairing dimension mismatch");
    long s = 0;
    for (size_t i = 0; i < c.size(); ++i)
        s += c[i] * d[i];
    return s;
}

std::vector<long> ToricManifold::divisor_class(int a) const
{
    std::vector<long> c(m);
    for (int i = 0; i < m; ++i)
        c[i] = charge[i][a];
    return c;
}

namespace {

std::string cone_str(const std::vector<int>& cone)
{
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < cone.size(); ++i)
        os << (i ? "," : "") << cone[i] + 1;
    os << "}";
    return os.str();
}

/* facet (sorted n-1 ray indices) -> list of cone indices containing it */
std::map<std::vector<int>, std::vector<int>> facet_table(const ToricManifold& M)
{
    std::map<std::vector<int>, std::vector<int>> facets;
    for (size_t ci = 0; ci < M.max_cones.size(); ++ci) {
        const auto& cone = M.max_cones[ci];
        for (int drop = 0; drop < M.n; ++drop) {
            std::vector<int> facet;
            for (int j = 0; j < M.n; ++j)
                if (j != drop)
                    facet.push_back(cone[j]);
            facets[facet].push_back(static_cast<int>(ci));
        }
    }
    return facets;
}

QMat dual_basis(const ToricManifold& M, const std::vector<int>& cone)
{
    // Rows w_i with <w_i, v_{cone[j]}> = delta_ij, i.e. W = (V^T)^{-1} for V = ray rows.
    QMat vt(M.n, QVec(M.n));
    for (int j = 0; j < M.n; ++j)
        for (int i = 0; i < M.n; ++i)
            vt[i][j] = Q(M.rays[cone[j]][i]);
    return inverse(vt);
}

}  // namespace

ToricManifold build_manifold(std::string name, std::vector<std::vector<long>> rays,
                             std::vector<std::vector<int>> max_cones_1based,
                             std::vector<std::vector<long>> charge_matrix, std::vector<int> factors)
{
    ToricManifold M;
    M.name = std::move(name);
    M.rays = std::move(rays);
    M.charge = std::move(charge_matrix);
    M.factors = std::move(factors);

    require(!M.rays.empty(), Errc::DimensionMismatch, "no rays");
    M.N = static_cast<int>(M.rays.size());
    M.n = static_cast<int>(M.rays[0].size());
    for (const auto& v : M.rays)
        require(static_cast<int>(v.size()) == M.n, Errc::DimensionMismatch, "ragged ray list");
    M.m = static_cast<int>(M.charge.size());
    require(M.m >= 1, Errc::DimensionMismatch, "empty charge matrix");
    for (const auto& row : M.charge)
        require(static_cast<int>(row.size()) == M.N, Errc::DimensionMismatch, "charge matrix must be m x N");
    require(M.N == M.n + M.m, Errc::DimensionMismatch,
            "N = " + std::to_string(M.N) + " but n + m = " + std::to_string(M.n + M.m));

    // Cones: 1-based on the wire, 0-based internally, must be n distinct valid indices.
    for (auto& cone : max_cones_1based) {
        std::vector<int> c;
        for (int ix : cone) {
            require(ix >= 1 && ix <= M.N, Errc::DanglingFacet, "ray index out of range in cone " + cone_str(c));
            c.push_back(ix - 1);
        }
        std::sort(c.begin(), c.end());
        require(static_cast<int>(c.size()) == M.n && std::adjacent_find(c.begin(), c.end()) == c.end(),
                Errc::DanglingFacet, "cone " + cone_str(c) + " is not an n-element subset");
        M.max_cones.push_back(std::move(c));
    }
    require(!M.max_cones.empty(), Errc::DanglingFacet, "no maximal cones");

    // Smoothness: each cone's ray matrix has determinant +-1.
    for (const auto& cone : M.max_cones) {
        QMat v(M.n, QVec(M.n));
        for (int j = 0; j < M.n; ++j)
            for (int k = 0; k < M.n; ++k)
                v[j][k] = Q(M.rays[cone[j]][k]);
        Q d = det(v);
        require(d == 1 || d == -1, Errc::NonSmoothCone,
                "cone " + cone_str(cone) + " has determinant " + q_to_string(d));
    }

    // Completeness proxy: every facet shared by exactly two maximal cones.
    for (const auto& [facet, cones] : facet_table(M))
        require(cones.size() == 2, Errc::DanglingFacet,
                "facet " + cone_str(facet) + " lies in " + std::to_string(cones.size()) + " cone(s)");

    // Charge matrix kills the lattice relations: sum_a (v_a)_j Q_{i,a} = 0.
    for (int i = 0; i < M.m; ++i)
        for (int j = 0; j < M.n; ++j) {
            long s = 0;
            for (int a = 0; a < M.N; ++a)
                s += M.rays[a][j] * M.charge[i][a];
            require(s == 0, Errc::ChargeRelationViolation,
                    "sum_a (v_a)_" + std::to_string(j + 1) + " Q_" + std::to_string(i + 1) + ",a = " +
                        std::to_string(s));
        }
    {
        QMat q(M.m, QVec(M.N));
        for (int i = 0; i < M.m; ++i)
            for (int a = 0; a < M.N; ++a)
                q[i][a] = Q(M.charge[i][a]);
        require(rank(q) == M.m, Errc::ChargeRelationViolation, "charge matrix has rank < m");
    }

    // H-lift: H_i = sum_a c_a D_a with sum_a c_a Q_{j,a} = delta_ij (leftmost-pivot solution).
    M.h_lift.assign(M.m, QVec(M.N, Q(0)));
    for (int i = 0; i < M.m; ++i) {
        QMat q(M.m, QVec(M.N));
        for (int r = 0; r < M.m; ++r)
            for (int a = 0; a < M.N; ++a)
                q[r][a] = Q(M.charge[r][a]);
        QVec e(M.m, Q(0));
        e[i] = 1;
        auto c = solve(std::move(q), std::move(e));
        require(c.has_value(), Errc::ChargeRelationViolation, "no equivariant lift for H_" + std::to_string(i + 1));
        M.h_lift[i] = *c;
    }

    if (!M.factors.empty()) {
        int dim = 0;
        for (int f : M.factors)
            dim += f;
        require(dim == M.n && static_cast<int>(M.factors.size()) == M.m, Errc::DimensionMismatch,
                "product-factor annotation inconsistent with (n, m)");
    }

    // Admissibility, checked on the derived fixed-point data.
    check_admissibility(M);

    // Mori-adapted basis: every wall curve class pairs non-negatively with every H_i.
    for (const auto& b : balloons(M))
        for (int i = 0; i < M.m; ++i)
            require(b.curve_class[i] >= 0, Errc::MoriBasisNotAdapted,
                    "wall class has negative H_" + std::to_string(i + 1) + " coordinate");

    return M;
}

void check_admissibility(const ToricManifold& M)
{
    auto pts = fixed_points(M);
    std::set<std::vector<QVec>> seen_tuples;
    std::set<QMat> seen_h;
    for (const auto& p : pts) {
        require(seen_tuples.insert(p.divisor_restrictions).second, Errc::DanglingFacet,
                "divisor restrictions fail to separate fixed points (admissibility)");
        QMat h(M.m);
        for (int i = 0; i < M.m; ++i) {
            QVec hi(M.n, Q(0));
            for (int a = 0; a < M.N; ++a)
                if (M.h_lift[i][a] != 0)
                    for (int k = 0; k < M.n; ++k)
                        hi[k] += M.h_lift[i][a] * p.divisor_restrictions[a][k];
            h[i] = std::move(hi);
        }
        require(seen_h.insert(h).second, Errc::DanglingFacet, "H(p) tuples fail to separate fixed points");
    }
}

std::vector<FixedPoint> fixed_points(const ToricManifold& M)
{
    std::vector<FixedPoint> out;
    out.reserve(M.max_cones.size());
    for (const auto& cone : M.max_cones) {
        FixedPoint p;
        p.cone = cone;
        QMat w = dual_basis(M, cone);
        p.tangent_weights.assign(w.begin(), w.end());
        p.divisor_restrictions.assign(M.N, QVec(M.n, Q(0)));
        for (int j = 0; j < M.n; ++j)
            p.divisor_restrictions[cone[j]] = w[j];
        // Pairwise linear independence of the tangent weights (balloon condition).
        for (int i = 0; i < M.n; ++i)
            for (int j = i + 1; j < M.n; ++j) {
                QMat two = {p.tangent_weights[i], p.tangent_weights[j]};
                require(rank(two) == std::min(2, M.n), Errc::NonSmoothCone,
                        "tangent weights not pairwise independent at cone " + cone_str(cone));
            }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Balloon> balloons(const ToricManifold& M)
{
    auto pts = fixed_points(M);
    std::vector<Balloon> out;
    for (const auto& [facet, cones] : facet_table(M)) {
        require(cones.size() == 2, Errc::DanglingFacet, "unpaired facet");
        int pi = cones[0], qi = cones[1];
        const auto& cp = M.max_cones[pi];
        const auto& cq = M.max_cones[qi];
        auto other_ray = [&](const std::vector<int>& cone) {
            for (int r : cone)
                if (std::find(facet.begin(), facet.end(), r) == facet.end())
                    return r;
            fail(Errc::DanglingFacet, "facet not a subset of its cone");
        };
        int vp = other_ray(cp);  // ray of p's cone off the wall
        int vq = other_ray(cq);

        // Wall relation v' + v'' + sum_u c_u u = 0 over the facet rays.
        int k = M.n - 1;
        QMat a(M.n, QVec(k));
        QVec rhs(M.n);
        for (int row = 0; row < M.n; ++row) {
            for (int col = 0; col < k; ++col)
                a[row][col] = Q(M.rays[facet[col]][row]);
            rhs[row] = -Q(M.rays[vp][row] + M.rays[vq][row]);
        }
        auto c = solve(std::move(a), std::move(rhs));
        require(c.has_value(), Errc::BalloonRelationViolated, "wall relation has no solution");

        // Pairing vector beta_a = <D_a, [pq]>, then express [pq] in the H-dual basis.
        QVec beta(M.N, Q(0));
        beta[vp] = 1;
        beta[vq] = 1;
        for (int col = 0; col < k; ++col)
            beta[facet[col]] = (*c)[col];
        QMat qt(M.N, QVec(M.m));
        for (int aix = 0; aix < M.N; ++aix)
            for (int i = 0; i < M.m; ++i)
                qt[aix][i] = Q(M.charge[i][aix]);
        auto dsol = solve(std::move(qt), beta);
        require(dsol.has_value(), Errc::BalloonRelationViolated, "wall class not expressible in H-dual basis");

        Balloon b;
        b.p = pi;
        b.q = qi;
        b.curve_class.resize(M.m);
        for (int i = 0; i < M.m; ++i) {
            require(denominator((*dsol)[i]) == 1, Errc::BalloonRelationViolated, "non-integral wall class");
            b.curve_class[i] = static_cast<int>(numerator((*dsol)[i]).convert_to<long>());
        }

        // lambda_q: the tangent weight at q dual to the off-wall ray of q's cone.
        auto dual_at = [&](int point, int ray) {
            const auto& fp = pts[point];
            for (int j = 0; j < M.n; ++j)
                if (fp.cone[j] == ray)
                    return fp.tangent_weights[j];
            fail(Errc::BalloonRelationViolated, "ray not in cone");
        };
        b.lambda_q = dual_at(qi, vq);
        b.lambda_p = dual_at(pi, vp);

        for (int j = 0; j < M.n; ++j)
            require(b.lambda_p[j] == -b.lambda_q[j], Errc::BalloonRelationViolated,
                    "lambda_p != -lambda_q on wall " + cone_str(facet));

        // c(q) = c(p) + <c,[pq]> lambda_q for every divisor class, exactly.
        for (int aix = 0; aix < M.N; ++aix) {
            long pair = pairing(M.divisor_class(aix), b.curve_class);
            for (int j = 0; j < M.n; ++j) {
                Q lhs = pts[qi].divisor_restrictions[aix][j];
                Q rhs2 = pts[pi].divisor_restrictions[aix][j] + Q(pair) * b.lambda_q[j];
                require(lhs == rhs2, Errc::BalloonRelationViolated,
                        "balloon relation fails for D_" + std::to_string(aix + 1) + " on wall " + cone_str(facet));
            }
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<CurveClass> lattice_degrees(int m, int d_max)
{
    std::vector<CurveClass> out;
    if (d_max <= 0)
        return out;
    CurveClass cur(m, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == m) {
            if (total_degree(cur) > 0)
                out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d_max);
    std::stable_sort(out.begin(), out.end(), [](const CurveClass& a, const CurveClass& b) {
        int ta = total_degree(a), tb = total_degree(b);
        if (ta != tb)
            return ta < tb;
        return a < b;
    });
    return out;
}

std::vector<CurveClass> enumerate_degrees(const ToricManifold& M, int d_max)
{
    return lattice_degrees(M.m, d_max);
}

}  // namespace gwkit
