#pragma once

#include "gwkit/linalg.hpp"
#include "gwkit/rational.hpp"

#include <string>
#include <vector>

namespace gwkit {

/* Curve class in the basis dual to H_1..H_m. */
using CurveClass = std::vector<int>;

int total_degree(const CurveClass& d);
bool dominates(const CurveClass& d, const CurveClass& r);  // d - r componentwise >= 0

/* Pairing <c, d> of a divisor-class vector with a curve class. */
long pairing(const std::vector<long>& c, const CurveClass& d);

struct FixedPoint {
    std::vector<int> cone;                            // sorted ray indices (0-based)
    std::vector<QVec> tangent_weights;                // n vectors, dual basis to the cone's rays
    std::vector<QVec> divisor_restrictions;           // N vectors, zero off the cone
};

struct Balloon {
    int p = 0, q = 0;        // fixed point indices
    CurveClass curve_class;  // [pq]
    QVec lambda_q;           // weight on T_q(pq)
    QVec lambda_p;           // = -lambda_q
};

/*
  Fan data of a smooth complete toric n-fold together with the charge matrix
  expressing [D_a] = sum_i Q_{i,a} H_i in a chosen basis of H^2.  Immutable
  after construction; all derived quantities are pure functions of it.
*/
struct ToricManifold {
    std::string name;
    int n = 0;  // dimension
    int m = 0;  // rank of H^2
    int N = 0;  // number of rays (= n + m)
    std::vector<std::vector<long>> rays;       // N x n
    std::vector<std::vector<int>> max_cones;   // each: n sorted ray indices (0-based)
    std::vector<std::vector<long>> charge;     // m x N
    std::vector<int> factors;                  // optional: dims of projective-space factors

    /* H-lift coefficients: H_i = sum_a h_lift[i][a] D_a (equivariant representative). */
    QMat h_lift;

    /* Row a of the charge matrix transposed: the class vector of D_a in the H basis. */
    std::vector<long> divisor_class(int a) const;
};

/* Validates all invariants (smoothness, facet pairing, charge relations, N = n + m,
   admissibility of the fixed-point data, Mori-adapted basis). */
ToricManifold build_manifold(std::string name, std::vector<std::vector<long>> rays,
                             std::vector<std::vector<int>> max_cones_1based,
                             std::vector<std::vector<long>> charge_matrix,
                             std::vector<int> factors = {});

/* One fixed point per maximal cone, in cone order. */
std::vector<FixedPoint> fixed_points(const ToricManifold& M);

/* Distinctness of the divisor-restriction tuples and of the H(p) tuples across fixed
   points; throws DanglingFacet on a violation. */
void check_admissibility(const ToricManifold& M);

/* One balloon per wall of the fan; the relation c(q) = c(p) + <c,[pq]> lambda_q is
   verified for all N divisor classes. */
std::vector<Balloon> balloons(const ToricManifold& M);

/* All lattice points 0 < d in Z_{>=0}^m with total degree <= d_max, sorted by total
   degree then lex. */
std::vector<CurveClass> lattice_degrees(int m, int d_max);

/* Mori-cone enumeration for a manifold with a Mori-adapted basis (validated at build). */
std::vector<CurveClass> enumerate_degrees(const ToricManifold& M, int d_max);

}  // namespace gwkit
