#pragma once

#include "gwkit/euler_data.hpp"
#include "gwkit/toric.hpp"

#include <vector>

namespace gwkit::oracle {

/*
  Independent ground truth, sharing no code path with the mirror pipeline:
  Bott-residue sums over the Grassmannian of lines and Kontsevich-style
  graph sums over degree <= 2 stable-map fixed loci on P^n.
*/

struct LinesResult {
    int s = 0;      // x-power carrying the characteristic number
    Q value;        // coefficient of x^s; verified identical under the sample swap
    std::vector<Q> x_poly;  // full x-polynomial at the primary sample
};

/* int_{G(2,n+1)} of the Chern polynomial of Sym^k S*; value = int c_{dim}(Sym^k S*). */
LinesResult lines_convex(int n, int k);

/* Same for the concave bundle with fiber H^1(line, O(-k)); k >= 2.
   H^1 weight set {-(a li + b lj) : a,b >= 1, a+b = k} (sign convention pinned by local P^2). */
LinesResult lines_concave(int n, int k);

/* Graph-sum localization of int c_{dim}(V_d) on M_{0,0}(d, P^n), d in {1,2}, for a
   split bundle given by a BundleSpec with single-component class vectors. */
Q graph_sum_Kd(int n, const BundleSpec& spec, int d);

/* Localization vs combinatorics for int_X prod H_i^{monomial_i} on a product of
   projective spaces; returns the common value, throws on disagreement. */
Q intersection_oracle(const ToricManifold& M, const std::vector<int>& monomial);

}  // namespace gwkit::oracle
