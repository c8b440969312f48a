#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwkit/errors.hpp"
#include "gwkit/io.hpp"
#include "gwkit/oracle.hpp"

using namespace gwkit;
using namespace gwkit::oracle;

namespace {

std::string data_dir = GWKIT_DATA_DIR;

BundleSpec bundle_of(const std::string& name)
{
    return io::load_bundle(data_dir + "/bundles/" + name);
}

}  // namespace

TEST_CASE("lines_convex")
{
    // quintic threefold: 2875 lines
    auto q = lines_convex(4, 5);
    CHECK(q.s == 0);
    CHECK(q.value == Q(2875));

    // quartic surface in P^3: 320 lines, read at x^1
    auto s4 = lines_convex(3, 4);
    CHECK(s4.s == 1);
    CHECK(s4.value == Q(320));

    // cubic on P^2 at x^2: int c_2(Sym^3 S*) over G(2,3) = 21
    auto c3 = lines_convex(2, 3);
    CHECK(c3.s == 2);
    CHECK(c3.value == Q(21));

    // degenerate G(2,2) = point: full class (x + l0)(x + l1), x^2 coefficient 1
    auto pt = lines_convex(1, 1);
    CHECK(pt.s == 2);
    CHECK(pt.value == Q(1));
    CHECK(pt.x_poly.size() == 3);
}

TEST_CASE("lines_concave")
{
    auto l3 = lines_concave(2, 3);
    CHECK(l3.s == 0);
    CHECK(l3.value == Q(3));

    auto l2 = lines_concave(1, 2);
    CHECK(l2.s == 1);
    CHECK(l2.value == Q(1));

    CHECK_THROWS_WITH_AS(lines_concave(2, 1), doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("graph sums at degree 1 agree with the lines oracle")
{
    CHECK(graph_sum_Kd(4, bundle_of("quintic_p4.json"), 1) == Q(2875));
    CHECK(graph_sum_Kd(2, bundle_of("local_p2.json"), 1) == Q(3));
    CHECK(graph_sum_Kd(1, bundle_of("o11_p1.json"), 1) == Q(1));
}

TEST_CASE("graph sums at degree 2")
{
    CHECK(graph_sum_Kd(1, bundle_of("o11_p1.json"), 2) == Q(1, 8));
    CHECK(graph_sum_Kd(4, bundle_of("quintic_p4.json"), 2) == Q(4876875, 8));
    CHECK(graph_sum_Kd(2, bundle_of("local_p2.json"), 2) == Q(-45, 8));
    CHECK_THROWS_WITH_AS(graph_sum_Kd(4, bundle_of("quintic_p4.json"), 3),
                         doctest::Contains("UnsupportedDegree"), Error);
}

TEST_CASE("intersection oracle")
{
    auto p1p2p2 = io::load_manifold(data_dir + "/manifolds/p1xp2xp2.json");
    CHECK(intersection_oracle(p1p2p2, {1, 2, 2}) == Q(1));
    CHECK(intersection_oracle(p1p2p2, {0, 3, 2}) == Q(0));

    auto p2 = io::load_manifold(data_dir + "/manifolds/p2.json");
    CHECK(intersection_oracle(p2, {2}) == Q(1));

    auto p1xp1 = io::load_manifold(data_dir + "/manifolds/p1xp1.json");
    CHECK(intersection_oracle(p1xp1, {1, 1}) == Q(1));
    CHECK(intersection_oracle(p1xp1, {2, 0}) == Q(0));

    CHECK_THROWS_WITH_AS(intersection_oracle(p2, {1}), doctest::Contains("DimensionMismatch"), Error);
}
