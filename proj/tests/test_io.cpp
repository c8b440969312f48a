#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwkit/errors.hpp"
#include "gwkit/invariants.hpp"
#include "gwkit/io.hpp"
#include "gwkit/sha256.hpp"

#include <cstdio>
#include <filesystem>

using namespace gwkit;

namespace {
std::string data_dir = GWKIT_DATA_DIR;
}

TEST_CASE("sha256 known vectors")
{
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("manifold spec round-trips bit-exactly")
{
    for (const char* name : {"p1", "p2", "p3", "p4", "p1xp1", "p1xp2xp2"}) {
        std::string path = data_dir + "/manifolds/" + name + ".json";
        std::string bytes = io::read_file(path);
        ToricManifold M = io::manifold_from_json(bytes);
        CHECK(io::manifold_to_json(M) == bytes);
    }
}

TEST_CASE("bundle spec round-trips bit-exactly")
{
    for (const char* name : {"o11_p1", "quintic_p4", "local_p2", "o22_p1xp1", "ci_p1p2p2",
                             "o3_p2_chern", "wp321_local"}) {
        std::string path = data_dir + "/bundles/" + name + ".json";
        std::string bytes = io::read_file(path);
        BundleSpec spec = io::bundle_from_json(bytes);
        CHECK(io::bundle_to_json(spec) == bytes);
    }
}

TEST_CASE("parse errors carry the right code")
{
    CHECK_THROWS_WITH_AS(io::manifold_from_json("{"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(io::manifold_from_json("{\"name\": \"x\"}"), doctest::Contains("ParseError"),
                         Error);
    CHECK_THROWS_WITH_AS(q_from_string("1/0"), doctest::Contains("ParseError"), Error);
    CHECK(q_from_string("-7/2") == Q(-7, 2));
    CHECK(q_to_string(Q(-7, 2)) == "-7/2");
}

TEST_CASE("result emission is deterministic and exact")
{
    auto M = io::load_manifold(data_dir + "/manifolds/p1.json");
    auto spec = io::load_bundle(data_dir + "/bundles/o11_p1.json");
    InvariantTable t = compute_invariants(M, spec, 2);
    t.content_hash = "fixed";
    t.runtime_ms = 0;
    std::string j1 = io::table_to_json(t);
    std::string c1 = io::table_to_csv(t);
    InvariantTable t2 = compute_invariants(M, spec, 2);
    t2.content_hash = "fixed";
    t2.runtime_ms = 0;
    CHECK(io::table_to_json(t2) == j1);
    CHECK(io::table_to_csv(t2) == c1);
    CHECK(c1.find("d_1,K_num,K_den,n_num,n_den") == 0);
    CHECK(c1.find("2,1,8,0,1") != std::string::npos);
    CHECK(j1.find("\"num\": \"1\"") != std::string::npos);
}

TEST_CASE("cache stores and replays byte-identically")
{
    auto dir = std::filesystem::temp_directory_path() / "gwkit-cache-test";
    std::filesystem::remove_all(dir);
    io::Cache cache(dir.string());
    CHECK(!cache.get("k").has_value());
    cache.put("k", "payload-1");
    auto hit = cache.get("k");
    REQUIRE(hit.has_value());
    CHECK(*hit == "payload-1");
    std::filesystem::remove_all(dir);
}

TEST_CASE("run hash separates configurations")
{
    auto M = io::load_manifold(data_dir + "/manifolds/p1.json");
    auto spec = io::load_bundle(data_dir + "/bundles/o11_p1.json");
    std::string mj = io::manifold_to_json(M);
    std::string bj = io::bundle_to_json(spec);
    std::string h1 = io::run_hash(mj, bj, 2, {Q(1)}, {Q(1)});
    std::string h2 = io::run_hash(mj, bj, 3, {Q(1)}, {Q(1)});
    std::string h3 = io::run_hash(mj, bj, 2, {Q(2)}, {Q(1)});
    CHECK(h1 != h2);
    CHECK(h1 != h3);
    CHECK(h1 == io::run_hash(mj, bj, 2, {Q(1)}, {Q(1)}));
}

TEST_CASE("mirror data dump")
{
    auto M = io::load_manifold(data_dir + "/manifolds/p4.json");
    auto [s0, s1] = default_samples(M);
    auto geo = std::make_shared<const Geometry>(M, s0);
    HGSeries hg = build_hg_series(geo, io::load_bundle(data_dir + "/bundles/quintic_p4.json"), 2);
    std::string j = io::mirror_data_to_json(extract_mirror_data(hg));
    CHECK(j.find("\"case\": \"convex\"") != std::string::npos);
    CHECK(j.find("\"c\": \"120\"") != std::string::npos);
    CHECK(j.find("\"c\": \"113400\"") != std::string::npos);
}
