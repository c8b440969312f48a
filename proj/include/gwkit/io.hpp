#pragma once

#include "gwkit/invariants.hpp"
#include "gwkit/mirror.hpp"

#include <optional>
#include <string>

namespace gwkit::io {

/* Manifold spec file (canonical JSON; loaders and emitters round-trip bit-exactly). */
ToricManifold load_manifold(const std::string& path);
ToricManifold manifold_from_json(const std::string& text);
std::string manifold_to_json(const ToricManifold& M);

/* Bundle spec file. */
BundleSpec load_bundle(const std::string& path);
BundleSpec bundle_from_json(const std::string& text);
std::string bundle_to_json(const BundleSpec& spec);

/* Result emission; deterministic bytes for identical inputs. */
std::string table_to_json(const InvariantTable& t);
std::string table_to_csv(const InvariantTable& t);
std::string mirror_data_to_json(const MirrorData& md);

/* Content hash of a run configuration. */
std::string run_hash(const std::string& manifold_json, const std::string& bundle_json, int d_max,
                     const QVec& lambda0, const QVec& lambda1);

/* Content-addressed result cache: one file per key, atomic write-rename. */
class Cache {
public:
    explicit Cache(std::string dir) : dir_(std::move(dir)) {}
    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& payload) const;

private:
    std::string dir_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace gwkit::io
