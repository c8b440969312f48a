#include "gwkit/io.hpp"

#include "gwkit/errors.hpp"
#include "gwkit/sha256.hpp"
#include "gwkit/version.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gwkit::io {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    require(in.good(), Errc::IoError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& data)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(out.good(), Errc::IoError, "cannot write " + path);
    out << data;
}

namespace {

ordered_json parse(const std::string& text, const std::string& what)
{
    auto j = ordered_json::parse(text, nullptr, false);
    require(!j.is_discarded(), Errc::ParseError, "malformed JSON in " + what);
    return j;
}

template <class T>
std::vector<std::vector<T>> int_matrix(const ordered_json& j, const std::string& what)
{
    require(j.is_array(), Errc::ParseError, what + " must be an array of arrays");
    std::vector<std::vector<T>> out;
    for (const auto& row : j) {
        require(row.is_array(), Errc::ParseError, what + " must be an array of arrays");
        std::vector<T> r;
        for (const auto& v : row) {
            require(v.is_number_integer(), Errc::ParseError, what + " entries must be integers");
            r.push_back(v.get<T>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

ordered_json q_json(const Q& q)
{
    ordered_json j;
    j["num"] = num_str(q);
    j["den"] = den_str(q);
    return j;
}

ordered_json qvec_json(const QVec& v)
{
    ordered_json j = ordered_json::array();
    for (const auto& q : v)
        j.push_back(q_to_string(q));
    return j;
}

std::string dump(const ordered_json& j)
{
    return j.dump(2) + "\n";
}

/* Compact row formatting for spec files: [[1, 0], [0, 1]]. */
template <class T>
std::string row_str(const std::vector<T>& row)
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < row.size(); ++i)
        os << (i ? ", " : "") << row[i];
    os << "]";
    return os.str();
}

template <class T>
std::string matrix_str(const std::vector<std::vector<T>>& rows)
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i)
        os << (i ? ", " : "") << row_str(rows[i]);
    os << "]";
    return os.str();
}

}  // namespace

ToricManifold manifold_from_json(const std::string& text)
{
    auto j = parse(text, "manifold spec");
    try {
        require(j.contains("name") && j["name"].is_string(), Errc::ParseError, "manifold needs a name");
        auto rays = int_matrix<long>(j.at("rays"), "rays");
        auto cones = int_matrix<int>(j.at("cones"), "cones");
        auto charge = int_matrix<long>(j.at("charge_matrix"), "charge_matrix");
        std::vector<int> factors;
        if (j.contains("factors"))
            for (const auto& v : j["factors"])
                factors.push_back(v.get<int>());
        return build_manifold(j["name"].get<std::string>(), std::move(rays), std::move(cones),
                              std::move(charge), std::move(factors));
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, std::string("manifold spec: ") + e.what());
    }
}

ToricManifold load_manifold(const std::string& path)
{
    return manifold_from_json(read_file(path));
}

std::string manifold_to_json(const ToricManifold& M)
{
    std::vector<std::vector<int>> cones_1based;
    for (const auto& c : M.max_cones) {
        std::vector<int> row;
        for (int ix : c)
            row.push_back(ix + 1);
        cones_1based.push_back(std::move(row));
    }
    std::ostringstream os;
    os << "{\n";
    os << "  \"name\": " << ordered_json(M.name).dump() << ",\n";
    os << "  \"rays\": " << matrix_str(M.rays) << ",\n";
    os << "  \"cones\": " << matrix_str(cones_1based) << ",\n";
    os << "  \"charge_matrix\": " << matrix_str(M.charge);
    if (!M.factors.empty())
        os << ",\n  \"factors\": " << row_str(M.factors);
    os << "\n}\n";
    return os.str();
}

BundleSpec bundle_from_json(const std::string& text)
{
    auto j = parse(text, "bundle spec");
    try {
        BundleSpec spec;
        if (j.contains("convex"))
            spec.convex = int_matrix<long>(j["convex"], "convex");
        if (j.contains("concave"))
            spec.concave = int_matrix<long>(j["concave"], "concave");
        if (j.contains("chern_variable"))
            spec.chern_variable = j["chern_variable"].get<bool>();
        if (j.contains("manual_euler")) {
            ManualEuler me;
            me.classes = int_matrix<long>(j["manual_euler"].at("classes"), "manual_euler.classes");
            spec.manual_euler = std::move(me);
        }
        return spec;
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, std::string("bundle spec: ") + e.what());
    }
}

BundleSpec load_bundle(const std::string& path)
{
    return bundle_from_json(read_file(path));
}

std::string bundle_to_json(const BundleSpec& spec)
{
    std::ostringstream os;
    os << "{\n";
    os << "  \"convex\": " << matrix_str(spec.convex) << ",\n";
    os << "  \"concave\": " << matrix_str(spec.concave) << ",\n";
    os << "  \"chern_variable\": " << (spec.chern_variable ? "true" : "false");
    if (spec.manual_euler)
        os << ",\n  \"manual_euler\": {\"classes\": " << matrix_str(spec.manual_euler->classes) << "}";
    os << "\n}\n";
    return os.str();
}

std::string table_to_json(const InvariantTable& t)
{
    ordered_json meta;
    meta["manifold"] = t.manifold;
    meta["d_max"] = t.d_max;
    meta["s"] = t.s;
    meta["chern_variable"] = t.chern_variable;
    meta["lambda0"] = qvec_json(t.lambda0);
    meta["lambda0_alt"] = qvec_json(t.lambda0_alt);
    meta["mirror_case"] = t.mirror_case;
    meta["conventions"] = {{"log_f0_sign", t.log_f0_sign},
                           {"concave_h1_sign", -1},
                           {"concave_twists", qvec_json(t.concave_twists)}};
    meta["warnings"] = t.warnings;
    meta["content_hash"] = t.content_hash;
    meta["oracle"] = t.oracle;
    meta["version"] = kVersion;

    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
        ordered_json row;
        row["d"] = r.d;
        row["K"] = q_json(r.K);
        if (r.n) {
            row["n"] = q_json(*r.n);
            row["n_integral"] = r.n_integral;
        }
        rows.push_back(row);
    }

    ordered_json j;
    j["metadata"] = meta;
    j["rows"] = rows;
    return dump(j);
}

std::string table_to_csv(const InvariantTable& t)
{
    std::ostringstream os;
    size_t m = t.rows.empty() ? t.lambda0.size() : t.rows[0].d.size();
    for (size_t i = 1; i <= m; ++i)
        os << "d_" << i << ",";
    os << "K_num,K_den,n_num,n_den\n";
    for (const auto& r : t.rows) {
        for (int c : r.d)
            os << c << ",";
        os << num_str(r.K) << "," << den_str(r.K) << ",";
        if (r.n)
            os << num_str(*r.n) << "," << den_str(*r.n);
        else
            os << ",";
        os << "\n";
    }
    return os.str();
}

std::string mirror_data_to_json(const MirrorData& md)
{
    ordered_json j;
    j["case"] = mirror_case_name(md.kind);
    j["log_f0_sign"] = md.log_f0_sign;

    auto degree_series = [](const NovikovSeries<Q>& s) {
        ordered_json arr = ordered_json::array();
        for (const auto& [d, c] : s.coeffs()) {
            ordered_json e;
            e["d"] = d;
            e["c"] = q_to_string(c);
            arr.push_back(e);
        }
        return arr;
    };
    j["F0"] = degree_series(md.F0);
    ordered_json fs = ordered_json::array();
    for (const auto& fi : md.F)
        fs.push_back(degree_series(fi));
    j["F"] = fs;

    ordered_json g = ordered_json::array();
    for (const auto& [d, psi] : md.G.coeffs()) {
        ordered_json e;
        e["d"] = d;
        // Nonequivariant slice: psi_d's x-polynomial part survives T* -> 0.
        ordered_json xs = ordered_json::array();
        for (const auto& c : psi.eps0_x_poly())
            xs.push_back(q_to_string(c));
        e["psi_x"] = xs;
        g.push_back(e);
    }
    j["G"] = g;
    return dump(j);
}

std::string run_hash(const std::string& manifold_json, const std::string& bundle_json, int d_max,
                     const QVec& lambda0, const QVec& lambda1)
{
    std::ostringstream os;
    os << manifold_json << "\x1f" << bundle_json << "\x1f" << d_max << "\x1f";
    for (const auto& q : lambda0)
        os << q_to_string(q) << ",";
    os << "\x1f";
    for (const auto& q : lambda1)
        os << q_to_string(q) << ",";
    os << "\x1f" << kVersion;
    return sha256_hex(os.str());
}

std::optional<std::string> Cache::get(const std::string& key) const
{
    if (!enabled())
        return std::nullopt;
    auto path = std::filesystem::path(dir_) / (key + ".json");
    if (!std::filesystem::exists(path))
        return std::nullopt;
    return read_file(path.string());
}

void Cache::put(const std::string& key, const std::string& payload) const
{
    if (!enabled())
        return;
    std::filesystem::create_directories(dir_);
    auto final_path = std::filesystem::path(dir_) / (key + ".json");
    auto tmp_path = std::filesystem::path(dir_) / (key + ".tmp");
    write_file(tmp_path.string(), payload);
    std::filesystem::rename(tmp_path, final_path);
}

}  // namespace gwkit::io
