#include "cidr/config.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <string>

#include <json.hpp>

#include "cidr/error.hpp"
#include "cidr/io.hpp"

namespace cidr {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(std::string_view source, const std::string& field, const std::string& what) {
    throw Error(ErrorKind::Config, std::string(source) + ": field '" + field + "': " + what);
}

void reject_unknown(std::string_view source, const json& object, const std::set<std::string>& known,
                    const std::string& prefix) {
    for (const auto& [key, value] : object.items()) {
        if (!known.contains(key)) config_error(source, prefix + key, "unknown key");
    }
}

std::size_t get_count(std::string_view source, const json& v, const std::string& field) {
    if (!v.is_number_integer() || v.get<long long>() < 0) config_error(source, field, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

double get_number(std::string_view source, const json& v, const std::string& field) {
    if (!v.is_number()) config_error(source, field, "expected a number");
    return v.get<double>();
}

Matrix get_matrix(std::string_view source, const json& v, const std::string& field) {
    if (!v.is_array() || v.empty()) config_error(source, field, "expected a non-empty array of rows");
    const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
    std::vector<double> entries;
    for (std::size_t r = 0; r < v.size(); ++r) {
        const std::string row_field = field + "[" + std::to_string(r) + "]";
        if (!v[r].is_array() || v[r].size() != cols || cols == 0) {
            config_error(source, row_field, "expected a row of " + std::to_string(cols) + " numbers");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            entries.push_back(get_number(source, v[r][c], row_field + "[" + std::to_string(c) + "]"));
        }
    }
    try {
        return Matrix(v.size(), cols, std::move(entries));
    } catch (const Error& e) {
        config_error(source, field, e.message());
    }
}

void apply_generative(std::string_view source, const json& g, GenerativeSpec& spec) {
    if (!g.is_object()) config_error(source, "generative", "expected an object");
    reject_unknown(source, g, {"points_per_class", "iw_scale", "iw_dof", "class_means"}, "generative.");
    if (g.contains("class_means")) {
        const Matrix means = get_matrix(source, g["class_means"], "generative.class_means");
        spec.dim = means.cols();
        spec.class_means.clear();
        for (std::size_t r = 0; r < means.rows(); ++r) {
            const auto row = means.row(r);
            spec.class_means.emplace_back(row.begin(), row.end());
        }
        if (spec.iw_scale.rows() != spec.dim && !g.contains("iw_scale")) {
            spec.iw_scale = Matrix::identity(spec.dim) * 0.15;
        }
    }
    if (g.contains("points_per_class")) {
        spec.points_per_class = get_count(source, g["points_per_class"], "generative.points_per_class");
    }
    if (g.contains("iw_dof")) spec.iw_dof = get_number(source, g["iw_dof"], "generative.iw_dof");
    if (g.contains("iw_scale")) {
        const json& s = g["iw_scale"];
        spec.iw_scale = s.is_number() ? Matrix::identity(spec.dim) * s.get<double>()
                                      : get_matrix(source, s, "generative.iw_scale");
    }
}

}  // namespace

ExperimentFile parse_experiment_config(std::istream& in, std::string_view source,
                                       const std::filesystem::path& base_dir) {
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Config, std::string(source) + ": " + e.what());
    }
    if (!root.is_object()) config_error(source, "<root>", "expected a JSON object");
    reject_unknown(source, root,
                   {"replications", "per_class_train", "knn_k", "dims", "methods", "root_seed", "cost_matrix",
                    "generative", "svg"},
                   "");

    ExperimentFile file;
    ExperimentConfig& cfg = file.experiment;
    if (root.contains("replications")) cfg.replications = get_count(source, root["replications"], "replications");
    if (root.contains("per_class_train")) {
        cfg.per_class_train = get_count(source, root["per_class_train"], "per_class_train");
    }
    if (root.contains("knn_k")) cfg.knn_k = get_count(source, root["knn_k"], "knn_k");
    if (root.contains("root_seed")) {
        const json& s = root["root_seed"];
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
            config_error(source, "root_seed", "expected a nonnegative integer");
        }
        cfg.root_seed = s.get<std::uint64_t>();
    }
    if (root.contains("dims")) {
        const json& d = root["dims"];
        if (!d.is_array()) config_error(source, "dims", "expected an array of integers");
        cfg.dims.clear();
        for (std::size_t i = 0; i < d.size(); ++i) {
            cfg.dims.push_back(get_count(source, d[i], "dims[" + std::to_string(i) + "]"));
        }
    }
    if (root.contains("methods")) {
        const json& m = root["methods"];
        if (!m.is_array()) config_error(source, "methods", "expected an array of method names");
        cfg.methods.clear();
        for (std::size_t i = 0; i < m.size(); ++i) {
            const std::string field = "methods[" + std::to_string(i) + "]";
            if (!m[i].is_string()) config_error(source, field, "expected a string");
            try {
                cfg.methods.push_back(parse_method(m[i].get<std::string>()));
            } catch (const Error& e) {
                config_error(source, field, e.message());
            }
        }
    }
    if (root.contains("generative")) apply_generative(source, root["generative"], cfg.generative);
    if (root.contains("cost_matrix")) {
        const json& c = root["cost_matrix"];
        try {
            if (c.is_string() && c.get<std::string>() == "case-study") {
                cfg.cost_matrix = case_study_cost_matrix();
            } else if (c.is_string()) {
                cfg.cost_matrix = read_cost_csv(base_dir / c.get<std::string>());
            } else {
                cfg.cost_matrix = validate_cost_matrix(get_matrix(source, c, "cost_matrix"));
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Config) throw;
            config_error(source, "cost_matrix", e.what());
        }
    }
    if (root.contains("svg")) {
        if (!root["svg"].is_boolean()) config_error(source, "svg", "expected true or false");
        file.svg = root["svg"].get<bool>();
    }
    return file;
}

ExperimentFile load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open config " + path.string());
    return parse_experiment_config(in, path.string(), path.parent_path());
}

}  // namespace cidr
