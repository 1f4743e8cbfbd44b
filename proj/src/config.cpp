#include "nlf/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace nlf {

using nlohmann::json;

std::string normalization_name(Normalization norm) {
    switch (norm) {
    case Normalization::PaperLiteral: return "literal";
    case Normalization::ForceHalf: return "half";
    case Normalization::ForceUnit: return "unit";
    }
    return "?";
}

Normalization normalization_from_string(std::string_view name) {
    if (name == "literal") return Normalization::PaperLiteral;
    if (name == "half") return Normalization::ForceHalf;
    if (name == "unit") return Normalization::ForceUnit;
    throw ConfigError("unknown normalization: " + std::string(name) +
                      " (expected literal, half or unit)");
}

namespace {

void require_keys(const json& obj, const std::set<std::string>& allowed, const char* where) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.contains(key))
            throw ConfigError(std::string("config: unknown key '") + key + "' in " + where);
}

ModelSpec parse_model(const json& obj) {
    require_keys(obj, {"kind", "alpha", "epsilon", "filling", "normalization"}, "model");
    ModelSpec spec;
    if (!obj.contains("kind")) throw ConfigError("config: model.kind is required");
    spec.kind = model_kind_from_string(obj.at("kind").get<std::string>());
    spec.alpha = obj.value("alpha", 0.0);
    spec.epsilon = obj.value("epsilon", 1.0);
    spec.filling = obj.value("filling", 0.5);
    if (obj.contains("normalization"))
        spec.norm = normalization_from_string(obj.at("normalization").get<std::string>());
    return spec;
}

LatticeSpec parse_lattice(const json& obj) {
    require_keys(obj, {"dim", "extent"}, "lattice");
    LatticeSpec lat;
    lat.dim = obj.value("dim", 1);
    if (!obj.contains("extent")) throw ConfigError("config: lattice.extent is required");
    const auto& ext = obj.at("extent");
    if (!ext.is_array() || ext.empty() || ext.size() > 2)
        throw ConfigError("config: lattice.extent must be an array of 1 or 2 integers");
    lat.extent = {ext[0].get<int>(), 1};
    if (lat.dim == 2)
        lat.extent[1] = ext.size() == 2 ? ext[1].get<int>() : lat.extent[0];
    lat.validate();
    return lat;
}

std::vector<int> parse_sweep(const json& obj) {
    std::vector<int> Ls;
    if (obj.is_array()) {
        for (const auto& v : obj) Ls.push_back(v.get<int>());
        return Ls;
    }
    require_keys(obj, {"min", "max", "step", "values"}, "sweep");
    if (obj.contains("values")) {
        for (const auto& v : obj.at("values")) Ls.push_back(v.get<int>());
        return Ls;
    }
    const int lo = obj.value("min", 1);
    const int hi = obj.value("max", lo);
    const int step = obj.value("step", 1);
    if (step < 1) throw ConfigError("config: sweep.step must be >= 1");
    for (int L = lo; L <= hi; L += step) Ls.push_back(L);
    return Ls;
}

} // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("config: invalid JSON: ") + err.what());
    }
    require_keys(root, {"lattice", "model", "curves", "sweep", "fits", "holo", "output",
                        "seed", "workers"},
                 "top level");

    ExperimentConfig config;
    if (!root.contains("lattice")) throw ConfigError("config: lattice is required");
    config.lattice = parse_lattice(root.at("lattice"));

    if (root.contains("model") && root.contains("curves"))
        throw ConfigError("config: give either model or curves, not both");
    if (root.contains("model"))
        config.curves.push_back({parse_model(root.at("model")).label(), parse_model(root.at("model"))});
    if (root.contains("curves")) {
        for (const auto& c : root.at("curves")) {
            require_keys(c, {"label", "model"}, "curves[]");
            CurveSpec spec;
            spec.model = parse_model(c.at("model"));
            spec.label = c.value("label", spec.model.label());
            config.curves.push_back(std::move(spec));
        }
    }
    for (const auto& c : config.curves) c.model.validate(config.lattice);

    if (root.contains("sweep")) config.sweep_L = parse_sweep(root.at("sweep"));

    if (root.contains("fits")) {
        for (const auto& f : root.at("fits")) {
            require_keys(f, {"form", "window"}, "fits[]");
            FitRequest req;
            req.form = fit_form_from_string(f.at("form").get<std::string>());
            const auto& w = f.at("window");
            if (!w.is_array() || w.size() != 2)
                throw ConfigError("config: fits[].window must be [lo, hi]");
            req.window = {w[0].get<double>(), w[1].get<double>()};
            config.fits.push_back(req);
        }
    }

    if (root.contains("holo")) {
        const auto& h = root.at("holo");
        require_keys(h, {"alpha_c", "a", "b", "fit"}, "holo");
        config.holo.params.alpha_c = h.value("alpha_c", 9.0);
        config.holo.params.a = h.value("a", 0.6);
        config.holo.params.b = h.value("b", 0.7);
        config.holo.fit = h.value("fit", true);
    }

    if (root.contains("output")) {
        const auto& o = root.at("output");
        require_keys(o, {"csv", "svg", "loglinear", "rescale_by_L"}, "output");
        config.output.csv = o.value("csv", "");
        config.output.svg = o.value("svg", "");
        config.output.loglinear = o.value("loglinear", false);
        config.output.rescale_by_L = o.value("rescale_by_L", false);
    }

    config.seed = root.value("seed", 0ull);
    config.workers = root.value("workers", 1);
    if (config.workers < 1) throw ConfigError("config: workers must be >= 1");
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string config_echo(const ExperimentConfig& config) {
    json root;
    root["lattice"]["dim"] = config.lattice.dim;
    root["lattice"]["extent"] = config.lattice.dim == 1
                                    ? json::array({config.lattice.extent[0]})
                                    : json::array({config.lattice.extent[0], config.lattice.extent[1]});
    root["curves"] = json::array();
    for (const auto& c : config.curves) {
        json m;
        m["kind"] = to_string(c.model.kind);
        m["alpha"] = c.model.alpha;
        m["epsilon"] = c.model.epsilon;
        m["filling"] = c.model.filling;
        m["normalization"] = normalization_name(c.model.norm);
        root["curves"].push_back({{"label", c.label}, {"model", m}});
    }
    if (!config.sweep_L.empty()) root["sweep"]["values"] = config.sweep_L;
    root["fits"] = json::array();
    for (const auto& f : config.fits)
        root["fits"].push_back({{"form", to_string(f.form)},
                                {"window", {f.window.lo, f.window.hi}}});
    root["holo"] = {{"alpha_c", config.holo.params.alpha_c},
                    {"a", config.holo.params.a},
                    {"b", config.holo.params.b},
                    {"fit", config.holo.fit}};
    root["output"] = {{"csv", config.output.csv},
                      {"svg", config.output.svg},
                      {"loglinear", config.output.loglinear},
                      {"rescale_by_L", config.output.rescale_by_L}};
    root["seed"] = config.seed;
    root["workers"] = config.workers;
    return root.dump();
}

} // namespace nlf
