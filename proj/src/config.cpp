// Copyright 2026 The cdfge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cdfge/config.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "cdfge/error.hpp"
#include "cdfge/hamiltonian.hpp"

namespace cdfge {

namespace {

std::string trim(const std::string &s) {
    const auto a = s.find_first_not_of(" \t\r\n\"");
    if (a == std::string::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t\r\n\"");
    return s.substr(a, b - a + 1);
}

double to_real(const std::string &key, const std::string &v) {
    try {
        return parse_double(trim(v));
    } catch (const DomainError &) {
        throw ConfigError(key + ": expected a number, got '" + v + "'");
    }
}

std::int64_t to_int(const std::string &key, const std::string &v) {
    const double d = to_real(key, v);
    if (d != std::floor(d) || std::abs(d) > 9.0e15) {
        throw ConfigError(key + ": expected an integer, got '" + v + "'");
    }
    return static_cast<std::int64_t>(d);
}

std::uint64_t to_seed(const std::string &key, const std::string &v) {
    const auto t = trim(v);
    try {
        std::size_t pos = 0;
        const auto s = std::stoull(t, &pos);
        if (pos != t.size()) {
            throw ConfigError(key + ": bad seed");
        }
        return s;
    } catch (const std::logic_error &) {
        throw ConfigError(key + ": expected a non-negative integer seed, got '" + v + "'");
    }
}

bool to_bool(const std::string &key, const std::string &v) {
    const auto t = trim(v);
    if (t == "true" || t == "1" || t == "yes") {
        return true;
    }
    if (t == "false" || t == "0" || t == "no") {
        return false;
    }
    throw ConfigError(key + ": expected a boolean, got '" + v + "'");
}

// "0:0.0014, 1:0.015"
std::vector<std::pair<int, double>> to_overlaps(const std::string &key,
                                                const std::string &v) {
    std::vector<std::pair<int, double>> out;
    std::stringstream ss(trim(v));
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        const auto c = item.find(':');
        if (c == std::string::npos) {
            throw ConfigError(key + ": entries must read index:weight");
        }
        out.emplace_back(static_cast<int>(to_int(key, item.substr(0, c))),
                         to_real(key, item.substr(c + 1)));
    }
    return out;
}

std::string overlaps_str(const std::vector<std::pair<int, double>> &o) {
    std::string s;
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(o[i].first) + ':' + format_double(o[i].second);
    }
    return s;
}

FlatConfig flatten(const ExperimentConfig &c) {
    FlatConfig f;
    const auto &h = c.hamiltonian;
    f["hamiltonian.model"] = h.model;
    f["hamiltonian.n"] = std::to_string(h.n);
    f["hamiltonian.seed"] = std::to_string(h.seed);
    f["hamiltonian.jx"] = format_double(h.jx);
    f["hamiltonian.jz"] = format_double(h.jz);
    f["hamiltonian.periodic"] = h.periodic ? "true" : "false";
    f["hamiltonian.margin"] = format_double(h.margin);
    f["hamiltonian.norm"] = h.norm;
    f["hamiltonian.path"] = h.path;
    const auto &s = c.state;
    f["state.kind"] = s.kind;
    f["state.seed"] = std::to_string(s.seed);
    f["state.overlaps"] = overlaps_str(s.overlaps);
    f["state.eigen_index"] = std::to_string(s.eigen_index);
    f["state.sparsity"] = std::to_string(s.sparsity);
    f["state.path"] = s.path;
    f["filter.epsilon"] = format_double(c.filter.epsilon);
    f["filter.delta"] = format_double(c.filter.delta);
    f["filter.D"] = std::to_string(c.filter.D);
    f["filter.beta"] = format_double(c.filter.beta);
    f["sampling.M"] = std::to_string(c.sampling.M);
    f["sampling.mode"] = c.sampling.mode;
    f["sampling.repetitions"] = std::to_string(c.sampling.repetitions);
    f["sampling.seed"] = std::to_string(c.sampling.seed);
    f["backend.kind"] = c.backend.kind;
    f["backend.r_policy"] = c.backend.r_policy;
    f["backend.r"] = std::to_string(c.backend.r);
    f["backend.C"] = format_double(c.backend.C);
    f["backend.p"] = std::to_string(c.backend.p);
    const auto &d = c.detection;
    f["detection.method"] = d.method;
    f["detection.alpha"] = format_double(d.alpha);
    f["detection.k"] = format_double(d.k);
    f["detection.l"] = std::to_string(d.l);
    f["detection.guard"] = d.guard;
    f["detection.floor"] = format_double(d.floor);
    f["detection.bandwidth"] = d.bandwidth;
    f["detection.orientation"] = d.orientation;
    f["detection.noise_region"] = d.noise_region;
    f["detection.s"] = format_double(d.s);
    f["detection.L"] = std::to_string(d.window_l);
    f["detection.fraction"] = format_double(d.fraction);
    f["detection.half_window"] = format_double(d.half_window);
    f["detection.eta"] = format_double(d.eta);
    f["resources.eta"] = format_double(c.resources.eta);
    f["resources.vartheta"] = format_double(c.resources.vartheta);
    f["resources.sweep"] = c.resources.sweep ? "true" : "false";
    f["output.dir"] = c.output.dir;
    return f;
}

} // namespace

void apply_flat(ExperimentConfig &c, const FlatConfig &flat) {
    for (const auto &[key, v] : flat) {
        auto &h = c.hamiltonian;
        auto &s = c.state;
        auto &d = c.detection;
        if (key == "hamiltonian.model") h.model = trim(v);
        else if (key == "hamiltonian.n") h.n = static_cast<int>(to_int(key, v));
        else if (key == "hamiltonian.seed") h.seed = to_seed(key, v);
        else if (key == "hamiltonian.jx") h.jx = to_real(key, v);
        else if (key == "hamiltonian.jz") h.jz = to_real(key, v);
        else if (key == "hamiltonian.periodic") h.periodic = to_bool(key, v);
        else if (key == "hamiltonian.margin") h.margin = to_real(key, v);
        else if (key == "hamiltonian.norm") h.norm = trim(v);
        else if (key == "hamiltonian.path") h.path = trim(v);
        else if (key == "state.kind") s.kind = trim(v);
        else if (key == "state.seed") s.seed = to_seed(key, v);
        else if (key == "state.overlaps") s.overlaps = to_overlaps(key, v);
        else if (key == "state.eigen_index") s.eigen_index = static_cast<int>(to_int(key, v));
        else if (key == "state.sparsity") s.sparsity = to_int(key, v);
        else if (key == "state.path") s.path = trim(v);
        else if (key == "filter.epsilon") c.filter.epsilon = to_real(key, v);
        else if (key == "filter.delta") c.filter.delta = to_real(key, v);
        else if (key == "filter.D") c.filter.D = static_cast<int>(to_int(key, v));
        else if (key == "filter.beta") c.filter.beta = to_real(key, v);
        else if (key == "sampling.M") c.sampling.M = to_int(key, v);
        else if (key == "sampling.mode") c.sampling.mode = trim(v);
        else if (key == "sampling.repetitions") c.sampling.repetitions = static_cast<int>(to_int(key, v));
        else if (key == "sampling.seed") c.sampling.seed = to_seed(key, v);
        else if (key == "backend.kind") c.backend.kind = trim(v);
        else if (key == "backend.r_policy") c.backend.r_policy = trim(v);
        else if (key == "backend.r") c.backend.r = static_cast<int>(to_int(key, v));
        else if (key == "backend.C") c.backend.C = to_real(key, v);
        else if (key == "backend.p") c.backend.p = static_cast<int>(to_int(key, v));
        else if (key == "detection.method") d.method = trim(v);
        else if (key == "detection.alpha") d.alpha = to_real(key, v);
        else if (key == "detection.k") d.k = to_real(key, v);
        else if (key == "detection.l") d.l = static_cast<int>(to_int(key, v));
        else if (key == "detection.guard") d.guard = trim(v);
        else if (key == "detection.floor") d.floor = to_real(key, v);
        else if (key == "detection.bandwidth") d.bandwidth = trim(v);
        else if (key == "detection.orientation") d.orientation = trim(v);
        else if (key == "detection.noise_region") d.noise_region = trim(v);
        else if (key == "detection.s") d.s = to_real(key, v);
        else if (key == "detection.L") d.window_l = static_cast<int>(to_int(key, v));
        else if (key == "detection.fraction") d.fraction = to_real(key, v);
        else if (key == "detection.half_window") d.half_window = to_real(key, v);
        else if (key == "detection.eta") d.eta = to_real(key, v);
        else if (key == "resources.eta") c.resources.eta = to_real(key, v);
        else if (key == "resources.vartheta") c.resources.vartheta = to_real(key, v);
        else if (key == "resources.sweep") c.resources.sweep = to_bool(key, v);
        else if (key == "output.dir") c.output.dir = trim(v);
        else throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig parse_config(const std::string &text) {
    FlatConfig flat;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError(std::string("config JSON: ") + e.what());
        }
        for (const auto &[sec, body] : j.items()) {
            if (!body.is_object()) {
                throw ConfigError("config JSON: section '" + sec + "' must be an object");
            }
            for (const auto &[k, v] : body.items()) {
                flat[sec + "." + k] = v.is_string() ? v.get<std::string>() : v.dump();
            }
        }
    } else {
        boost::property_tree::ptree pt;
        std::istringstream is(text);
        try {
            boost::property_tree::read_ini(is, pt);
        } catch (const boost::property_tree::ini_parser_error &e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
        for (const auto &[sec, body] : pt) {
            if (body.empty()) {
                throw ConfigError("config: key '" + sec + "' outside a section");
            }
            for (const auto &[k, v] : body) {
                flat[sec + "." + k] = v.data();
            }
        }
    }
    ExperimentConfig cfg;
    apply_flat(cfg, flat);
    validate(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void validate(const ExperimentConfig &c) {
    auto need = [](bool ok, const std::string &msg) {
        if (!ok) {
            throw ConfigError(msg);
        }
    };
    const auto &h = c.hamiltonian;
    need(h.model == "heisenberg" || h.model == "xxz" || h.model == "file",
         "hamiltonian.model must be heisenberg, xxz or file");
    need(h.model == "file" ? !h.path.empty() : (h.n >= 2 && h.n <= 26),
         "hamiltonian.n must lie in [2, 26] (or set hamiltonian.path)");
    need(h.margin >= 0.0, "hamiltonian.margin must be non-negative");
    need(h.norm == "one" || h.norm == "exact", "hamiltonian.norm must be one or exact");
    const auto &s = c.state;
    need(s.kind == "random" || s.kind == "overlaps" || s.kind == "eigen" || s.kind == "file",
         "state.kind must be random, overlaps, eigen or file");
    need(s.kind != "overlaps" || !s.overlaps.empty(), "state.overlaps missing");
    need(s.kind != "file" || !s.path.empty(), "state.path missing");
    need(s.sparsity >= 0, "state.sparsity must be non-negative");
    need(c.filter.epsilon > 0.0 && c.filter.epsilon < 1.0, "filter.epsilon must lie in (0, 1)");
    need(c.filter.delta >= 0.0, "filter.delta must be non-negative");
    need(c.filter.D == 0 || (c.filter.D >= 1 && c.filter.D % 2 == 1), "filter.D must be odd");
    need(c.sampling.M >= 1, "sampling.M must be >= 1");
    need(c.sampling.mode == "single-shot" || c.sampling.mode == "exact" ||
             c.sampling.mode == "infinite",
         "sampling.mode must be single-shot, exact or infinite");
    need(c.sampling.repetitions >= 1, "sampling.repetitions must be >= 1");
    need(c.backend.kind == "exact" || c.backend.kind == "trotter",
         "backend.kind must be exact or trotter");
    need(c.backend.r_policy == "fixed" || c.backend.r_policy == "formula",
         "backend.r_policy must be fixed or formula");
    need(c.backend.r >= 1 && c.backend.p >= 1 && c.backend.C > 0.0,
         "backend r, p and C must be positive");
    const auto &d = c.detection;
    need(d.method == "rupture" || d.method == "variance-scan" || d.method == "certified",
         "detection.method must be rupture, variance-scan or certified");
    need(d.alpha > 0.0 && d.alpha < 1.0, "detection.alpha must lie in (0, 1)");
    need(d.guard == "after" || d.guard == "as-printed" || d.guard == "none",
         "detection.guard must be after, as-printed or none");
    need(d.bandwidth == "stddev" || d.bandwidth == "median",
         "detection.bandwidth must be stddev or median");
    need(d.orientation == "standard" || d.orientation == "as-printed",
         "detection.orientation must be standard or as-printed");
    need(d.noise_region == "restricted" || d.noise_region == "fixed",
         "detection.noise_region must be restricted or fixed");
    need(d.l >= 1 && d.window_l >= 1 && d.fraction > 0.0 && d.fraction <= 1.0,
         "detection window parameters out of range");
    need(d.half_window > 0.0 && d.floor >= 0.0, "detection.half_window/floor out of range");
    need(c.resources.vartheta > 0.0 && c.resources.vartheta < 1.0,
         "resources.vartheta must lie in (0, 1)");
}

std::string ExperimentConfig::canonical() const {
    std::string out;
    for (const auto &[k, v] : flatten(*this)) {
        if (k == "output.dir") {
            continue;
        }
        out += k + "=" + v + "\n";
    }
    return out;
}

std::string ExperimentConfig::hash() const {
    const auto text = canonical();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < 8 && i < len; ++i) {
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return os.str();
}

} // namespace cdfge
