#include "ldpc/serialization.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ldpc/errors.hpp"

namespace ldpc {

namespace {

nlohmann::json pair_json(const char* perspective, const polynomial& a, const polynomial& b) {
    nlohmann::json j;
    j["perspective"] = perspective;
    j["lambda"] = a.coeffs();
    j["rho"] = b.coeffs();
    return j;
}

polynomial poly_from(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw config_error(std::string("degree pair JSON missing array \"") + key + "\"");
    }
    std::vector<double> coeffs;
    for (const auto& v : j[key]) coeffs.push_back(v.get<double>());
    return polynomial(std::move(coeffs));
}

}  // namespace

std::string degree_pair_to_json(const edge_perspective& ep) {
    return pair_json("edge", ep.lambda, ep.rho).dump(2);
}

std::string degree_pair_to_json(const node_perspective& np) {
    return pair_json("node", np.lambda_nodes, np.check_nodes).dump(2);
}

edge_perspective edge_perspective_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("bad degree pair JSON: ") + e.what());
    }
    const std::string perspective = j.value("perspective", "edge");
    polynomial a = poly_from(j, "lambda");
    polynomial b = poly_from(j, "rho");
    if (perspective == "edge") {
        edge_perspective ep{std::move(a), std::move(b)};
        ep.validate();
        return ep;
    }
    if (perspective == "node") {
        return node_to_edge(node_perspective{std::move(a), std::move(b)});
    }
    throw config_error("unknown perspective \"" + perspective + "\"");
}

void save_degree_pair(const std::string& path, const edge_perspective& ep) {
    std::ofstream f(path);
    if (!f) throw config_error("cannot open " + path + " for writing");
    f << degree_pair_to_json(ep) << '\n';
}

edge_perspective load_degree_pair(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return edge_perspective_from_json(ss.str());
}

void write_received_csv(std::ostream& os, const received_word& rw) {
    os << "index,kind,value\n";
    const bool real_valued = rw.channel.kind() == channel_kind::biawgn;
    for (std::size_t i = 0; i < rw.symbols.size(); ++i) {
        const double s = rw.symbols[i];
        if (real_valued) {
            os << i << ",real," << s << '\n';
        } else if (s == 0.0) {
            os << i << ",erased,0\n";
        } else {
            os << i << ",known," << (s > 0 ? 1 : -1) << '\n';
        }
    }
}

received_word read_received_csv(std::istream& is, const channel_model& ch) {
    received_word rw{ch, {}};
    std::string line;
    if (!std::getline(is, line) || line.rfind("index,kind,value", 0) != 0) {
        throw config_error("received-word CSV must start with index,kind,value");
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string idx, kind, value;
        if (!std::getline(ss, idx, ',') || !std::getline(ss, kind, ',') ||
            !std::getline(ss, value)) {
            throw config_error("bad received-word CSV row: " + line);
        }
        if (static_cast<std::size_t>(std::stoull(idx)) != rw.symbols.size()) {
            throw config_error("received-word CSV rows must be in index order");
        }
        if (kind == "erased") {
            rw.symbols.push_back(0.0);
        } else if (kind == "known" || kind == "real") {
            rw.symbols.push_back(std::stod(value));
        } else {
            throw config_error("unknown symbol kind \"" + kind + "\"");
        }
    }
    return rw;
}

}  // namespace ldpc
