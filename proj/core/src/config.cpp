#include "milnorwb/config.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>

namespace mwb {

namespace {

nlohmann::json config_json() {
    const char* path = std::getenv("MILNOR_WB_CONFIG");
    if (!path) return {};
    std::ifstream in(path);
    if (!in) return {};
    nlohmann::json j;
    in >> j;
    return j;
}

}  // namespace

Bounds load_bounds() {
    Bounds b;
    auto j = config_json();
    if (j.contains("height")) b.height = j["height"].get<int>();
    if (j.contains("degree")) b.degree = j["degree"].get<int>();
    if (j.contains("weight")) b.weight = j["weight"].get<int>();
    if (j.contains("prime_bound")) b.prime_bound = j["prime_bound"].get<int>();
    return b;
}

std::string data_dir() {
    auto j = config_json();
    if (j.contains("data_dir")) return j["data_dir"].get<std::string>();
    if (const char* d = std::getenv("MILNOR_WB_DATA")) return d;
    return "data";
}

}  // namespace mwb
