#include "mmds/json_io.hpp"

#include <stdexcept>

namespace mmds {

nlohmann::json system_to_json(const System& sys) {
    nlohmann::json j;
    j["n"] = sys.n;
    j["blocks"] = sys.part.blocks;
    j["alpha"] = sys.alpha;
    if (sys.reversion)
        j["reversion"] = *sys.reversion;
    else
        j["reversion"] = nullptr;
    return j;
}

System system_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks") || !j.contains("alpha"))
        throw std::invalid_argument("system json: need n, blocks, alpha");
    int n = j.at("n").get<int>();
    auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    auto alpha = j.at("alpha").get<std::vector<int>>();
    std::optional<std::vector<int>> rev;
    if (j.contains("reversion") && !j.at("reversion").is_null())
        rev = j.at("reversion").get<std::vector<int>>();
    return build_system(n, blocks, alpha, rev);
}

} // namespace mmds
