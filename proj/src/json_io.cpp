#include "ylat/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace ylat::io {

json monomial_json(const Monomial& mu) { return json(mu.exponents()); }

json chain_json(const Chain& c) {
    json elements = json::array();
    for (const Monomial& mu : c.elements) elements.push_back(monomial_json(mu));
    return json{{"elements", elements}, {"colors", c.colors}, {"monotonic", c.monotonic()}};
}

json family_json(const ChainFamily& fam) {
    json chains = json::array();
    for (const Chain& c : fam.chains) chains.push_back(chain_json(c));
    return json{{"signature", fam.sig.d}, {"kind", to_string(fam.kind)}, {"chains", chains}};
}

json level_set_json(const LevelSet& level) {
    json members = json::array();
    for (const Monomial& mu : level.members) members.push_back(monomial_json(mu));
    auto [top, bottom] = extremes(level.sig);
    return json{{"signature", level.sig.d},
                {"size", level.members.size()},
                {"members", members},
                {"max", monomial_json(top)},
                {"min", monomial_json(bottom)}};
}

json facet_json(const Facet& f) {
    json edges = json::array();
    for (auto [l, r] : f.edges()) edges.push_back(json::array({l, r}));
    return edges;
}

json rank_profile_json(const RankProfile& p) {
    json levels = json::array();
    for (auto it = p.by_weight.rbegin(); it != p.by_weight.rend(); ++it)
        levels.push_back(json{{"weight", it->first}, {"size", it->second}});
    return json{{"levels", levels},
                {"symmetric", p.symmetric},
                {"unimodal", p.unimodal},
                {"total", p.total},
                {"max_level", p.max_level}};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string trimmed = text;
    size_t begin = trimmed.find_first_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("empty integer list");
    if (trimmed[begin] == '[') {
        json parsed = json::parse(trimmed);
        if (!parsed.is_array()) throw std::invalid_argument("expected a JSON array of integers");
        return parsed.get<std::vector<int>>();
    }
    std::vector<int> out;
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int value = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad integer list entry: " + item);
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

Monomial parse_monomial(const std::string& text, int n) {
    Monomial mu{parse_int_list(text)};
    if (n >= 0 && mu.n() != n) throw std::invalid_argument("monomial does not match --n");
    return mu;
}

}   // namespace ylat::io
