#pragma once

#include <json.hpp>

#include "ylat/chain.hpp"
#include "ylat/level_set.hpp"
#include "ylat/monomial.hpp"
#include "ylat/tropical.hpp"
#include "ylat/verify.hpp"

namespace ylat::io {

using json = nlohmann::ordered_json;

json monomial_json(const Monomial& mu);
json chain_json(const Chain& c);
json family_json(const ChainFamily& fam);
json level_set_json(const LevelSet& level);
json facet_json(const Facet& f);
json rank_profile_json(const RankProfile& p);

/// Parse "1,2,3" or a JSON array "[1,2,3]" into integers.
std::vector<int> parse_int_list(const std::string& text);

/// Parse a monomial argument; when n >= 0 the dimension is validated.
Monomial parse_monomial(const std::string& text, int n = -1);

}   // namespace ylat::io
