#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "numsg/classifiers.hpp"
#include "numsg/explorer.hpp"
#include "numsg/semigroup.hpp"
#include "json.hpp"

namespace numsg {

/// Flat object with exactly m, F, c, g, L, e, t, q, rho, ratio, W, E.
/// ratio is null when e < 2.
nlohmann::json to_json(const InvariantRecord& r);

/// {P, Q, bound, count, witnesses, verdict}; count is |Q \ P|.
nlohmann::json to_json(const CompareReport& r);

/// Array indexed by genus of {N, t, p, eE, minW}.
nlohmann::json stats_json(const ExplorationStats& s);

nlohmann::json check_json(
    const std::vector<std::pair<PropertyId, bool>>& results);

}  // namespace numsg
