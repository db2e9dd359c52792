#include "numsg/serialize.hpp"

namespace numsg {

using nlohmann::json;

json to_json(const InvariantRecord& r) {
  json j = json::object();
  j["m"] = r.m;
  j["F"] = r.F;
  j["c"] = r.c;
  j["g"] = r.g;
  j["L"] = r.L;
  j["e"] = r.e;
  j["t"] = r.t;
  j["q"] = r.q;
  j["rho"] = r.rho;
  j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  j["W"] = r.W;
  j["E"] = r.E;
  return j;
}

json to_json(const CompareReport& r) {
  return json{
      {"P", property_name(r.P)},
      {"Q", property_name(r.Q)},
      {"bound", r.genus_bound},
      {"count", r.count_Q_minus_P},
      {"witnesses", r.witnesses},
      {"verdict", to_string(r.verdict)},
  };
}

json stats_json(const ExplorationStats& s) {
  json out = json::array();
  for (const auto& g : s.per_genus) {
    out.push_back(json{{"N", g.N}, {"t", g.t}, {"p", g.p}, {"eE", g.eE},
                       {"minW", g.min_wilf}});
  }
  return out;
}

json check_json(const std::vector<std::pair<PropertyId, bool>>& results) {
  json out = json::object();
  for (const auto& [p, ok] : results) out[std::string(property_name(p))] = ok;
  return out;
}

}  // namespace numsg
