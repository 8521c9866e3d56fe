#include "kontsevich/io.hpp"

#include <algorithm>

#include <json.hpp>

namespace kontsevich {

using nlohmann::json;

namespace {

json two_row_json(const TwoRowWord& w) {
  json j;
  j["alpha"] = w.alpha;
  j["beta"] = w.beta;
  return j;
}

}  // namespace

std::string two_row_to_json(const TwoRowWord& w) { return two_row_json(w).dump(); }

std::string ncpoly_to_json(const NCPoly& p) {
  json terms = json::array();
  for (const auto& [w, c] : p.canonical_terms())
    terms.push_back({{"word", format_word(w)}, {"coeff", c.str()}});
  return json{{"terms", std::move(terms)}}.dump();
}

std::string commpoly_to_json(const CommPoly& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back({{"x", k.x}, {"y", k.y}, {"coeff", c.str()}});
  return json{{"terms", std::move(terms)}}.dump();
}

std::string qpoly_to_json(const QPoly& p) {
  json terms = json::array();
  for (const auto& [k, qc] : p.terms()) {
    json qs = json::array();
    for (const auto& [e, c] : qc) qs.push_back({e, c.str()});
    terms.push_back({{"x", k.x}, {"y", k.y}, {"q", std::move(qs)}});
  }
  return json{{"terms", std::move(terms)}}.dump();
}

std::string positions_to_json(const std::vector<int>& v) {
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  return json(sorted).dump();
}

std::string report_to_json(const VerifyReport& rep) {
  json j{{"id", rep.id},
         {"status", rep.status_name()},
         {"compared", rep.compared},
         {"discarded", rep.discarded},
         {"seconds", rep.seconds}};
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  if (rep.certified_window >= 0) j["certified_window"] = rep.certified_window;
  return j.dump();
}

std::string ncpoly_to_text(const NCPoly& p) {
  std::string out;
  for (const auto& [w, c] : p.canonical_terms()) {
    out += c.str();
    out += " * ";
    out += format_word(w);
    out += '\n';
  }
  return out;
}

}  // namespace kontsevich
