#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "octa/exactmath/mpoly.hpp"

namespace octa {

/// {"vars": [...], "terms": [{"exp": [...], "num": "..", "den": ".."}]} with
/// terms in ascending lex order of exponent vectors.
inline nlohmann::ordered_json to_json(const MPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["den"] = c.get_den().get_str();
    t["exp"] = e;
    t["num"] = c.get_num().get_str();
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json out;
  out["terms"] = std::move(terms);
  out["vars"] = p.vars();
  return out;
}

inline MPoly mpoly_from_json(const nlohmann::json& j) {
  MPoly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms")) {
    Integer num(t.at("num").get<std::string>(), 10), den(t.at("den").get<std::string>(), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in polynomial JSON");
    Rational c(num, den);
    c.canonicalize();
    auto e = t.at("exp").get<Exponents>();
    if (e.size() != p.num_vars()) throw std::invalid_argument("exponent length mismatch in polynomial JSON");
    p.add_term(std::move(e), c);
  }
  return p;
}

}  // namespace octa
