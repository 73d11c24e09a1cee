#include "renflow/json_io.hpp"

#include <json.hpp>

namespace renflow {

namespace {

using Json = nlohmann::ordered_json;

Json poly_to_json(const SymbolPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json term;
    for (int i = 0; i < kNumSymbols; ++i) term[kSymbolNames[i]] = m[i];
    term["num"] = num_string(c);
    term["den"] = den_string(c);
    terms.push_back(term);
  }
  return terms;
}

SymbolPoly poly_from_json(const Json& j) {
  SymbolPoly p;
  for (const auto& term : j) {
    Monomial m;
    for (int i = 0; i < kNumSymbols; ++i) m[i] = term.at(kSymbolNames[i]).get<int>();
    p += SymbolPoly::monomial(m, rat_from_strings(term.at("num").get<std::string>(),
                                                  term.at("den").get<std::string>()));
  }
  return p;
}

Json series_json(const LaurentSeries& x) {
  Json j;
  j["min_exp"] = x.terms().empty() ? std::min(0, x.trunc()) : x.min_exp();
  j["trunc"] = x.trunc();
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms()) {
    Json term;
    term["exp"] = e;
    term["coeff"] = poly_to_json(c);
    terms.push_back(term);
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentSeries series_from(const Json& j) {
  const int trunc = j.at("trunc").get<int>();
  LaurentSeries x = LaurentSeries::zero(trunc);
  for (const auto& term : j.at("terms")) {
    const int e = term.at("exp").get<int>();
    if (e >= trunc) throw ConfigError("series term beyond its own window");
    x += LaurentSeries::monomial(e, poly_from_json(term.at("coeff")), trunc);
  }
  return x;
}

std::string dump(const Json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

std::string series_to_json(const LaurentSeries& x, int indent) {
  return dump(series_json(x), indent);
}

LaurentSeries series_from_json(const std::string& text) {
  return series_from(Json::parse(text));
}

std::string character_to_json(const Character& phi, int max_degree, int indent) {
  Json j;
  int min_trunc = LaurentSeries::kExactTrunc;
  bool uses[kNumSymbols] = {false, false, false, false};
  Json trees = Json::array();
  for (const auto& t : enumerate_trees(max_degree)) {
    LaurentSeries v = phi(t);
    min_trunc = std::min(min_trunc, v.trunc());
    for (const auto& [e, c] : v.terms()) {
      for (const auto& [m, q] : c.terms()) {
        for (int i = 0; i < kNumSymbols; ++i) uses[i] |= m[i] > 0;
      }
    }
    Json entry;
    entry["tree"] = t.encoding();
    entry["series"] = series_json(v);
    trees.push_back(entry);
  }
  Json symbols = Json::array();
  for (int i = 0; i < kNumSymbols; ++i) {
    if (uses[i]) symbols.push_back(kSymbolNames[i]);
  }
  j["metadata"] = Json{{"max_degree", max_degree},
                       {"min_trunc", min_trunc},
                       {"symbols", symbols}};
  j["trees"] = std::move(trees);
  return dump(j, indent);
}

Character character_from_json(const std::string& text) {
  Json j = Json::parse(text);
  auto values = std::make_shared<std::map<RootedTree, LaurentSeries, TreeLess>>();
  for (const auto& entry : j.at("trees")) {
    RootedTree t = RootedTree::parse(entry.at("tree").get<std::string>());
    (*values)[t] = series_from(entry.at("series"));
  }
  return Character::from_tree_fn([values](const RootedTree& t) {
    auto it = values->find(t);
    if (it == values->end()) {
      throw ConfigError("character dump has no value for tree " + t.encoding());
    }
    return it->second;
  });
}

std::string forests_to_json(const std::vector<Forest>& forests, int indent) {
  Json j = Json::array();
  for (const auto& f : forests) {
    Json trees = Json::array();
    for (const auto& t : f.trees()) trees.push_back(t.encoding());
    j.push_back(trees);
  }
  return dump(j, indent);
}

std::string locality_to_json(const LocalityReport& report, int indent) {
  Json j;
  j["is_local"] = report.is_local;
  j["checked_degree"] = report.checked_degree;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back(Json{{"forest", w.target}, {"coeff", series_json(w.s_dependent_part)}});
  }
  j["witnesses"] = std::move(witnesses);
  return dump(j, indent);
}

std::string structure_constants_to_json(int cutoff, int indent) {
  Json j;
  j["cutoff"] = cutoff;
  Json entries = Json::array();
  for (const auto& [ij, row] : structure_constants(cutoff)) {
    Json terms = Json::array();
    for (const auto& [k, c] : row) {
      terms.push_back(Json{{"k", k}, {"value", rat_string(c)}});
    }
    entries.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"terms", terms}});
  }
  j["entries"] = std::move(entries);
  return dump(j, indent);
}

namespace {

std::string forest_key(const Forest& f) { return f.is_empty() ? "1" : f.key(); }

Json tensor_to_json(const TensorSum& s) {
  Json arr = Json::array();
  for (const auto& [legs, c] : s.terms()) {
    arr.push_back(Json{{"left", forest_key(legs.first)},
                       {"right", forest_key(legs.second)},
                       {"coeff", poly_to_json(c)}});
  }
  return arr;
}

Json forest_poly_to_json(const ForestPolynomial& p) {
  Json arr = Json::array();
  for (const auto& [f, c] : p.terms()) {
    arr.push_back(Json{{"forest", forest_key(f)}, {"coeff", poly_to_json(c)}});
  }
  return arr;
}

}  // namespace

std::string hopf_dump_to_json(const Forest& f, int indent) {
  Json j;
  j["forest"] = forest_key(f);
  j["coproduct"] = tensor_to_json(coproduct(f));
  j["reduced"] = f.is_empty() ? Json::array() : tensor_to_json(reduced_coproduct(f));
  j["antipode"] = forest_poly_to_json(antipode(f));
  return dump(j, indent);
}

}  // namespace renflow
