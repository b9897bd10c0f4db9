#include "qcapelli/serialize.hpp"

#include <string>

#include "qcapelli/error.hpp"

namespace qcapelli {

namespace {

std::string rational_str(const Rational& q) { return q.numerator_str() + "/" + q.denominator_str(); }

std::string perm_word(const Perm& g, CliffordMono a) {
  std::string s = g.is_identity() ? "" : "g" + g.str();
  for (int i : a.indices()) s += (s.empty() ? "a" : "*a") + std::to_string(i);
  return s.empty() ? "1" : s;
}

}  // namespace

Json to_json(const FieldElement& a) {
  Json j = Json::object();
  for (const auto& [m, q] : a.terms()) j[std::to_string(m)] = rational_str(q);
  return j;
}

FieldElement field_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("field element must be a JSON object");
  FieldElement out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw UsageError("field coefficient must be a string");
    std::int64_t m = 0;
    try {
      std::size_t used = 0;
      m = std::stoll(key, &used);
      if (used != key.size()) throw UsageError("bad radicand '" + key + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad radicand '" + key + "'");
    }
    out += FieldElement::radical(m, Rational::parse(value.get<std::string>()));
  }
  return out;
}

Json to_json(const SergeevElement& x) {
  Json arr = Json::array();
  for (const auto& [k, c] : x.terms()) {
    Json t;
    t["perm"] = key_perm(k, x.n()).images;
    t["clifford"] = key_mono(k).indices();
    t["coeff"] = to_json(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

SergeevElement sergeev_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw UsageError("Sergeev element must be a nonempty JSON array");
  int n = static_cast<int>(j.at(0).at("perm").size());
  SergeevElement out(n);
  for (const auto& t : j) {
    Perm g{t.at("perm").get<std::vector<int>>()};
    if (g.size() != n) throw UsageError("inconsistent permutation sizes");
    auto idx = t.at("clifford").get<std::vector<int>>();
    out += SergeevElement::basis(n, g, CliffordMono::from_indices(idx), field_from_json(t.at("coeff")));
  }
  return out;
}

Json to_json(const NormalOrderedOperator& a) {
  const SuperAlphabet& alpha = a.alphabet();
  auto pairs = [&](const SuperMonomial& m) {
    Json arr = Json::array();
    for (auto g : m) arr.push_back({alpha.row(g), alpha.col(g)});
    return arr;
  };
  Json arr = Json::array();
  for (const auto& [k, c] : a.terms()) {
    Json t;
    t["xs"] = pairs(k.first);
    t["ds"] = pairs(k.second);
    t["coeff"] = to_json(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

NormalOrderedOperator operator_from_json(const Json& j, int N, int M) {
  if (!j.is_array()) throw UsageError("operator must be a JSON array");
  SuperAlphabet alpha(N, M);
  NormalOrderedOperator out(alpha);
  for (const auto& t : j) {
    auto xs = t.at("xs").get<std::vector<std::pair<int, int>>>();
    auto ds = t.at("ds").get<std::vector<std::pair<int, int>>>();
    out += NormalOrderedOperator::word(alpha, xs, ds, field_from_json(t.at("coeff")));
  }
  return out;
}

Json to_json(const SymPolynomial& p) {
  Json arr = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json t;
    t["exponents"] = it->first;
    t["coeff"] = to_json(it->second);
    arr.push_back(std::move(t));
  }
  return arr;
}

Json to_json(const std::vector<CharacterClass>& table, int n) {
  Json arr = Json::array();
  for (const auto& c : table) {
    Json t;
    t["representative"] = perm_word(key_perm(c.representative, n), key_mono(c.representative));
    t["size"] = c.size;
    t["value"] = to_json(c.value);
    arr.push_back(std::move(t));
  }
  return arr;
}

}  // namespace qcapelli
