#pragma once

#include <json.hpp>

#include "symtrop/certify.hpp"
#include "symtrop/cone.hpp"
#include "symtrop/partition.hpp"
#include "symtrop/pencil.hpp"
#include "symtrop/symfn.hpp"

namespace symtrop {

using nlohmann::json;

inline json partition_json(const Partition& p) {
  json a = json::array();
  for (int part : p.parts()) a.push_back(part);
  return a;
}

inline json rat_row_json(const RatVec& row) {
  json a = json::array();
  for (const Rat& x : row) a.push_back(rat_str(x));
  return a;
}

inline json matrix_json(const Matrix& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(rat_row_json(row));
  return a;
}

inline json symfn_json(const SymFn& f) {
  json terms = json::array();
  for (const auto& [lambda, c] : f.terms())
    terms.push_back({{"partition", partition_json(lambda)}, {"coeff", rat_str(c)}});
  return {{"degree", f.degree()}, {"terms", terms}};
}

inline json cone_json(const Cone& c) {
  return {{"dim", c.dim()},
          {"inequalities", matrix_json(c.inequalities())},
          {"equations", matrix_json(c.equations())},
          {"rays", matrix_json(c.rays())},
          {"lineality", matrix_json(c.lineality())}};
}

inline json pencil_json(const GramPencil& p) {
  json blocks = json::array();
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    json rows = json::array();
    for (const auto& row : p.blocks[b]) {
      json r = json::array();
      for (const auto& e : row) r.push_back(symfn_json(e));
      rows.push_back(r);
    }
    blocks.push_back({{"label", p.labels[b]}, {"entries", rows}});
  }
  return {{"degree", 2 * p.d}, {"blocks", blocks}};
}

inline json report_json(const Report& r) {
  json out = json::array();
  for (const auto& c : r)
    out.push_back({{"check_name", c.name},
                   {"status", c.pass ? "pass" : "fail"},
                   {"witness", c.detail}});
  return out;
}

inline std::vector<RatVec> matrix_from_json(const json& j) {
  std::vector<RatVec> rows;
  for (const auto& jr : j) {
    RatVec row;
    for (const auto& e : jr) {
      if (e.is_string())
        row.push_back(rat_parse(e.get<std::string>()));
      else
        row.push_back(Rat(e.get<long>()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace symtrop
