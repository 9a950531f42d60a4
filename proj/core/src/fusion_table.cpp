#include "fusionscan/fusion_table.hpp"

#include <json.hpp>

namespace fusionscan {

FusionTable::FusionTable(std::vector<Int> dims, GroupTable group, DualityAssignment dual, std::vector<int> tensor)
    : rank_(static_cast<int>(dims.size())),
      dims_(std::move(dims)),
      group_(std::move(group)),
      dual_(std::move(dual)),
      tensor_(std::move(tensor)) {
  const auto r = static_cast<std::size_t>(rank_);
  if (rank_ < 1) throw Error("fusion table must have rank >= 1");
  if (dual_.size() != r) throw Error("duality size does not match rank");
  if (tensor_.size() != r * r * r) throw Error("tensor size does not match rank^3");
  if (group_.order() > rank_) throw Error("group order exceeds rank");
  for (int x = 0; x < rank_; ++x) {
    if (dims_[static_cast<std::size_t>(x)] < 1) throw Error("dimensions must be positive");
    const bool invertible = x < group_.order();
    if (invertible != (dims_[static_cast<std::size_t>(x)] == 1)) {
      throw Error("indices 0..n0-1 must be exactly the dimension-1 simples");
    }
    const int d = dual_(x);
    if (d < 0 || d >= rank_) throw Error("duality index out of range");
  }
}

Int FusionTable::globalDim() const {
  Int total = 0;
  for (Int d : dims_) total += d * d;
  return total;
}

TypeSignature FusionTable::signature() const {
  std::vector<DimCount> entries;
  for (Int d : dims_) {
    if (!entries.empty() && entries.back().dim == d) {
      ++entries.back().count;
    } else {
      entries.push_back({d, 1});
    }
  }
  return TypeSignature(std::move(entries));
}

FusionTable groupRingTable(const GroupTable& g) {
  const int n = g.order();
  std::vector<int> tensor(static_cast<std::size_t>(n * n * n), 0);
  DualityAssignment dual;
  for (int a = 0; a < n; ++a) {
    dual.dual.push_back(g.inverse(a));
    for (int b = 0; b < n; ++b) tensor[static_cast<std::size_t>((a * n + b) * n + g.mul(a, b))] = 1;
  }
  return FusionTable(std::vector<Int>(static_cast<std::size_t>(n), 1), g, std::move(dual), std::move(tensor));
}

std::string fusionTableToJson(const FusionTable& table) {
  using nlohmann::json;
  const int r = table.rank();
  const int n0 = table.pointedCount();
  json group = json::array();
  for (int a = 0; a < n0; ++a) {
    json row = json::array();
    for (int b = 0; b < n0; ++b) row.push_back(table.group().mul(a, b));
    group.push_back(std::move(row));
  }
  json tensor = json::array();
  for (int a = 0; a < r; ++a) {
    json slab = json::array();
    for (int b = 0; b < r; ++b) {
      json row = json::array();
      for (int c = 0; c < r; ++c) row.push_back(table.N(a, b, c));
      slab.push_back(std::move(row));
    }
    tensor.push_back(std::move(slab));
  }
  json j = {{"rank", r},
            {"dims", table.dims()},
            {"dual", table.duality().dual},
            {"group", std::move(group)},
            {"group_name", table.group().name()},
            {"tensor", std::move(tensor)}};
  return j.dump();
}

FusionTable fusionTableFromJson(const std::string& text) {
  using nlohmann::json;
  try {
    const json j = json::parse(text);
    const int r = j.at("rank").get<int>();
    auto dims = j.at("dims").get<std::vector<Int>>();
    DualityAssignment dual{j.at("dual").get<std::vector<int>>()};
    const auto& grp = j.at("group");
    const int n0 = static_cast<int>(grp.size());
    std::vector<int> mult;
    for (const auto& row : grp) {
      if (static_cast<int>(row.size()) != n0) throw Error("group table is not square");
      for (const auto& v : row) mult.push_back(v.get<int>());
    }
    std::vector<int> tensor;
    const auto& t = j.at("tensor");
    if (static_cast<int>(t.size()) != r) throw Error("tensor has wrong outer size");
    for (const auto& slab : t) {
      if (static_cast<int>(slab.size()) != r) throw Error("tensor slab has wrong size");
      for (const auto& row : slab) {
        if (static_cast<int>(row.size()) != r) throw Error("tensor row has wrong size");
        for (const auto& v : row) tensor.push_back(v.get<int>());
      }
    }
    if (static_cast<int>(dims.size()) != r) throw Error("dims length does not match rank");
    return FusionTable(std::move(dims), GroupTable(n0, std::move(mult), j.value("group_name", std::string())),
                       std::move(dual), std::move(tensor));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed fusion table JSON: ") + e.what());
  }
}

}  // namespace fusionscan
