#include "sdp/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sdp/error.hpp"

namespace sdp::io {

using nlohmann::json;
using nlohmann::ordered_json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileError", "cannot open file", {{"path", path}});
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("FileError", std::string("invalid JSON: ") + e.what(), {{"path", path}});
  }
  return j;
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("FileError", "cannot write file", {{"path", path}});
  out << j.dump(2) << "\n";
}

FiniteGroup group_from_json(const json& j) {
  if (!j.contains("table")) throw Error("FileError", "group file needs a \"table\" field");
  auto table = j.at("table").get<std::vector<std::vector<Elem>>>();
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
    throw Error("FileError", "declared order does not match the table",
                {{"order", j.at("order")}, {"rows", table.size()}});
  return FiniteGroup::validate(table);
}

ordered_json group_to_json(const FiniteGroup& g) {
  return ordered_json{{"order", g.order()}, {"table", g.rows()}};
}

FiniteGroup load_group(const std::string& path) { return group_from_json(load_json(path)); }

void save_group(const FiniteGroup& g, const std::string& path) {
  save_json(group_to_json(g), path);
}

namespace {

std::vector<int> parse_key(const std::string& key, size_t arity) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
  if (out.size() != arity)
    throw Error("FileError", "bad table key", {{"key", key}, {"expected_indices", arity}});
  return out;
}

}  // namespace

TotalSystem system_from_json(const json& j, const std::string& base_dir) {
  if (!j.contains("factors")) throw Error("FileError", "system file needs a \"factors\" field");
  std::vector<FiniteGroup> factors;
  for (const auto& f : j.at("factors")) {
    if (f.is_string()) {
      std::filesystem::path p = f.get<std::string>();
      if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
      factors.push_back(load_group(p.string()));
    } else {
      factors.push_back(group_from_json(f));
    }
  }
  if (j.contains("r") && j.at("r").get<int>() != static_cast<int>(factors.size()))
    throw Error("FileError", "declared rank does not match the factor list",
                {{"r", j.at("r")}, {"factors", factors.size()}});

  std::map<std::pair<int, int>, std::vector<std::vector<Elem>>> actions;
  if (j.contains("phi"))
    for (const auto& [key, tab] : j.at("phi").items()) {
      auto idx = parse_key(key, 2);
      actions[{idx[0], idx[1]}] = tab.get<std::vector<std::vector<Elem>>>();
    }
  std::map<std::tuple<int, int, int>, std::vector<std::vector<Elem>>> brackets;
  if (j.contains("bracket"))
    for (const auto& [key, tab] : j.at("bracket").items()) {
      auto idx = parse_key(key, 3);
      brackets[{idx[0], idx[1], idx[2]}] = tab.get<std::vector<std::vector<Elem>>>();
    }
  return TotalSystem::create(std::move(factors), actions, brackets);
}

ordered_json system_to_json(const TotalSystem& s) {
  ordered_json factors = ordered_json::array();
  for (int i = 1; i <= s.rank(); ++i) factors.push_back(group_to_json(s.factor(i)));
  ordered_json phi = ordered_json::object();
  for (int k = 2; k <= s.rank(); ++k)
    for (int j = 1; j < k; ++j)
      phi[std::to_string(k) + "," + std::to_string(j)] = s.action_rows(k, j);
  ordered_json bracket = ordered_json::object();
  for (int k = 3; k <= s.rank(); ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i)
        bracket[std::to_string(k) + "," + std::to_string(j) + "," + std::to_string(i)] =
            s.bracket_rows(k, j, i);
  return ordered_json{{"r", s.rank()}, {"factors", factors}, {"phi", phi}, {"bracket", bracket}};
}

TotalSystem load_system(const std::string& path) {
  return system_from_json(load_json(path),
                          std::filesystem::path(path).parent_path().string());
}

void save_system(const TotalSystem& s, const std::string& path) {
  save_json(system_to_json(s), path);
}

std::vector<std::vector<Elem>> maps_from_json(const json& j) {
  if (!j.contains("maps")) throw Error("FileError", "map file needs a \"maps\" field");
  return j.at("maps").get<std::vector<std::vector<Elem>>>();
}

}  // namespace sdp::io
