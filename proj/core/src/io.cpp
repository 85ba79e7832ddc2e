#include "sdw/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sdw {

using nlohmann::json;

namespace {

int line_of_offset(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ":" + std::to_string(line_of_offset(text, e.byte)) +
                     ": JSON parse error: " + e.what());
  }
}

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw InputError(origin + ": " + msg);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot open file for writing");
  out << content;
}

AlgebraPtr parse_algebra(const std::string& text, const std::string& origin) {
  json j = parse_json(text, origin);
  if (!j.is_object()) fail(origin, "expected a JSON object");
  if (!j.contains("name") || !j["name"].is_string()) fail(origin, "missing string field 'name'");
  if (!j.contains("size") || !j["size"].is_number_integer())
    fail(origin, "missing integer field 'size'");
  if (!j.contains("signature") || !j["signature"].is_array())
    fail(origin, "missing array field 'signature'");
  if (!j.contains("tables") || !j["tables"].is_object())
    fail(origin, "missing object field 'tables'");

  std::string name = j["name"].get<std::string>();
  int size = j["size"].get<int>();
  std::vector<OpSymbol> symbols;
  for (const auto& s : j["signature"]) {
    if (!s.is_object() || !s.contains("name") || !s.contains("arity"))
      fail(origin, "signature entries must be {\"name\":..,\"arity\":..}");
    symbols.push_back({s["name"].get<std::string>(), s["arity"].get<int>()});
  }
  std::vector<std::vector<El>> tables;
  for (const auto& s : symbols) {
    if (!j["tables"].contains(s.name)) fail(origin, "missing table for operation '" + s.name + "'");
    const auto& t = j["tables"][s.name];
    if (!t.is_array()) fail(origin, "table of '" + s.name + "' must be an array");
    std::vector<El> flat;
    flat.reserve(t.size());
    for (const auto& v : t) {
      if (!v.is_number_integer()) fail(origin, "table of '" + s.name + "' has a non-integer entry");
      flat.push_back(v.get<El>());
    }
    tables.push_back(std::move(flat));
  }
  if (j["tables"].size() != symbols.size()) fail(origin, "tables for unknown operations present");
  try {
    return std::make_shared<FiniteAlgebra>(std::move(name), size, Signature(std::move(symbols)),
                                           std::move(tables));
  } catch (const InputError& e) {
    fail(origin, e.what());
  }
}

AlgebraPtr load_algebra(const std::string& path) {
  return parse_algebra(read_text_file(path), path);
}

std::string algebra_to_json(const FiniteAlgebra& A) {
  json j;
  j["name"] = A.name();
  j["size"] = A.size();
  j["signature"] = json::array();
  json tables = json::object();
  for (int op = 0; op < A.signature().size(); ++op) {
    j["signature"].push_back({{"name", A.signature().name(op)}, {"arity", A.signature().arity(op)}});
    tables[A.signature().name(op)] = A.table(op);
  }
  j["tables"] = std::move(tables);
  return j.dump(2) + "\n";
}

void save_algebra(const FiniteAlgebra& A, const std::string& path) {
  write_text_file(path, algebra_to_json(A));
}

Partition parse_partition(const std::string& text, int carrier_size, const std::string& origin) {
  json j = parse_json(text, origin);
  if (!j.is_array()) fail(origin, "expected a JSON array of blocks");
  std::vector<std::vector<El>> blocks;
  for (const auto& b : j) {
    if (!b.is_array()) fail(origin, "each block must be an array");
    std::vector<El> block;
    for (const auto& v : b) {
      if (!v.is_number_integer()) fail(origin, "block entries must be integers");
      block.push_back(v.get<El>());
    }
    blocks.push_back(std::move(block));
  }
  try {
    return Partition::from_blocks(carrier_size, blocks);
  } catch (const InputError& e) {
    fail(origin, e.what());
  }
}

Partition load_partition(const std::string& path, int carrier_size) {
  return parse_partition(read_text_file(path), carrier_size, path);
}

std::string partition_to_json(const Partition& p) {
  json j = json::array();
  for (const auto& block : p.blocks()) j.push_back(block);
  return j.dump();
}

void save_partition(const Partition& p, const std::string& path) {
  write_text_file(path, partition_to_json(p) + "\n");
}

std::vector<El> load_map(const std::string& path) {
  json j = parse_json(read_text_file(path), path);
  if (!j.is_object() || !j.contains("map") || !j["map"].is_array())
    fail(path, "expected {\"map\": [ints]}");
  std::vector<El> out;
  for (const auto& v : j["map"]) {
    if (!v.is_number_integer()) fail(path, "map entries must be integers");
    out.push_back(v.get<El>());
  }
  return out;
}

void save_map(const std::vector<El>& map, const std::string& path) {
  json j;
  j["map"] = map;
  write_text_file(path, j.dump() + "\n");
}

}  // namespace sdw
