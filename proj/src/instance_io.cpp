#include "treeot/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "treeot/error.hpp"

namespace treeot {

namespace {

using nlohmann::json;

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string vertex_id(const json& value, const std::string& where) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw Error(ErrorCode::ParseError, where + ": vertex id must be a string or an integer");
}

Rational mass_value(const json& value, const std::string& where) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(Integer(std::to_string(value.get<long long>()), 10));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, where + ": " + e.what());
  }
  throw Error(ErrorCode::ParseError, where + ": mass must be a \"p/q\" string or an integer");
}

Measure read_measure(const json& doc, const char* key, const Tree& tree, std::string_view source) {
  const std::string where = std::string(source) + ": /" + key;
  if (!doc.contains(key)) throw Error(ErrorCode::ParseError, where + " is missing");
  const auto& obj = doc.at(key);
  if (!obj.is_object()) throw Error(ErrorCode::ParseError, where + " must be an object");
  Measure m{std::vector<Rational>(tree.size(), Rational(0))};
  for (const auto& [id, value] : obj.items()) {
    const auto v = tree.index_of(id);
    m.mass[v] = mass_value(value, where + "/" + id);
    if (sign(m.mass[v]) < 0) throw Error(ErrorCode::NegativeMass, where + "/" + id + " is negative");
  }
  return m;
}

}  // namespace

Instance parse_instance(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    throw Error(ErrorCode::ParseError, std::string(source) + ":" + location(text, byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, std::string(source) + ": top level must be an object");

  const std::string src(source);
  if (!doc.contains("vertices") || !doc.at("vertices").is_array()) {
    throw Error(ErrorCode::ParseError, src + ": /vertices must be an array");
  }
  if (!doc.contains("edges") || !doc.at("edges").is_array()) {
    throw Error(ErrorCode::ParseError, src + ": /edges must be an array");
  }
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    vertices.push_back(vertex_id(doc["vertices"][i], src + ": /vertices/" + std::to_string(i)));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& e = doc["edges"][i];
    const std::string where = src + ": /edges/" + std::to_string(i);
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, where + " must be a pair [u, v]");
    edges.emplace_back(vertex_id(e[0], where + "/0"), vertex_id(e[1], where + "/1"));
  }
  Instance inst{validate_tree(vertices, edges), {}, {}};
  inst.mu = read_measure(doc, "mu", inst.tree, source);
  inst.nu = read_measure(doc, "nu", inst.tree, source);
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), path.string());
}

std::string write_instance(const Tree& tree, const Measure& mu, const Measure& nu) {
  json doc;
  doc["vertices"] = tree.labels();
  doc["edges"] = json::array();
  for (const auto& e : tree.edges()) doc["edges"].push_back({tree.label(e.lo), tree.label(e.hi)});
  auto masses = [&](const Measure& m) {
    json obj = json::object();
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m.mass[v] != 0) obj[tree.label(v)] = to_string(m.mass[v]);
    }
    return obj;
  };
  doc["mu"] = masses(mu);
  doc["nu"] = masses(nu);
  return doc.dump(2) + "\n";
}

}  // namespace treeot
