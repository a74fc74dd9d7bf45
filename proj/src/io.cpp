#include "k0/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "k0/error.hpp"

namespace k0::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw InputError("line " + std::to_string(line) + ": invalid JSON (" + e.what() + ")");
  }
}

void require_object(const json& doc, const std::set<std::string>& allowed, const std::string& what) {
  if (!doc.is_object()) throw InputError(what + ": top level must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!allowed.count(key)) throw InputError("unknown field \"" + key + "\"");
  if (doc.contains("format") && doc["format"] != kFormatVersion)
    throw InputError("field \"format\": unsupported version " + doc["format"].dump());
}

std::string as_string(const json& v, const std::string& field) {
  if (!v.is_string()) throw InputError("field \"" + field + "\": expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& field) {
  if (!v.is_array()) throw InputError("field \"" + field + "\": expected an array");
  return v;
}

std::string element(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

template <std::size_t N>
std::array<std::string, N> label_tuple(const json& v, const std::string& field, const std::set<std::string>& known) {
  if (!v.is_array() || v.size() != N)
    throw InputError("field \"" + field + "\": expected an array of " + std::to_string(N) + " labels");
  std::array<std::string, N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out[k] = as_string(v[k], element(field, k));
    if (!known.count(out[k])) throw InputError("field \"" + element(field, k) + "\": unknown label \"" + out[k] + "\"");
  }
  return out;
}

std::vector<std::string> label_list(const json& v, const std::string& field) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  const auto& arr = as_array(v, field);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_string(arr[i], element(field, i)));
    if (!seen.insert(out.back()).second)
      throw InputError("field \"" + element(field, i) + "\": duplicate label \"" + out.back() + "\"");
  }
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PresentationFile parse_presentation(std::string_view text) {
  const json doc = parse_json(text);
  require_object(doc, {"format", "generators", "heap_relations", "group_relations", "cofibration_legs", "zero"},
                 "presentation file");
  if (!doc.contains("generators")) throw InputError("missing field \"generators\"");

  PresentationFile f;
  f.generators = label_list(doc["generators"], "generators");
  const std::set<std::string> known(f.generators.begin(), f.generators.end());

  if (doc.contains("heap_relations")) {
    const auto& arr = as_array(doc["heap_relations"], "heap_relations");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto q = label_tuple<4>(arr[i], element("heap_relations", i), known);
      f.heap_relations.push_back({q[0], q[1], q[2], q[3], grothendieck::SquareKind::None});
    }
  }
  if (doc.contains("cofibration_legs")) {
    const auto& arr = as_array(doc["cofibration_legs"], "cofibration_legs");
    if (arr.size() != f.heap_relations.size())
      throw InputError("field \"cofibration_legs\": has " + std::to_string(arr.size()) + " entries for " +
                       std::to_string(f.heap_relations.size()) + " heap relations");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string field = element("cofibration_legs", i);
      try {
        f.heap_relations[i].kind = grothendieck::parse_square_kind(as_string(arr[i], field));
      } catch (const InputError& e) {
        throw InputError("field \"" + field + "\": " + e.what());
      }
    }
  }
  if (doc.contains("group_relations")) {
    const auto& arr = as_array(doc["group_relations"], "group_relations");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto t = label_tuple<3>(arr[i], element("group_relations", i), known);
      f.group_relations.push_back({t[0], t[1], t[2]});
    }
  }
  if (doc.contains("zero")) {
    f.zero = as_string(doc["zero"], "zero");
    if (!known.count(*f.zero)) throw InputError("field \"zero\": unknown label \"" + *f.zero + "\"");
  }
  return f;
}

std::string serialize(const PresentationFile& f) {
  json doc;
  doc["format"] = kFormatVersion;
  doc["generators"] = f.generators;
  json heap = json::array(), legs = json::array(), group = json::array();
  bool annotated = !f.heap_relations.empty();
  for (const auto& s : f.heap_relations) {
    heap.push_back({s.x, s.y, s.z, s.w});
    if (s.kind == grothendieck::SquareKind::None) annotated = false;
    legs.push_back(grothendieck::to_string(s.kind));
  }
  for (const auto& c : f.group_relations) group.push_back({c.sub, c.total, c.quotient});
  doc["heap_relations"] = heap;
  if (annotated) doc["cofibration_legs"] = legs;
  doc["group_relations"] = group;
  if (f.zero) doc["zero"] = *f.zero;
  return doc.dump(2) + "\n";
}

PresentationFile from_category(const toycats::CategoryData& data) {
  return {data.class_labels, data.pushouts, data.cofibers, data.zero};
}

heap::FiniteHeapTable parse_heap_table(std::string_view text) {
  const json doc = parse_json(text);
  require_object(doc, {"format", "elements", "bracket"}, "heap table file");
  if (!doc.contains("elements")) throw InputError("missing field \"elements\"");
  if (!doc.contains("bracket")) throw InputError("missing field \"bracket\"");

  auto elements = label_list(doc["elements"], "elements");
  const std::set<std::string> known(elements.begin(), elements.end());
  const std::size_t n = elements.size();
  auto index = [&](const std::string& label) {
    return static_cast<heap::Index>(std::find(elements.begin(), elements.end(), label) - elements.begin());
  };

  constexpr heap::Index unset = ~heap::Index{0};
  std::vector<heap::Index> table(n * n * n, unset);
  const auto& arr = as_array(doc["bracket"], "bracket");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto e = label_tuple<4>(arr[i], element("bracket", i), known);
    const std::size_t slot = (index(e[0]) * n + index(e[1])) * n + index(e[2]);
    if (table[slot] != unset)
      throw InputError("field \"" + element("bracket", i) + "\": triple [" + e[0] + "," + e[1] + "," + e[2] +
                       "] given twice");
    table[slot] = index(e[3]);
  }
  for (std::size_t s = 0; s < table.size(); ++s)
    if (table[s] == unset)
      throw InputError("field \"bracket\": not total, missing [" + elements[s / (n * n)] + "," +
                       elements[(s / n) % n] + "," + elements[s % n] + "]");
  return heap::FiniteHeapTable(std::move(elements), std::move(table));
}

std::string serialize(const heap::FiniteHeapTable& t) {
  json doc;
  doc["elements"] = t.elements();
  json rows = json::array();
  const auto n = static_cast<heap::Index>(t.size());
  for (heap::Index x = 0; x < n; ++x)
    for (heap::Index y = 0; y < n; ++y)
      for (heap::Index z = 0; z < n; ++z) rows.push_back({t.label(x), t.label(y), t.label(z), t.label(t(x, y, z))});
  doc["bracket"] = rows;
  return doc.dump(2) + "\n";
}

std::map<std::string, std::string> parse_mapping(std::string_view text) {
  const json doc = parse_json(text);
  require_object(doc, {"format", "map"}, "mapping file");
  if (!doc.contains("map") || !doc["map"].is_object())
    throw InputError("field \"map\": expected an object of label pairs");
  std::map<std::string, std::string> out;
  for (const auto& [from, to] : doc["map"].items()) out[from] = as_string(to, "map." + from);
  return out;
}

}  // namespace k0::io
