#include "ctx/system_io.hpp"

#include <iterator>
#include <set>

#include <nlohmann/json.hpp>

#include "ctx/error.hpp"

namespace ctx {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

void require_only_keys(const ordered_json& obj, std::initializer_list<std::string_view> keys, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) fail(where + ": unexpected key \"" + key + "\"");
  }
}

const ordered_json& member(const ordered_json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing \"" + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const ordered_json& arr, const std::string& where) {
  if (!arr.is_array()) fail(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string()) fail(where + ": expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

ContextBlock parse_context(const ordered_json& node, std::size_t ordinal, const std::set<ContentId>& declared) {
  std::string where = "contexts[" + std::to_string(ordinal) + "]";
  if (!node.is_object()) fail(where + ": expected an object");
  require_only_keys(node, {"id", "variables", "joint"}, where);

  const auto& id = member(node, "id", where);
  if (!id.is_string()) fail(where + ": \"id\" must be a string");
  ContextBlock block;
  block.id = id.get<std::string>();
  where = "context \"" + block.id + "\"";

  block.variables = string_list(member(node, "variables", where), where + " variables");
  if (block.variables.empty()) fail(where + ": no variables");
  std::set<ContentId> seen;
  for (const auto& q : block.variables) {
    if (!declared.contains(q)) fail(where + ": unknown content \"" + q + "\"");
    if (!seen.insert(q).second) fail(where + ": content \"" + q + "\" listed more than once");
  }

  const std::size_t k = block.variables.size();
  block.joint.assign(assignment_count(k), Rational());
  std::vector<bool> assigned(block.joint.size(), false);

  const auto& joint = member(node, "joint", where);
  if (!joint.is_array()) fail(where + ": \"joint\" must be an array");
  for (const auto& entry : joint) {
    if (!entry.is_object()) fail(where + ": joint entries must be objects");
    require_only_keys(entry, {"values", "prob"}, where + " joint entry");
    const auto& values = member(entry, "values", where + " joint entry");
    if (!values.is_object() || values.size() != k)
      fail(where + ": joint entry must assign exactly the context's variables");
    std::vector<int> tuple(k);
    for (std::size_t j = 0; j < k; ++j) {
      auto it = values.find(block.variables[j]);
      if (it == values.end()) fail(where + ": joint entry does not assign \"" + block.variables[j] + "\"");
      if (!it->is_number_integer() || (it->get<long>() != 1 && it->get<long>() != -1))
        fail(where + ": value of \"" + block.variables[j] + "\" must be 1 or -1");
      tuple[j] = it->get<int>();
    }
    const auto& prob = member(entry, "prob", where + " joint entry");
    if (!prob.is_string()) fail(where + ": \"prob\" must be a string literal such as \"1/2\"");

    const std::size_t index = assignment_index(tuple);
    if (assigned[index]) fail(where + ": assignment " + format_assignment(block.variables, index) + " listed twice");
    assigned[index] = true;
    block.joint[index] = Rational::parse(prob.get<std::string>());
  }
  return block;
}

}  // namespace

System parse_system(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail("document must be a JSON object");
  require_only_keys(doc, {"contents", "contexts"}, "document");

  System sys;
  sys.contents = string_list(member(doc, "contents", "document"), "contents");
  std::set<ContentId> declared;
  for (const auto& q : sys.contents)
    if (!declared.insert(q).second) fail("duplicate content \"" + q + "\"");

  const auto& contexts = member(doc, "contexts", "document");
  if (!contexts.is_array()) fail("\"contexts\" must be an array");
  std::set<ContextId> ids;
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    ContextBlock block = parse_context(contexts[i], i, declared);
    if (!ids.insert(block.id).second) fail("duplicate context id \"" + block.id + "\"");
    sys.contexts.push_back(std::move(block));
  }
  return sys;
}

System parse_system(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_system(text);
}

std::string serialize_system(const System& sys) {
  ordered_json doc;
  doc["contents"] = sys.contents;
  doc["contexts"] = ordered_json::array();
  for (const auto& block : sys.contexts) {
    ordered_json node;
    node["id"] = block.id;
    node["variables"] = block.variables;
    node["joint"] = ordered_json::array();
    const std::size_t k = block.variables.size();
    // Descending index walks the -1-first lexicographic order.
    for (std::size_t index = block.joint.size(); index-- > 0;) {
      if (block.joint[index].is_zero()) continue;
      ordered_json values = ordered_json::object();
      for (std::size_t j = 0; j < k; ++j) values[block.variables[j]] = assignment_value(index, k, j);
      node["joint"].push_back({{"values", values}, {"prob", block.joint[index].to_string()}});
    }
    doc["contexts"].push_back(std::move(node));
  }
  return doc.dump(2) + "\n";
}

}  // namespace ctx
