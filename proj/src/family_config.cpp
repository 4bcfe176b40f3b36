#include "wreathlab/family_config.hpp"

#include <fstream>

#include "wreathlab/errors.hpp"

namespace wreathlab {

namespace {

const char* param_name_for(const std::string& group_name) {
  if (group_name == "Z^n" || group_name == "S_n") return "n";
  if (group_name == "F_k") return "k";
  if (group_name == "Z/m") return "m";
  return nullptr;
}

GroupDescriptor group_from_json(const nlohmann::json& entry, size_t position) {
  const std::string where = "groups[" + std::to_string(position) + "]";
  if (!entry.is_object()) throw InputError(where + " must be an object");
  for (const auto& [key, value] : entry.items()) {
    (void)value;
    if (key != "name" && key != "params") throw InputError(where + ": unknown key '" + key + "'");
  }
  if (!entry.contains("name") || !entry["name"].is_string())
    throw InputError(where + " needs a string 'name'");
  const std::string name = entry["name"].get<std::string>();
  const char* pname = param_name_for(name);

  std::optional<long long> param;
  if (entry.contains("params")) {
    const auto& params = entry["params"];
    if (!params.is_object()) throw InputError(where + ".params must be an object");
    if (pname == nullptr && !params.empty())
      throw InputError(where + ": '" + name + "' takes no parameters");
    for (const auto& [key, value] : params.items()) {
      if (pname == nullptr || key != pname)
        throw InputError(where + ".params: unknown key '" + key + "' for '" + name + "'");
      if (!value.is_number_integer())
        throw InputError(where + ".params." + key + " must be an integer");
      param = value.get<long long>();
    }
  }
  if (pname != nullptr && !param)
    throw InputError(where + ": '" + name + "' needs params." + pname);
  return make_zoo_group(name, param);
}

}  // namespace

Family family_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("family config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "groups") throw InputError("family config: unknown key '" + key + "'");
  }
  if (!doc.contains("groups") || !doc["groups"].is_array())
    throw InputError("family config needs a 'groups' array");
  const auto& list = doc["groups"];
  if (list.empty()) throw InputError("family config needs at least one group");
  std::vector<GroupDescriptor> groups;
  for (size_t i = 0; i < list.size(); ++i) groups.push_back(group_from_json(list[i], i));
  return Family::finite(std::move(groups));
}

Family family_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open family config '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("family config '" + path + "' is not valid JSON: " + e.what());
  }
  return family_from_json(doc);
}

}  // namespace wreathlab
