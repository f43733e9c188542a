#include "heapmod/report.hpp"

#include <sstream>

#include "json.hpp"

namespace heapmod {

void Report::set_default(const std::string& key, const std::string& value) {
  defaults.push_back({key, value});
}
void Report::add_result(const std::string& key, const std::string& value) {
  results.push_back({key, value});
}
void Report::add_dump(const std::string& key, const std::string& value) {
  dumps.push_back({key, value});
}

std::string Report::text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (auto& [k, v] : defaults) os << "default " << k << " = " << v << "\n";
  for (auto& [k, v] : results) os << k << ": " << v << "\n";
  for (auto& [k, v] : dumps) os << "--- " << k << " ---\n" << v;
  os << "verdict: " << (ok ? "ok" : "fail") << "\n";
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json defs = nlohmann::ordered_json::object();
  for (auto& [k, v] : defaults) defs[k] = v;
  j["defaults"] = defs;
  nlohmann::ordered_json res = nlohmann::ordered_json::object();
  for (auto& [k, v] : results) res[k] = v;
  j["results"] = res;
  nlohmann::ordered_json dmp = nlohmann::ordered_json::object();
  for (auto& [k, v] : dumps) dmp[k] = v;
  j["dumps"] = dmp;
  j["ok"] = ok;
  return j.dump(2) + "\n";
}

}  // namespace heapmod
