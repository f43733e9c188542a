// Deterministic command reports: command echo, chosen defaults, verdicts,
// witnesses and structure dumps, printable as text or JSON with stable key
// order.
#pragma once

#include <string>
#include <vector>

namespace heapmod {

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> defaults;  // basepoint/window/seed/i0
  std::vector<std::pair<std::string, std::string>> results;   // verdicts and witnesses
  std::vector<std::pair<std::string, std::string>> dumps;     // named structure dumps
  bool ok = true;

  void set_default(const std::string& key, const std::string& value);
  void add_result(const std::string& key, const std::string& value);
  void add_dump(const std::string& key, const std::string& value);

  std::string text() const;
  std::string json() const;
};

}  // namespace heapmod
