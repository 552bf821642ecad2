#include "camon/config.hpp"

#include <fstream>
#include <sstream>

#include "camon/errors.hpp"

namespace camon {

namespace {

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

void RunConfig::apply_line(const std::string& raw) {
  std::string line = raw;
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  line = strip(line);
  if (line.empty()) return;
  const auto eq = line.find('=');
  if (eq == std::string::npos)
    throw ParseError("config line is not key = value: " + raw);
  const std::string key = strip(line.substr(0, eq));
  const std::string value = strip(line.substr(eq + 1));
  if (key == "monoid_budget")
    monoid_budget = std::stoll(value);
  else if (key == "table_budget")
    table_budget = std::stoll(value);
  else if (key == "closure_budget")
    closure_budget = std::stol(value);
  else if (key == "ring_budget")
    ring_budget = std::stoull(value);
  else if (key == "cache_dir")
    cache_dir = value;
  else if (key == "format")
    format = value;
  else if (key == "seed")
    seed = std::stoull(value);
  else if (key == "workers")
    workers = std::stoi(value);
  else if (key == "timings")
    timings = value == "1" || value == "true";
  else
    throw ParseError("unknown config key: " + key);
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  while (std::getline(in, line)) cfg.apply_line(line);
  return cfg;
}

}  // namespace camon
