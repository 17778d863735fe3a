#include "liftcert/config.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "liftcert/errors.hpp"

namespace liftcert {

void Config::validate() const {
  if (assignments_cap == 0 || expansions_cap == 0 || signings_cap == 0 ||
      scan_exhaustive_limit == 0)
    throw DomainError("config: caps must be positive");
  if (scan_samples < 1) throw DomainError("config: scan_samples must be positive");
  if (!(float_slack > 0.0) || float_slack > 1e-3)
    throw DomainError("config: float_slack must lie in (0, 1e-3]");
  if (threads < 0) throw DomainError("config: threads must be >= 0");
  if (format != "text" && format != "json" && format != "csv")
    throw DomainError("config: format must be 'text', 'json', or 'csv'");
}

PartitionCaps Config::caps() const { return PartitionCaps{assignments_cap, expansions_cap}; }

ScanOptions Config::scan_options() const {
  ScanOptions opt;
  opt.exhaustive_limit = scan_exhaustive_limit;
  opt.sample_count = scan_samples;
  opt.seed = seed;
  opt.float_slack = float_slack;
  opt.caps = caps();
  return opt;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    if (!value.empty() && value[0] == '-') throw std::invalid_argument("negative");
    std::uint64_t v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("config: bad integer for " + key + ": '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("config: bad integer for " + key + ": '" + value + "'");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("config: bad number for " + key + ": '" + value + "'");
  }
}

}  // namespace

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "assignments_cap") cfg.assignments_cap = parse_u64(key, value);
    else if (key == "expansions_cap") cfg.expansions_cap = parse_u64(key, value);
    else if (key == "signings_cap") cfg.signings_cap = parse_u64(key, value);
    else if (key == "scan_exhaustive_limit") cfg.scan_exhaustive_limit = parse_u64(key, value);
    else if (key == "scan_samples") cfg.scan_samples = parse_int(key, value);
    else if (key == "float_slack") cfg.float_slack = parse_double(key, value);
    else if (key == "seed") cfg.seed = parse_u64(key, value);
    else if (key == "threads") cfg.threads = parse_int(key, value);
    else if (key == "format") cfg.format = value;
    else throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return cfg;
}

}  // namespace liftcert
