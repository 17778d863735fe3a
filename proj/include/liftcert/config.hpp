#pragma once
// Shared runtime limits and defaults, loadable from a key=value file and
// overridable by command-line flags.

#include <cstdint>
#include <string>

#include "liftcert/partition.hpp"
#include "liftcert/verifier.hpp"

namespace liftcert {

struct Config {
  std::uint64_t assignments_cap = 100000000;                    // q^v refusal threshold
  std::uint64_t expansions_cap = 10000000;                      // deletion-contraction budget
  std::uint64_t signings_cap = std::uint64_t(1) << 24;          // enumeration refusal threshold
  std::uint64_t scan_exhaustive_limit = std::uint64_t(1) << 20; // scans sample beyond this
  int scan_samples = 4096;
  double float_slack = 1e-9;
  std::uint64_t seed = 0;
  int threads = 0;              // 0 keeps the library default
  std::string format = "text";  // "text", "json", or "csv"

  // Caps must be positive, float_slack in (0, 1e-3], threads >= 0, format
  // known. Throws DomainError.
  void validate() const;

  PartitionCaps caps() const;
  ScanOptions scan_options() const;
};

// key=value lines; '#' starts a comment, blank lines are skipped, unknown
// keys and malformed values throw ParseError. Missing keys keep defaults.
Config parse_config(const std::string& text);

}  // namespace liftcert
