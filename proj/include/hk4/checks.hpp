#pragma once

// Registry of the verification checks behind the `verify` command.  Every
// record compares an expected exact value (a frozen literal or an
// independently derived quantity) with a computed one, as canonical text;
// pass means byte equality.  Records are grouped into scopes and returned
// sorted by check id so reports are deterministic.

#include <cstdint>
#include <string>
#include <vector>

namespace hk4 {

struct CheckRecord {
  std::string id;        // stable identifier, e.g. "qdualint-575"
  std::string anchor;    // opaque cross-reference tag, e.g. "smalldisc"
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CheckOptions {
  std::uint64_t seed = 1;  // seed for the randomized identity checks
  int box = 3;             // search radius for lattice vector searches
  int truncation = -1;     // linear-system truncation degree; -1 = sharp + 4
};

// Scopes: "lattice", "sym2", "charclass", "cubic", or "all".  Throws
// PreconditionError on anything else.
std::vector<CheckRecord> run_checks(const std::string& scope, const CheckOptions& opts = {});

bool all_pass(const std::vector<CheckRecord>& records);

// Model axioms the arithmetic relies on; printed as report header lines.
std::vector<std::string> report_axioms();

}  // namespace hk4
