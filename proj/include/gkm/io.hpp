#pragma once

#include <set>
#include <string>
#include <vector>

#include "gkm/chenruan.hpp"
#include "gkm/frobenius.hpp"
#include "gkm/graphsum.hpp"

namespace gkm::io {

// Character-table file, pre-context (literals kept as strings).
struct RawTable {
  int order = 1;
  long long exponent = 1;
  std::vector<std::string> labels;
  std::vector<int> sizes, centralizers, inverse;
  std::vector<std::vector<std::string>> chars;
  std::set<long long> radicands;  // scanned from the literals
};

RawTable load_table_raw(const std::string& path);
GroupData instantiate_table(const RawTable& raw, const ContextPtr& ctx);

// GKM target file; extra radicands widen the scalar context (e.g. when a
// genus-zero data file carries radical literals).
GKMTarget load_target(const std::string& path, const std::vector<long long>& extra_radicands = {});

GenusZeroFile load_genus_zero_file(const std::string& path);
std::vector<long long> scan_radicands(const GenusZeroFile& file);

// Deterministic serializations; fractions "p/q", radicals "sqrt(m)", roots of
// unity "zeta{n}^k".
std::string potential_to_json(const PotentialTable& t);
std::string potential_to_csv(const PotentialTable& t);
std::string potential_to_pretty(const PotentialTable& t);

// Parse back one emitted monomial string ("t_0^2*q_1", "1").
Expo parse_monomial(const VarTablePtr& vt, const std::string& s);

}  // namespace gkm::io
