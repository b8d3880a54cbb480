#pragma once
// Seed-coefficient ingestion.  Three small tables of exact rationals drive
// every construction: the profile ansatz (15 odd-Chebyshev coefficients),
// the growing-branch corrector seed (45 even-Chebyshev coefficients, later
// refined in place by collocation), and the bounded-branch corrector
// (36 printed Chebyshev coefficients whose two tail entries are solved at
// build time, not stored).

#include <cstdint>
#include <string>
#include <vector>

#include "sscert/rational.hpp"

namespace sscert {

struct SeedTables {
  std::vector<Rat> f0;  // 15 entries
  std::vector<Rat> w0;  // 45 entries
  std::vector<Rat> w1;  // 36 entries
  std::uint64_t digest = 0;  // over all entries in table order
};

// Loads f0.tab / w0.tab / w1.tab from `dir`.  Throws std::runtime_error on
// a missing file, malformed rational, wrong or duplicate index, or a count
// that disagrees with either the expected size or the file's own header.
SeedTables load_seed_tables(const std::string& dir);

// Single-table loader (exposed for the error-path tests).
std::vector<Rat> load_table_file(const std::string& path,
                                 const std::string& expect_name,
                                 std::size_t expect_count);

}  // namespace sscert
