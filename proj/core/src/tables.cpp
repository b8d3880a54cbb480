#include "sscert/tables.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sscert {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

}  // namespace

std::vector<Rat> load_table_file(const std::string& path,
                                 const std::string& expect_name,
                                 std::size_t expect_count) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open table file");
  std::vector<Rat> out(expect_count);
  std::vector<bool> seen(expect_count, false);
  std::string line;
  bool name_checked = false;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = "line " + std::to_string(lineno);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string key, value;
      hs >> key >> value;
      if (key == "table:") {
        if (value != expect_name)
          fail(path, where + ": table name '" + value + "', expected '" +
                         expect_name + "'");
        name_checked = true;
      } else if (key == "entries:") {
        if (value != std::to_string(expect_count))
          fail(path, where + ": header declares " + value +
                         " entries, expected " +
                         std::to_string(expect_count));
      }
      continue;
    }
    std::istringstream ls(line);
    long idx = -1;
    std::string val;
    if (!(ls >> idx >> val))
      fail(path, where + ": expected 'index value'");
    std::string extra;
    if (ls >> extra) fail(path, where + ": trailing content '" + extra + "'");
    if (idx < 0 || static_cast<std::size_t>(idx) >= expect_count)
      fail(path, where + ": index " + std::to_string(idx) +
                     " outside 0.." + std::to_string(expect_count - 1));
    if (seen[static_cast<std::size_t>(idx)])
      fail(path, where + ": duplicate index " + std::to_string(idx));
    auto r = rat_parse(val);
    if (!r) fail(path, where + ": malformed rational '" + val + "'");
    out[static_cast<std::size_t>(idx)] = *r;
    seen[static_cast<std::size_t>(idx)] = true;
  }
  if (!name_checked) fail(path, "missing '# table: ...' header");
  for (std::size_t i = 0; i < expect_count; ++i)
    if (!seen[i])
      fail(path, "missing entry for index " + std::to_string(i) + " (have " +
                     std::to_string(static_cast<std::size_t>(
                         std::count(seen.begin(), seen.end(), true))) +
                     " of " + std::to_string(expect_count) + ")");
  return out;
}

SeedTables load_seed_tables(const std::string& dir) {
  SeedTables t;
  t.f0 = load_table_file(dir + "/f0.tab", "f0", 15);
  t.w0 = load_table_file(dir + "/w0.tab", "w0", 45);
  t.w1 = load_table_file(dir + "/w1.tab", "w1", 36);
  std::uint64_t d = fnv1a(1469598103934665603ull, "seed-tables");
  for (const auto* v : {&t.f0, &t.w0, &t.w1})
    for (const Rat& x : *v) d = rat_digest(d, x);
  t.digest = d;
  return t;
}

}  // namespace sscert
