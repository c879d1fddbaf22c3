#include "gvz/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <regex>

namespace gvz {

namespace fs = std::filesystem;

std::optional<FixtureName> parse_fixture_name(const std::string& filename) {
  static const std::regex re(R"(smallgroup_([0-9]+)_([0-9]+)\.grp)");
  std::smatch m;
  if (!std::regex_match(filename, m, re)) return std::nullopt;
  return FixtureName{std::stoul(m[1].str()), std::stoul(m[2].str())};
}

std::vector<std::string> fixture_paths(const std::string& dir, std::ostream* warn) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    if (warn) *warn << "warning: fixture directory '" << dir << "' not found\n";
    return {};
  }
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::string>> found;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto name = parse_fixture_name(entry.path().filename().string());
    if (name) found.push_back({{name->order, name->id}, entry.path().string()});
  }
  std::sort(found.begin(), found.end());
  std::vector<std::string> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

Group load_fixture(const std::string& path, std::size_t cap) {
  const auto name = parse_fixture_name(fs::path(path).filename().string());
  if (!name) throw ArgumentError("not a fixture file name: " + path);
  auto g = load_grp_file(path, cap);
  if (g.order() != name->order)
    throw InvalidGroup(path + ": file name declares order " + std::to_string(name->order) +
                       " but the group has order " + std::to_string(g.order()));
  return g;
}

std::vector<std::pair<std::string, Group>> fixture_ingest(const std::string& dir, std::ostream* warn,
                                                          std::size_t cap) {
  std::vector<std::pair<std::string, Group>> out;
  for (const auto& path : fixture_paths(dir, warn)) {
    auto g = load_fixture(path, cap);
    out.emplace_back(g.label(), std::move(g));
  }
  return out;
}

}  // namespace gvz
