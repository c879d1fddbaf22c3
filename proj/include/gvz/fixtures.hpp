#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gvz/group.hpp"

namespace gvz {

/// Parsed form of a fixture file name, smallgroup_<order>_<id>.grp.
struct FixtureName {
  std::size_t order;
  std::size_t id;
};

std::optional<FixtureName> parse_fixture_name(const std::string& filename);

/// Fixture files in `dir`, sorted by (order, id). Files not matching the
/// naming scheme are ignored. A missing directory yields an empty list and a
/// warning on `warn` (if given).
std::vector<std::string> fixture_paths(const std::string& dir, std::ostream* warn = nullptr);

/// Load one fixture; throws InvalidGroup if the order disagrees with the name.
Group load_fixture(const std::string& path, std::size_t cap = kDefaultOrderCap);

/// Every fixture in `dir`, labeled by file name without extension.
std::vector<std::pair<std::string, Group>> fixture_ingest(const std::string& dir,
                                                          std::ostream* warn = nullptr,
                                                          std::size_t cap = kDefaultOrderCap);

}  // namespace gvz
