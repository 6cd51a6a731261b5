#pragma once

#include "carter/group.hpp"

#include <filesystem>
#include <string>

namespace carter {

struct NamedGroup {
  std::string name;
  Group group;
};

/// Parses `{"name": ..., "degree": d, "generators": [[...], ...]}` with
/// 0-based image arrays. Throws DomainError on malformed input.
NamedGroup parse_group_json(std::string const &text, Limits const &limits = {});
NamedGroup read_group_file(std::filesystem::path const &path, Limits const &limits = {});

std::string group_to_json(std::string const &name, Group const &g);
void write_group_file(std::filesystem::path const &path, std::string const &name,
                      Group const &g);

} // namespace carter
