#include "carter/group_io.hpp"

#include "carter/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace carter {

NamedGroup parse_group_json(std::string const &text, Limits const &limits)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const &e) {
    throw DomainError(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators"))
    throw DomainError("group file needs \"degree\" and \"generators\"");
  if (!doc["degree"].is_number_integer() || doc["degree"].get<std::int64_t>() < 1)
    throw DomainError("\"degree\" must be a positive integer");
  auto const degree = doc["degree"].get<std::size_t>();
  if (degree > limits.max_degree)
    throw CapacityError("degree " + std::to_string(degree) + " exceeds cap " +
                        std::to_string(limits.max_degree));
  if (!doc["generators"].is_array())
    throw DomainError("\"generators\" must be an array");
  std::vector<Permutation> gens;
  for (auto const &row : doc["generators"]) {
    if (!row.is_array() || row.size() != degree)
      throw DomainError("generator length differs from degree");
    std::vector<Point> images;
    for (auto const &x : row) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
        throw DomainError("generator entries must be non-negative integers");
      images.push_back(x.get<Point>());
    }
    gens.emplace_back(std::move(images));
  }
  std::string name = doc.value("name", std::string{});
  return {std::move(name), Group::from_generators(degree, std::move(gens), limits)};
}

NamedGroup read_group_file(std::filesystem::path const &path, Limits const &limits)
{
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot open group file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_json(buf.str(), limits);
}

std::string group_to_json(std::string const &name, Group const &g)
{
  nlohmann::ordered_json doc;
  doc["name"] = name;
  doc["degree"] = g.degree();
  auto gens = nlohmann::ordered_json::array();
  for (auto const &p : g.generators())
    gens.push_back(std::vector<Point>(p.images().begin(), p.images().end()));
  doc["generators"] = std::move(gens);
  return doc.dump();
}

void write_group_file(std::filesystem::path const &path, std::string const &name,
                      Group const &g)
{
  std::ofstream out(path);
  if (!out)
    throw DomainError("cannot write " + path.string());
  out << group_to_json(name, g) << '\n';
}

} // namespace carter
