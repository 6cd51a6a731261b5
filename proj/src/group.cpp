#include "carter/group.hpp"

#include "carter/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace carter {

namespace
{

void rebuild_orbit(ChainLevel &level, std::size_t degree)
{
  level.orbit.assign(1, level.base);
  level.position.assign(degree, -1);
  level.position[level.base] = 0;
  level.transversal.assign(1, Permutation::identity(degree));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point x = level.orbit[k];
    for (auto const &s : level.generators) {
      Point y = s[x];
      if (level.position[y] >= 0)
        continue;
      level.position[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(level.transversal[k] * s);
    }
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw CapacityError("group order exceeds 64 bits");
  return a * b;
}

} // namespace

/// Incremental deterministic Schreier-Sims. For each level it remembers how
/// many (orbit point, generator) Schreier pairs have been verified, so
/// returning to a level does not redo verified work.
class SchreierSims {
public:
  SchreierSims(std::size_t degree, std::vector<ChainLevel> levels,
               std::optional<std::uint64_t> target)
      : degree_(degree), levels_(std::move(levels)), target_(target)
  {
    for (auto const &level : levels_)
      progress_.push_back(level.orbit.size() * level.generators.size());
  }

  void add(Permutation const &g)
  {
    if (reached_target())
      return;
    auto [residue, drop] = sift(g, 0);
    if (residue.is_identity())
      return;
    insert(residue, 0, drop);
    run();
  }

  std::vector<ChainLevel> release() { return std::move(levels_); }

  std::uint64_t order() const
  {
    std::uint64_t n = 1;
    for (auto const &level : levels_)
      n = checked_mul(n, level.orbit.size());
    return n;
  }

private:
  std::size_t degree_;
  std::vector<ChainLevel> levels_;
  std::vector<std::size_t> progress_;
  std::optional<std::uint64_t> target_;
  std::vector<Point> scratch_;

  bool reached_target() const { return target_ && order() >= *target_; }

  std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t start)
  {
    for (std::size_t m = start; m < levels_.size(); ++m) {
      auto const &level = levels_[m];
      std::int32_t pos = level.position[h[level.base]];
      if (pos < 0)
        return {std::move(h), m};
      if (pos == 0)
        continue;
      compose_inverse_into(h, level.transversal[pos], scratch_);
      h = Permutation::from_images_unchecked(scratch_);
    }
    return {std::move(h), levels_.size()};
  }

  /// Adds `residue` as a strong generator of levels first..drop (appending a
  /// level when it fixes every current base point).
  void insert(Permutation const &residue, std::size_t first, std::size_t drop)
  {
    if (drop == levels_.size()) {
      ChainLevel level;
      level.base = residue.first_moved_point();
      levels_.push_back(std::move(level));
      progress_.push_back(0);
    }
    for (std::size_t m = first; m <= drop; ++m) {
      levels_[m].generators.push_back(residue);
      rebuild_orbit(levels_[m], degree_);
      progress_[m] = 0;
    }
  }

  void run()
  {
    std::ptrdiff_t l = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (l >= 0) {
      if (reached_target())
        return;
      bool extended = false;
      while (true) {
        auto &level = levels_[l];
        std::size_t ngens = level.generators.size();
        if (progress_[l] >= level.orbit.size() * ngens)
          break;
        std::size_t oi = progress_[l] / ngens;
        std::size_t gi = progress_[l] % ngens;
        Permutation const &s = level.generators[gi];
        Point image = s[level.orbit[oi]];
        std::int32_t target_pos = level.position[image];
        Permutation schreier = level.transversal[oi] * s;
        compose_inverse_into(schreier, level.transversal[target_pos], scratch_);
        schreier = Permutation::from_images_unchecked(scratch_);
        if (!schreier.is_identity()) {
          auto [residue, drop] = sift(std::move(schreier), l + 1);
          if (!residue.is_identity()) {
            insert(residue, l + 1, drop);
            l = static_cast<std::ptrdiff_t>(drop);
            extended = true;
            break;
          }
        }
        ++progress_[l];
      }
      if (!extended)
        --l;
    }
  }
};

Group::Group(std::size_t degree)
{
  if (degree == 0)
    throw DomainError("group of degree 0");
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data_ = std::move(data);
}

Group Group::make(std::size_t degree, std::vector<Permutation> gens,
                  std::vector<ChainLevel> chain)
{
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->generators = std::move(gens);
  data->chain = std::move(chain);
  for (auto const &level : data->chain)
    data->order = checked_mul(data->order, level.orbit.size());
  Group g(degree);
  g.data_ = std::move(data);
  return g;
}

Group Group::from_generators(std::size_t degree, std::vector<Permutation> gens,
                             Limits const &limits,
                             std::optional<std::uint64_t> known_order)
{
  if (degree > limits.max_degree)
    throw CapacityError("degree " + std::to_string(degree) + " exceeds cap " +
                        std::to_string(limits.max_degree));
  if (degree == 0)
    throw DomainError("group of degree 0");
  for (auto const &p : gens)
    if (p.degree() != degree)
      throw DomainError("generator degree does not match group degree");
  SchreierSims builder(degree, {}, known_order);
  for (auto const &p : gens)
    builder.add(p);
  Group g = make(degree, std::move(gens), builder.release());
  if (known_order && g.order() != *known_order)
    throw InternalError("stabilizer chain order " + std::to_string(g.order()) +
                        " differs from the known order " +
                        std::to_string(*known_order));
  return g;
}

Group Group::with_generators(std::vector<Permutation> const &extra) const
{
  std::vector<Permutation> gens = generators();
  SchreierSims builder(degree(), chain(), std::nullopt);
  for (auto const &p : extra) {
    if (p.degree() != degree())
      throw DomainError("generator degree does not match group degree");
    gens.push_back(p);
    builder.add(p);
  }
  return make(degree(), std::move(gens), builder.release());
}

std::vector<Point> Group::base() const
{
  std::vector<Point> b;
  for (auto const &level : chain())
    b.push_back(level.base);
  return b;
}

std::vector<Permutation> Group::strong_generators() const
{
  return chain().empty() ? std::vector<Permutation>{} : chain().front().generators;
}

bool Group::is_abelian() const
{
  for (std::size_t i = 0; i < generators().size(); ++i)
    for (std::size_t j = i + 1; j < generators().size(); ++j)
      if (generators()[i] * generators()[j] != generators()[j] * generators()[i])
        return false;
  return true;
}

bool Group::contains(Permutation const &p) const
{
  if (p.degree() != degree())
    throw DomainError("degree mismatch in membership test");
  std::vector<Point> scratch;
  Permutation h = p;
  for (auto const &level : chain()) {
    std::int32_t pos = level.position[h[level.base]];
    if (pos < 0)
      return false;
    if (pos == 0)
      continue;
    compose_inverse_into(h, level.transversal[pos], scratch);
    h = Permutation::from_images_unchecked(scratch);
  }
  return h.is_identity();
}

bool Group::is_subgroup_of(Group const &other) const
{
  if (other.degree() != degree())
    return false;
  return std::all_of(generators().begin(), generators().end(),
                     [&](Permutation const &p) { return other.contains(p); });
}

bool Group::same_elements(Group const &other) const
{
  return order() == other.order() && is_subgroup_of(other);
}

std::uint64_t Group::rank(Permutation const &p) const
{
  if (p.degree() != degree())
    throw DomainError("degree mismatch in rank");
  std::vector<Point> scratch;
  Permutation h = p;
  std::uint64_t r = 0;
  std::uint64_t radix = 1;
  for (auto const &level : chain()) {
    std::int32_t pos = level.position[h[level.base]];
    if (pos < 0)
      throw DomainError("rank of a non-member");
    r += radix * static_cast<std::uint64_t>(pos);
    radix *= level.orbit.size();
    if (pos == 0)
      continue;
    compose_inverse_into(h, level.transversal[pos], scratch);
    h = Permutation::from_images_unchecked(scratch);
  }
  if (!h.is_identity())
    throw DomainError("rank of a non-member");
  return r;
}

Permutation Group::unrank(std::uint64_t r) const
{
  if (r >= order())
    throw DomainError("rank out of range");
  std::vector<std::size_t> positions(chain().size());
  for (std::size_t m = 0; m < chain().size(); ++m) {
    positions[m] = r % chain()[m].orbit.size();
    r /= chain()[m].orbit.size();
  }
  Permutation g = Permutation::identity(degree());
  for (std::size_t m = chain().size(); m-- > 0;)
    g = g * chain()[m].transversal[positions[m]];
  return g;
}

void Group::for_each_element(Limits const &limits,
                             std::function<bool(Permutation const &)> const &visit) const
{
  if (order() > limits.max_enumeration)
    throw CapacityError("order " + std::to_string(order()) +
                        " exceeds enumeration cap " +
                        std::to_string(limits.max_enumeration));
  std::size_t const k = chain().size();
  if (k == 0) {
    visit(Permutation::identity(degree()));
    return;
  }
  // prefix[m] = u_{k-1} ... u_m; index[m] is the transversal index at level m.
  std::vector<Permutation> prefix(k + 1, Permutation::identity(degree()));
  std::vector<std::size_t> index(k, 0);
  std::size_t m = k;
  // Descend from the deepest level; level 0 varies fastest (rank order).
  while (true) {
    while (m > 0) {
      --m;
      prefix[m] = prefix[m + 1] * chain()[m].transversal[index[m]];
    }
    if (!visit(prefix[0]))
      return;
    // Advance the odometer.
    while (m < k && index[m] + 1 == chain()[m].orbit.size()) {
      index[m] = 0;
      ++m;
    }
    if (m == k)
      return;
    ++index[m];
    prefix[m] = prefix[m + 1] * chain()[m].transversal[index[m]];
  }
}

std::vector<Permutation> Group::elements(Limits const &limits) const
{
  std::vector<Permutation> out;
  if (order() <= limits.max_enumeration)
    out.reserve(order());
  for_each_element(limits, [&](Permutation const &p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::uint64_t uniform_index(std::mt19937_64 &rng, std::uint64_t n)
{
  if (n <= 1)
    return 0;
  std::uint64_t const limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

Permutation Group::random_element(std::uint64_t seed) const
{
  std::mt19937_64 rng(seed);
  return random_element(rng);
}

Permutation Group::random_element(std::mt19937_64 &rng) const
{
  std::vector<std::size_t> positions(chain().size());
  for (std::size_t m = 0; m < chain().size(); ++m)
    positions[m] = uniform_index(rng, chain()[m].orbit.size());
  Permutation g = Permutation::identity(degree());
  for (std::size_t m = chain().size(); m-- > 0;)
    g = g * chain()[m].transversal[positions[m]];
  return g;
}

std::vector<std::size_t> Group::orbit_lengths() const
{
  std::vector<std::int32_t> component(degree(), -1);
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < degree(); ++start) {
    if (component[start] >= 0)
      continue;
    std::vector<Point> queue{static_cast<Point>(start)};
    component[start] = static_cast<std::int32_t>(lengths.size());
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (auto const &g : generators()) {
        Point y = g[queue[k]];
        if (component[y] < 0) {
          component[y] = component[start];
          queue.push_back(y);
        }
      }
    lengths.push_back(queue.size());
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string describe(Group const &g)
{
  std::ostringstream os;
  os << "<degree " << g.degree() << ", order " << g.order() << ">";
  return os.str();
}

} // namespace carter
