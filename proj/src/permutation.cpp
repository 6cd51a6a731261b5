#include "carter/permutation.hpp"

#include "carter/errors.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace carter {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  if (images_.empty())
    throw DomainError("permutation of degree 0");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw DomainError("image table is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  if (degree == 0)
    throw DomainError("permutation of degree 0");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return from_images_unchecked(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree || used[from])
        throw DomainError("cycles are not disjoint or out of range");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return from_images_unchecked(std::move(inv));
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    std::uint64_t g = std::gcd(result, len);
    if (result / g > std::numeric_limits<std::uint64_t>::max() / len)
      throw DomainError("element order overflows 64 bits");
    result = result / g * len;
  }
  return result;
}

Point Permutation::first_moved_point() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw DomainError("degree mismatch in compose");
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = q[p[static_cast<Point>(i)]];
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation inverse(Permutation const &p) { return p.inverse(); }

Permutation conjugate(Permutation const &x, Permutation const &g)
{
  if (x.degree() != g.degree())
    throw DomainError("degree mismatch in conjugate");
  // x^g maps g(i) to g(x(i)).
  std::vector<Point> images(x.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[g[static_cast<Point>(i)]] = g[x[static_cast<Point>(i)]];
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return a.inverse() * b.inverse() * a * b;
}

Permutation power(Permutation const &p, std::int64_t exponent)
{
  Permutation base = exponent < 0 ? p.inverse() : p;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

void compose_inverse_into(Permutation const &p, Permutation const &q,
                          std::vector<Point> &out)
{
  // out = p * q^-1, i.e. out[i] = q^-1(p[i]).
  std::size_t const d = p.degree();
  std::vector<Point> qinv(d);
  for (std::size_t i = 0; i < d; ++i)
    qinv[q[static_cast<Point>(i)]] = static_cast<Point>(i);
  out.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    out[i] = qinv[p[static_cast<Point>(i)]];
}

std::string to_string(Permutation const &p)
{
  auto cycles = p.cycles();
  if (cycles.empty())
    return "()";
  std::ostringstream os;
  for (auto const &cycle : cycles) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      os << (i ? " " : "") << cycle[i];
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace carter
