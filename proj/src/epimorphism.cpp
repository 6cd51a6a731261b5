#include "carter/epimorphism.hpp"

#include "carter/errors.hpp"

namespace carter {

namespace
{

Permutation join(Permutation const &a, Permutation const &b)
{
  std::size_t const da = a.degree();
  std::vector<Point> images(da + b.degree());
  for (std::size_t i = 0; i < da; ++i)
    images[i] = a[static_cast<Point>(i)];
  for (std::size_t j = 0; j < b.degree(); ++j)
    images[da + j] = static_cast<Point>(da + b[static_cast<Point>(j)]);
  return Permutation::from_images_unchecked(std::move(images));
}

} // namespace

Epimorphism::Epimorphism(Group source, Group target, std::vector<Permutation> images,
                         Limits const &limits)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
  if (images_.size() != source_.generators().size())
    throw DomainError("one image per source generator is required");
  std::vector<Permutation> pairs;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].degree() != target_.degree() || !target_.contains(images_[i]))
      throw DomainError("generator image outside the target group");
    pairs.push_back(join(source_.generators()[i], images_[i]));
  }
  Limits graph_limits = limits;
  graph_limits.max_degree = source_.degree() + target_.degree();
  graph_ = Group::from_generators(source_.degree() + target_.degree(), std::move(pairs),
                                  graph_limits);
  if (graph_.order() != source_.order())
    throw DomainError("generator images do not define a homomorphism");
  Group image = Group::from_generators(target_.degree(), images_, graph_limits);
  if (image.order() != target_.order())
    throw DomainError("generator images do not generate the target");
  // The graph acts faithfully on the source points, so every base point the
  // chain picked lies among them.
  for (auto const &level : graph_.chain())
    if (level.base >= source_.degree())
      throw InternalError("graph chain based outside the source points");
}

Epimorphism Epimorphism::identity(Group const &g)
{
  return Epimorphism(g, g, g.generators());
}

Permutation Epimorphism::operator()(Permutation const &g) const
{
  if (g.degree() != source_.degree())
    throw DomainError("degree mismatch in epimorphism evaluation");
  std::size_t const ds = source_.degree();
  std::size_t const dt = target_.degree();
  std::vector<Point> h(g.images().begin(), g.images().end());
  std::vector<Point> result(dt);
  for (std::size_t j = 0; j < dt; ++j)
    result[j] = static_cast<Point>(j);
  std::vector<Point> inv(ds);
  std::vector<Point> next(dt);
  for (auto const &level : graph_.chain()) {
    std::int32_t pos = level.position[h[level.base]];
    if (pos < 0)
      throw DomainError("element is not in the source group");
    if (pos == 0)
      continue;
    Permutation const &u = level.transversal[pos];
    for (std::size_t i = 0; i < ds; ++i)
      inv[u[static_cast<Point>(i)]] = static_cast<Point>(i);
    for (std::size_t i = 0; i < ds; ++i)
      h[i] = inv[h[i]];
    // result = tgt(u) * result
    for (std::size_t j = 0; j < dt; ++j)
      next[j] = result[u[static_cast<Point>(ds + j)] - ds];
    result.swap(next);
  }
  for (std::size_t i = 0; i < ds; ++i)
    if (h[i] != i)
      throw DomainError("element is not in the source group");
  return Permutation::from_images_unchecked(std::move(result));
}

Permutation apply_epimorphism(Epimorphism const &phi, Permutation const &g)
{
  return phi(g);
}

} // namespace carter
