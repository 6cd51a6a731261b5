#pragma once

#include "carter/group.hpp"

namespace carter {

/**
 * A surjective homomorphism given by the images of the source generators.
 *
 * Internally the graph {(g, phi(g))} is held as a permutation group on the
 * disjoint union of both point sets; its stabilizer chain factors a source
 * element into strong generators whose target halves multiply to the image.
 */
class Epimorphism {
public:
  /// Throws DomainError if the images do not define a homomorphism onto `target`.
  Epimorphism(Group source, Group target, std::vector<Permutation> images,
              Limits const &limits = {});

  static Epimorphism identity(Group const &g);

  Group const &source() const noexcept { return source_; }
  Group const &target() const noexcept { return target_; }
  std::vector<Permutation> const &images() const noexcept { return images_; }

  /// Throws DomainError if g is not in the source.
  Permutation operator()(Permutation const &g) const;

private:
  Group source_;
  Group target_;
  std::vector<Permutation> images_;
  Group graph_;
};

Permutation apply_epimorphism(Epimorphism const &phi, Permutation const &g);

} // namespace carter
