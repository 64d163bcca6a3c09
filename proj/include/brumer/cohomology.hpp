#pragma once

#include <cstddef>
#include <vector>

#include "brumer/gmodule.hpp"
#include "brumer/linalg.hpp"

namespace brumer {

enum class Resolution {
  kBar,      // inhomogeneous bar cochains; cost grows like |G|^degree
  kProduct,  // tensor product of the periodic resolutions of the cyclic factors
};

// Hom_G(P_*, M) for a free resolution P_*: degree i is M^{copies[i]}, and
// differentials[i] maps degree i to degree i + 1 (row convention).
struct CochainComplex {
  std::vector<std::size_t> copies;
  std::vector<IntMatrix> differentials;
  IntMatrix module_relations;

  IntMatrix relations(std::size_t degree) const { return repeat_relations(module_relations, copies[degree]); }
};

CochainComplex bar_cochains(const GModule& m, int top_degree);
CochainComplex product_cochains(const GModule& m, int top_degree);

// P_* tensor_G M; differentials[i] maps degree i + 1 to degree i.
struct ChainComplex {
  std::vector<std::size_t> copies;
  std::vector<IntMatrix> differentials;
  IntMatrix module_relations;

  IntMatrix relations(std::size_t degree) const { return repeat_relations(module_relations, copies[degree]); }
};

ChainComplex product_chains(const GModule& m, int top_degree);

Subquotient cohomology_group(const GModule& m, int degree, Resolution r = Resolution::kBar);
Subquotient homology_group(const GModule& m, int degree);
// Tate cohomology in any degree: the norm splice of homology and cohomology.
Subquotient tate_group(const GModule& m, int degree);

// Index of the bar cochain coordinate f(g_1, ..., g_k)[j].
std::size_t bar_index(const FiniteAbelianGroup& g, std::span<const long> tuple, std::size_t dim, std::size_t coord);

}  // namespace brumer
