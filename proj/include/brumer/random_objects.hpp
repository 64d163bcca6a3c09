#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "brumer/fitting.hpp"
#include "brumer/gmodule.hpp"
#include "brumer/group.hpp"
#include "brumer/group_ring.hpp"
#include "brumer/ritter_weiss.hpp"

namespace brumer {

using Rng = std::mt19937_64;

// Abelian groups d_1 | d_2 | ... of order at most `max_order`, each paired with one
// involution c per Aut(G)-orbit (involutions are classified by their 2-height).
std::vector<GroupPtr> involution_groups(long max_order);

// 2-height of an element: the largest k with x in 2^k G (capped at 30).
long two_height(const FiniteAbelianGroup& g, long x);

// Small finite G-modules: twisted cyclic groups, sums of them, and quotients
// Z[G] / (N, random relations).
GModule random_finite_module(const GroupPtr& g, Rng& rng);

GroupRingElement random_group_ring_element(const GroupPtr& g, Rng& rng, long bound);
MinusElement random_minus_element(const GroupPtr& g, Rng& rng, long bound);
Presentation<MinusElement> random_minus_presentation(const GroupPtr& g, Rng& rng, std::size_t size, long bound);

// S is nonempty. With `ramified_outside`, may add ramified places outside S and T.
std::vector<LocalPlace> random_place_configuration(const GroupPtr& g, Rng& rng, bool ramified_outside);

}  // namespace brumer
