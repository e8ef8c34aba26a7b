#pragma once

#include <cstddef>
#include <vector>

#include "zsurg/groups.hpp"

namespace oracle {

/// Number of conjugacy classes of subgroups of index exactly d, found by
/// enumerating every homomorphism into S_d. A class corresponds to an
/// S_d-orbit of transitive homomorphisms; the orbit of phi has size
/// d! / |centralizer of phi(G)|, so the count is sum |C(phi)| / d!.
std::size_t subgroup_classes_by_homs(const zsurg::GroupPresentation& p, int d);

/// Same count for every index 1..max_index.
std::vector<std::size_t> subgroup_class_profile(const zsurg::GroupPresentation& p, int max_index);

}  // namespace oracle
