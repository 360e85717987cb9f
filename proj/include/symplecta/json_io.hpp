#pragma once

#include <json.hpp>

#include "symplecta/involution_algebra.hpp"
#include "symplecta/pair_grassmannian.hpp"

namespace symplecta {

using json = nlohmann::json;

// Subspaces serialize as basis rows, each a row of integers in [0, p).
json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, std::size_t ambient, Prime p);

// Square matrices serialize as row-major flat integer arrays.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, Prime p);

json group_element_to_json(const GroupElement& g);
json involution_to_json(const Involution& u);
json base_subset_to_json(const BaseSubsetH1& b);
BaseSubsetH1 base_subset_from_json(const json& j, const SymplecticSpace& space);
json pair_element_to_json(const PairElement& e);

json family_to_json(const HkFamily& fam);
json map_to_json(const ExplicitMap& m);

}  // namespace symplecta
