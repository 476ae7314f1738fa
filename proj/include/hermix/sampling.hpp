#pragma once

#include <cstddef>
#include <vector>

#include "hermix/moments.hpp"
#include "hermix/rng.hpp"

namespace hermix {

// One draw from a fixed-parameter family. All transforms are written out
// against Pcg32 so streams are byte-identical across platforms.
double sample_family(const FamilySpec& spec, Pcg32& rng);

// n draws from the weighted mixture: component by inverse CDF on the weight
// partition, then the family transform. Optionally reports how many draws
// each component produced.
std::vector<double> sample_mixture(const std::vector<FamilySpec>& components,
                                   const std::vector<double>& weights,
                                   std::size_t n, Pcg32& rng,
                                   std::vector<std::size_t>* counts = nullptr);

}  // namespace hermix
