#pragma once

// Data-parallel scans. Each kernel has an OpenMP version and a serial
// reference with identical results; the tests compare the two and
// braidq_bench times them.

#include <cstddef>
#include <optional>
#include <vector>

#include "braidq/perm.hpp"

namespace braidq::kernels {

// Indices i (ascending) with elements[i] * s * elements[i]^-1 in `set` for all s in `set`.
std::vector<std::size_t> conj_stabilizer_scan_serial(const std::vector<Permutation>& elements,
                                                     const std::vector<Permutation>& set);
std::vector<std::size_t> conj_stabilizer_scan_omp(const std::vector<Permutation>& elements,
                                                  const std::vector<Permutation>& set);

// Smallest index i with elements[i] * a * elements[i]^-1 == b for every pair.
std::optional<std::size_t> conjugator_scan_serial(
    const std::vector<Permutation>& elements, const std::vector<std::pair<Permutation, Permutation>>& pairs);
std::optional<std::size_t> conjugator_scan_omp(
    const std::vector<Permutation>& elements, const std::vector<std::pair<Permutation, Permutation>>& pairs);

}  // namespace braidq::kernels
