#pragma once

#include <functional>
#include <span>
#include <vector>

#include "foliage/multicurve.hpp"

namespace foliage {

enum class Execution { serial, parallel };

enum class IntersectionAlgorithm { geometric, oracle };

/// Worker count for parallel kernels: FOLIAGE_THREADS if set and positive,
/// otherwise the OpenMP default (1 without OpenMP).
int configured_threads();

/// Calls body(i) for i < n, in parallel when requested.
void for_each_index(std::size_t n, Execution execution, const std::function<void(std::size_t)>& body);

/// Calls body(i, j) for every pair i < j < n. The parallel path distributes
/// rows over configured_threads() workers; body must only write state owned
/// by its pair.
void for_each_pair(std::size_t n, Execution execution, const std::function<void(std::size_t, std::size_t)>& body);

/// Symmetric n x n matrix of intersection numbers, row-major. The serial and
/// parallel paths compute identical entries.
std::vector<long long> intersection_matrix(std::span<const NormalVector> curves, IntersectionAlgorithm algorithm,
                                           Execution execution = Execution::parallel);

/// Symmetric n x n matrix of Haken-sum disjointness (diagonal true).
std::vector<char> disjointness_matrix(std::span<const NormalVector> curves, Execution execution = Execution::parallel);

}  // namespace foliage
