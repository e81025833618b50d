// Single-threaded, entry-at-a-time reference versions of the parallel
// kernels. Kept for equivalence tests and as the benchmark baseline; they
// follow the same enumeration order, so witnesses match exactly.
#pragma once

#include "natgt/disjunct.hpp"
#include "natgt/scheme.hpp"
#include "natgt/separating.hpp"

namespace natgt::serial {

SeparatingVerdict is_completely_separating(const BitMatrix& g, std::size_t u, std::size_t w);

DisjunctVerdict is_disjunct(const BitMatrix& m, std::size_t r);

BitVector threshold_encode(const BitMatrix& t, const BitVector& x, std::size_t u);

/// threshold_encode on the explicitly stacked measurement matrix.
BitVector simulate_instance(const MeasurementScheme& scheme, const IndexSet& items);

/// Decoder steps in order, one row and one coordinate at a time.
IndexSet decode(const MeasurementScheme& scheme, const BitVector& outcome);

}  // namespace natgt::serial
