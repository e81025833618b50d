#include <algorithm>
#include <set>
#include <stdexcept>

#include "natgt/combinations.hpp"
#include "natgt/serial.hpp"

namespace natgt::serial {

SeparatingVerdict is_completely_separating(const BitMatrix& g, std::size_t u, std::size_t w) {
  const std::size_t n = g.cols();
  if (u < 1 || u + w > n) throw std::invalid_argument("separating check: requires 1 <= u and u + w <= n");

  auto in = first_combination(u);
  do {
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < n; ++c)
      if (std::find(in.begin(), in.end(), c) == in.end()) rest.push_back(c);

    auto pick = first_combination(w);
    do {
      bool singular_found = false;
      for (std::size_t r = 0; r < g.rows() && !singular_found; ++r) {
        bool ok = true;
        for (std::size_t c : in) ok = ok && g.at(r, c);
        for (std::size_t idx : pick) ok = ok && !g.at(r, rest[idx]);
        singular_found = ok;
      }
      if (!singular_found) {
        SeparationWitness witness;
        for (std::size_t c : in) witness.included.push_back(c + 1);
        for (std::size_t idx : pick) witness.excluded.push_back(rest[idx] + 1);
        return {false, std::move(witness)};
      }
    } while (next_combination(pick, rest.size()));
  } while (next_combination(in, n));
  return {};
}

DisjunctVerdict is_disjunct(const BitMatrix& m, std::size_t r) {
  const std::size_t n = m.cols();
  if (r >= n) throw std::invalid_argument("is_disjunct: requires r < column count");

  for (std::size_t j = 0; j < n; ++j) {
    auto pick = first_combination(r);
    do {
      std::vector<std::size_t> cover;
      for (std::size_t idx : pick) cover.push_back(idx < j ? idx : idx + 1);
      bool contained = true;
      for (std::size_t row = 0; row < m.rows() && contained; ++row) {
        if (!m.at(row, j)) continue;
        bool hit = false;
        for (std::size_t c : cover) hit = hit || m.at(row, c);
        contained = hit;
      }
      if (contained) {
        DisjunctWitness witness{j + 1, {}};
        for (std::size_t c : cover) witness.cover.push_back(c + 1);
        return {false, std::move(witness)};
      }
    } while (next_combination(pick, n - 1));
  }
  return {};
}

BitVector threshold_encode(const BitMatrix& t, const BitVector& x, std::size_t u) {
  if (x.size() != t.cols()) throw std::invalid_argument("threshold_encode: x length must equal the column count");
  BitVector y(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    std::size_t inner = 0;
    for (std::size_t c = 0; c < t.cols(); ++c) inner += (t.at(r, c) && x.test(c)) ? 1 : 0;
    y.set(r, inner >= u);
  }
  return y;
}

BitVector simulate_instance(const MeasurementScheme& scheme, const IndexSet& items) {
  return serial::threshold_encode(stack_matrix(scheme), indicator(scheme.n(), items), scheme.u());
}

IndexSet decode(const MeasurementScheme& scheme, const BitVector& outcome) {
  const std::size_t h = scheme.h();
  const std::size_t k = scheme.k();
  const std::size_t n = scheme.n();
  const BitMatrix& m = scheme.disjunct();
  if (outcome.size() != (2 * k + 1) * h) throw std::invalid_argument("decode: outcome length does not match (2k+1)h");

  std::set<std::size_t> found;
  for (std::size_t i = 0; i < h; ++i) {
    const std::size_t base = i * (2 * k + 1);
    if (!outcome.test(base)) continue;

    BitVector y_prime(k);
    for (std::size_t l = 0; l < k; ++l) {
      const bool y = outcome.test(base + 1 + l);
      const bool ybar = outcome.test(base + 1 + k + l);
      if (y)
        y_prime.set(l, true);
      else if (ybar)
        y_prime.set(l, false);
      else
        y_prime.set(l, true);
    }

    IndexSet candidates;
    for (std::size_t j = 0; j < n; ++j) {
      bool inside = true;
      for (std::size_t l = 0; l < k && inside; ++l)
        if (m.at(l, j) && !y_prime.test(l)) inside = false;
      if (inside) candidates.push_back(j + 1);
    }

    if (candidates.size() == scheme.u() && union_columns(m, candidates) == y_prime)
      found.insert(candidates.begin(), candidates.end());
  }
  return IndexSet(found.begin(), found.end());
}

}  // namespace natgt::serial
