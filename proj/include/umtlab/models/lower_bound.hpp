#pragma once

#include <cstdint>
#include <vector>

#include "umtlab/distribution.hpp"
#include "umtlab/translator.hpp"
#include "umtlab/types.hpp"

namespace umtlab {

// Hard instance family built from two aligned a x b grids of text ids laid
// out at the front of a shared source/target space of t_size texts. Each
// translator is a sign vector: row i is mapped identically when the sign is
// +1 and cyclically shifted by one column when it is -1; everything off the
// grid is fixed by the identity matching. A row whose cells all survive the
// removal reveals nothing about its sign.
struct LowerBoundInstance {
  std::uint64_t a = 0;  // rows: floor(log2(n_params))
  std::uint64_t b = 0;  // columns
  std::uint64_t t_size = 0;
  double alpha = 0.0;
  std::uint64_t m = 0;                   // sample budget used in b's formula
  std::uint64_t shift_denominator = 0;   // the 1e5 knob

  std::vector<std::uint8_t> kept;  // survival mask over [t_size]
  TranslatorFamily family;         // 2^a sign translators, star set
  std::vector<TextId> mu_support;  // x with f_star(x) kept, sorted
  bool degenerate = false;

  TextId grid_cell(std::uint64_t row, std::uint64_t col) const {
    return row * b + col;
  }
  // Sign of `row` under member `index`: +1 or -1. Index order is the
  // lexicographic order of the member maps (row 0 most significant,
  // +1 before -1).
  int sign(std::uint64_t index, std::uint64_t row) const {
    return ((index >> (a - 1 - row)) & 1) == 0 ? 1 : -1;
  }
  // Rows with every cell surviving.
  std::vector<std::uint64_t> full_rows() const;
};

struct LowerBoundOutput {
  LowerBoundInstance instance;
  FiniteDistribution mu;
  FiniteDistribution rho;
};

// Requires alpha in (0, 1/2], n_params >= 2, and the admissibility
// inequality log2(n_params) <= alpha * min(m, t_size); violations raise
// AdmissibilityError naming the failed inequality. The 1e5 constant in the
// column formula b = floor((1/alpha) * max(1, t_size / (1e5 * m))) is
// exposed as shift_denominator.
LowerBoundOutput gen_lower_bound_instance(
    std::uint64_t seed, std::uint64_t n_params, double alpha, std::uint64_t m,
    std::uint64_t t_size, std::uint64_t shift_denominator = 100000);

}  // namespace umtlab
