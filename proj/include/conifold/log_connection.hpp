#pragma once

// Connections with logarithmic poles along hyperplanes  l_i(y) = 0  on a
// bundle with frame  e_1..e_m, e^1..e^m:
//   nabla = d + sum_i (d l_i / l_i) (x) Res_i + holomorphic part.

#include <cstddef>
#include <vector>

#include "conifold/log_series.hpp"
#include "conifold/scalar.hpp"
#include "conifold/series.hpp"

namespace conifold {

struct LogConnection {
  std::size_t base_dim = 0;
  std::size_t half_rank = 0;  // m
  std::vector<IntVector> forms;
  /// 2m x 2m; entry (i, j) is the coefficient of frame element i in Res(frame element j).
  std::vector<ScalarMatrix> residues;
  /// Empty means zero.
  std::vector<SeriesMatrix> holomorphic;

  std::size_t frame_size() const { return 2 * half_rank; }

  /// Principal part of nabla_{d/dy_p}(frame element j), one LogSeries per frame
  /// element, with the forms as hyperplanes of the coordinates y.
  std::vector<LogSeries> principal_part(std::size_t direction, std::size_t frame_index) const;

  /// Combines proportional forms (scaled to a primitive vector with positive
  /// leading entry) and drops zero residues and zero forms.
  LogConnection merged() const;
};

}  // namespace conifold
