#include "conifold/log_connection.hpp"

#include <algorithm>

namespace conifold {

LogConnection LogConnection::merged() const {
  LogConnection out;
  out.base_dim = base_dim;
  out.half_rank = half_rank;
  out.holomorphic = holomorphic;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (residues.at(i).is_zero()) continue;
    IntVector f = forms[i];
    Integer g = content(f);
    if (g == 0) throw InvalidInput("nonzero residue along a zero form");
    auto lead = std::find_if(f.begin(), f.end(), [](const Integer& x) { return x != 0; });
    if (*lead < 0) g = -g;
    for (auto& x : f) x /= g;
    auto it = std::find(out.forms.begin(), out.forms.end(), f);
    if (it == out.forms.end()) {
      out.forms.push_back(f);
      out.residues.push_back(residues[i]);
    } else {
      auto& r = out.residues[static_cast<std::size_t>(it - out.forms.begin())];
      r = r + residues[i];
    }
  }
  return out;
}

std::vector<LogSeries> LogConnection::principal_part(std::size_t direction, std::size_t frame_index) const {
  if (direction >= base_dim) throw IndexOutOfRange("direction out of range");
  if (frame_index >= frame_size()) throw IndexOutOfRange("frame index out of range");
  IntMatrix rows(forms.size(), base_dim);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = 0; j < base_dim; ++j) rows(i, j) = forms[i].at(j);
  auto f = LogSeries::make_forms(rows);
  std::vector<LogSeries> out(frame_size(), LogSeries(f));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Integer& a = forms[i][direction];
    if (a == 0) continue;
    for (std::size_t r = 0; r < frame_size(); ++r) {
      const Scalar& c = residues[i](r, frame_index);
      if (!c.is_zero()) out[r] += LogSeries::w_term(f, i, -1, false, c * Scalar(a));
    }
  }
  return out;
}

}  // namespace conifold
