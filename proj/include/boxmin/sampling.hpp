#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace boxmin {

// Sobol sequence in [0,1)^dims with a Cranley-Patterson rotation drawn from
// `seed`, so different seeds give independent-looking but still
// low-discrepancy point sets. Random access: point i is the same no matter how
// the index range is split between workers.
class QuasiRandom {
 public:
  QuasiRandom(int dims, std::uint64_t seed);

  int dims() const { return dims_; }
  const std::vector<double>& shift() const { return shift_; }

  // Writes points first .. first+count-1, row-major, into out (count*dims).
  void fill(std::uint64_t first, std::size_t count, std::span<double> out) const;
  std::vector<double> point(std::uint64_t index) const;

 private:
  int dims_;
  std::vector<double> shift_;
};

// Decodes a flat index into a point of the tensor grid with `per_axis`
// equispaced nodes on [lo, hi] per coordinate (last coordinate fastest).
void tensor_grid_point(std::uint64_t index, int per_axis, double lo, double hi, std::span<double> out);

// Maps u in [0,1)^(N+1) to a point with sup-norm in (1, radius]: the first
// coordinate picks the shell r = 1 + (radius-1) * u0^2 (denser near the
// boundary), the second picks the face (axis and sign), the rest fill the face.
void shell_point(std::span<const double> u, double radius, std::span<double> out);

}  // namespace boxmin
