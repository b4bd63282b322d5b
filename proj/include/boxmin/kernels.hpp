#pragma once

// Parallel lattice and sample-sweep kernels, each with a serial reference.
//
// Lattice sums visit points shell by shell (increasing sup-norm), lexicographic
// inside a shell. Each shell is summed on its own and the shell totals are
// added in increasing order, in both variants, so the parallel result is
// bit-identical to the serial one regardless of the worker count.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include <omp.h>

namespace boxmin::kernels {

inline int worker_count() { return omp_get_max_threads(); }

// n <= 0 restores the runtime default.
inline void set_worker_count(int n) {
  if (n > 0) omp_set_num_threads(n);
  else omp_set_num_threads(omp_get_num_procs());
}

namespace detail {

template <class Fn>
void shell_visit(std::vector<int>& n, size_t i, bool hit, int rho, Fn& fn) {
  const size_t dim = n.size();
  if (i == dim) {
    fn(std::span<const int>(n));
    return;
  }
  if (i + 1 == dim && !hit) {
    n[i] = -rho;
    fn(std::span<const int>(n));
    n[i] = rho;
    fn(std::span<const int>(n));
    return;
  }
  for (int v = -rho; v <= rho; ++v) {
    n[i] = v;
    shell_visit(n, i + 1, hit || v == rho || v == -rho, rho, fn);
  }
}

}  // namespace detail

// Calls fn(span<const int>) for every n in Z^dim with max |n_i| == rho, in
// lexicographic order.
template <class Fn>
void for_each_in_shell(int dim, int rho, Fn&& fn) {
  std::vector<int> n(static_cast<size_t>(dim), 0);
  if (rho == 0) {
    fn(std::span<const int>(n));
    return;
  }
  detail::shell_visit(n, 0, false, rho, fn);
}

template <class T, class Fn>
T shell_sum(int dim, int rho, Fn& f) {
  T s{};
  for_each_in_shell(dim, rho, [&](std::span<const int> n) { s += f(n); });
  return s;
}

// sum_{|n|_inf <= radius} f(n)
template <class T, class Fn>
T lattice_sum_serial(int dim, int radius, Fn&& f) {
  T total{};
  for (int rho = 0; rho <= radius; ++rho) total += shell_sum<T>(dim, rho, f);
  return total;
}

template <class T, class Fn>
T lattice_sum(int dim, int radius, Fn&& f) {
  std::vector<T> shells(static_cast<size_t>(radius) + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (int rho = radius; rho >= 0; --rho) shells[static_cast<size_t>(rho)] = shell_sum<T>(dim, rho, f);
  T total{};
  for (const T& s : shells) total += s;
  return total;
}

// Reduction over the index range [0, count). body(first, last, partial)
// processes one chunk into a fresh copy of init; partials are merged in chunk
// order, so the result does not depend on scheduling.
template <class Partial, class Body, class Merge>
Partial sweep(std::uint64_t count, const Partial& init, Body&& body, Merge&& merge,
              std::uint64_t chunk = 4096) {
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t chunks = (count + chunk - 1) / chunk;
  std::vector<Partial> partial(static_cast<size_t>(chunks), init);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const auto first = static_cast<std::uint64_t>(c) * chunk;
    body(first, std::min(count, first + chunk), partial[static_cast<size_t>(c)]);
  }
  Partial result = init;
  for (auto& p : partial) merge(result, p);
  return result;
}

// Same chunking, single thread: the reference the parallel sweep is tested
// against.
template <class Partial, class Body, class Merge>
Partial sweep_serial(std::uint64_t count, const Partial& init, Body&& body, Merge&& merge,
                     std::uint64_t chunk = 4096) {
  chunk = std::max<std::uint64_t>(chunk, 1);
  Partial result = init;
  for (std::uint64_t first = 0; first < count; first += chunk) {
    Partial p = init;
    body(first, std::min(count, first + chunk), p);
    merge(result, p);
  }
  return result;
}

}  // namespace boxmin::kernels
