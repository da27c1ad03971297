#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nspat {

// Enumeration kernels over non-increasing n-tuples with entries drawn from an
// ascending value list. Tuples are visited in ascending lexicographic order
// of their values. The parallel variants split on the first coordinate and
// produce schedule-independent results; the serial variants are the reference
// implementations used for testing and benchmarking.

struct ScanHit {
  std::vector<int64_t> tuple;  // non-increasing witness values
  __int128 value;              // evaluation at the witness
};

namespace detail {

// Lexicographically-first violating tuple whose first coordinate is values[j1].
// member(v) tells whether an evaluation is acceptable.
template <class Member>
std::optional<ScanHit> scan_block(const std::vector<int64_t>& coeffs,
                                  const std::vector<int64_t>& values, size_t j1,
                                  Member&& member) {
  const size_t n = coeffs.size();
  std::vector<size_t> idx(n, 0);
  std::vector<__int128> partial(n + 1, 0);
  idx[0] = j1;
  partial[1] = static_cast<__int128>(coeffs[0]) * values[j1];
  size_t depth = 1;
  for (;;) {
    if (depth == n) {
      if (!member(partial[n])) {
        ScanHit hit;
        hit.value = partial[n];
        for (size_t i = 0; i < n; ++i) hit.tuple.push_back(values[idx[i]]);
        return hit;
      }
      // backtrack to the deepest position that can still advance
      size_t d = n;
      while (d > 1 && idx[d - 1] == idx[d - 2]) --d;
      if (d == 1) return std::nullopt;  // first coordinate is fixed
      ++idx[d - 1];
      partial[d] = partial[d - 1] + static_cast<__int128>(coeffs[d - 1]) * values[idx[d - 1]];
      depth = d;
    } else {
      idx[depth] = 0;
      partial[depth + 1] = partial[depth] + static_cast<__int128>(coeffs[depth]) * values[0];
      ++depth;
    }
  }
}

template <class Visit>
void visit_block(const std::vector<int64_t>& coeffs, const std::vector<int64_t>& values,
                 size_t j1, Visit&& visit) {
  const size_t n = coeffs.size();
  std::vector<size_t> idx(n, 0);
  std::vector<__int128> partial(n + 1, 0);
  idx[0] = j1;
  partial[1] = static_cast<__int128>(coeffs[0]) * values[j1];
  size_t depth = 1;
  for (;;) {
    if (depth == n) {
      visit(partial[n]);
      size_t d = n;
      while (d > 1 && idx[d - 1] == idx[d - 2]) --d;
      if (d == 1) return;
      ++idx[d - 1];
      partial[d] = partial[d - 1] + static_cast<__int128>(coeffs[d - 1]) * values[idx[d - 1]];
      depth = d;
    } else {
      idx[depth] = 0;
      partial[depth + 1] = partial[depth] + static_cast<__int128>(coeffs[depth]) * values[0];
      ++depth;
    }
  }
}

}  // namespace detail

/// First violating tuple in lexicographic order, or nullopt if every
/// evaluation is acceptable. Serial reference implementation.
template <class Member>
std::optional<ScanHit> scan_first_violation_serial(const std::vector<int64_t>& coeffs,
                                                   const std::vector<int64_t>& values,
                                                   Member&& member) {
  if (coeffs.empty()) {
    if (member(static_cast<__int128>(0))) return std::nullopt;
    return ScanHit{{}, 0};
  }
  for (size_t j1 = 0; j1 < values.size(); ++j1)
    if (auto hit = detail::scan_block(coeffs, values, j1, member)) return hit;
  return std::nullopt;
}

/// OpenMP variant of scan_first_violation_serial. The answer is the hit with
/// the smallest first coordinate; within a block the serial order is kept, so
/// the result is independent of the thread schedule.
template <class Member>
std::optional<ScanHit> scan_first_violation_parallel(const std::vector<int64_t>& coeffs,
                                                     const std::vector<int64_t>& values,
                                                     Member&& member) {
  if (coeffs.empty() || values.size() < 2)
    return scan_first_violation_serial(coeffs, values, member);
  const int64_t nv = static_cast<int64_t>(values.size());
  std::vector<std::optional<ScanHit>> hits(values.size());
  std::atomic<int64_t> best{nv};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int64_t j1 = 0; j1 < nv; ++j1) {
    if (j1 >= best.load(std::memory_order_relaxed)) continue;
    auto hit = detail::scan_block(coeffs, values, static_cast<size_t>(j1), member);
    if (hit) {
      hits[static_cast<size_t>(j1)] = std::move(hit);
      int64_t cur = best.load(std::memory_order_relaxed);
      while (j1 < cur && !best.compare_exchange_weak(cur, j1)) {
      }
    }
  }
  for (auto& h : hits)
    if (h) return h;
  return std::nullopt;
}

/// Marks hit[v] for every evaluated value v in [0, limit). Serial reference.
inline void scan_collect_serial(const std::vector<int64_t>& coeffs,
                                const std::vector<int64_t>& values, int64_t limit,
                                std::vector<char>& hit) {
  if (coeffs.empty()) {
    if (limit > 0) hit[0] = 1;
    return;
  }
  for (size_t j1 = 0; j1 < values.size(); ++j1)
    detail::visit_block(coeffs, values, j1, [&](__int128 v) {
      if (v >= 0 && v < limit) hit[static_cast<size_t>(v)] = 1;
    });
}

/// OpenMP variant of scan_collect_serial; per-thread bitmaps are OR-merged.
inline void scan_collect_parallel(const std::vector<int64_t>& coeffs,
                                  const std::vector<int64_t>& values, int64_t limit,
                                  std::vector<char>& hit) {
  if (coeffs.empty() || values.size() < 2) {
    scan_collect_serial(coeffs, values, limit, hit);
    return;
  }
  const int64_t nv = static_cast<int64_t>(values.size());
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<char> local(hit.size(), 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (int64_t j1 = 0; j1 < nv; ++j1)
      detail::visit_block(coeffs, values, static_cast<size_t>(j1), [&](__int128 v) {
        if (v >= 0 && v < limit) local[static_cast<size_t>(v)] = 1;
      });
#pragma omp critical(nspat_scan_merge)
    for (size_t i = 0; i < hit.size(); ++i)
      if (local[i]) hit[i] = 1;
  }
#else
  scan_collect_serial(coeffs, values, limit, hit);
#endif
}

}  // namespace nspat
