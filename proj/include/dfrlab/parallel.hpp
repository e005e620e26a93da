#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dfrlab/rng.hpp"

namespace dfrlab {

// Worker policy for replication fan-out. workers == 0 selects the serial
// reference path; workers < 0 uses all hardware threads; workers >= 1 caps
// the OpenMP team at that many threads.
struct ExecPolicy {
  int workers = -1;
};

// Replications are accumulated in fixed chunks and the chunk partials are
// merged in chunk order, so the reduction tree does not depend on the worker
// count: results are bit-identical for any ExecPolicy with the same seed.
inline constexpr std::size_t kReplicationChunk = 1024;

// Serial reference implementation. body(acc, rng, rep) must touch nothing
// but its accumulator; make() produces an empty accumulator; Acc::merge
// folds another partial in.
template <class Acc, class MakeAcc, class Body>
Acc replicate_serial(std::uint64_t seed, std::size_t reps, MakeAcc make, const Body& body) {
  Acc total = make();
  const std::size_t chunks = (reps + kReplicationChunk - 1) / kReplicationChunk;
  for (std::size_t c = 0; c < chunks; ++c) {
    Acc part = make();
    const std::size_t lo = c * kReplicationChunk;
    const std::size_t hi = std::min(lo + kReplicationChunk, reps);
    for (std::size_t r = lo; r < hi; ++r) {
      RandomStream rng = RandomStream::substream(seed, r);
      body(part, rng, r);
    }
    total.merge(part);
  }
  return total;
}

// OpenMP kernel: chunks are distributed dynamically across the team, partials
// land in a chunk-indexed vector and are merged in order afterwards.
template <class Acc, class MakeAcc, class Body>
Acc replicate_parallel(std::uint64_t seed, std::size_t reps, int workers, MakeAcc make,
                       const Body& body) {
  const std::size_t chunks = (reps + kReplicationChunk - 1) / kReplicationChunk;
  std::vector<Acc> parts;
  parts.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) parts.push_back(make());

#ifdef _OPENMP
  const int nthreads = workers >= 1 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#else
  (void)workers;
#endif
  for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kReplicationChunk;
    const std::size_t hi = std::min(lo + kReplicationChunk, reps);
    for (std::size_t r = lo; r < hi; ++r) {
      RandomStream rng = RandomStream::substream(seed, r);
      body(parts[static_cast<std::size_t>(c)], rng, r);
    }
  }

  Acc total = make();
  for (std::size_t c = 0; c < chunks; ++c) total.merge(parts[c]);
  return total;
}

template <class Acc, class MakeAcc, class Body>
Acc replicate(std::uint64_t seed, std::size_t reps, ExecPolicy policy, MakeAcc make,
              const Body& body) {
  if (policy.workers == 0) return replicate_serial<Acc>(seed, reps, make, body);
  return replicate_parallel<Acc>(seed, reps, policy.workers, make, body);
}

}  // namespace dfrlab
