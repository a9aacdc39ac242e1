#ifndef PHILAB_RANDOM_HPP_
#define PHILAB_RANDOM_HPP_

#include <cstdint>
#include <functional>
#include <random>

namespace philab {

/// Identifies one reproducible stream: the same (master_seed, stream_index)
/// pair always yields the same stream, and distinct indices give streams that
/// can be consumed concurrently without coordination.
struct RandomStreamSpec {
  std::uint64_t master_seed = 1;
  std::uint64_t stream_index = 0;
};

using RandomStream = std::mt19937_64;

RandomStream make_stream(const RandomStreamSpec& spec);
RandomStream make_stream(std::uint64_t master_seed, std::uint64_t stream_index);

/// Uniform draw on the open interval (0,1); never returns an endpoint, so
/// log() and tan() of it are always finite.
double uniform01(RandomStream& rng);

/// Standard Exp(1) draw.
double exp_draw(RandomStream& rng);

/// Standard Cauchy draw.
double cauchy_draw(RandomStream& rng);

/// Worker count from PHILAB_WORKERS (>= 1); defaults to 1.
unsigned worker_count();

/// Runs `body(first, count, stream)` over [0, total) in fixed-size chunks.
/// Chunk c always uses stream index stream_base + c, so results are a
/// function of (master_seed, stream_base, chunk_size) only -- never of the
/// worker count.
void parallel_chunks(
    std::size_t total, std::uint64_t master_seed, std::uint64_t stream_base,
    const std::function<void(std::size_t first, std::size_t count,
                             RandomStream& rng)>& body,
    std::size_t chunk_size = 8192);

}  // namespace philab

#endif  // PHILAB_RANDOM_HPP_
