#include "philab/random.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace philab {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream make_stream(std::uint64_t master_seed, std::uint64_t stream_index) {
  // Counter-based derivation: mix (seed, index) through splitmix64 so that
  // neighbouring indices land in unrelated parts of the generator's state
  // space.
  std::uint64_t state = master_seed;
  (void)splitmix64(state);
  state ^= 0xd1342543de82ef95ULL * (stream_index + 1);
  std::uint64_t derived = splitmix64(state);
  return RandomStream(derived);
}

RandomStream make_stream(const RandomStreamSpec& spec) {
  return make_stream(spec.master_seed, spec.stream_index);
}

double uniform01(RandomStream& rng) {
  // 53-bit mantissa, offset by half an ulp: range is (0,1) exclusive.
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

double exp_draw(RandomStream& rng) { return -std::log(uniform01(rng)); }

double cauchy_draw(RandomStream& rng) {
  return std::tan(kPi * (uniform01(rng) - 0.5));
}

unsigned worker_count() {
  const char* env = std::getenv("PHILAB_WORKERS");
  if (env == nullptr) return 1;
  long v = std::strtol(env, nullptr, 10);
  return v >= 1 ? static_cast<unsigned>(v) : 1;
}

void parallel_chunks(
    std::size_t total, std::uint64_t master_seed, std::uint64_t stream_base,
    const std::function<void(std::size_t, std::size_t, RandomStream&)>& body,
    std::size_t chunk_size) {
  if (total == 0) return;
  const std::size_t nchunks = (total + chunk_size - 1) / chunk_size;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), nchunks));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto drain = [&]() {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= nchunks || failed.load()) break;
      const std::size_t first = c * chunk_size;
      const std::size_t count = std::min(chunk_size, total - first);
      RandomStream rng = make_stream(master_seed, stream_base + c);
      try {
        body(first, count, rng);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) first_error = std::current_exception();
        break;
      }
    }
  };

  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) std::rethrow_exception(first_error);
}

}  // namespace philab
