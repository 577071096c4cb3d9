#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "simpfib/check.hpp"

namespace simpfib {

namespace {
std::atomic<unsigned> configured_jobs{0};
}  // namespace

void set_default_jobs(unsigned jobs) noexcept { configured_jobs = jobs; }

unsigned default_jobs() noexcept {
  if (char const* env = std::getenv("SIMPFIB_JOBS")) {
    try {
      auto value = std::stoul(env);
      if (value > 0) {
        return static_cast<unsigned>(value);
      }
    } catch (...) {
      // unparsable values fall through to the configured default
    }
  }
  if (unsigned j = configured_jobs.load(); j > 0) {
    return j;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace simpfib
