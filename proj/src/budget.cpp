#include "mmp3/budget.hpp"

#include <atomic>

#include "mmp3/error.hpp"

namespace mmp3 {

namespace {
std::chrono::steady_clock::time_point g_deadline{};
bool g_armed = false;
std::atomic<long long> g_work{0};
}  // namespace

void set_deadline_seconds(double s) {
  g_deadline = std::chrono::steady_clock::now() +
               std::chrono::milliseconds(static_cast<long long>(s * 1000.0));
  g_armed = true;
}

void clear_deadline() { g_armed = false; }

void check_deadline() {
  g_work.fetch_add(1, std::memory_order_relaxed);
  if (!g_armed) return;
  // polling happens in tight loops; sample the clock sparsely
  if ((g_work.load(std::memory_order_relaxed) & 0x3ff) != 0) return;
  if (std::chrono::steady_clock::now() > g_deadline)
    fail(errc::budget_exceeded, "wall-clock timeout exceeded");
}

long long work_counter() { return g_work.load(std::memory_order_relaxed); }

}  // namespace mmp3
