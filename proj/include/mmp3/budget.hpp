#pragma once
#include <chrono>

namespace mmp3 {

// global wall-clock deadline; long-running kernels poll it and abort with a
// budget error once it passes.  zero = no deadline.
void set_deadline_seconds(double s);
void clear_deadline();
void check_deadline();  // throws error(errc::budget_exceeded) past the deadline

// monotonically increasing odometer for coarse progress accounting in tests
long long work_counter();

}  // namespace mmp3
