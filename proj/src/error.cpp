#include "hk/error.hpp"

namespace hk {

namespace {
std::optional<std::chrono::steady_clock::time_point> g_deadline;
}

void set_compute_deadline(std::optional<std::chrono::steady_clock::time_point> t) {
    g_deadline = t;
}

void clear_compute_deadline() {
    g_deadline.reset();
}

void check_deadline() {
    if (g_deadline && std::chrono::steady_clock::now() > *g_deadline)
        throw TimeoutError("compute budget exhausted");
}

}  // namespace hk
