#include "mouldcalc/kernels.hpp"

#include <algorithm>

namespace mouldcalc::kernels {

namespace {
std::atomic<Mode> g_mode{Mode::OpenMP};
}

Mode mode() { return g_mode.load(std::memory_order_relaxed); }
void setMode(Mode m) { g_mode.store(m, std::memory_order_relaxed); }

void parallelFor(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (mode() == Mode::Serial) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < ln; ++i) fn(static_cast<std::size_t>(i));
}

std::size_t scanFirstFailure(std::size_t n, const std::function<bool(std::size_t)>& pred) {
    if (mode() == Mode::Serial) {
        for (std::size_t i = 0; i < n; ++i)
            if (!pred(i)) return i;
        return n;
    }
    std::atomic<std::size_t> first{n};
    const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < ln; ++i) {
        std::size_t ui = static_cast<std::size_t>(i);
        if (ui >= first.load(std::memory_order_relaxed)) continue;
        if (!pred(ui)) {
            std::size_t cur = first.load(std::memory_order_relaxed);
            while (ui < cur && !first.compare_exchange_weak(cur, ui, std::memory_order_relaxed)) {
            }
        }
    }
    return first.load(std::memory_order_relaxed);
}

}  // namespace mouldcalc::kernels
