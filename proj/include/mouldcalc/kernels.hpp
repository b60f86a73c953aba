#ifndef MOULDCALC_KERNELS_HPP
#define MOULDCALC_KERNELS_HPP

#include <atomic>
#include <cstddef>
#include <functional>

namespace mouldcalc::kernels {

// The inner loops (operator composition, expansion sums, pair scans) exist in
// an OpenMP build and a serial reference. Results are bit-identical: all
// arithmetic is exact, so reduction order cannot change a sum.
enum class Mode { Serial, OpenMP };

Mode mode();
void setMode(Mode m);

// Runs fn(i) for i in [0, n). Parallel when mode() == OpenMP.
void parallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

// Returns the smallest index failing pred (pred true = pass), or n if all pass.
std::size_t scanFirstFailure(std::size_t n, const std::function<bool(std::size_t)>& pred);

}  // namespace mouldcalc::kernels

#endif
