#include "dkg/fft.hpp"

#include <fftw3.h>

#include <array>
#include <map>
#include <mutex>

namespace dkg::fft {

namespace {

using Key = std::array<int, 4>;  // n0, n1, n2 (0 for 2D), sign

std::mutex plan_mutex;
std::map<Key, fftw_plan> plans;

// Plans are made once per shape with FFTW_ESTIMATE so repeated runs execute
// the same arithmetic. Execution uses the new-array interface.
fftw_plan get_plan(const Key& key, std::vector<cplx>& data) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = key[2] == 0
        ? fftw_plan_dft_2d(key[0], key[1], p, p, key[3], flags)
        : fftw_plan_dft_3d(key[0], key[1], key[2], p, p, key[3], flags);
    if (!plan) throw NumericalError("FFTW plan creation failed");
    plans.emplace(key, plan);
    return plan;
}

void run(const Key& key, std::vector<cplx>& data) {
    fftw_plan plan = get_plan(key, data);
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, p, p);
}

}  // namespace

void dft2(std::vector<cplx>& data, int n0, int n1, int sign) {
    require(data.size() == static_cast<size_t>(n0) * n1, "dft2: size mismatch");
    run({n0, n1, 0, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD}, data);
}

void dft3(std::vector<cplx>& data, int n0, int n1, int n2, int sign) {
    require(data.size() == static_cast<size_t>(n0) * n1 * n2, "dft3: size mismatch");
    run({n0, n1, n2, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD}, data);
}

}  // namespace dkg::fft
