#include "bandlim/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace bandlim {

namespace {

// fftw planning mutates global state; plans are cached per length and reused.
std::mutex g_fft_mutex;

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    double* real = nullptr;
    fftw_complex* cplx = nullptr;
    std::size_t n = 0;

    explicit PlanPair(std::size_t size) : n(size) {
        real = fftw_alloc_real(n);
        cplx = fftw_alloc_complex(n / 2 + 1);
        fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), real, cplx, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_1d(static_cast<int>(n), cplx, real, FFTW_ESTIMATE);
    }
    ~PlanPair() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(real);
        fftw_free(cplx);
    }
    PlanPair(const PlanPair&) = delete;
    PlanPair& operator=(const PlanPair&) = delete;
};

PlanPair& plans_for(std::size_t n) {
    static std::map<std::size_t, std::unique_ptr<PlanPair>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<PlanPair>(n)).first;
    return *it->second;
}

}  // namespace

std::vector<std::complex<double>> rfft(std::span<const double> x) {
    std::lock_guard<std::mutex> lock(g_fft_mutex);
    PlanPair& p = plans_for(x.size());
    std::copy(x.begin(), x.end(), p.real);
    fftw_execute(p.fwd);
    std::vector<std::complex<double>> out(x.size() / 2 + 1);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = {p.cplx[j][0], p.cplx[j][1]};
    return out;
}

std::vector<double> irfft(std::span<const std::complex<double>> spectrum, std::size_t n) {
    std::lock_guard<std::mutex> lock(g_fft_mutex);
    PlanPair& p = plans_for(n);
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        p.cplx[j][0] = spectrum[j].real();
        p.cplx[j][1] = spectrum[j].imag();
    }
    fftw_execute(p.bwd);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = p.real[i] / static_cast<double>(n);
    return out;
}

}  // namespace bandlim
