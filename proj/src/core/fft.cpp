#include "fft.hpp"

#include <phycv/grid.hpp>

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace phycv::detail {
namespace {

class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

    fftw_plan get(std::size_t rows, std::size_t cols, FftDirection direction) {
        const auto key = std::make_tuple(rows, cols, direction);
        // FFTW planning is not thread-safe; execution is.
        std::lock_guard lock(mutex_);
        if (auto it = plans_.find(key); it != plans_.end()) {
            return it->second;
        }
        Grid<std::complex<double>> scratch(rows, cols);
        auto* buffer = reinterpret_cast<fftw_complex*>(scratch.data());
        const int sign = direction == FftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD;
        fftw_plan plan = fftw_plan_dft_2d(static_cast<int>(rows), static_cast<int>(cols), buffer, buffer, sign,
                                          FFTW_ESTIMATE);
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<std::size_t, std::size_t, FftDirection>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

} // namespace

void fft2d_inplace(std::complex<double>* data, std::size_t rows, std::size_t cols, FftDirection direction) {
    fftw_plan plan = plan_cache().get(rows, cols, direction);
    auto* buffer = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, buffer, buffer);
}

} // namespace phycv::detail
