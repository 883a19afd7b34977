#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace ringjsa::detail {
namespace {

// FFTW planning is not thread-safe; execution of an existing plan is.
class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

    fftw_plan get(int n, FftSign sign) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(n, sign == FftSign::Forward);
        if (auto it = plans_.find(key); it != plans_.end()) {
            return it->second;
        }
        std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n));
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign == FftSign::Forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, bool>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

}  // namespace

void fft_inplace(std::span<std::complex<double>> data, FftSign sign) {
    if (data.empty()) {
        return;
    }
    fftw_plan plan = cache().get(static_cast<int>(data.size()), sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, buf, buf);
}

}  // namespace ringjsa::detail
