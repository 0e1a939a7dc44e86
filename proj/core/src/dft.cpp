// SPDX-License-Identifier: Apache-2.0
#include "jcas/dft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace jcas {

namespace {

static_assert(sizeof(cplx) == sizeof(fftw_complex), "std::complex<double> must match fftw_complex");

const std::vector<cplx>& twiddle_table(std::size_t n, Direction dir)
{
    thread_local std::map<std::pair<std::size_t, Direction>, std::vector<cplx>> cache;
    auto& table = cache[{n, dir}];
    if (table.size() != n) {
        const double sign = dir == Direction::Forward ? -1.0 : 1.0;
        table.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            table[k] = std::polar(1.0, sign * 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
        }
    }
    return table;
}

// FFTW's planner is not thread-safe; executing an existing plan on new arrays is.
class PlanCache {
public:
    ~PlanCache()
    {
        for (auto& [key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

    fftw_plan get(std::size_t n, Direction dir, bool in_place)
    {
        std::lock_guard lock(mutex_);
        const auto key = std::make_tuple(n, dir, in_place);
        if (auto it = plans_.find(key); it != plans_.end()) {
            return it->second;
        }
        auto* a = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
        auto* b = in_place ? a : static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
        const int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), a, b, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!in_place) {
            fftw_free(b);
        }
        fftw_free(a);
        if (plan == nullptr) {
            throw std::runtime_error("FFTW failed to create a plan");
        }
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<std::size_t, Direction, bool>, fftw_plan> plans_;
};

PlanCache& plan_cache()
{
    static PlanCache cache;
    return cache;
}

void naive_dft(std::span<const cplx> in, std::span<cplx> out, Direction dir, OpCounter* counter)
{
    const std::size_t n = in.size();
    const auto& w = twiddle_table(n, dir);
    for (std::size_t l = 0; l < n; ++l) {
        cplx acc{0.0, 0.0};
        std::size_t idx = 0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += in[k] * w[idx];
            idx += l;
            if (idx >= n) {
                idx -= n;
            }
        }
        out[l] = acc;
    }
    if (counter != nullptr) {
        counter->complex_multiplies += static_cast<std::uint64_t>(n) * n;
    }
}

} // namespace

void dft(std::span<const cplx> in, std::span<cplx> out, Direction dir, TransformPath path, OpCounter* counter)
{
    const std::size_t n = in.size();
    if (out.size() != n) {
        throw std::invalid_argument("dft: output length must equal input length");
    }
    if (n == 0) {
        return;
    }

    const bool aliased = in.data() == out.data();
    if (path == TransformPath::Naive) {
        if (aliased) {
            std::vector<cplx> tmp(in.begin(), in.end());
            naive_dft(tmp, out, dir, counter);
        } else {
            naive_dft(in, out, dir, counter);
        }
    } else {
        fftw_plan plan = plan_cache().get(n, dir, aliased);
        // FFTW does not modify the input of an out-of-place complex plan.
        auto* src = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data()));
        fftw_execute_dft(plan, src, reinterpret_cast<fftw_complex*>(out.data()));
    }

    if (dir == Direction::Inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        std::for_each(out.begin(), out.end(), [scale](cplx& v) { v *= scale; });
    }
}

std::vector<cplx> dft(std::span<const cplx> in, Direction dir, TransformPath path, OpCounter* counter)
{
    std::vector<cplx> out(in.size());
    dft(in, out, dir, path, counter);
    return out;
}

} // namespace jcas
