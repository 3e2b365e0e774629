#include "fnls/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace fnls::fft {

namespace {

struct PlanDeleter
{
    void operator()(fftw_plan_s* plan) const { fftw_destroy_plan(plan); }
};

using PlanHandle = std::unique_ptr<fftw_plan_s, PlanDeleter>;
using PlanKey = std::pair<std::vector<Index>, int>;

// FFTW planning is not thread-safe; execution of an existing plan on new
// arrays (fftw_execute_dft) is. Plans are created once under the lock and
// then shared read-only.
class PlanCache
{
public:
    fftw_plan get(const std::vector<Index>& shape, int sign)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        PlanKey key{shape, sign};
        auto it = plans_.find(key);
        if (it != plans_.end())
            return it->second.get();

        std::vector<int> dims(shape.begin(), shape.end());
        Index total = 1;
        for (Index n : shape)
            total *= n;
        auto* in = fftw_alloc_complex(static_cast<std::size_t>(total));
        auto* out = fftw_alloc_complex(static_cast<std::size_t>(total));
        fftw_plan plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), in, out, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED | FFTW_PRESERVE_INPUT);
        fftw_free(in);
        fftw_free(out);
        if (plan == nullptr)
            throw Error("FFT planning failed");
        auto [pos, inserted] = plans_.emplace(std::move(key), PlanHandle(plan));
        return pos->second.get();
    }

    std::size_t size()
    {
        std::lock_guard<std::mutex> lock(mutex_);
        return plans_.size();
    }

private:
    std::mutex mutex_;
    std::map<PlanKey, PlanHandle> plans_;
};

PlanCache& cache()
{
    static PlanCache instance;
    return instance;
}

void execute(const std::vector<Index>& shape, int sign, const Complex* in, Complex* out)
{
    fftw_plan plan = cache().get(shape, sign);
    // FFTW_PRESERVE_INPUT: the input is not written despite the non-const signature.
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

} // namespace

Eigen::ArrayXcd forward(const ComplexField& u)
{
    Eigen::ArrayXcd out(u.size());
    execute(u.grid().shape(), FFTW_FORWARD, u.values().data(), out.data());
    return out;
}

ComplexField inverse(const Grid& grid, const Eigen::ArrayXcd& spectrum)
{
    if (spectrum.size() != grid.size())
        throw std::invalid_argument("spectrum size does not match the grid");
    Eigen::ArrayXcd out(spectrum.size());
    execute(grid.shape(), FFTW_BACKWARD, spectrum.data(), out.data());
    out /= static_cast<double>(grid.size());
    return ComplexField(grid, std::move(out));
}

std::size_t cached_plans() { return cache().size(); }

} // namespace fnls::fft
