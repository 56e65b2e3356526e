// Times each phase-accumulation kernel variant on one synthetic batch.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "minkowski/kernels.hpp"

using namespace minkowski::kernels;

int main(int argc, char** argv) {
    const std::size_t cells = kMaxBatch;
    const std::size_t freqs = argc > 1 ? std::stoul(argv[1]) : 4096;
    const int reps = argc > 2 ? std::stoi(argv[2]) : 20;

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(cells), w(cells, 1.0 / static_cast<double>(cells));
    for (auto& v : x) v = unit(rng);

    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::avx512}) {
        if (!isa_available(isa)) continue;
        const auto fn = select(isa);
        std::vector<double> re(freqs), im(freqs);
        const auto t0 = std::chrono::steady_clock::now();
        for (int r = 0; r < reps; ++r) fn(x, w, 4096, re, im);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const double updates = static_cast<double>(cells) * static_cast<double>(freqs) * reps;
        std::printf("%-7s %8.3f s  %6.3f G cell-freq/s  (re[0] = %.6g)\n", std::string(to_string(isa)).c_str(), s,
                    updates / s * 1e-9, re[0]);
    }
}
