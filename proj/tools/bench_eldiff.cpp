// Compares the serial reference assignment sum, the serial homomorphism
// search, and the OpenMP homomorphism search on the same inputs, checking
// that all three agree exactly.

#include <chrono>
#include <cstdio>

#include "aromatic/eldiff.hpp"

using namespace aromatic;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main() {
    const int dim = 4;
    PolyVectorField f = random_field(dim, 2, 4, 99);

    std::printf("%-14s %6s %12s %12s %12s\n", "graph", "|g|", "naive[ms]", "hom[ms]",
                "hom-omp[ms]");
    for (int k = 3; k <= 6; ++k) {
        for (const AromaticGraph& g : enumerate_aromatic_trees(k)) {
            auto t0 = Clock::now();
            EldiffResult a = eldiff_naive(g, f);
            double t_naive = ms_since(t0);

            t0 = Clock::now();
            EldiffResult b = eldiff_hom(g, f, Exec::serial);
            double t_hom = ms_since(t0);

            t0 = Clock::now();
            EldiffResult c = eldiff_hom(g, f, Exec::parallel);
            double t_par = ms_since(t0);

            if (!(a == b) || !(a == c)) {
                std::printf("MISMATCH on %s\n", encode_targets(g).c_str());
                return 1;
            }
            std::printf("%-14s %6d %12.3f %12.3f %12.3f\n", encode_targets(g).c_str(), k,
                        t_naive, t_hom, t_par);
        }
    }
    return 0;
}
