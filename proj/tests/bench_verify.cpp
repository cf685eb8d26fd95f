// Timing comparison of the axiom verifier paths: serial reference, parallel
// sweep, and parallel sweep with the invertible-translation reduction.
//
//   bench_verify [--big]
//
// --big adds the largest catalog rings (several seconds each).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "goldfusion/constructors.hpp"
#include "goldfusion/verify.hpp"

using namespace goldfusion;

namespace {

template <typename F>
double timed(F&& f)
{
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

enum Paths { kReducedOnly, kParallelBoth, kAll };

void bench(const std::string& name, const FusionRing& ring, Paths paths)
{
    VerifyOptions plain;
    plain.use_invertible_reduction = false;
    VerifyOptions reduced;
    reduced.use_invertible_reduction = true;

    double t_red = timed([&] {
        if (!verify_axioms(ring, reduced).pass()) std::printf("  !! reduced sweep failed\n");
    });
    double t_par = -1.0, t_ser = -1.0;
    if (paths >= kParallelBoth)
        t_par = timed([&] {
            if (!verify_axioms(ring, plain).pass()) std::printf("  !! plain sweep failed\n");
        });
    if (paths >= kAll)
        t_ser = timed([&] {
            if (!verify_axioms_serial(ring).pass()) std::printf("  !! serial failed\n");
        });

    auto cell = [](double t) {
        char buf[32];
        if (t < 0) std::snprintf(buf, sizeof buf, "%10s", "(skip)");
        else std::snprintf(buf, sizeof buf, "%8.3f s", t);
        return std::string(buf);
    };
    std::printf("%-18s rank %5u | serial %s | parallel %s | reduced %s\n", name.c_str(),
                ring.rank(), cell(t_ser).c_str(), cell(t_par).c_str(), cell(t_red).c_str());
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv)
{
    bool big = argc > 1 && std::strcmp(argv[1], "--big") == 0;

    bench("TT3", make_tt3(), kAll);
    bench("FibWreath(3,1)", fib_wreath(3, 1), kAll);
    bench("TT3Wreath(1,2)", tt3_wreath(1, 2), kAll);
    bench("TT3Wreath(2,1)", tt3_wreath(2, 1), kAll);
    bench("TT3Wreath(2,2)", tt3_wreath(2, 2), kParallelBoth);
    if (big) {
        // the unreduced sweep is quadratically heavier here; reduced only
        bench("TT3Wreath(3,1)", tt3_wreath(3, 1), kReducedOnly);
        bench("TT3Wreath(3,2)", tt3_wreath(3, 2), kReducedOnly);
    }
    return 0;
}
