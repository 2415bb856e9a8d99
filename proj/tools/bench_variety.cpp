// Benchmark of the variety-generator kernel: the OpenMP loop over the
// left-ideal generator set against the serial reference. Both must
// produce identical generator lists.

#include <chrono>
#include <iostream>

#include "uniserial/presentation_io.hpp"
#include "uniserial/variety.hpp"

using namespace uniserial;
using Clock = std::chrono::steady_clock;

namespace {

const char* kStress = R"(
field Q
quiver {
  vertex 1 2 ;
  arrow a : 1 -> 1 ;
  arrow b : 1 -> 2 ;
  arrow c : 2 -> 1 ;
  arrow d : 2 -> 2 ;
}
relations {
  a^3 ;
  c*d*b ;
  c*b*a - a*c*b ;
  d^2*b*a ;
  c*d^2*b ;
}
)";

double run(const Presentation& pres, const Path& p, bool parallel, int reps,
           VarietyResult& out) {
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) out = variety_generators(pres, p, parallel);
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 5;
    Presentation pres = parse_presentation(kStress).presentation;
    Path p = parse_path(pres.quiver, "c*d*b*a*c*b*a");

    VarietyResult serial, parallel;
    double ts = run(pres, p, false, reps, serial);
    double tp = run(pres, p, true, reps, parallel);

    std::cout << "generator-set size: "
              << left_ideal_generators(pres, serial.table.mast, p.length()).size() << "\n";
    std::cout << "ideal generators:   " << serial.ideal.polys.size() << " over "
              << serial.table.nvars << " variables\n";
    std::cout << "serial:   " << ts << " ms/run\n";
    std::cout << "parallel: " << tp << " ms/run\n";

    if (serial.ideal.polys != parallel.ideal.polys) {
        std::cerr << "MISMATCH between serial and parallel results\n";
        return 1;
    }
    std::cout << "results identical\n";
    return 0;
}
