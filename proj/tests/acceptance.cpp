// Acceptance gate: runs every invariant suite at its pinned range and prints
// one verdict line per criterion. Exits nonzero if any suite fails.

#include <chrono>
#include <cstdio>

#include <qhopf/checks.hpp>

int main() {
    using Clock = std::chrono::steady_clock;
    const char* names[] = {
        "hopf-axioms",      // 1. Hopf axioms, generic and mod 2, 3
        "serre-res",        // 2. Serre relations of the restriction operators
        "hall-dual",        // 3. counting == dual coproduct route
        "hall-bialgebra",   // 4. Hall bialgebra axiom + Serre relations
        "hall-center",      // 5. center identities and centrality
        "matrix-view",      // 6. matrix coproduct/antipode consistency
        "frobenius",        // 7. pullbacks, determinant, annihilation, characters
        "pairing-duality",  // 8. Hopf pairing, res duality, unwind adjunction
        "eval-modules",     // 9. round-trips, screening, box removal, signs
        "enum-identities",  // 10. diagram counts vs product formulas/characters
        "cross-oracle",     // 11. symmetric functions and partition counts
    };
    bool all_pass = true;
    int idx = 0;
    for (const char* name : names) {
        ++idx;
        auto t0 = Clock::now();
        qhopf::checks::Report rep = qhopf::checks::run_suite(name);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("%2d %-16s %s %s [%.1fs]\n", idx, name, rep.pass ? "PASS" : "FAIL",
                    rep.detail.c_str(), secs);
        std::fflush(stdout);
        all_pass = all_pass && rep.pass;
    }
    return all_pass ? 0 : 1;
}
