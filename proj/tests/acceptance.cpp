// Acceptance suite: the exact identities and oracle equivalences the
// library is gated on, one pass/fail line per criterion.  Every check is
// exact symbolic equality in Z[q^{+-1/6}] (tolerance zero).
//
//   acceptance                 runs all criteria
//   acceptance --criterion N   runs one

#include <a2skein/verify.hpp>

#include <cstring>
#include <iostream>

using namespace a2skein;

namespace {

struct Criterion {
    int id;
    const char* summary;
    bool (*run)();
};

bool report_ok(const VerifyReport& r) {
    if (!r.all_pass()) std::cout << r.to_string();
    return r.all_pass();
}

bool c1_skein_ground_truth() {
    VerifyReport r = verify_skein();
    VerifyReport ground{"ground", {}};
    for (auto& c : r.cases)
        if (c.label.find("circle") != std::string::npos || c.label.find("bigon") != std::string::npos ||
            c.label.find("square") != std::string::npos)
            ground.cases.push_back(c);
    return report_ok(ground);
}

bool c2_reidemeister() {
    VerifyReport r = verify_skein();
    VerifyReport moves{"moves", {}};
    for (auto& c : r.cases)
        if (c.label.find("R1") != std::string::npos || c.label.find("R2") != std::string::npos ||
            c.label.find("R3") != std::string::npos || c.label.find("R4") != std::string::npos ||
            c.label.find("corpus") != std::string::npos)
            moves.cases.push_back(c);
    return report_ok(moves);
}

bool c3_clasp() { return report_ok(verify_clasp(VerifyOptions{2, 2})); }

bool c4_forms() { return report_ok(verify_twist_forms()); }

bool c5_twist_oracle() { return report_ok(verify_twist_oracle(VerifyOptions{2, 2})); }

bool c6_torus_oracle() { return report_ok(verify_torus(VerifyOptions{2, 2})); }

bool c7_closure() { return report_ok(verify_closure(VerifyOptions{2, 2})); }

bool c8_tails() { return report_ok(verify_tails(8, 2)); }

bool c9_recurrence() { return report_ok(verify_recurrences()); }

const Criterion criteria[] = {
    {1, "skein ground truth: circle [3], bigon [2], square reconnections", c1_skein_ground_truth},
    {2, "Reidemeister moves R1 (double curl), R2, R3, R4 on a random closed corpus", c2_reidemeister},
    {3, "clasp absorption, annihilation, and braiding eigenvalues", c3_clasp},
    {4, "twist-form equivalence and m=1 specializations for s,t <= 5", c4_forms},
    {5, "twist expansions vs brute-force engine for s,t <= 2, m <= 2, both orientations", c5_twist_oracle},
    {6, "torus invariants vs evaluated diagrams for (s,t) in {(1,1),(1,2),(2,2)}, m <= 2", c6_torus_oracle},
    {7, "closed basis-web values vs engine for s,t <= 2, all indices", c7_closure},
    {8, "tail stabilization mod q^{n+1} for m <= 2, n <= 8, both orientations", c8_tails},
    {9, "lattice commutation condition and the parallel recurrence under closures", c9_recurrence},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc + 1; ++i) {
        if (i + 1 < argc && std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);
    }
    bool all_ok = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "criterion " << c.id << " raised: " << e.what() << "\n";
            ok = false;
        }
        std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " — " << c.summary << std::endl;
        if (!ok) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
