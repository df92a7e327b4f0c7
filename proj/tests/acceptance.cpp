// Runs the eleven acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "steencalc/suites.hpp"

namespace {

using namespace steencalc;

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> suites;
    double time_limit_seconds = 0;  // 0: none
};

std::string first_failure(const SuiteReport& r) {
    if (r.failures.empty()) return {};
    return r.suite + ": " + r.failures.front().input +
           (r.failures.front().detail.empty() ? "" : " (" + r.failures.front().detail + ")");
}

}  // namespace

int main() {
    std::uint64_t seed = 20261016;
    if (const char* env = std::getenv("STEENCALC_SEED")) seed = std::strtoull(env, nullptr, 10);

    const std::vector<Criterion> criteria{
        {1, "pthpower: S^0 = id, S^k = d^p, zero off range", {"pthpower"}, 60},
        {2, "prx-divisibility: series = binom_neg_mod_p = (-1)^k C(pk,k) = 0", {"prx-divisibility"}},
        {3, "characteristic classes: b, omega, c s = 1, mu(V (x) H)", {"bclass", "omega", "mu"}},
        {4, "pipeline consistency: corcalc = seed-based, brolemma", {"corcalc"}},
        {5, "naturality: pullback and pushforward", {"pullback", "pushforward"}},
        {6, "torsor equivalence on the graded corpus", {"torsor-equivalence"}},
        {7, "deformation identity for k <= 4", {"deformation"}},
        {8, "fiber degrees sum to p", {"fibers"}},
        {9, "Milnor anticommutation, Steinberg, reciprocity", {"anticommute"}, 30},
        {10, "twist law kummer(twist(A,k)) = kummer(A)^k", {"twist"}},
        {11, "Lucas oracle against exact binomials", {"lucas"}},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        bool ok = true;
        std::uint64_t cases = 0, failures = 0;
        double seconds = 0;
        std::string example;
        for (const auto& name : c.suites) {
            const SuiteReport r = run_suite(name, seed);
            ok = ok && r.passed();
            cases += r.cases;
            failures += r.failure_count;
            seconds += r.wall_seconds;
            if (example.empty()) example = first_failure(r);
        }
        std::string note;
        if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
            ok = false;
            note = " over the " + std::to_string(static_cast<int>(c.time_limit_seconds)) + " s limit";
        }
        if (!ok) ++failed;
        std::printf("criterion %2d %s  %s  [%llu cases, %llu failures, %.2f s]%s%s\n", c.number, ok ? "PASS" : "FAIL",
                    c.title.c_str(), static_cast<unsigned long long>(cases), static_cast<unsigned long long>(failures),
                    seconds, note.c_str(), example.empty() ? "" : ("  e.g. " + example).c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
