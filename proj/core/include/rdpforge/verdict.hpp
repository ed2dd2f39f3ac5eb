#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdpforge/elem.hpp"

namespace rdpforge {

struct CheckBudget {
    int radius = 3;
    std::int64_t samples = 10000;
    std::uint64_t seed = 0;
    int threads = 1;
};

enum class Verdict { Pass, Fail, Inconclusive };
enum class Mode { Exhaustive, Sampled };

const char* to_string(Verdict v);
const char* to_string(Mode m);

// A labelled tuple of elements, e.g. a counterexample quadruple or a found table.
struct Witness {
    std::string label;
    std::vector<Elem> elems;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Stats {
    std::uint64_t checked = 0;
    double elapsed_ms = 0;
    std::uint64_t seed = 0;
    int radius = 0;
};

struct VerdictReport {
    Verdict verdict = Verdict::Pass;
    Mode mode = Mode::Exhaustive;
    std::vector<Witness> witnesses;
    std::vector<Witness> counterexamples;
    Stats stats;
    // Failing axiom or sub-check tags, e.g. "A6".
    std::vector<std::string> failed;
    // Free-form qualifier, e.g. "antilattice evidence (boxed)".
    std::string note;

    bool passed() const { return verdict == Verdict::Pass; }
    bool failed_verdict() const { return verdict == Verdict::Fail; }

    void fail(Witness w) {
        verdict = Verdict::Fail;
        counterexamples.push_back(std::move(w));
    }
    // Downgrades pass to inconclusive; fail stays fail.
    void weaken() {
        if (verdict == Verdict::Pass) verdict = Verdict::Inconclusive;
    }
};

// Combines two verdicts: any fail wins, then inconclusive, then pass.
Verdict combine(Verdict a, Verdict b);

}  // namespace rdpforge
