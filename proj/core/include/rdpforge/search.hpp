#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rdpforge/descriptor.hpp"
#include "rdpforge/table.hpp"
#include "rdpforge/verdict.hpp"

namespace rdpforge {

// Remark32: decomposition over a lex product whose head is not linear.
// WreathRdp: RDP of a right or left wreath over Z without non-atomicity.
enum class OpenProblem { Remark32, WreathRdp };
const char* to_string(OpenProblem p);
// "remark32" | "wreath-rdp"; InputError otherwise.
OpenProblem parse_open_problem(const std::string& text);

// Default candidate group and kind for each problem.
Descriptor default_search_group(OpenProblem p);
RdpKind default_search_kind(OpenProblem p);

// Frontier after a completed radius, with cumulative counters.
struct SearchCheckpoint {
    int version = 1;
    std::string problem;
    std::string descriptor;
    std::string kind;
    std::uint64_t seed = 0;
    int radius_completed = -1;
    std::uint64_t checked = 0;
    std::uint64_t engine_tables = 0;
    std::uint64_t brute_tables = 0;
    std::uint64_t undecided = 0;
    std::string first_undecided;
    friend bool operator==(const SearchCheckpoint&, const SearchCheckpoint&) = default;
};

std::string checkpoint_to_json(const SearchCheckpoint& c);
// InputError on malformed text or an unknown version.
SearchCheckpoint checkpoint_from_json(const std::string& text);

struct SearchConfig {
    Descriptor group = Descriptor::trivial();
    RdpKind kind = RdpKind::RDP;
    int radius = 2;
    std::uint64_t seed = 0;
    int threads = 1;
    // Stop (inconclusive) once this many quadruples were checked; 0 = no cap.
    std::uint64_t max_quadruples = 0;
    // Continue after this frontier; it must name the same problem, group,
    // kind and seed.
    std::optional<SearchCheckpoint> resume;
    // Called after each completed radius.
    std::function<void(const SearchCheckpoint&)> on_checkpoint;
};

struct SearchResult {
    VerdictReport report;
    SearchCheckpoint frontier;
};

// Search box of level r. Wreath-like groups use the weight
// |shift| + sum of |values| <= r with keys in [-r, r] (coordinates measured by
// max_abs_coordinate); other groups use enumerate_box.
std::vector<Elem> search_box(const Descriptor& desc, int radius);
bool in_search_box(const Descriptor& desc, const Elem& x, int radius);

// Grows r = 0..radius. Level r checks every positive equal-sum quadruple of
// box r not already inside box r - 1: a validated engine table or a table
// found by brute_rdp_search settles it, a complete scan without a table is a
// certified counterexample (fail, stops after that level), anything else is
// undecided. Without a counterexample the verdict is inconclusive, with note
// "pass-boxed: ..." when every quadruple was settled. Reports carry no timing
// so that equal inputs give equal reports. CapabilityError on non-enumerable groups or on a group of
// the wrong shape for the problem.
SearchResult search_open_problem(OpenProblem problem, const SearchConfig& config);

}  // namespace rdpforge
