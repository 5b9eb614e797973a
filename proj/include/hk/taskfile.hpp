#pragma once

#include <string>
#include <vector>

#include "hk/quotient.hpp"

namespace hk {

// One parsed task description. Polynomial text is kept verbatim so that
// parse(print(spec)) == spec; semantic validation happens when the ring is built.
struct TaskSpec {
    uint32_t p = 2;
    std::vector<std::string> vars;
    std::vector<std::string> relations;
    std::vector<std::string> ideal;  // empty = maximal ideal
    std::string kind = "kunz";       // ehk | tor | kunz | check | lemma | corollary | monomial-ehk | bi-bound
    int n_max = 3;
    int i = 1;  // tor: homological index; check: alternating-sum depth
    double tol = 0.05;
    std::vector<Exp> q_list;
    int stages = 0;  // bi-bound: 0 = Koszul complex, >= 1 = resolution truncated there

    bool operator==(const TaskSpec&) const = default;
};

// Line-oriented format: `p:`, `vars:`, `relations:`, `ideal:`, `task: <kind> [key=value...]`,
// `#` comments. Throws InputError with the offending line or token named.
TaskSpec parse_taskfile(const std::string& text);

std::string print_taskfile(const TaskSpec& spec);

QuotientRing build_ring(const TaskSpec& spec);

// The working ideal: parsed `ideal:` entries, or the variables when the line was omitted.
std::vector<Polynomial> build_ideal_gens(const TaskSpec& spec, const PolyRing& ring);

}  // namespace hk
