#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dsc/jacquet.hpp"

namespace dsc {

bool is_supercuspidal(const Parameter &phi, const EpsilonChar &eps);

struct Emission {
    Rho rho;
    HalfInt x;
    bool operator==(const Emission &o) const { return x == o.x && rho->label == o.rho->label; }
};

struct ReduceStep {
    std::vector<Emission> emitted;
    int step_case = 0; // 1: a -> a-2, 2: collapse of a and a-2, 3: (rho, 2) removed
    JordanBlock block;
    Parameter phi;
    EpsilonChar eps;
};

// One reduction at the block chosen by largest a, then label.
// A collapse emits (a-1)/2 followed by the segment (a-3)/2 .. -(a-3)/2.
std::optional<ReduceStep> reduce_once(const Parameter &phi, const EpsilonChar &eps);

struct SupportResult {
    std::vector<Emission> emissions;
    std::vector<Segment> segments;
    Parameter cusp_phi;
    EpsilonChar cusp_eps;
};

// Runs stay on the selected block while its step is nonzero; each run is one segment.
SupportResult cuspidal_support(const Parameter &phi, const EpsilonChar &eps);
// Re-selects the block after every step; same cusp, emissions possibly reordered.
SupportResult cuspidal_support_stepwise(const Parameter &phi, const EpsilonChar &eps);
// Replays the emissions as Jacquet steps and checks that the cusp term is reached.
bool replay_support(const Parameter &phi, const EpsilonChar &eps, const SupportResult &r);

using BlockPair = std::pair<JordanBlock, JordanBlock>;

struct AdmissibleTriple {
    std::vector<JordanBlock> jord;
    Parameter cusp_phi;
    EpsilonChar cusp_eps;
    std::map<JordanBlock, int> delta_single;
    std::map<BlockPair, int> delta_pair; // keys ordered first < second, same rho

    GroupType group() const;
    auto operator<=>(const AdmissibleTriple &) const = default;
    bool operator==(const AdmissibleTriple &) const = default;
};

AdmissibleTriple triple_of(const Parameter &phi, const EpsilonChar &eps);

// Domains and cocycle laws; throws InconsistentDelta.
void check_delta(const AdmissibleTriple &t);
bool is_alternated(const AdmissibleTriple &t);
bool is_admissible(const AdmissibleTriple &t);
// All orders of removing adjacent +1 pairs give the same verdict.
bool admissibility_order_independent(const AdmissibleTriple &t);

std::pair<Parameter, EpsilonChar> parameter_of(const AdmissibleTriple &t);

struct StandardModule {
    RepSymbol module;
    Parameter phi;
    EpsilonChar eps;
};

StandardModule construct_standard_module(const AdmissibleTriple &t);

std::vector<Parameter> enumerate_parameters(const GroupType &g, const Alphabet &alphabet);
std::vector<std::pair<Parameter, EpsilonChar>> enumerate(const GroupType &g, const Alphabet &alphabet);

bool jord_from_st_reducibility(const Parameter &phi, const EpsilonChar &eps, const Rho &rho, int a);
bool dimension_identity(const Parameter &phi);

// Independent oracle: every (Jord, cusp, Delta) satisfying the admissibility clauses.
std::vector<AdmissibleTriple> brute_force_triples(const GroupType &g, const Alphabet &alphabet);

} // namespace dsc
