#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dsc/jacquet.hpp"

namespace dsc {

// One sign per block copy, sorted by (block, sign). Doubled blocks carry two entries.
struct SignVector {
    std::vector<std::pair<JordanBlock, int>> entries;

    int at(const JordanBlock &b) const; // single-copy blocks only
    std::string str() const;

    auto operator<=>(const SignVector &) const = default;
    bool operator==(const SignVector &) const = default;
};

// Signs listed per block copy in canonical order.
SignVector make_signs(const Parameter &phi, const std::vector<int> &signs);
// Every sign vector on the copies of phi, canonical order. Copies of one block are unordered.
std::vector<SignVector> all_sign_vectors(const Parameter &phi);

// s lies in S_phi rather than only in the Sigma_0 group: the -1 part has even dimension.
bool in_component_group(const Parameter &phi, const SignVector &s);

struct EndoDatum {
    GroupType g1;
    Parameter phi1;
    QuadChar eta1;
    GroupType g2;
    Parameter phi2;
    QuadChar eta2;
    bool twisted = false;

    std::string str() const;
    auto operator<=>(const EndoDatum &) const = default;
    bool operator==(const EndoDatum &) const = default;
};

// For Sp the sign is first normalized so the +1 side has odd dimension (s and -s agree).
// Throws SignVectorNotInComponentGroup, AlphabetNotClosedUnderTwist.
EndoDatum endo_datum(const Parameter &phi, const SignVector &s, const Alphabet &alphabet);

// Product of eps over the blocks where s = -1. Throws BlockSetMismatch.
int pairing(const EpsilonChar &eps, const SignVector &s);

// Sum over the packet of pairing(eps, s) * pi(phi, eps); bar level for s in S_phi, sigma0 otherwise.
VirtualSum packet_transfer_sum(const Parameter &phi, const SignVector &s, const Alphabet &alphabet);

// Image of s in the component group of the Jacquet parameter: the copy at (rho, 2x+1)
// moves to (rho, 2x-1), or is dropped when x = 1/2. nullopt when the step vanishes.
std::optional<SignVector> project_signs(const Parameter &phi, const SignVector &s, const Rho &rho, HalfInt x);

// endo_datum(phi, s) with the block (rho, 2x+1) lowered on its own side.
std::optional<EndoDatum> jacquet_rewrite(const Parameter &phi, const SignVector &s, const Rho &rho, HalfInt x,
                                         const Alphabet &alphabet);

// endo_datum(phi_-, s_-) == jacquet_rewrite(phi, s); vacuous when the step vanishes.
bool jacquet_endoscopy_compatible(const Parameter &phi, const SignVector &s, const Rho &rho, HalfInt x,
                                  const Alphabet &alphabet);

} // namespace dsc
