#pragma once

#include <string>
#include <vector>

#include "dsc/classify.hpp"
#include "dsc/endoscopy.hpp"
#include "dsc/lfactors.hpp"

namespace dsc {

struct VerifyOptions {
    int max_n = 4;
    int threads = 1;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail; // counts only, never timings or thread counts

    bool operator==(const CriterionResult &) const = default;
};

struct VerifyReport {
    std::vector<CriterionResult> criteria;

    bool all_passed() const;
    // One line per criterion.
    std::string text() const;
};

// Groups swept by the criteria: Sp, SO(odd) and SO(even) for every eta generated by the
// central characters of the alphabet.
std::vector<GroupType> group_matrix(const Alphabet &alphabet, int n);

// The test alphabet plus a non-self-dual pair tau3 / tau3v of dimension 3.
Alphabet extended_alphabet();

CriterionResult check_bijection(const Alphabet &alphabet, const VerifyOptions &opt);
CriterionResult check_dimension_identity(const Alphabet &alphabet, const VerifyOptions &opt);
CriterionResult check_supercuspidal_support(const Alphabet &alphabet, const VerifyOptions &opt);
CriterionResult check_jacquet_commutation(const Alphabet &alphabet, const VerifyOptions &opt);
CriterionResult check_packet_jacquet(const Alphabet &alphabet, const VerifyOptions &opt);
CriterionResult check_lfactor_laws(const Alphabet &alphabet, const VerifyOptions &opt);
CriterionResult check_segment_calculus(const Alphabet &alphabet, const VerifyOptions &opt);
CriterionResult check_endoscopy(const Alphabet &alphabet, const VerifyOptions &opt);

// Criteria 1-8 at opt.threads, then criterion 9: the same sweep at a second thread count
// must give an identical report.
VerifyReport run_verify(const Alphabet &alphabet, const VerifyOptions &opt);

} // namespace dsc
