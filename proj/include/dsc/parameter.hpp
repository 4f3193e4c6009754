#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dsc/quadchar.hpp"
#include "dsc/symbol.hpp"

namespace dsc {

struct JordanBlock {
    Rho rho;
    int a = 1;

    const std::string &label() const { return rho->label; }
    int dim() const { return a * rho->dim; }
    // "label:a", the key used in serialized maps.
    std::string key() const;

    std::weak_ordering operator<=>(const JordanBlock &o) const;
    bool operator==(const JordanBlock &o) const { return a == o.a && rho->label == o.rho->label; }
};

// Throws NotSelfDual.
SdType block_type(const JordanBlock &b);
QuadChar block_central_char(const JordanBlock &b);

enum class GroupKind { Sp, SOodd, SOeven };

const char *group_kind_name(GroupKind k);
GroupKind parse_group_kind(const std::string &s);

struct GroupType {
    GroupKind kind = GroupKind::Sp;
    int n = 0;
    QuadChar eta; // kept trivial unless kind == SOeven

    int N() const { return kind == GroupKind::Sp ? 2 * n + 1 : 2 * n; }
    SdType dual_type() const { return kind == GroupKind::SOodd ? SdType::symplectic : SdType::orthogonal; }
    GroupType with_rank(int rank) const { return GroupType{kind, rank, eta}; }
    std::string str() const;

    auto operator<=>(const GroupType &) const = default;
    bool operator==(const GroupType &) const = default;
};

GroupType make_group(GroupKind kind, int n, QuadChar eta = {});
// Rank of the group of the given kind whose dual has dimension N; throws on parity mismatch.
int rank_for_dimension(GroupKind kind, int N);

class Parameter {
public:
    Parameter() = default;

    // Validated: multiplicities >= 1, total dimension N, SOeven determinant.
    static Parameter make(const GroupType &g, std::map<JordanBlock, int> blocks);
    static Parameter make(const GroupType &g, const std::vector<JordanBlock> &blocks);
    // No validation; used for fuzzing the dimension identity.
    static Parameter unchecked(const GroupType &g, std::map<JordanBlock, int> blocks);

    const GroupType &group() const { return group_; }
    const std::map<JordanBlock, int> &blocks() const { return blocks_; }

    std::vector<JordanBlock> distinct() const;
    std::vector<JordanBlock> doubled() const;
    std::vector<int> jord_rho(const std::string &label) const;
    int multiplicity(const std::string &label, int a) const;
    bool contains(const std::string &label, int a) const { return multiplicity(label, a) > 0; }
    int total_dim() const;

    bool is_discrete() const;
    // Multiplicity free except for doubled blocks, all blocks self-dual of the dual type.
    bool is_tempered_shape() const;
    void require_discrete() const;

    std::string str() const;

    auto operator<=>(const Parameter &) const = default;
    bool operator==(const Parameter &) const = default;

private:
    GroupType group_;
    std::map<JordanBlock, int> blocks_;
};

} // namespace dsc
