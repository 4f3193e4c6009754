#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dsc/halfint.hpp"
#include "dsc/symbol.hpp"

namespace dsc {

// Arithmetic progression from `from` with common difference `step`.
// Length <= 1 is normalized to step -1; length 0 is the empty segment.
struct Segment {
    Rho rho;
    HalfInt from;
    int len = 1;
    int step = -1;

    static Segment between(Rho rho, HalfInt from, HalfInt to);
    static Segment empty(Rho rho);
    static Segment point(Rho rho, HalfInt x) { return between(std::move(rho), x, x); }
    // St(rho, a) twisted by |.|^shift: <(a-1)/2 + shift, ..., -(a-1)/2 + shift>.
    static Segment steinberg(Rho rho, int a, HalfInt shift = {});

    bool is_empty() const { return len == 0; }
    HalfInt to() const { return from + HalfInt::whole(static_cast<std::int64_t>(step) * (len - 1)); }
    std::vector<HalfInt> entries() const;
    Segment shifted(HalfInt s) const;
    // Contragredient: entries negated, carried by the dual symbol.
    Segment dual(Rho dual_rho) const;
    Segment drop_first() const;
    Segment drop_last() const;

    // "<chi:2..-1>", "<chi:1>", "<chi:>" for the empty segment.
    std::string str() const;

    std::strong_ordering operator<=>(const Segment &o) const;
    bool operator==(const Segment &o) const { return (*this <=> o) == 0; }
};

// Neither set contains the other and the union is a segment.
// Throws MixedMonotonicity when (x - y)(x' - y') < 0.
bool is_linked(const Segment &s1, const Segment &s2);
bool product_reducible(const Segment &s1, const Segment &s2);

enum class GenKind { rows_decreasing, rows_increasing, point };

// m x n grid; rows are segments of one monotone kind, columns of the other.
class GenSegment {
public:
    static GenSegment make(Rho rho, std::vector<std::vector<HalfInt>> rows);
    static GenSegment from_segment(const Segment &s);

    const Rho &rho() const { return rho_; }
    const std::vector<std::vector<HalfInt>> &rows() const { return rows_; }
    std::size_t height() const { return rows_.size(); }
    std::size_t width() const { return rows_.front().size(); }
    GenKind kind() const;

    GenSegment transposed() const;
    GenSegment shifted(HalfInt s) const;
    std::string str() const;

    bool operator==(const GenSegment &o) const;

private:
    Rho rho_;
    std::vector<std::vector<HalfInt>> rows_;
};

// Grids on different rho lines are never linked.
bool gen_is_linked(const GenSegment &g1, const GenSegment &g2);
// Criterion value: true guarantees irreducibility; false means "possibly reducible".
bool gen_product_irreducible(const GenSegment &g1, const GenSegment &g2);

// b x a matrix of Sp(St(rho, a), b); row i starts at (a - b)/2 + i and decreases.
GenSegment speh_matrix(Rho rho, int a, int b);

bool speh_pair_reducible(const ScuspSymbol &rho, int a, int b, const ScuspSymbol &rho2, int a2, int b2, HalfInt s);

} // namespace dsc
