#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dsc/halfint.hpp"
#include "dsc/parameter.hpp"

namespace dsc {

// Product of (1 - q^{-r(s+t)})^{-mult}; the empty product is 1.
struct LFactor {
    std::map<std::pair<int, HalfInt>, int> factors;

    LFactor &operator*=(const LFactor &o);
    LFactor operator*(const LFactor &o) const;
    // L(s + t).
    LFactor shifted(HalfInt t) const;

    bool is_one() const { return factors.empty(); }
    int pole_order(HalfInt s0) const;
    bool has_pole(HalfInt s0) const { return pole_order(s0) > 0; }
    std::vector<HalfInt> poles() const;
    std::string str() const;

    bool operator==(const LFactor &) const = default;
};

struct StBlock {
    Rho rho;
    int a = 1;
};

// Tempered sum of Steinberg blocks twisted by a real exponent.
struct GLPiece {
    std::vector<StBlock> tempered;
    HalfInt shift;
};

enum class GLKind { cuspidal, steinberg, tempered, langlands };

struct GLRep {
    GLKind kind = GLKind::tempered;
    std::vector<GLPiece> pieces;

    static GLRep cuspidal(Rho rho, HalfInt shift = {});
    static GLRep steinberg(Rho rho, int a, HalfInt shift = {});
    static GLRep tempered(std::vector<StBlock> blocks);
    // Shifts must be strictly decreasing.
    static GLRep langlands(std::vector<GLPiece> pieces);

    int degree() const;
    std::string str() const;
};

LFactor rs(const GLRep &pi, const GLRep &sigma);
LFactor sym2(const GLRep &pi);
LFactor wedge2(const GLRep &pi);
bool factorization_identity_check(const GLRep &pi);

// The tempered representation attached to phi (blocks repeated by multiplicity).
GLRep parameter_glrep(const Parameter &phi);
LFactor rho_cross_parameter(const Rho &rho, const Parameter &phi);

enum class ReducibilityCase { max_jord, opposite_type, none };

struct ReducibilityPoint {
    int a_rho = -1;
    HalfInt exponent; // (a_rho + 1) / 2
    ReducibilityCase which = ReducibilityCase::none;
    // Set for the third case at the non-full-orthogonal level: the statement holds
    // provided d_rho is even or the representation is theta_0-invariant.
    bool proviso = false;
};

ReducibilityPoint reducibility_point(const Parameter &phi, const Rho &rho, bool full_orthogonal);

} // namespace dsc
