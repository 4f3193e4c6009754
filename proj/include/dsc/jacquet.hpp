#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsc/epsilon.hpp"
#include "dsc/segments.hpp"

namespace dsc {

using GLProduct = std::vector<Segment>;
// Grothendieck-group sum of GL products; keys are sorted with empty segments removed.
using GLSum = std::map<GLProduct, long long>;

GLProduct normalize_product(GLProduct p);

GLSum jac_gl(HalfInt x, const Rho &rho, const GLProduct &p);
// Removes a trailing x carried by rho^vee.
GLSum jac_op_gl(HalfInt x, const Rho &rho, const GLProduct &p);
// Jac_x after Jac^op_{-x}.
GLSum jac_theta(HalfInt x, const Rho &rho, const GLProduct &p);

// The GL(N) representation attached to phi: product of St(rho, a) by multiplicity.
GLProduct parameter_gl_product(const Parameter &phi);

struct Packet {
    Parameter phi;
    EpsilonChar eps;
    Level level = Level::sigma0;
    // Marks the theta_0-conjugate in the even orthogonal case tables; invisible to parameters.
    bool theta = false;

    std::string str() const;
    auto operator<=>(const Packet &) const = default;
    bool operator==(const Packet &) const = default;
};

Packet make_packet(Parameter phi, EpsilonChar eps, Level level);

enum class SymKind { zero, packet, induced };

// tau_1 x ... x tau_k |x inner, or a bare packet, or 0.
struct RepSymbol {
    SymKind kind = SymKind::zero;
    GLProduct gl;
    Packet inner;

    static RepSymbol zero() { return {}; }
    static RepSymbol packet(Packet p);
    static RepSymbol induced(GLProduct gl, Packet p);

    int gl_degree() const;
    GroupType group() const;
    std::string str() const;

    auto operator<=>(const RepSymbol &) const = default;
    bool operator==(const RepSymbol &) const = default;
};

class VirtualSum {
public:
    // Sorts GL parts, drops empty segments, collapses an empty GL part to a packet.
    void add(const RepSymbol &s, long long coeff = 1);
    VirtualSum &operator+=(const VirtualSum &o);
    VirtualSum scaled(long long k) const;

    const std::map<RepSymbol, long long> &terms() const { return terms_; }
    long long coefficient(const RepSymbol &s) const;
    bool is_zero() const { return terms_.empty(); }
    std::string str() const;

    bool operator==(const VirtualSum &) const = default;

private:
    std::map<RepSymbol, long long> terms_;
};

RepSymbol normalize_symbol(RepSymbol s);

// Parameter of the packet-level Jacquet image; nullopt when (rho, 2x+1) is not a block.
std::optional<Parameter> jacquet_parameter(const Parameter &phi, const Rho &rho, HalfInt x);

// Which packet-Jacquet case applies: 1 (shift down), 2 (doubled block), 3 (x = 1/2); 0 if vanishing.
int jacquet_case(const Parameter &phi, const Rho &rho, HalfInt x);

// Packet-level step on discrete or tempered packets. Returns nullopt for x <= 0 or a vanishing step.
// Throws UnsupportedSymbol when the step touches a doubled block.
std::optional<Packet> packet_jac(HalfInt x, const Rho &rho, const Packet &p);

// Public packet map: zero or the image packet. Throws NonPositiveX, NonDiscreteParameter.
RepSymbol jac_packet(HalfInt x, const Rho &rho, const RepSymbol &pi);

// Three-term expansion (GL leading, GL trailing against rho^vee, inner bar-Jac).
// The inner term counts twice in SO(2n) when the inner rank equals d_rho.
VirtualSum jac_induced(HalfInt x, const Rho &rho, const RepSymbol &sym);
VirtualSum jac(HalfInt x, const Rho &rho, const VirtualSum &v);
// Jac_{x_s} o ... o Jac_{x_1}, memoized per call on (symbol, step).
VirtualSum jac_sequence(const std::vector<HalfInt> &xs, const Rho &rho, const RepSymbol &sym);

// Unbarred Jac_x on tau |x pi for SO(2n, eta), following the four rank cases
// (inner rank n != d_rho, n = d_rho, n = 0 with deg tau != d_rho, n = 0 with deg tau = d_rho).
// Requires a nonempty GL part.
VirtualSum jac_soeven_table(HalfInt x, const Rho &rho, const RepSymbol &sym);
// bar-Jac from the table: adds Jac of the theta_0 image when the total rank is d_rho.
// The image of tau |x 1 is tau^vee |x 1 for odd d_rho and lies over a non-associate Levi
// (so contributes nothing) for even d_rho. Duals are looked up in the alphabet.
VirtualSum bar_jac_from_table(HalfInt x, const Rho &rho, const RepSymbol &sym, const Alphabet &alphabet);
VirtualSum forget_theta(const VirtualSum &v);

} // namespace dsc
