#include "dsc/symbol.hpp"

#include "dsc/errors.hpp"

namespace dsc {

const char *sd_type_name(SdType t)
{
    switch (t) {
    case SdType::orthogonal: return "orthogonal";
    case SdType::symplectic: return "symplectic";
    case SdType::none: return "none";
    }
    return "none";
}

SdType parse_sd_type(const std::string &s)
{
    if (s == "orthogonal" || s == "orth")
        return SdType::orthogonal;
    if (s == "symplectic" || s == "symp")
        return SdType::symplectic;
    if (s == "none")
        return SdType::none;
    throw Error(Errc::Validation, "unknown sd_type '" + s + "'");
}

void validate_symbol(const ScuspSymbol &s)
{
    auto fail = [&](const std::string &why) {
        throw Error(Errc::Validation, "symbol '" + s.label + "': " + why);
    };
    if (s.label.empty())
        fail("empty label");
    if (s.label.find_first_of(":,|<>() \t") != std::string::npos)
        fail("label contains a reserved character");
    if (s.dim < 1)
        fail("dim must be positive");
    if (s.torsion < 1)
        fail("torsion must be positive");
    if ((s.sd_type == SdType::none) != !s.self_dual)
        fail("sd_type is none exactly when the symbol is not self-dual");
    if (s.sd_type == SdType::symplectic && s.dim % 2 != 0)
        fail("symplectic type requires even dim");
    if (s.self_dual && !s.dual_label.empty() && s.dual_label != s.label)
        fail("self-dual symbol declares a different dual label");
}

const std::string &dual_label_of(const ScuspSymbol &s)
{
    return s.self_dual ? s.label : s.dual_label;
}

void Alphabet::add(ScuspSymbol s)
{
    validate_symbol(s);
    if (index_.count(s.label))
        throw Error(Errc::Validation, "duplicate label '" + s.label + "'");
    index_[s.label] = symbols_.size();
    symbols_.push_back(std::make_shared<const ScuspSymbol>(std::move(s)));
}

void Alphabet::add_twist(const std::string &label, const QuadChar &eta, const std::string &target)
{
    Rho from = get(label);
    Rho to = get(target);
    if (from->dim != to->dim)
        throw Error(Errc::Validation, "twist " + label + " -> " + target + " changes dim");
    twists_[{label, eta}] = target;
}

Rho Alphabet::find(const std::string &label) const
{
    auto it = index_.find(label);
    return it == index_.end() ? nullptr : symbols_[it->second];
}

Rho Alphabet::get(const std::string &label) const
{
    Rho r = find(label);
    if (!r)
        throw Error(Errc::Validation, "unknown symbol '" + label + "'");
    return r;
}

std::string Alphabet::twist_one(const std::string &label, const QuadChar &eta) const
{
    if (auto it = twists_.find({label, eta}); it != twists_.end())
        return it->second;
    Rho r = get(label);
    if (r->dim == 1 && r->self_dual) {
        // A quadratic character is determined by itself: rho (x) eta = omega_rho * eta.
        QuadChar target = r->central_char * eta;
        for (const auto &s : symbols_)
            if (s->dim == 1 && s->self_dual && s->central_char == target)
                return s->label;
    }
    throw Error(Errc::AlphabetNotClosedUnderTwist, label + " (x) " + eta.str() + " is not in the alphabet");
}

std::string Alphabet::twist_label(const std::string &label, const QuadChar &eta) const
{
    if (eta.trivial())
        return label;
    if (twists_.count({label, eta}))
        return twists_.at({label, eta});
    Rho r = get(label);
    if ((r->dim == 1 && r->self_dual) || eta.gens.size() == 1)
        return twist_one(label, eta);
    std::string cur = label;
    for (const auto &g : eta.gens)
        cur = twist_one(cur, QuadChar({g}));
    return cur;
}

void Alphabet::validate() const
{
    std::map<QuadChar, std::string> characters;
    for (const auto &s : symbols_) {
        if (!s->self_dual && !s->dual_label.empty()) {
            Rho d = find(s->dual_label);
            if (!d)
                throw Error(Errc::Validation, "dual of '" + s->label + "' is not in the alphabet");
            if (d->self_dual || d->dual_label != s->label || d->dim != s->dim)
                throw Error(Errc::Validation, "dual pair '" + s->label + "'/'" + d->label + "' is inconsistent");
        }
        if (s->dim == 1 && s->self_dual) {
            auto [it, fresh] = characters.emplace(s->central_char, s->label);
            if (!fresh)
                throw Error(Errc::Validation, "characters '" + it->second + "' and '" + s->label +
                                                  "' share the central character " + s->central_char.str());
        }
    }
    for (const auto &[key, target] : twists_) {
        auto back = twists_.find({target, key.second});
        if (back != twists_.end() && back->second != key.first)
            throw Error(Errc::Validation, "twist table is not involutive at '" + key.first + "'");
    }
}

Alphabet Alphabet::test_alphabet()
{
    Alphabet a;
    a.add({"chi", 1, true, SdType::orthogonal, QuadChar{}, 1, ""});
    a.add({"xi", 1, true, SdType::orthogonal, QuadChar({"u"}), 1, ""});
    a.add({"rho2", 2, true, SdType::symplectic, QuadChar{}, 1, ""});
    a.add_twist("rho2", QuadChar({"u"}), "rho2");
    return a;
}

} // namespace dsc
