#include "dsc/halfint.hpp"

#include <charconv>

#include "dsc/errors.hpp"

namespace dsc {

std::string HalfInt::str() const
{
    if (is_integer())
        return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

namespace {

std::int64_t parse_int(std::string_view t, std::string_view whole)
{
    std::int64_t v = 0;
    if (!t.empty() && t.front() == '+')
        t.remove_prefix(1);
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || p != t.data() + t.size())
        throw Error(Errc::Validation, "not a half-integer: '" + std::string(whole) + "'");
    return v;
}

} // namespace

HalfInt parse_halfint(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_int(text.substr(0, slash), text);
        std::int64_t den = parse_int(text.substr(slash + 1), text);
        if (den == 1)
            return HalfInt::whole(num);
        if (den != 2)
            throw Error(Errc::Validation, "denominator must be 1 or 2: '" + std::string(text) + "'");
        return HalfInt::from_doubled(num);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view frac = text.substr(dot + 1);
        bool neg = !text.empty() && text.front() == '-';
        std::string_view ip = text.substr(0, dot);
        std::int64_t whole = (ip.empty() || ip == "-" || ip == "+") ? 0 : parse_int(ip, text);
        std::int64_t d = 2 * whole;
        if (frac == "5")
            d += neg ? -1 : 1;
        else if (frac.find_first_not_of('0') != std::string_view::npos || frac.empty())
            throw Error(Errc::Validation, "not a half-integer: '" + std::string(text) + "'");
        return HalfInt::from_doubled(d);
    }
    return HalfInt::whole(parse_int(text, text));
}

} // namespace dsc
