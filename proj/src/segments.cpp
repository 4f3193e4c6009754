#include "dsc/segments.hpp"

#include <algorithm>
#include <set>

#include "dsc/errors.hpp"

namespace dsc {

Segment Segment::between(Rho rho, HalfInt from, HalfInt to)
{
    HalfInt d = from - to;
    if (!d.is_integer())
        throw Error(Errc::Validation, "segment endpoints " + from.str() + ", " + to.str() + " differ by a non-integer");
    Segment s;
    s.rho = std::move(rho);
    s.from = from;
    s.len = static_cast<int>(abs(d).doubled / 2) + 1;
    s.step = from < to ? 1 : -1;
    return s;
}

Segment Segment::empty(Rho rho)
{
    Segment s;
    s.rho = std::move(rho);
    s.len = 0;
    return s;
}

Segment Segment::steinberg(Rho rho, int a, HalfInt shift)
{
    if (a < 1)
        return empty(std::move(rho));
    return between(std::move(rho), HalfInt::top_of(a) + shift, -HalfInt::top_of(a) + shift);
}

std::vector<HalfInt> Segment::entries() const
{
    std::vector<HalfInt> out;
    out.reserve(len);
    for (int i = 0; i < len; ++i)
        out.push_back(from + HalfInt::whole(static_cast<std::int64_t>(step) * i));
    return out;
}

Segment Segment::shifted(HalfInt s) const
{
    Segment r = *this;
    if (!is_empty())
        r.from += s;
    return r;
}

Segment Segment::dual(Rho dual_rho) const
{
    Segment r = *this;
    r.rho = std::move(dual_rho);
    if (is_empty())
        return r;
    r.from = -from;
    if (len > 1)
        r.step = -step;
    return r;
}

Segment Segment::drop_first() const
{
    if (len <= 1)
        return empty(rho);
    return between(rho, from + HalfInt::whole(step), to());
}

Segment Segment::drop_last() const
{
    if (len <= 1)
        return empty(rho);
    return between(rho, from, to() - HalfInt::whole(step));
}

std::string Segment::str() const
{
    if (is_empty())
        return "<" + rho->label + ":>";
    if (len == 1)
        return "<" + rho->label + ":" + from.str() + ">";
    return "<" + rho->label + ":" + from.str() + ".." + to().str() + ">";
}

std::strong_ordering Segment::operator<=>(const Segment &o) const
{
    if (auto c = rho->label.compare(o.rho->label); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (is_empty() || o.is_empty())
        return o.len <=> len;
    if (auto c = from <=> o.from; c != 0)
        return c;
    if (auto c = len <=> o.len; c != 0)
        return c;
    return step <=> o.step;
}

namespace {

using Set = std::set<std::int64_t>; // doubled values

bool subset(const Set &a, const Set &b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Set-level linking: incomparable, integral differences, contiguous union.
bool sets_linked(const Set &a, const Set &b)
{
    if (a.empty() || b.empty() || subset(a, b) || subset(b, a))
        return false;
    if ((*a.begin() - *b.begin()) % 2 != 0)
        return false;
    Set u = a;
    u.insert(b.begin(), b.end());
    return *u.rbegin() - *u.begin() == 2 * static_cast<std::int64_t>(u.size() - 1);
}

Set to_set(const std::vector<HalfInt> &v)
{
    Set s;
    for (HalfInt h : v)
        s.insert(h.doubled);
    return s;
}

Set range_set(HalfInt x, HalfInt y)
{
    Set s;
    HalfInt lo = std::min(x, y), hi = std::max(x, y);
    for (HalfInt h = lo; h <= hi; h += HalfInt::whole(1))
        s.insert(h.doubled);
    return s;
}

bool comparable(const Set &a, const Set &b)
{
    return subset(a, b) || subset(b, a);
}

} // namespace

bool is_linked(const Segment &s1, const Segment &s2)
{
    if (s1.len > 1 && s2.len > 1 && s1.step != s2.step)
        throw Error(Errc::MixedMonotonicity, s1.str() + " and " + s2.str() + " have opposite monotonicity");
    return sets_linked(to_set(s1.entries()), to_set(s2.entries()));
}

bool product_reducible(const Segment &s1, const Segment &s2)
{
    bool linked = is_linked(s1, s2);
    return s1.rho->label == s2.rho->label && linked;
}

GenSegment GenSegment::make(Rho rho, std::vector<std::vector<HalfInt>> rows)
{
    if (rows.empty() || rows.front().empty())
        throw Error(Errc::Validation, "generalized segment needs at least one entry");
    std::size_t n = rows.front().size();
    for (const auto &r : rows)
        if (r.size() != n)
            throw Error(Errc::Validation, "generalized segment rows have unequal lengths");
    // Rows step by -1 and columns by +1, or the other way round.
    int row_step = 0, col_step = 0;
    if (n > 1)
        row_step = (rows[0][1] - rows[0][0]).doubled / 2;
    if (rows.size() > 1)
        col_step = (rows[1][0] - rows[0][0]).doubled / 2;
    if (row_step == 0 && col_step == 0)
        row_step = -1;
    if (row_step == 0)
        row_step = -col_step;
    if (col_step == 0)
        col_step = -row_step;
    if ((row_step != 1 && row_step != -1) || col_step != -row_step)
        throw Error(Errc::Validation, "rows and columns of a generalized segment must be opposite unit progressions");
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            HalfInt expect = rows[0][0] + HalfInt::whole(static_cast<std::int64_t>(i) * col_step + static_cast<std::int64_t>(j) * row_step);
            if (rows[i][j] != expect)
                throw Error(Errc::Validation, "generalized segment entry (" + std::to_string(i) + "," + std::to_string(j) + ") breaks monotonicity");
        }
    GenSegment g;
    g.rho_ = std::move(rho);
    g.rows_ = std::move(rows);
    return g;
}

GenSegment GenSegment::from_segment(const Segment &s)
{
    if (s.is_empty())
        throw Error(Errc::Validation, "empty segment has no matrix");
    return make(s.rho, {s.entries()});
}

GenKind GenSegment::kind() const
{
    if (width() > 1)
        return rows_[0][1] < rows_[0][0] ? GenKind::rows_decreasing : GenKind::rows_increasing;
    if (height() > 1)
        return rows_[1][0] > rows_[0][0] ? GenKind::rows_decreasing : GenKind::rows_increasing;
    return GenKind::point;
}

GenSegment GenSegment::transposed() const
{
    std::vector<std::vector<HalfInt>> t(width(), std::vector<HalfInt>(height()));
    for (std::size_t i = 0; i < height(); ++i)
        for (std::size_t j = 0; j < width(); ++j)
            t[j][i] = rows_[i][j];
    GenSegment g;
    g.rho_ = rho_;
    g.rows_ = std::move(t);
    return g;
}

GenSegment GenSegment::shifted(HalfInt s) const
{
    GenSegment g = *this;
    for (auto &r : g.rows_)
        for (auto &x : r)
            x += s;
    return g;
}

std::string GenSegment::str() const
{
    std::string out = "<" + rho_->label + ":[";
    for (std::size_t i = 0; i < height(); ++i) {
        if (i)
            out += '|';
        for (std::size_t j = 0; j < width(); ++j) {
            if (j)
                out += ',';
            out += rows_[i][j].str();
        }
    }
    return out + "]>";
}

bool GenSegment::operator==(const GenSegment &o) const
{
    return rho_->label == o.rho_->label && rows_ == o.rows_;
}

namespace {

std::vector<Set> sides(const GenSegment &g)
{
    const auto &m = g.rows();
    std::vector<HalfInt> left, right;
    for (const auto &r : m) {
        left.push_back(r.front());
        right.push_back(r.back());
    }
    return {to_set(m.front()), to_set(m.back()), to_set(left), to_set(right)};
}

Set diagonal(const GenSegment &g)
{
    return range_set(g.rows().back().front(), g.rows().front().back());
}

} // namespace

bool gen_is_linked(const GenSegment &g1, const GenSegment &g2)
{
    if (g1.rho()->label != g2.rho()->label)
        return false;
    GenKind k1 = g1.kind(), k2 = g2.kind();
    if (k1 != GenKind::point && k2 != GenKind::point && k1 != k2)
        return gen_is_linked(g1.transposed(), g2);
    if (!sets_linked(diagonal(g1), diagonal(g2)))
        return false;
    auto s1 = sides(g1), s2 = sides(g2);
    for (std::size_t i = 0; i < s1.size(); ++i)
        if (comparable(s1[i], s2[i]))
            return false;
    return true;
}

bool gen_product_irreducible(const GenSegment &g1, const GenSegment &g2)
{
    return !(g1.rho()->label == g2.rho()->label && gen_is_linked(g1, g2));
}

GenSegment speh_matrix(Rho rho, int a, int b)
{
    if (a < 1 || b < 1)
        throw Error(Errc::Validation, "Speh matrix needs a, b >= 1");
    std::vector<std::vector<HalfInt>> rows(b, std::vector<HalfInt>(a));
    HalfInt corner = HalfInt::from_doubled(a - b);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < a; ++j)
            rows[i][j] = corner + HalfInt::whole(i - j);
    return GenSegment::make(std::move(rho), std::move(rows));
}

bool speh_pair_reducible(const ScuspSymbol &rho, int a, int b, const ScuspSymbol &rho2, int a2, int b2, HalfInt s)
{
    if (rho.label != rho2.label)
        return false;
    HalfInt total = HalfInt::from_doubled(a + b + a2 + b2);
    if (!(total + s).is_integer())
        return false;
    HalfInt lower = abs(HalfInt::from_doubled(a - a2)) + abs(HalfInt::from_doubled(b - b2));
    HalfInt upper = total - HalfInt::whole(1);
    return lower < abs(s) && abs(s) <= upper;
}

} // namespace dsc
