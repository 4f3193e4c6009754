#include "dsc/io.hpp"

#include <fstream>
#include <sstream>

#include <toml.hpp>

#include "dsc/errors.hpp"

namespace dsc::io {

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(Errc::Validation, what); }

template <class T> T field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &) {
        bad(std::string("field '") + key + "' has the wrong type");
    }
}

template <class T> T field_or(const json &j, const char *key, T fallback)
{
    return j.contains(key) ? field<T>(j, key) : fallback;
}

QuadChar char_from_json(const json &j)
{
    QuadChar c;
    if (j.is_string())
        return parse_quadchar(j.get<std::string>());
    if (!j.is_array())
        bad("a quadratic character is a list of generators");
    for (const auto &g : j) {
        if (!g.is_string())
            bad("character generators are strings");
        c.gens.insert(g.get<std::string>());
    }
    return c;
}

json to_json(const QuadChar &c) { return json(std::vector<std::string>(c.gens.begin(), c.gens.end())); }

ScuspSymbol symbol_from_json(const json &j)
{
    ScuspSymbol s;
    s.label = field<std::string>(j, "label");
    s.dim = field_or<int>(j, "dim", 1);
    s.self_dual = field_or<bool>(j, "self_dual", true);
    s.sd_type = parse_sd_type(field_or<std::string>(j, "sd_type", s.self_dual ? "orthogonal" : "none"));
    if (j.contains("central_char"))
        s.central_char = char_from_json(j.at("central_char"));
    s.torsion = field_or<int>(j, "torsion", 1);
    s.dual_label = field_or<std::string>(j, "dual", "");
    return s;
}

Alphabet finish(Alphabet a)
{
    a.validate();
    return a;
}

JordanBlock block_from_key(const std::string &key, const Alphabet &alphabet)
{
    auto colon = key.rfind(':');
    if (colon == std::string::npos)
        bad("block key '" + key + "' is not label:a");
    try {
        std::size_t used = 0;
        int a = std::stoi(key.substr(colon + 1), &used);
        if (used != key.size() - colon - 1 || a < 1)
            bad("bad block size in '" + key + "'");
        return {alphabet.get(key.substr(0, colon)), a};
    } catch (const std::logic_error &) {
        bad("bad block size in '" + key + "'");
    }
}

json block_json(const JordanBlock &b) { return {{"rho", b.label()}, {"a", b.a}}; }

JordanBlock block_from_json(const json &j, const Alphabet &alphabet)
{
    if (j.is_string())
        return block_from_key(j.get<std::string>(), alphabet);
    int a = field<int>(j, "a");
    if (a < 1)
        bad("block size must be positive");
    return {alphabet.get(field<std::string>(j, "rho")), a};
}

std::string trim(std::string s)
{
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos)
        return "";
    return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(trim(cur));
    return out;
}

json packet_json(const Packet &p)
{
    json j = io::to_json(p.phi, p.eps);
    j["level"] = level_name(p.level);
    if (p.theta)
        j["theta"] = true;
    return j;
}

} // namespace

Alphabet alphabet_from_json(const json &j)
{
    Alphabet a;
    const json *symbols = &j;
    if (j.is_object())
        symbols = &j.at("symbols");
    if (!symbols->is_array())
        bad("alphabet symbols must be an array");
    for (const auto &s : *symbols)
        a.add(symbol_from_json(s));
    if (j.is_object() && j.contains("twists"))
        for (const auto &t : j.at("twists"))
            a.add_twist(field<std::string>(t, "label"), char_from_json(t.at("eta")), field<std::string>(t, "target"));
    return finish(std::move(a));
}

Alphabet alphabet_from_toml(const std::string &text)
{
    toml::table tbl;
    try {
        tbl = toml::parse(text);
    } catch (const toml::parse_error &e) {
        bad(std::string("TOML: ") + std::string(e.description()));
    }
    auto to_json_value = [](auto &&self, const toml::node &n) -> json {
        if (auto arr = n.as_array()) {
            json out = json::array();
            for (const auto &x : *arr)
                out.push_back(self(self, x));
            return out;
        }
        if (auto t = n.as_table()) {
            json out = json::object();
            for (const auto &[k, v] : *t)
                out[std::string(k.str())] = self(self, v);
            return out;
        }
        if (auto s = n.as_string())
            return s->get();
        if (auto i = n.as_integer())
            return i->get();
        if (auto b = n.as_boolean())
            return b->get();
        bad("unsupported TOML value");
    };
    return alphabet_from_json(to_json_value(to_json_value, tbl));
}

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        bad("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        bad(path + ": " + e.what());
    }
}

Alphabet load_alphabet(const std::string &path)
{
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0) {
        std::ifstream in(path);
        if (!in)
            bad("cannot read " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return alphabet_from_toml(ss.str());
    }
    return alphabet_from_json(read_json_file(path));
}

json to_json(const Alphabet &a)
{
    json symbols = json::array();
    for (const auto &s : a.symbols()) {
        json j{{"label", s->label},
               {"dim", s->dim},
               {"self_dual", s->self_dual},
               {"sd_type", sd_type_name(s->sd_type)},
               {"central_char", to_json(s->central_char)},
               {"torsion", s->torsion}};
        if (!s->dual_label.empty())
            j["dual"] = s->dual_label;
        symbols.push_back(j);
    }
    json twists = json::array();
    for (const auto &[key, target] : a.twists())
        twists.push_back({{"label", key.first}, {"eta", to_json(key.second)}, {"target", target}});
    return {{"symbols", symbols}, {"twists", twists}};
}

json to_json(const GroupType &g) { return {{"kind", group_kind_name(g.kind)}, {"n", g.n}, {"eta", to_json(g.eta)}}; }

GroupType group_from_json(const json &j)
{
    int n = field<int>(j, "n");
    if (n < 0)
        bad("rank must be nonnegative");
    QuadChar eta = j.contains("eta") ? char_from_json(j.at("eta")) : QuadChar{};
    return make_group(parse_group_kind(field<std::string>(j, "kind")), n, eta);
}

json to_json(const Parameter &phi)
{
    json blocks = json::array();
    for (const auto &[b, m] : phi.blocks()) {
        json e = block_json(b);
        e["mult"] = m;
        blocks.push_back(e);
    }
    return {{"group", to_json(phi.group())}, {"blocks", blocks}};
}

json to_json(const EpsilonChar &eps)
{
    json j = json::object();
    for (const auto &[b, v] : eps.values)
        j[b.key()] = v;
    return j;
}

json to_json(const Parameter &phi, const EpsilonChar &eps)
{
    json j = to_json(phi);
    j["epsilon"] = to_json(eps);
    return j;
}

Parameter parameter_from_json(const json &j, const Alphabet &alphabet)
{
    GroupType g = group_from_json(j.contains("group") ? j.at("group") : json{});
    std::map<JordanBlock, int> blocks;
    const json &bs = j.contains("blocks") ? j.at("blocks") : json::array();
    if (!bs.is_array())
        bad("blocks must be an array");
    for (const auto &b : bs) {
        int m = field_or<int>(b, "mult", 1);
        if (m < 1)
            bad("multiplicity must be positive");
        blocks[block_from_json(b, alphabet)] += m;
    }
    return Parameter::make(g, std::move(blocks));
}

EpsilonChar epsilon_from_json(const json &j, const Parameter &phi)
{
    if (!j.is_object())
        bad("epsilon must be an object keyed by label:a");
    EpsilonChar eps;
    for (const auto &[key, v] : j.items()) {
        if (!v.is_number_integer())
            bad("epsilon value on " + key + " must be +1 or -1");
        auto it = std::find_if(phi.blocks().begin(), phi.blocks().end(),
                               [&](const auto &bm) { return bm.first.key() == key; });
        if (it == phi.blocks().end())
            throw Error(Errc::InvalidEpsilon, "epsilon on " + key + " which is not a block");
        eps.values[it->first] = v.get<int>();
    }
    return eps;
}

std::vector<int> parse_signs(const std::string &csv)
{
    std::vector<int> out;
    if (trim(csv).empty())
        return out;
    for (const auto &t : split(csv, ',')) {
        if (t == "+" || t == "+1" || t == "1")
            out.push_back(1);
        else if (t == "-" || t == "-1")
            out.push_back(-1);
        else
            bad("sign '" + t + "' is not + or -");
    }
    return out;
}

json to_json(const AdmissibleTriple &t)
{
    json jord = json::array();
    for (const auto &b : t.jord)
        jord.push_back(block_json(b));
    json single = json::object();
    for (const auto &[b, v] : t.delta_single)
        single[b.key()] = v;
    json pairs = json::array();
    for (const auto &[p, v] : t.delta_pair)
        pairs.push_back({{"lo", p.first.key()}, {"hi", p.second.key()}, {"value", v}});
    return {{"group", to_json(t.group())},
            {"jord", jord},
            {"cusp", to_json(t.cusp_phi, t.cusp_eps)},
            {"delta_single", single},
            {"delta_pair", pairs}};
}

AdmissibleTriple triple_from_json(const json &j, const Alphabet &alphabet)
{
    AdmissibleTriple t;
    const json jord = field<json>(j, "jord");
    if (!jord.is_array())
        bad("jord must be an array");
    for (const auto &b : jord)
        t.jord.push_back(block_from_json(b, alphabet));
    std::sort(t.jord.begin(), t.jord.end());
    const json cusp = field<json>(j, "cusp");
    t.cusp_phi = parameter_from_json(cusp, alphabet);
    t.cusp_eps = epsilon_from_json(field<json>(cusp, "epsilon"), t.cusp_phi);
    validate_epsilon(t.cusp_phi, t.cusp_eps, Level::sigma0);
    const json singles = field_or<json>(j, "delta_single", json::object());
    const json pairs = field_or<json>(j, "delta_pair", json::array());
    if (!singles.is_object() || !pairs.is_array())
        bad("delta_single is an object and delta_pair an array");
    for (const auto &[key, v] : singles.items()) {
        if (!v.is_number_integer())
            bad("delta value on " + key + " must be +1 or -1");
        t.delta_single[block_from_key(key, alphabet)] = v.get<int>();
    }
    for (const auto &p : pairs) {
        JordanBlock lo = block_from_key(field<std::string>(p, "lo"), alphabet);
        JordanBlock hi = block_from_key(field<std::string>(p, "hi"), alphabet);
        if (hi < lo)
            std::swap(lo, hi);
        t.delta_pair[{lo, hi}] = field<int>(p, "value");
    }
    if (j.contains("group") && group_from_json(j.at("group")) != t.group())
        bad("declared group does not match the Jordan blocks");
    return t;
}

json to_json(const SupportResult &r)
{
    json emissions = json::array();
    for (const auto &e : r.emissions)
        emissions.push_back({{"rho", e.rho->label}, {"x", e.x.str()}});
    json segments = json::array();
    for (const auto &s : r.segments)
        segments.push_back(s.str());
    return {{"emissions", emissions}, {"segments", segments}, {"cusp", to_json(r.cusp_phi, r.cusp_eps)}};
}

json to_json(const RepSymbol &s)
{
    json gl = json::array();
    for (const auto &seg : s.gl)
        gl.push_back(seg.str());
    switch (s.kind) {
    case SymKind::zero:
        return {{"kind", "zero"}};
    case SymKind::packet:
        return {{"kind", "packet"}, {"packet", packet_json(s.inner)}};
    case SymKind::induced:
        break;
    }
    return {{"kind", "induced"}, {"gl", gl}, {"packet", packet_json(s.inner)}};
}

json to_json(const VirtualSum &v)
{
    json terms = json::array();
    for (const auto &[s, c] : v.terms())
        terms.push_back({{"coeff", c}, {"symbol", s.str()}, {"term", to_json(s)}});
    return terms;
}

json to_json(const EndoDatum &d)
{
    return {{"g1", to_json(d.g1)},   {"phi1", to_json(d.phi1)}, {"eta1", to_json(d.eta1)}, {"g2", to_json(d.g2)},
            {"phi2", to_json(d.phi2)}, {"eta2", to_json(d.eta2)}, {"twisted", d.twisted}};
}

json to_json(const LFactor &f)
{
    json factors = json::array();
    for (const auto &[key, m] : f.factors)
        factors.push_back({{"r", key.first}, {"t", key.second.str()}, {"mult", m}});
    json poles = json::array();
    for (const auto &p : f.poles())
        poles.push_back(p.str());
    return {{"text", f.str()}, {"factors", factors}, {"poles", poles}};
}

Segment parse_segment(const std::string &text, const Alphabet &alphabet)
{
    std::string t = trim(text);
    if (t.size() < 4 || t.front() != '<' || t.back() != '>')
        bad("segment '" + text + "' is not <label:from..to>");
    t = t.substr(1, t.size() - 2);
    auto colon = t.find(':');
    if (colon == std::string::npos)
        bad("segment '" + text + "' has no label");
    Rho rho = alphabet.get(t.substr(0, colon));
    std::string body = t.substr(colon + 1);
    if (body.empty())
        return Segment::empty(rho);
    auto dots = body.find("..");
    if (dots == std::string::npos)
        return Segment::point(rho, parse_halfint(body));
    return Segment::between(rho, parse_halfint(body.substr(0, dots)), parse_halfint(body.substr(dots + 2)));
}

GLProduct parse_gl_product(const std::string &text, const Alphabet &alphabet)
{
    GLProduct out;
    std::string t = trim(text);
    std::size_t pos = 0;
    while (pos < t.size()) {
        auto open = t.find('<', pos);
        if (open == std::string::npos) {
            if (!trim(t.substr(pos)).empty())
                bad("trailing text in GL product '" + text + "'");
            break;
        }
        std::string gap = trim(t.substr(pos, open - pos));
        if (!gap.empty() && gap != ",")
            bad("unexpected '" + gap + "' in GL product");
        auto close = t.find('>', open);
        if (close == std::string::npos)
            bad("unterminated segment in '" + text + "'");
        out.push_back(parse_segment(t.substr(open, close - open + 1), alphabet));
        pos = close + 1;
    }
    return out;
}

GLRep parse_glrep(const std::string &text, const Alphabet &alphabet)
{
    std::vector<GLPiece> pieces;
    for (const auto &p : split(text, ',')) {
        GLPiece piece;
        std::string body = p;
        if (auto at = p.find('@'); at != std::string::npos) {
            piece.shift = parse_halfint(trim(p.substr(at + 1)));
            body = trim(p.substr(0, at));
        }
        if (body != "0")
            for (const auto &b : split(body, '+')) {
                auto colon = b.find(':');
                StBlock sb{alphabet.get(b.substr(0, colon)), 1};
                if (colon != std::string::npos) {
                    try {
                        sb.a = std::stoi(b.substr(colon + 1));
                    } catch (const std::logic_error &) {
                        bad("bad block '" + b + "'");
                    }
                }
                if (sb.a < 1)
                    bad("bad block '" + b + "'");
                piece.tempered.push_back(sb);
            }
        pieces.push_back(std::move(piece));
    }
    if (pieces.empty())
        bad("empty GL representation");
    if (pieces.size() == 1 && pieces[0].tempered.size() == 1) {
        const StBlock &b = pieces[0].tempered[0];
        return b.a == 1 ? GLRep::cuspidal(b.rho, pieces[0].shift) : GLRep::steinberg(b.rho, b.a, pieces[0].shift);
    }
    if (pieces.size() == 1 && pieces[0].shift == HalfInt{})
        return GLRep::tempered(pieces[0].tempered);
    return GLRep::langlands(std::move(pieces));
}

} // namespace dsc::io
