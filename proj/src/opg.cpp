#include "oneplane/opg.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace oneplane {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        fail("SyntaxError", "bad " + what + " '" + tok + "'");
    return value;
}

std::string strip(const std::string& line) {
    std::string s = line;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.pop_back();
    size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

}   // namespace

sketch parse_opg_sketch(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    bool header_seen = false;

    struct vrec {
        int id;
        std::string label;
    };
    std::vector<vrec> verts;
    std::vector<std::pair<int, int>> edges;
    std::vector<crossing> crosses;
    std::vector<std::pair<int, std::vector<int>>> rots;

    while (std::getline(in, raw)) {
        std::string line = strip(raw);
        if (line.empty()) continue;
        std::vector<std::string> tok = tokenize(line);
        if (!header_seen) {
            if (tok.size() != 2 || tok[0] != "opg" || tok[1] != "1")
                fail("SyntaxError", "expected 'opg 1' header, got '" + line + "'");
            header_seen = true;
            continue;
        }
        const std::string& kw = tok[0];
        if (kw == "vertex") {
            if (tok.size() != 2 && tok.size() != 3)
                fail("SyntaxError", "vertex line needs an id and optional label");
            verts.push_back({parse_int(tok[1], "vertex id"),
                             tok.size() == 3 ? tok[2] : std::string()});
        } else if (kw == "edge") {
            if (tok.size() != 4)
                fail("SyntaxError", "edge line needs id and two endpoints");
            if (parse_int(tok[1], "edge id") != static_cast<int>(edges.size()))
                fail("SyntaxError", "edge ids must be sequential from 0");
            edges.emplace_back(parse_int(tok[2], "vertex id"),
                               parse_int(tok[3], "vertex id"));
        } else if (kw == "cross") {
            if (tok.size() != 5)
                fail("SyntaxError", "cross line needs id, two edges and an orientation");
            if (parse_int(tok[1], "cross id") != static_cast<int>(crosses.size()))
                fail("SyntaxError", "cross ids must be sequential from 0");
            crossing cr;
            cr.e = parse_int(tok[2], "edge id");
            cr.f = parse_int(tok[3], "edge id");
            if (tok[4] == "pos")
                cr.positive = true;
            else if (tok[4] == "neg")
                cr.positive = false;
            else
                fail("BadCrossOrientation", "orientation must be pos or neg, got '" +
                                                tok[4] + "'");
            crosses.push_back(cr);
        } else if (kw == "rot") {
            if (tok.size() < 2)
                fail("SyntaxError", "rot line needs a vertex id");
            std::pair<int, std::vector<int>> r;
            r.first = parse_int(tok[1], "vertex id");
            for (size_t i = 2; i < tok.size(); ++i) {
                if (tok[i].size() < 2 || tok[i][0] != 'e')
                    fail("SyntaxError", "rotation entry '" + tok[i] +
                                            "' is not of the form e<id>");
                r.second.push_back(parse_int(tok[i].substr(1), "edge id"));
            }
            rots.push_back(std::move(r));
        } else {
            fail("SyntaxError", "unknown record '" + kw + "'");
        }
    }
    if (!header_seen) fail("SyntaxError", "empty input, expected 'opg 1' header");

    const int n = static_cast<int>(verts.size());
    sketch sk;
    sk.n = n;
    sk.labels.assign(n, "");
    sk.rot.assign(n, {});
    std::vector<char> declared(n, 0);
    for (const vrec& v : verts) {
        if (v.id >= n)
            fail("SyntaxError", "vertex ids must be dense 0.." + std::to_string(n - 1) +
                                    ", got " + std::to_string(v.id));
        if (declared[v.id])
            fail("SyntaxError", "vertex " + std::to_string(v.id) + " declared twice");
        declared[v.id] = 1;
        sk.labels[v.id] = v.label;
    }
    sk.edges = std::move(edges);
    sk.crossings = std::move(crosses);
    std::vector<char> rotted(n, 0);
    for (auto& [vid, lst] : rots) {
        if (vid >= n)
            fail("SyntaxError", "rot line for unknown vertex " + std::to_string(vid));
        if (rotted[vid])
            fail("SyntaxError", "vertex " + std::to_string(vid) + " has two rot lines");
        rotted[vid] = 1;
        sk.rot[vid] = std::move(lst);
    }
    return sk;
}

drawing parse_opg(const std::string& text) {
    return drawing::build(parse_opg_sketch(text));
}

std::string serialize_opg(const sketch& sk) {
    std::ostringstream out;
    out << "opg 1\n";
    for (int v = 0; v < sk.n; ++v) {
        out << "vertex " << v;
        if (!sk.labels[v].empty()) out << ' ' << sk.labels[v];
        out << '\n';
    }
    for (size_t e = 0; e < sk.edges.size(); ++e)
        out << "edge " << e << ' ' << sk.edges[e].first << ' ' << sk.edges[e].second
            << '\n';
    for (size_t c = 0; c < sk.crossings.size(); ++c)
        out << "cross " << c << ' ' << sk.crossings[c].e << ' ' << sk.crossings[c].f
            << ' ' << (sk.crossings[c].positive ? "pos" : "neg") << '\n';
    for (int v = 0; v < sk.n; ++v) {
        const std::vector<int>& lst = sk.rot[v];
        if (lst.empty()) continue;
        // canonical form starts the cyclic list at its least edge id
        size_t at = std::min_element(lst.begin(), lst.end()) - lst.begin();
        out << "rot " << v;
        for (size_t i = 0; i < lst.size(); ++i)
            out << " e" << lst[(at + i) % lst.size()];
        out << '\n';
    }
    return out.str();
}

std::string serialize_opg(const drawing& d) { return serialize_opg(d.source()); }

bool looks_like_opg(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = strip(raw);
        if (line.empty()) continue;
        return line == "opg 1" || line.rfind("opg ", 0) == 0;
    }
    return false;
}

}   // namespace oneplane
