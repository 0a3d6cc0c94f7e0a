#include "latkit/parse.hpp"

#include <fstream>
#include <sstream>

namespace latkit {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

Rat parse_rat(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw error("parse: empty number in \"" + text + "\"");
    try {
        std::size_t slash = t.find('/');
        if (slash == std::string::npos) return Rat(Int(t));
        Int num(t.substr(0, slash));
        Int den(t.substr(slash + 1));
        if (den == 0) throw error("parse: zero denominator in \"" + text + "\"");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw error("parse: bad number \"" + t + "\"");
    }
}

// Expands a comma-separated run-length list, e.g. "1^4,-1,0^17" or
// "51,47,45,...,3" (arithmetic continuation of the preceding step).
std::vector<Rat> parse_entries(const std::string& body) {
    std::vector<Rat> values;
    bool pending_ellipsis = false;
    for (const std::string& tok : split(body, ',')) {
        if (tok == "..." || tok == "...." || tok == "\xe2\x80\xa6") {
            if (values.size() < 2)
                throw error("parse: '...' needs two preceding entries");
            pending_ellipsis = true;
            continue;
        }
        std::size_t caret = tok.find('^');
        Rat value = parse_rat(caret == std::string::npos ? tok : tok.substr(0, caret));
        long repeat = 1;
        if (caret != std::string::npos) {
            repeat = std::stol(tok.substr(caret + 1));
            if (repeat < 1) throw error("parse: bad repeat count in \"" + tok + "\"");
        }
        if (pending_ellipsis) {
            pending_ellipsis = false;
            Rat step = values.back() - values[values.size() - 2];
            if (step == 0) throw error("parse: '...' with zero step");
            for (Rat next = values.back() + step;
                 step < 0 ? next > value : next < value; next += step)
                values.push_back(next);
        }
        for (long k = 0; k < repeat; ++k) values.push_back(value);
    }
    if (pending_ellipsis) throw error("parse: dangling '...'");
    return values;
}

ScaledVector to_vector(const std::vector<Rat>& values) {
    Int denom(1);
    for (const Rat& v : values) denom = lcm(denom, Int(v.get_den()));
    std::vector<Int> coords;
    coords.reserve(values.size());
    for (const Rat& v : values) {
        Rat scaled = v * denom;
        coords.push_back(Int(scaled.get_num()));
    }
    return ScaledVector(std::move(coords), denom).canonicalized();
}

}  // namespace

ScaledVector parse_vector(const std::string& text) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw error("parse: vector \"" + text + "\" must be parenthesised");
    std::string body = t.substr(1, t.size() - 2);
    if (body.find('|') != std::string::npos)
        throw error("parse: unexpected '|' in vector \"" + text + "\"");
    return to_vector(parse_entries(body));
}

LorentzClass parse_lorentz_class(const std::string& text) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw error("parse: class \"" + text + "\" must be parenthesised");
    std::string body = t.substr(1, t.size() - 2);
    std::size_t bar = body.find('|');
    if (bar == std::string::npos)
        throw error("parse: class \"" + text + "\" needs an '|' separator");
    Rat a = parse_rat(body.substr(0, bar));
    if (a.get_den() != 1) throw error("parse: class entries must be integers");
    LorentzClass cls;
    cls.a = Int(a.get_num());
    for (const Rat& v : parse_entries(body.substr(bar + 1))) {
        if (v.get_den() != 1) throw error("parse: class entries must be integers");
        cls.b.push_back(Int(v.get_num()));
    }
    return cls;
}

std::string format_vector(const ScaledVector& v) {
    ScaledVector c = v.canonicalized();
    std::ostringstream out;
    out << "(";
    std::size_t i = 0;
    bool first = true;
    while (i < c.coords.size()) {
        std::size_t j = i;
        while (j < c.coords.size() && c.coords[j] == c.coords[i]) ++j;
        if (!first) out << ",";
        first = false;
        out << c.coords[i].get_str();
        if (c.denom != 1 && c.coords[i] != 0) out << "/" << c.denom.get_str();
        if (j - i > 1) out << "^" << (j - i);
        i = j;
    }
    out << ")";
    return out.str();
}

PlumbingFile parse_plumbing(std::istream& in, const std::string& origin) {
    PlumbingFile out;
    int nodes = -1;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw error(origin + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "nodes") {
            if (!(ls >> nodes) || nodes < 1) fail("bad node count");
            out.graph.weights.assign(nodes, Int(2));
        } else if (key == "dim") {
            if (!(ls >> out.ambient_dim) || out.ambient_dim < 1) fail("bad dimension");
        } else if (key == "weight") {
            int i;
            std::string w;
            if (nodes < 0) fail("'weight' before 'nodes'");
            if (!(ls >> i >> w) || i < 0 || i >= nodes) fail("bad weight line");
            out.graph.weights[i] = Int(w);
        } else if (key == "edge") {
            int i, j;
            if (nodes < 0) fail("'edge' before 'nodes'");
            if (!(ls >> i >> j) || i < 0 || j < 0 || i >= nodes || j >= nodes)
                fail("bad edge line");
            out.graph.edges.emplace_back(i, j);
        } else if (key == "basis") {
            std::string rest;
            std::getline(ls, rest);
            out.basis.push_back(parse_vector(rest));
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (nodes < 0) throw error(origin + ": missing 'nodes' line");
    if (!out.basis.empty() && static_cast<int>(out.basis.size()) != nodes)
        throw error(origin + ": basis has " + std::to_string(out.basis.size()) +
                    " vectors for " + std::to_string(nodes) + " nodes");
    for (const ScaledVector& v : out.basis)
        if (out.ambient_dim && v.dim() != out.ambient_dim)
            throw error(origin + ": basis vector dimension mismatch");
    return out;
}

PlumbingFile parse_plumbing_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open plumbing file " + path);
    return parse_plumbing(in, path);
}

}  // namespace latkit
