#include "nilblob/json_io.hpp"
#include "nilblob/errors.hpp"

namespace nb {

namespace {

template <class F>
auto guarded(F f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, e.what());
    }
}

}  // namespace

json to_json(const BlobDiagram& d) {
    const int n = d.n();
    json pairs = json::array(), marks = json::array();
    for (const Arc& a : d.arcs()) {
        json arc = {point_label(n, a.a), point_label(n, a.b)};
        pairs.push_back(arc);
        if (d.marked(a.a)) marks.push_back(arc);
    }
    return {{"n", n}, {"pairs", pairs}, {"marks", marks}};
}

BlobDiagram diagram_from_json(const json& j) {
    return guarded([&] {
        int n = j.at("n").get<int>();
        if (n < 1) throw Error(Errc::Parse, "n must be positive");
        auto read = [&](const char* key) {
            std::vector<std::pair<int, int>> v;
            if (!j.contains(key)) return v;
            for (auto& a : j.at(key)) {
                if (!a.is_array() || a.size() != 2) throw Error(Errc::Parse, "arcs are pairs of labels");
                v.push_back({parse_point_label(n, a[0].get<std::string>()), parse_point_label(n, a[1].get<std::string>())});
            }
            return v;
        };
        return validate(n, read("pairs"), read("marks"));
    });
}

json to_json(const Element& x) {
    json a = json::array();
    for (auto& [d, c] : x.terms()) a.push_back({{"coeff", format_scalar(c)}, {"diagram", to_json(d)}});
    return a;
}

Element element_from_json(const json& j, int n) {
    return guarded([&] {
        if (!j.is_array()) throw Error(Errc::Parse, "an element is an array of terms");
        Element x(n);
        for (auto& t : j) {
            BlobDiagram d = diagram_from_json(t.at("diagram"));
            if (x.n() && d.n() != x.n()) throw Error(Errc::SizeMismatch, "terms of different sizes");
            x.add(d, parse_scalar(t.at("coeff").get<std::string>()));
        }
        return x;
    });
}

json to_json(const ExtElement& x) { return {{"a0", to_json(x.a0)}, {"a1", to_json(x.a1)}}; }

ExtElement ext_from_json(const json& j, int n) {
    return guarded([&] {
        Element a0 = element_from_json(j.at("a0"), n);
        Element a1 = element_from_json(j.at("a1"), n ? n : a0.n());
        if (!a0.n()) a0 = Element(a1.n());
        return ExtElement(a0, a1);
    });
}

json to_json(const BlobParams& p) { return {{"n", p.n}, {"e", p.e}, {"m", p.m}}; }

BlobParams params_from_json(const json& j) {
    return guarded([&] {
        BlobParams p{j.at("n").get<int>(), j.at("e").get<int>(), j.at("m").get<int>()};
        check_params(p);
        return p;
    });
}

json to_json(const PathTableau& t) { return t.heights(); }

PathTableau tableau_from_json(const json& j) {
    return guarded([&] { return PathTableau::from_heights(j.get<std::vector<int>>()); });
}

json to_json(const StdMap& orbit) {
    json a = json::array();
    for (auto& [mu, ts] : orbit) {
        json list = json::array();
        for (auto& t : ts) list.push_back(to_json(t));
        a.push_back({{"shape", {mu.mu1, mu.mu2}}, {"tableaux", list}});
    }
    return a;
}

StdMap orbit_from_json(const json& j) {
    return guarded([&] {
        StdMap m;
        for (auto& g : j) {
            Shape mu{g.at("shape").at(0).get<int>(), g.at("shape").at(1).get<int>()};
            auto& v = m[mu];
            for (auto& t : g.at("tableaux")) {
                v.push_back(tableau_from_json(t));
                if (v.back().shape() != mu) throw Error(Errc::ShapeMismatch, "tableau outside its shape group");
            }
        }
        return m;
    });
}

namespace {

const char* kind_name(Token::Kind k) {
    switch (k) {
        case Token::Kind::U: return "U";
        case Token::Kind::Y: return "Y";
        case Token::Kind::YDiff: return "YDiff";
    }
    return "?";
}

std::string symbol_text(const Symbol& s) {
    if (s.kind == Symbol::Kind::Empty) return "";
    std::string r = (s.kind == Symbol::Kind::H ? "H" : "U'") + std::to_string(s.index);
    return s.star ? r + "*" : r;
}

Symbol parse_symbol(std::string s) {
    Symbol r;
    if (s.empty()) return r;
    if (s.back() == '*') {
        r.star = true;
        s.pop_back();
    }
    std::size_t at;
    if (s.rfind("U'", 0) == 0) {
        r.kind = Symbol::Kind::UPrime;
        at = 2;
    } else if (s.rfind("H", 0) == 0) {
        r.kind = Symbol::Kind::H;
        at = 1;
    } else {
        throw Error(Errc::Parse, "bad matrix symbol '" + s + "'");
    }
    try {
        std::size_t used = 0;
        r.index = std::stoi(s.substr(at), &used);
        if (used + at != s.size()) throw Error(Errc::Parse, "bad matrix symbol '" + s + "'");
    } catch (const std::logic_error&) {
        throw Error(Errc::Parse, "bad matrix symbol '" + s + "'");
    }
    return r;
}

}  // namespace

json to_json(const TruncatedWord& w) {
    json toks = json::array();
    for (auto& t : w.tokens) toks.push_back({{"kind", kind_name(t.kind)}, {"index", t.index}});
    return {{"tokens", toks}, {"sign", w.sign_undetermined ? "±1" : "1"}, {"text", format_truncated(w)}};
}

TruncatedWord truncated_from_json(const json& j) {
    return guarded([&] {
        TruncatedWord w;
        std::string sign = j.at("sign").get<std::string>();
        if (sign != "±1" && sign != "1") throw Error(Errc::Parse, "sign must be \"±1\" or \"1\"");
        w.sign_undetermined = sign == "±1";
        for (auto& t : j.at("tokens")) {
            std::string k = t.at("kind").get<std::string>();
            Token tok{Token::Kind::U, t.at("index").get<int>()};
            if (k == "Y") tok.kind = Token::Kind::Y;
            else if (k == "YDiff") tok.kind = Token::Kind::YDiff;
            else if (k != "U") throw Error(Errc::Parse, "unknown token kind '" + k + "'");
            w.tokens.push_back(tok);
        }
        return w;
    });
}

json to_json(const CodMatrix& c) {
    json rows = json::array();
    for (auto& r : c.rows) {
        json row = json::array();
        for (auto& s : r) row.push_back(symbol_text(s));
        rows.push_back(row);
    }
    return {{"rows", rows}};
}

CodMatrix codmatrix_from_json(const json& j) {
    return guarded([&] {
        CodMatrix c;
        for (auto& r : j.at("rows")) {
            std::vector<Symbol> row;
            for (auto& s : r) row.push_back(parse_symbol(s.get<std::string>()));
            if (!c.rows.empty() && row.size() != c.rows[0].size()) throw Error(Errc::Parse, "ragged matrix");
            c.rows.push_back(row);
        }
        return c;
    });
}

json to_json(const NormalForm& f, int n) {
    return {{"coeff", format_scalar(f.coeff)},
            {"I", f.monomial.I},
            {"J", f.monomial.J},
            {"word", f.coeff == 0 ? std::string() : format_word(monomial_word(f.monomial, n))}};
}

json to_json(const Factorization& f) {
    return {{"n", f.word.n}, {"word", format_word(f.word)}, {"scalar", format_scalar(f.scalar)}};
}

json to_json(const RegionFactorization& f) {
    auto factor = [](const RegionFactor& x) {
        const char* k = x.kind == RegionFactor::Kind::H ? "H" : x.kind == RegionFactor::Kind::UPrime ? "U'" : "U";
        return json{{"kind", k}, {"index", x.index}, {"word", x.word}};
    };
    json theta = json::array(), u = json::array();
    for (auto& x : f.theta) theta.push_back(factor(x));
    for (auto& x : f.u) u.push_back(factor(x));
    return {{"theta", theta}, {"u", u}, {"central", f.central()}, {"columns", f.columns},
            {"central_walk", f.central_walk.j}, {"word", f.word()}};
}

}  // namespace nb
