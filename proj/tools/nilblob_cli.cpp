#include "nilblob/alcove.hpp"
#include "nilblob/errors.hpp"
#include "nilblob/jm.hpp"
#include "nilblob/json_io.hpp"
#include "nilblob/kernels.hpp"
#include "nilblob/presentation.hpp"
#include "nilblob/rank.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nb;

namespace {

struct Opts {
    int n = 0, e = 0, m = 0, jobs = 0;
    std::string q;
    std::string algebra = "nilblob";
    bool ascii = false;
};

json read_json_file(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(Errc::Parse, "cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, e.what());
    }
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> v;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw Error(Errc::Parse, "bad integer list '" + s + "'");
        }
    }
    return v;
}

// "0,-1,0,..." is a height list; "w:0,1,0" a wall walk, "w:0,1,0/-1" with a last direction
PathTableau tableau_arg(const std::string& s, const BlobParams& p) {
    if (s.rfind("w:", 0) == 0) {
        std::string body = s.substr(2);
        Walk w;
        auto slash = body.find('/');
        if (slash != std::string::npos) {
            w.last_dir = std::stoi(body.substr(slash + 1));
            body = body.substr(0, slash);
        }
        w.j = int_list(body);
        return tableau_from_walk(w, p);
    }
    return PathTableau::from_heights(int_list(s));
}

BlobParams params(const Opts& o) { return {o.n, o.e, o.m}; }

std::string ascii_element(const Element& x) {
    if (x.is_zero()) return "0\n";
    std::string s;
    for (auto& [d, c] : x.terms()) s += format_scalar(c) + " *\n" + render_ascii(d) + "\n";
    return s;
}

void emit(const Opts& o, const json& j, const std::string& ascii) {
    if (o.ascii) std::cout << ascii;
    else std::cout << j.dump(2) << "\n";
}

Word read_words(const std::vector<std::string>& words, int n, bool allow_j) {
    Word w;
    w.n = n;
    std::vector<std::string> src = words;
    if (src.empty()) {
        std::string line;
        while (std::getline(std::cin, line)) src.push_back(line);
    }
    for (auto& s : src) {
        Word part = parse_word(s, n, allow_j);
        w.letters.insert(w.letters.end(), part.letters.begin(), part.letters.end());
    }
    return w;
}

int cmd_mul(const Opts& o, const std::vector<std::string>& words, const std::vector<std::string>& files) {
    if (o.n < 1) throw Error(Errc::InvalidWord, "--n is required");
    if (o.algebra == "blob") {
        if (o.q.empty() || o.m == 0) throw Error(Errc::SingularParameter, "blob needs --q and --m");
        Scalar q = parse_scalar(o.q);
        Multiplier mul(Rule::blob(q, o.m));
        Element x = Element::identity(o.n);
        for (auto& f : files) x = mul.mul(x, element_from_json(read_json_file(f), o.n));
        if (!words.empty() || files.empty()) x = mul.mul(x, evaluate_blob(read_words(words, o.n, false), q, o.m));
        emit(o, to_json(x), ascii_element(x));
        return 0;
    }
    Multiplier mul;
    if (o.algebra == "extended") {
        ExtElement x{Element::identity(o.n), Element(o.n)};
        for (auto& f : files) x = mul_extended(x, ext_from_json(read_json_file(f), o.n), mul);
        if (!words.empty() || files.empty()) x = mul_extended(x, evaluate_ext(read_words(words, o.n, true), mul), mul);
        emit(o, to_json(x), ascii_element(x.a0) + "+ J *\n" + ascii_element(x.a1));
        return 0;
    }
    if (o.algebra != "nilblob") throw Error(Errc::Parse, "unknown algebra " + o.algebra);
    Element x = Element::identity(o.n);
    for (auto& f : files) x = mul.mul(x, element_from_json(read_json_file(f), o.n));
    if (!words.empty() || files.empty()) x = mul.mul(x, evaluate(read_words(words, o.n, false), mul));
    emit(o, to_json(x), ascii_element(x));
    return 0;
}

void line(std::ostream& out, bool ok, const std::string& what) { out << (ok ? "PASS " : "FAIL ") << what << "\n"; }

int cmd_verify(const Opts& o, const std::string& suite) {
    bool ok = true;
    auto report = [&](bool good, const std::string& what) {
        line(std::cout, good, what);
        ok = ok && good;
    };
    if (suite == "relations") {
        if (o.n < 1) throw Error(Errc::InvalidWord, "--n is required");
        Multiplier mul;
        auto r = check_nilblob_relations(o.n, mul);
        report(r.ok(), "nil-blob relations n=" + std::to_string(o.n) + " (" + std::to_string(r.checked) + " checks)");
        for (auto& f : r.failures) std::cout << "  " << f << "\n";
        if (!o.q.empty() && o.m) {
            auto b = check_blob_relations(o.n, parse_scalar(o.q), o.m);
            report(b.ok(), "blob relations q=" + o.q + " m=" + std::to_string(o.m));
            for (auto& f : b.failures) std::cout << "  " << f << "\n";
        }
        auto t = build_table(o.n, Rule::nilblob(), Exec::Parallel);
        auto a = check_associativity(t, Exec::Parallel);
        report(a.failures == 0, "associativity over " + std::to_string(a.triples) + " triples");
    } else if (suite == "jm") {
        Multiplier mul;
        auto r = check_jm(o.n, mul);
        report(r.all(), "JM identities n=" + std::to_string(o.n));
        std::string nc;
        for (int i : r.J_noncentral) nc += " U" + std::to_string(i);
        std::cout << "  [U_i, J] != 0 for:" << (nc.empty() ? " none" : nc) << "\n";
    } else if (suite == "dims") {
        std::size_t d = enumerate_diagrams(o.n).size(), nm = enumerate_normal(o.n).size();
        std::size_t want = binomial(2 * o.n, o.n);
        std::cout << "basis diagrams " << d << ", normal monomials " << nm << ", C(2n,n) = " << want
                  << ", extended " << 2 * d << "\n";
        report(d == want && nm == want, "dimension n=" + std::to_string(o.n));
    } else if (suite == "orbit") {
        BlobParams p = params(o);
        auto c = classify(p);
        auto a = enumerate_std(p);
        std::size_t sq = 0;
        for (auto& [mu, ts] : a) sq += ts.size() * ts.size();
        std::size_t want = (c.singular ? 1 : 2) * binomial(2 * c.K, c.K);
        std::cout << "K=" << c.K << " R=" << c.R << (c.singular ? " singular" : " regular") << ", sum |Std|^2 = " << sq
                  << ", expected " << want << "\n";
        report(a == enumerate_std_by_residue(p), "reflection orbit equals residue class");
        report(sq == want, "orbit count");
    } else if (suite == "rank") {
        auto r = rank_of_images(params(o), true);
        std::cout << "pairs " << r.pairs << ", rank " << r.rank << ", expected " << r.expected << "\n";
        report(r.rank == r.expected, "rank");
    } else {
        throw Error(Errc::Parse, "unknown suite " + suite);
    }
    return ok ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"nilblob: exact computations in nil-blob and blob algebras"};
    app.require_subcommand(1);
    Opts o;
    auto common = [&](CLI::App* c) {
        c->add_option("--n", o.n, "number of points / path length");
        c->add_option("--e", o.e, "quantum characteristic");
        c->add_option("--m", o.m, "blob parameter m");
        c->add_option("--q", o.q, "q as p/q");
        c->add_option("--jobs", o.jobs, "threads for the parallel kernels");
        c->add_flag("--ascii", o.ascii, "human-readable output");
        c->add_flag("--json", [&](std::int64_t) { o.ascii = false; }, "JSON output (default)");
    };

    std::vector<std::string> words, files;
    auto* mul = app.add_subcommand("mul", "multiply words and element files");
    common(mul);
    mul->add_option("--algebra", o.algebra, "nilblob | blob | extended");
    mul->add_option("--file", files, "element JSON file, repeatable")->allow_extra_args(false);
    mul->add_option("words", words, "words such as \"U1 U0\"; read from stdin when absent");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a check suite");
    common(verify);
    verify->add_option("suite", suite, "relations | jm | dims | orbit | rank")->required();

    std::string path;
    auto* fact = app.add_subcommand("factorize", "factorize a diagram into generators");
    common(fact);
    fact->add_option("diagram", path, "diagram JSON file, - for stdin")->required();

    std::string word;
    auto* nf = app.add_subcommand("normal-form", "normal form of a word");
    common(nf);
    nf->add_option("word", word)->required();

    auto* paths = app.add_subcommand("paths", "orbit of t^lambda grouped by shape");
    common(paths);

    std::string s_arg, t_arg;
    auto* red = app.add_subcommand("redexpr", "reduced expression for d(t)");
    common(red);
    red->add_option("--t", t_arg, "heights or w:walk")->required();

    auto* cod = app.add_subcommand("codify", "codification matrix");
    common(cod);
    cod->add_option("--s", s_arg, "heights or w:walk");
    cod->add_option("--t", t_arg, "heights or w:walk")->required();

    bool image = false;
    auto* wd = app.add_subcommand("word", "generator word for m_st");
    common(wd);
    wd->add_option("--s", s_arg)->required();
    wd->add_option("--t", t_arg)->required();
    wd->add_flag("--image", image, "also print the nil-blob image");

    std::string which = "L";
    int idx = 1;
    auto* jm = app.add_subcommand("jm", "print L_i, Y_i or J");
    common(jm);
    jm->add_option("--which", which, "L | Y | J");
    jm->add_option("--i", idx, "1-based index");

    CLI11_PARSE(app, argc, argv);
    set_jobs(o.jobs);

    if (*mul) return cmd_mul(o, words, files);
    if (*verify) return cmd_verify(o, suite);
    if (*fact) {
        BlobDiagram d = diagram_from_json(read_json_file(path));
        auto f = factorize_diagram(d);
        emit(o, to_json(f), render_ascii(d) + "\n" + format_word(f.word) + " = " + format_scalar(f.scalar) + " * d\n");
        return 0;
    }
    if (*nf) {
        if (o.n < 1) throw Error(Errc::InvalidWord, "--n is required");
        auto f = normal_form(parse_word(word, o.n));
        json j = to_json(f, o.n);
        emit(o, j, format_scalar(f.coeff) + " * " + j["word"].get<std::string>() + "\n");
        return 0;
    }
    if (*paths) {
        BlobParams p = params(o);
        auto c = classify(p);
        auto iv = path_intervals(p);
        json blocks = json::array();
        for (auto [a, b] : iv.full) blocks.push_back({a, b});
        json j = {{"params", to_json(p)},
                  {"K", c.K},
                  {"R", c.R},
                  {"singular", c.singular},
                  {"blocks", blocks},
                  {"last", iv.last ? json{iv.last->first, iv.last->second} : json(nullptr)},
                  {"orbit", to_json(enumerate_std(p))}};
        std::string a = "K=" + std::to_string(c.K) + " R=" + std::to_string(c.R) + "\n";
        for (auto& [mu, ts] : enumerate_std(p)) {
            a += "shape (1^" + std::to_string(mu.mu1) + ", 1^" + std::to_string(mu.mu2) + "): " +
                 std::to_string(ts.size()) + "\n";
            for (auto& t : ts) {
                auto w = decode_walk(t, p);
                std::string walk;
                for (int x : w->j) walk += std::to_string(x) + " ";
                a += "  walk " + walk + "\n";
            }
        }
        emit(o, j, a);
        return 0;
    }
    if (*red) {
        PathTableau t = tableau_arg(t_arg, params(o));
        auto w = reduced_expression(row_reading(t.shape()), t);
        json j = {{"word", w}, {"length", w.size()}, {"inversions", inversion_count(one_line(t))}};
        std::string a = "d(t) =";
        for (int i : w) a += " s" + std::to_string(i);
        if (o.e) {
            // --n defaults to the length of a height list
            auto f = region_factorize(t, {o.n ? o.n : t.n(), o.e, o.m});
            j["regions"] = to_json(f);
            a += "\nregions:";
            for (auto& x : f.theta) a += std::string(x.kind == RegionFactor::Kind::H ? " H" : " U'") + std::to_string(x.index);
            for (auto& x : f.u) a += " U" + std::to_string(x.index);
        }
        emit(o, j, a + "\n");
        return 0;
    }
    if (*cod) {
        BlobParams p = params(o);
        PathTableau t = tableau_arg(t_arg, p);
        CodMatrix c = s_arg.empty() ? codify(t, p) : codify(tableau_arg(s_arg, p), t, p);
        json j = to_json(c);
        std::string a;
        for (auto& r : j["rows"]) {
            for (auto& s : r) {
                std::string x = s.get<std::string>();
                if (x.empty()) x = ".";
                a += x + std::string(6 - std::min<std::size_t>(5, x.size()), ' ');
            }
            a += "\n";
        }
        emit(o, j, a);
        return 0;
    }
    if (*wd) {
        BlobParams p = params(o);
        PathTableau s = tableau_arg(s_arg, p), t = tableau_arg(t_arg, p);
        TruncatedWord w = classify(p).singular ? basis_word(s, t, p) : generator_word_regular(s, t, p);
        json j = to_json(w);
        std::string a = format_truncated(w) + "\n";
        if (image) {
            ExtElement x = map_to_nilblob(w, p);
            j["image"] = to_json(x);
            a += ascii_element(x.a0) + (x.a1.is_zero() ? "" : "+ J *\n" + ascii_element(x.a1));
        }
        emit(o, j, a);
        return 0;
    }
    if (*jm) {
        if (o.n < 1) throw Error(Errc::InvalidWord, "--n is required");
        Multiplier m;
        Element x;
        if (which == "J") {
            x = J_element(o.n, m);
        } else {
            if (idx < 1 || idx > o.n) throw Error(Errc::IndexOutOfRange, "--i must be in 1..n");
            auto v = which == "L" ? L_elements(o.n, m) : which == "Y" ? Y_elements(o.n, m) : std::vector<Element>{};
            if (v.empty()) throw Error(Errc::Parse, "--which must be L, Y or J");
            x = v[idx - 1];
        }
        emit(o, to_json(x), ascii_element(x));
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
