#include "cli/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "balgf/chebyshev.hpp"
#include "balgf/crosscheck.hpp"
#include "balgf/lattice.hpp"
#include "balgf/oracle.hpp"
#include "balgf/transfer.hpp"

namespace balgf::cli {
namespace {

using nlohmann::json;

enum class Format { plain, csv, json };

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json" || s == "json-like") return Format::json;
    return Format::plain;
}

const std::vector<std::string> kFormats{"plain", "csv", "json", "json-like"};

json decimal_list(std::span<const Integer> xs) {
    json arr = json::array();
    for (const auto& v : xs) arr.push_back(v.get_str());
    return arr;
}

std::string plain_list(std::span<const Integer> xs) {
    if (xs.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += xs[i].get_str();
    }
    return out;
}

void write_poly_csv(std::ostream& out, std::string_view part, const Poly& p) {
    const auto cs = p.coefficients();
    if (cs.empty()) out << part << ",0,0\n";
    for (std::size_t i = 0; i < cs.size(); ++i) out << part << ',' << i << ',' << cs[i].get_str() << '\n';
}

struct Options {
    std::string family;
    int k = 0;
    int terms = 10;
    std::string format = "plain";
    std::string suite = "all";
    int kmax = 12;
    int nmax = 16;
    unsigned workers = 1;
    std::string what;
    int n = 0;
    bool cover = false;
    std::optional<int> lower;
    std::optional<int> upper;
    std::string terminal = "ground";
    std::string kind;
    std::string direction;
    std::string input;
};

OracleOptions oracle_options(const Options& o) {
    OracleOptions opts;
    opts.workers = std::max(1u, o.workers);
    return opts;
}

int cmd_coeffs(const Options& o, std::ostream& out) {
    if (o.terms < 1) throw std::invalid_argument("--terms must be >= 1");
    const Series s = series_expand(family_function(o.family, o.k), static_cast<std::size_t>(o.terms),
                                   o.family + "_" + std::to_string(o.k));
    switch (parse_format(o.format)) {
        case Format::plain: out << plain_list(s.terms) << '\n'; break;
        case Format::csv:
            out << "n,coefficient\n";
            for (std::size_t i = 0; i < s.terms.size(); ++i) out << i << ',' << s.terms[i].get_str() << '\n';
            break;
        case Format::json:
            out << json{{"object", "series"}, {"family", o.family}, {"k", o.k}, {"terms", decimal_list(s.terms)}}.dump()
                << '\n';
            break;
    }
    return kOk;
}

int cmd_gf(const Options& o, std::ostream& out) {
    const RatFunc f = family_function(o.family, o.k);
    switch (parse_format(o.format)) {
        case Format::plain:
            out << "num " << plain_list(f.num().coefficients()) << '\n';
            out << "den " << plain_list(f.den().coefficients()) << '\n';
            break;
        case Format::csv:
            out << "part,degree,coefficient\n";
            write_poly_csv(out, "num", f.num());
            write_poly_csv(out, "den", f.den());
            break;
        case Format::json:
            out << json{{"object", "gf"},
                        {"family", o.family},
                        {"k", o.k},
                        {"num", decimal_list(f.num().coefficients())},
                        {"den", decimal_list(f.den().coefficients())}}
                       .dump()
                << '\n';
            break;
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto suite = parse_suite(o.suite);
    if (!suite) throw std::invalid_argument("unknown suite: " + o.suite);
    if (o.kmax < 1 || o.nmax < 1) throw std::invalid_argument("--kmax and --nmax must be >= 1");
    const Report report = run_suite(*suite, o.kmax, o.nmax, oracle_options(o));
    switch (parse_format(o.format)) {
        case Format::plain:
        case Format::csv:
            print_report(out, report);
            out << "summary " << report.entries().size() << " checks, " << report.failures() << " failed\n";
            break;
        case Format::json: {
            json entries = json::array();
            for (const auto& e : report.entries()) {
                entries.push_back(
                    {{"suite", e.suite}, {"identity", e.identity}, {"k", e.k}, {"passed", e.passed}, {"note", e.note}});
            }
            out << json{{"object", "verify"},
                        {"suite", o.suite},
                        {"kmax", o.kmax},
                        {"nmax", o.nmax},
                        {"checks", std::to_string(report.entries().size())},
                        {"failures", std::to_string(report.failures())},
                        {"entries", entries}}
                       .dump()
                << '\n';
            break;
        }
    }
    return report.all_passed() ? kOk : kVerificationFailed;
}

Terminal parse_terminal(const std::string& s) {
    if (s == "ground") return Terminal::ground;
    if (s == "top") return Terminal::top;
    if (s == "any") return Terminal::any;
    throw std::invalid_argument("unknown terminal: " + s);
}

int cmd_count(const Options& o, std::ostream& out) {
    CountQuery q;
    q.k = o.k;
    q.n = o.n;
    q.cover = o.cover;
    if (o.what == "strings") {
        q.what = CountWhat::strings;
    } else if (o.what == "walks") {
        q.what = CountWhat::walks;
    } else if (o.what == "paths") {
        q.what = CountWhat::paths;
        q.path = make_path_spec(o.lower.value_or(0), o.upper.value_or(o.k), parse_terminal(o.terminal));
    } else if (o.what == "extent") {
        q.what = CountWhat::extent;
    } else {
        throw std::invalid_argument("unknown count target: " + o.what);
    }
    const Integer c = count(q, oracle_options(o));
    switch (parse_format(o.format)) {
        case Format::plain: out << c.get_str() << '\n'; break;
        case Format::csv: out << "what,k,n,count\n" << o.what << ',' << o.k << ',' << o.n << ',' << c.get_str() << '\n'; break;
        case Format::json: {
            json rec{{"object", "count"}, {"what", o.what}, {"k", o.k}, {"n", o.n}, {"count", c.get_str()}};
            if (q.what == CountWhat::walks) rec["cover"] = o.cover;
            if (q.what == CountWhat::paths) {
                rec["lower"] = q.path.lower;
                rec["upper"] = q.path.upper;
                rec["terminal"] = o.terminal;
            }
            out << rec.dump() << '\n';
            break;
        }
    }
    return kOk;
}

int cmd_cheb(const Options& o, std::ostream& out) {
    const Poly p = cheb(o.kind == "T" ? ChebKind::T : ChebKind::U, o.k);
    switch (parse_format(o.format)) {
        case Format::plain: out << plain_list(p.coefficients()) << '\n'; break;
        case Format::csv: out << "part,degree,coefficient\n"; write_poly_csv(out, o.kind, p); break;
        case Format::json:
            out << json{{"object", "cheb"}, {"kind", o.kind}, {"k", o.k}, {"coeffs", decimal_list(p.coefficients())}}
                       .dump()
                << '\n';
            break;
    }
    return kOk;
}

Walk parse_walk(int k, const std::string& text) {
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    Walk w{k, {}};
    std::string tok;
    while (in >> tok) {
        if (!tok.empty() && (tok[0] == 'v' || tok[0] == 'V')) tok.erase(0, 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok.empty()) throw std::invalid_argument("not a node index: " + tok);
        w.nodes.push_back(v);
    }
    return w;
}

int cmd_codec(const Options& o, std::ostream& out) {
    if (o.direction == "encode") {
        const std::string bits = encode_walk(parse_walk(o.k, o.input));
        if (!bits.empty()) out << bits << '\n';
    } else {
        const Walk w = decode_walk(o.k, o.input);
        for (std::size_t i = 0; i < w.nodes.size(); ++i) out << (i ? " " : "") << w.nodes[i];
        out << '\n';
    }
    return kOk;
}

}  // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"f", "g", "F", "G", "Fbar", "Gbar", "H", "Hbar", "R", "bad", "good"};
    return names;
}

RatFunc family_function(std::string_view family, int k) {
    if (family == "f") return f_balanced(k);
    if (family == "g") return g_balanced(k);
    if (family == "bad") return bad_walk_gf(k);
    if (family == "good") return good_walk_gf(k);
    if (family == "R") return r_gf(k);
    for (Family f : {Family::F, Family::G, Family::Fbar, Family::Gbar, Family::H, Family::Hbar}) {
        if (family_name(f) == family) return family_gf({f, k});
    }
    throw std::invalid_argument("unknown family: " + std::string(family));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generating functions for k-balanced strings, walks on circular digraphs and bounded lattice paths",
                 "balgf"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(kFormats));
    };

    auto* coeffs = app.add_subcommand("coeffs", "Print the first series coefficients of a generating function");
    coeffs->add_option("--family", o.family, "Family")->required()->check(CLI::IsMember(family_names()));
    coeffs->add_option("--k", o.k, "Parameter k")->required();
    coeffs->add_option("--terms", o.terms, "Number of terms")->required();
    add_format(coeffs);

    auto* gf = app.add_subcommand("gf", "Print the reduced numerator and denominator, lowest degree first");
    gf->add_option("--family", o.family, "Family")->required()->check(CLI::IsMember(family_names()));
    gf->add_option("--k", o.k, "Parameter k")->required();
    add_format(gf);

    auto* verify = app.add_subcommand("verify", "Run identity and brute-force verification suites");
    verify->add_option("--suite", o.suite, "Suite")
        ->check(CLI::IsMember({"cheb", "tables", "transfer", "reconcile", "oracle", "all"}))
        ->capture_default_str();
    verify->add_option("--kmax", o.kmax, "Largest k")->capture_default_str();
    verify->add_option("--nmax", o.nmax, "Largest length for brute-force comparisons")->capture_default_str();
    verify->add_option("--workers", o.workers, "Enumeration threads")->capture_default_str();
    add_format(verify);

    auto* cnt = app.add_subcommand("count", "Brute-force count of strings, walks or paths");
    cnt->add_option("--what", o.what, "Object")->required()->check(CLI::IsMember({"strings", "walks", "paths", "extent"}));
    cnt->add_option("--k", o.k, "Balance bound, node count, or path height bound");
    cnt->add_option("--n", o.n, "Length (paths ending at the top: steps - upper)")->required();
    cnt->add_flag("--cover", o.cover, "Count walks visiting every node (default: walks missing one)");
    cnt->add_option("--lower", o.lower, "Lower path bound (default 0)");
    cnt->add_option("--upper", o.upper, "Upper path bound (default k)");
    cnt->add_option("--terminal", o.terminal, "Terminal height")
        ->check(CLI::IsMember({"ground", "top", "any"}))
        ->capture_default_str();
    cnt->add_option("--workers", o.workers, "Enumeration threads")->capture_default_str();
    add_format(cnt);

    auto* ch = app.add_subcommand("cheb", "Print a combinatorial Chebyshev polynomial, lowest degree first");
    ch->add_option("--kind", o.kind, "T or U")->required()->check(CLI::IsMember({"T", "U"}));
    ch->add_option("--k", o.k, "Index")->required();
    add_format(ch);

    auto* codec = app.add_subcommand("codec", "Translate between walks on C_k and bit strings");
    codec->add_option("--direction", o.direction, "encode or decode")->required()->check(CLI::IsMember({"encode", "decode"}));
    codec->add_option("--k", o.k, "Node count")->required();
    codec->add_option("--input", o.input, "Node list (encode) or bit string (decode)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(o, out);
        if (gf->parsed()) return cmd_gf(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (cnt->parsed()) return cmd_count(o, out);
        if (ch->parsed()) return cmd_cheb(o, out);
        if (codec->parsed()) return cmd_codec(o, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsageError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace balgf::cli
