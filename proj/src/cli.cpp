#include "towertab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "towertab/json_io.hpp"
#include "towertab/render.hpp"
#include "towertab/schubert.hpp"

namespace towertab::cli {

namespace {

using nlohmann::json;

// Input that cannot be parsed into the requested object: exit code 2, as
// opposed to well-formed input failing a precondition (exit code 1).
struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

json parse_json(const std::string& s) {
    try {
        return json::parse(s);
    } catch (const json::exception& e) {
        throw ParseFailure(std::string("invalid JSON: ") + e.what());
    }
}

template <typename T>
T parse_object(const std::string& s, const char* what) {
    try {
        return parse_json(trim(s)).get<T>();
    } catch (const ParseFailure&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseFailure(std::string("invalid ") + what + ": " + e.what());
    }
}

std::vector<int> parse_ints(const std::string& raw, int min_value, const char* what) {
    const std::string s = trim(raw);
    std::vector<int> out;
    if (s.empty()) return out;
    if (s.front() == '[') {
        const json j = parse_json(s);
        if (!j.is_array()) throw ParseFailure(std::string("expected an array for ") + what);
        for (const json& e : j) {
            if (!e.is_number_integer()) throw ParseFailure(std::string("expected integers in ") + what);
            out.push_back(e.get<int>());
        }
    } else if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t used = 0;
                const int v = std::stoi(trim(tok), &used);
                if (used != trim(tok).size()) throw std::invalid_argument("");
                out.push_back(v);
            } catch (const std::exception&) {
                throw ParseFailure(std::string("cannot parse ") + what + ": bad entry '" + tok + "'");
            }
        }
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9')
                throw ParseFailure(std::string("cannot parse ") + what + ": unexpected '" + ch + "'");
            out.push_back(ch - '0');
        }
    }
    for (int v : out)
        if (v < min_value)
            throw ParseFailure(std::string(what) + " entries must be >= " + std::to_string(min_value));
    return out;
}

Word parse_word(const std::string& s) { return parse_ints(s, 1, "word"); }

Permutation parse_perm(const std::string& s) {
    try {
        return Permutation(parse_ints(s, 1, "permutation"));
    } catch (const ParseFailure&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseFailure(std::string("invalid permutation: ") + e.what());
    }
}

TowerDiagram parse_shape(const std::string& s) {
    try {
        return TowerDiagram(parse_ints(s, 0, "heights"));
    } catch (const ParseFailure&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseFailure(std::string("invalid heights: ") + e.what());
    }
}

std::string word_str(const Word& w) {
    bool small = true;
    for (int a : w) small = small && a <= 9;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !small) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

struct Io {
    std::istream& in;
    std::ostream& out;
    // Inline positional value, --in file, or stdin, in that order.
    std::string inline_arg;
    std::string in_file;
    std::string format = "pretty";

    std::string payload() const {
        if (!inline_arg.empty()) return inline_arg;
        if (!in_file.empty() && in_file != "-") {
            std::ifstream f(in_file);
            if (!f) throw ParseFailure("cannot open input file: " + in_file);
            std::stringstream ss;
            ss << f.rdbuf();
            return ss.str();
        }
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    bool json_format() const { return format == "json"; }

    void print(const std::string& s) const {
        if (!s.empty()) out << s << '\n';
    }
    void print(const json& j) const { out << j.dump() << '\n'; }
};

void add_common(CLI::App* sub, Io& io, bool positional = true) {
    if (positional) sub->add_option("input", io.inline_arg, "inline input");
    sub->add_option("--in", io.in_file, "read input from a file ('-' for stdin)");
    sub->add_option("--format", io.format, "output format")
        ->check(CLI::IsMember({"json", "pretty", "ascii"}));
}

void emit_tableau(const Io& io, const TowerTableau& t) {
    if (io.json_format())
        io.print(json(t));
    else
        io.print(ascii_tableau(t));
}

void emit_labeling(const Io& io, const RotheLabeling& l) {
    if (io.json_format())
        io.print(json(l));
    else
        io.print(ascii_labeling(l));
}

void emit_word(const Io& io, const Word& w) {
    if (io.json_format())
        io.print(json(w));
    else
        io.print(word_str(w));
}

TowerTableau slide_or_fail(const Word& w) {
    const SlideTrace trace = slide_word_trace(w);
    if (!trace.tableau)
        throw std::runtime_error("sliding terminated at letter " +
                                 std::to_string(trace.terminated_at));
    return *trace.tableau;
}

void cmd_slide(const Io& io) {
    const Word w = parse_word(io.payload());
    emit_tableau(io, slide_or_fail(w));
}

void cmd_reading(const Io& io) {
    const auto t = parse_object<TowerTableau>(io.payload(), "tableau");
    emit_word(io, reading_word(t));
}

void cmd_shape(const Io& io) {
    const Permutation w = parse_perm(io.payload());
    const TowerDiagram t = tower_shape(w);
    if (io.json_format())
        io.print(json(t));
    else
        io.print(ascii_diagram(t));
}

void cmd_rothify(const Io& io, bool emit_complete) {
    const std::string s = trim(io.payload());
    TowerTableau t;
    if (!s.empty() && s.front() == '{')
        t = parse_object<TowerTableau>(s, "tableau");
    else
        t = slide_or_fail(parse_word(s));
    if (emit_complete) {
        const CompleteTowerTableau c = complete(t);
        if (io.json_format())
            io.print(json(c));
        else
            io.print(ascii_complete(c));
    } else {
        emit_labeling(io, rothify(t));
    }
}

void cmd_canonical(const Io& io) {
    emit_labeling(io, canonical_labeling(parse_word(io.payload())));
}

void cmd_recover(const Io& io) {
    emit_word(io, recover_word(parse_object<RotheLabeling>(io.payload(), "labeling")));
}

void cmd_balanced_check(const Io& io) {
    const auto l = parse_object<RotheLabeling>(io.payload(), "labeling");
    const auto offending = first_unbalanced_hook(l);
    if (io.json_format()) {
        json j = {{"balanced", !offending.has_value()}};
        if (offending) j["hook"] = {{"row", offending->row}, {"col", offending->col}};
        io.print(j);
    } else {
        io.print(std::string(offending ? "false" : "true"));
    }
}

void cmd_semistandard_check(const Io& io) {
    const auto t = parse_object<TowerTableau>(io.payload(), "tableau");
    const bool ok = is_semistandard(t);
    if (io.json_format())
        io.print(json{{"semistandard", ok}});
    else
        io.print(std::string(ok ? "true" : "false"));
}

void cmd_standardize(const Io& io) {
    emit_tableau(io, standardize(parse_object<TowerTableau>(io.payload(), "tableau")));
}

void cmd_flag(const Io& io) { emit_tableau(io, flag_tableau(parse_shape(io.payload()))); }

void cmd_schubert(const Io& io) {
    const Polynomial p = schubert(parse_perm(io.payload()));
    if (io.json_format())
        io.print(json(p));
    else
        io.print(p.str());
}

void cmd_stanley(const Io& io, int vars) {
    const Polynomial p = stanley_truncated(parse_perm(io.payload()), vars);
    if (io.json_format())
        io.print(json(p));
    else
        io.print(p.str());
}

void cmd_reduced_words(const Io& io) {
    const auto words = enumerate_reduced_words(parse_perm(io.payload()));
    if (io.json_format()) {
        io.print(json(words));
    } else {
        std::string lines;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i) lines += '\n';
            lines += word_str(words[i]);
        }
        io.print(lines);
    }
}

void cmd_render(const Io& io, const std::string& kind, bool svg) {
    const json j = parse_json(trim(io.payload()));
    std::string k = kind;
    if (k == "auto") {
        if (j.is_array() && (j.empty() || j.front().is_number_integer()))
            k = "diagram";
        else if (j.is_array() && j.front().is_object())
            k = "labeling";
        else if (j.is_object() && j.contains("main"))
            k = "complete";
        else if (j.is_object() && j.contains("heights"))
            k = "tableau";
        else
            throw ParseFailure("unknown object kind");
    }
    try {
        if (k == "diagram") {
            const auto t = j.get<TowerDiagram>();
            io.print(svg ? svg_diagram(t) : ascii_diagram(t));
        } else if (k == "tableau") {
            const auto t = j.get<TowerTableau>();
            io.print(svg ? svg_tableau(t) : ascii_tableau(t));
        } else if (k == "labeling") {
            const auto l = j.get<RotheLabeling>();
            io.print(svg ? svg_labeling(l) : ascii_labeling(l));
        } else {
            const auto c = j.get<CompleteTowerTableau>();
            io.print(svg ? svg_complete(c) : ascii_complete(c));
        }
    } catch (const json::exception& e) {
        throw ParseFailure(std::string("invalid ") + k + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseFailure(std::string("invalid ") + k + ": " + e.what());
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"tower diagram calculus: sliding, Rothification, Schubert polynomials"};
    app.name("towertab");
    app.require_subcommand(1);

    Io io{in, out};
    int vars = 1;
    bool want_complete = false, want_svg = false, want_ascii = false;
    std::string kind = "auto";

    add_common(app.add_subcommand("slide", "slide a word into a labeled tower diagram"), io);
    add_common(app.add_subcommand("reading", "reading word of a standard tableau"), io);
    add_common(app.add_subcommand("shape", "tower diagram of a permutation"), io);
    auto* roth = app.add_subcommand("rothify", "Rothe labeling of a standard tableau or word");
    add_common(roth, io);
    roth->add_flag("--complete", want_complete, "emit the complete tableau instead");
    add_common(app.add_subcommand("canonical", "canonical labeling of a reduced word"), io);
    add_common(app.add_subcommand("recover", "word recovered from an injective labeling"), io);
    add_common(app.add_subcommand("balanced-check", "is the labeling balanced"), io);
    add_common(app.add_subcommand("semistandard-check", "is the tableau semi-standard"), io);
    add_common(app.add_subcommand("standardize", "standardization of a semi-standard tableau"), io);
    add_common(app.add_subcommand("flag", "flag tableau of a tower diagram"), io);
    add_common(app.add_subcommand("schubert", "Schubert polynomial of a permutation"), io);
    auto* stan = app.add_subcommand("stanley", "truncated Stanley symmetric function");
    stan->add_option("input", io.inline_arg, "permutation");
    stan->add_option("vars", vars, "number of variables")->required();
    stan->add_option("--in", io.in_file, "read input from a file ('-' for stdin)");
    stan->add_option("--format", io.format, "output format")
        ->check(CLI::IsMember({"json", "pretty", "ascii"}));
    add_common(app.add_subcommand("reduced-words", "all reduced words of a permutation"), io);
    auto* rend = app.add_subcommand("render", "draw a diagram, tableau, complete tableau or labeling");
    rend->add_option("input", io.inline_arg, "inline input");
    rend->add_option("--in", io.in_file, "read input from a file ('-' for stdin)");
    rend->add_option("--kind", kind, "object kind")
        ->check(CLI::IsMember({"auto", "diagram", "tableau", "complete", "labeling"}));
    auto* svg_flag = rend->add_flag("--svg", want_svg, "emit SVG");
    rend->add_flag("--ascii", want_ascii, "emit text (default)")->excludes(svg_flag);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("towertab");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (app.got_subcommand("slide")) cmd_slide(io);
        else if (app.got_subcommand("reading")) cmd_reading(io);
        else if (app.got_subcommand("shape")) cmd_shape(io);
        else if (app.got_subcommand("rothify")) cmd_rothify(io, want_complete);
        else if (app.got_subcommand("canonical")) cmd_canonical(io);
        else if (app.got_subcommand("recover")) cmd_recover(io);
        else if (app.got_subcommand("balanced-check")) cmd_balanced_check(io);
        else if (app.got_subcommand("semistandard-check")) cmd_semistandard_check(io);
        else if (app.got_subcommand("standardize")) cmd_standardize(io);
        else if (app.got_subcommand("flag")) cmd_flag(io);
        else if (app.got_subcommand("schubert")) cmd_schubert(io);
        else if (app.got_subcommand("stanley")) cmd_stanley(io, vars);
        else if (app.got_subcommand("reduced-words")) cmd_reduced_words(io);
        else if (app.got_subcommand("render")) cmd_render(io, kind, want_svg);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const ParseFailure& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace towertab::cli
