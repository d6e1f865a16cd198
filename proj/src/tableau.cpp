#include "slrk/tableau.hpp"

#include <fstream>
#include <sstream>

namespace slrk {

namespace {

std::vector<Rational> parse_row(std::string_view text) {
    std::vector<Rational> out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) out.push_back(parse_rational(token));
    return out;
}

std::vector<std::vector<Rational>> rows(std::initializer_list<std::initializer_list<const char*>> spec) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : spec) {
        std::vector<Rational> r;
        for (const char* v : row) r.push_back(parse_rational(v));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Rational> vec(std::initializer_list<const char*> spec) {
    std::vector<Rational> out;
    for (const char* v : spec) out.push_back(parse_rational(v));
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

Tableau::Tableau(std::string name, std::vector<std::vector<Rational>> lower_rows, std::vector<Rational> b)
    : name_(std::move(name)), b_(std::move(b)) {
    const std::size_t s = b_.size();
    if (s == 0) throw std::invalid_argument("tableau needs at least one stage");
    if (lower_rows.size() != s) throw std::invalid_argument("a must have one row per stage");
    a_.assign(s, std::vector<Rational>(s, Rational(0)));
    c_.assign(s, Rational(0));
    for (std::size_t i = 0; i < s; ++i) {
        if (lower_rows[i].size() != i) {
            throw std::invalid_argument("row " + std::to_string(i + 1) + " of a must have " + std::to_string(i) +
                                        " entries");
        }
        for (std::size_t j = 0; j < i; ++j) {
            a_[i][j] = lower_rows[i][j];
            c_[i] += lower_rows[i][j];
        }
    }
}

const Rational& Tableau::a(std::size_t i, std::size_t j) const { return a_.at(i).at(j); }

// Row 5 lists only three entries; a[4][3] is zero (-1/4 - 29/44 + 31/22 = 1/2).
Tableau rk6_tableau() {
    return Tableau("RK6",
                   rows({{},
                         {"1/6"},
                         {"1/12", "1/12"},
                         {"0", "-4/33", "5/11"},
                         {"-1/4", "-29/44", "31/22", "0"},
                         {"3/11", "8/33", "-4/11", "1/11", "14/33"},
                         {"-17/48", "-5/12", "1", "1", "-13/12", "11/16"},
                         {"20/39", "12/39", "-31/39", "-1/39", "34/39", "-11/39", "16/39"}}),
                   vec({"13/200", "0", "4/25", "11/40", "0", "11/40", "4/25", "13/200"}));
}

Tableau rk4_tableau() {
    return Tableau("RK4", rows({{}, {"1/2"}, {"0", "1/2"}, {"0", "0", "1"}}), vec({"1/6", "1/3", "1/3", "1/6"}));
}

Tableau heun3_tableau() {
    return Tableau("Heun3", rows({{}, {"1/3"}, {"0", "2/3"}}), vec({"1/4", "0", "3/4"}));
}

Tableau euler_tableau() { return Tableau("Euler", rows({{}}), vec({"1"})); }

std::optional<Tableau> builtin_tableau(std::string_view name) {
    if (name == "rk6" || name == "RK6") return rk6_tableau();
    if (name == "rk4" || name == "RK4") return rk4_tableau();
    if (name == "heun3" || name == "Heun3") return heun3_tableau();
    if (name == "euler" || name == "Euler") return euler_tableau();
    return std::nullopt;
}

std::vector<std::string> builtin_tableau_names() { return {"euler", "heun3", "rk4", "rk6"}; }

SpacingReport spacing_report(const Tableau& t) {
    SpacingReport report;
    const auto& c = t.c();
    bool conforming = c.front() == 0;
    std::optional<Rational> delta;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const Rational inc = c[i + 1] - c[i];
        if (inc == 0) {
            report.increments.push_back(Increment::zero);
        } else if (inc > 0 && (!delta || *delta == inc)) {
            delta = inc;
            report.increments.push_back(Increment::step);
        } else {
            report.increments.push_back(Increment::irregular);
            conforming = false;
        }
    }
    report.conforming = conforming;
    if (conforming) {
        report.delta_c = delta;
    } else {
        // A positive increment can be tagged `step` before a later mismatch is
        // seen; without a common spacing none of them is a grid step.
        for (auto& inc : report.increments) {
            if (inc == Increment::step) inc = Increment::irregular;
        }
    }
    return report;
}

TableauParseError::TableauParseError(ParseErrorKind kind, int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

Tableau parse_tableau(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> lines;
    {
        int number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            ++number;
            std::string_view line = trim(text.substr(pos, end - pos));
            if (line.empty() || line.front() != '#') lines.emplace_back(number, line);
            pos = end + 1;
        }
    }
    // Trailing blank lines carry no rows.
    while (!lines.empty() && lines.back().second.empty()) lines.pop_back();

    auto as_rationals = [](int line, std::string_view body) {
        try {
            return parse_row(body);
        } catch (const std::exception& e) {
            throw TableauParseError(ParseErrorKind::malformed_rational, line, e.what());
        }
    };

    std::size_t cursor = 0;
    while (cursor < lines.size() && lines[cursor].second.empty()) ++cursor;
    if (cursor >= lines.size()) throw TableauParseError(ParseErrorKind::malformed_structure, 1, "empty tableau file");

    std::size_t s = 0;
    {
        const auto [line, body] = lines[cursor];
        std::istringstream in{std::string(body)};
        std::string keyword;
        long long count = 0;
        std::string extra;
        if (!(in >> keyword >> count) || keyword != "stages" || (in >> extra) || count < 1 || count > 64) {
            throw TableauParseError(ParseErrorKind::malformed_structure, line, "expected 'stages <s>' header");
        }
        s = static_cast<std::size_t>(count);
        ++cursor;
    }

    std::vector<std::vector<Rational>> lower(s);
    for (std::size_t i = 0; i < s; ++i, ++cursor) {
        if (cursor >= lines.size()) {
            throw TableauParseError(ParseErrorKind::dimension_mismatch, lines.back().first + 1,
                                    "missing row " + std::to_string(i + 1) + " of a");
        }
        const auto [line, body] = lines[cursor];
        if (body.starts_with("b:") || body.starts_with("name:")) {
            throw TableauParseError(ParseErrorKind::dimension_mismatch, line,
                                    "expected row " + std::to_string(i + 1) + " of a");
        }
        auto row = as_rationals(line, body);
        if (row.size() == s && s != i) {
            for (std::size_t j = i; j < s; ++j) {
                if (row[j] != 0) {
                    throw TableauParseError(ParseErrorKind::not_explicit, line,
                                            "a[" + std::to_string(i) + "][" + std::to_string(j) +
                                                "] must be zero for an explicit scheme");
                }
            }
            row.resize(i);
        }
        if (row.size() != i) {
            throw TableauParseError(ParseErrorKind::dimension_mismatch, line,
                                    "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                        " entries, expected " + std::to_string(i) + " or " + std::to_string(s));
        }
        lower[i] = std::move(row);
    }

    std::optional<std::vector<Rational>> b;
    std::string name;
    for (; cursor < lines.size(); ++cursor) {
        const auto [line, body] = lines[cursor];
        if (body.empty()) continue;
        if (body.starts_with("b:")) {
            if (b) throw TableauParseError(ParseErrorKind::malformed_structure, line, "duplicate b line");
            b = as_rationals(line, body.substr(2));
            if (b->size() != s) {
                throw TableauParseError(ParseErrorKind::dimension_mismatch, line,
                                        "b has " + std::to_string(b->size()) + " entries, expected " +
                                            std::to_string(s));
            }
        } else if (body.starts_with("name:")) {
            name = std::string(trim(body.substr(5)));
        } else {
            throw TableauParseError(ParseErrorKind::dimension_mismatch, line,
                                    "unexpected line '" + std::string(body) + "'");
        }
    }
    if (!b) throw TableauParseError(ParseErrorKind::malformed_structure, lines.back().first, "missing 'b:' line");
    return Tableau(std::move(name), std::move(lower), std::move(*b));
}

std::string serialize_tableau(const Tableau& t) {
    std::ostringstream out;
    const std::size_t s = t.stages();
    out << "stages " << s << '\n';
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < i; ++j) out << (j ? " " : "") << to_string(t.a(i, j));
        out << '\n';
    }
    out << "b:";
    for (const auto& v : t.b()) out << ' ' << to_string(v);
    out << '\n';
    if (!t.name().empty()) out << "name: " << t.name() << '\n';
    return out.str();
}

Tableau load_tableau(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tableau file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_tableau(buffer.str());
}

void save_tableau(const Tableau& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write tableau file '" + path + "'");
    out << serialize_tableau(t);
}

FloatTableau to_float(const Tableau& t) {
    FloatTableau f;
    const std::size_t s = t.stages();
    f.name = t.name();
    f.a.assign(s, std::vector<double>(s, 0.0));
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < i; ++j) f.a[i][j] = to_double(t.a(i, j));
        f.b.push_back(to_double(t.b()[i]));
        f.c.push_back(to_double(t.c()[i]));
    }
    return f;
}

}  // namespace slrk
