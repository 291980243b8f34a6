#include "spalg/session.hpp"

#include "spalg/exprio.hpp"

#include <fstream>
#include <sstream>

namespace spalg {

std::vector<SuperPolynomial> SessionSpec::parsed_constraints() const {
    std::vector<SuperPolynomial> out;
    out.reserve(constraint_texts.size());
    for (const auto& text : constraint_texts) out.push_back(parse_expression(text, table));
    return out;
}

DiracContext SessionSpec::dirac_context() const {
    if (!has_constraints()) throw SessionError("no constraints declared");
    return DiracContext(ConstraintSet(parsed_constraints()), bracket_structure());
}

SessionSpec parse_session(const std::string& text) {
    std::vector<std::string> even_names, odd_names;
    struct MetricEntry {
        std::string a, b;
        Rational value;
    };
    std::vector<MetricEntry> metric_entries;
    std::vector<std::string> constraint_texts;
    std::optional<std::size_t> order;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        auto err = [&](const std::string& why) {
            return SessionError("line " + std::to_string(lineno) + ": " + why);
        };
        if (keyword == "pair") {
            std::string q, p, extra;
            if (!(ls >> q >> p) || (ls >> extra))
                throw err("expected: pair <q-name> <p-name>");
            even_names.push_back(q);
            even_names.push_back(p);
        } else if (keyword == "odd") {
            std::string name;
            bool any = false;
            while (ls >> name) {
                odd_names.push_back(name);
                any = true;
            }
            if (!any) throw err("expected: odd <name> [...]");
        } else if (keyword == "metric") {
            std::string a, b, value, extra;
            if (!(ls >> a >> b >> value) || (ls >> extra))
                throw err("expected: metric <odd> <odd> <rational>");
            Rational v;
            try {
                v = Rational(value);
            } catch (const std::exception&) {
                throw err("bad rational: " + value);
            }
            metric_entries.push_back({a, b, v});
        } else if (keyword == "constraint") {
            std::string rest;
            std::getline(ls, rest);
            if (rest.find_first_not_of(" \t") == std::string::npos)
                throw err("expected: constraint <expression>");
            constraint_texts.push_back(rest);
        } else if (keyword == "order") {
            std::size_t k = 0;
            std::string extra;
            if (!(ls >> k) || (ls >> extra)) throw err("expected: order <K>");
            if (order) throw err("duplicate order line");
            order = k;
        } else {
            throw err("unknown keyword: " + keyword);
        }
    }

    SessionSpec spec;
    spec.table = VariableTable::create(even_names, odd_names);
    const std::size_t n = spec.table->odd_count();
    spec.odd_metric.assign(n, std::vector<Rational>(n, Rational(0)));
    std::vector<std::vector<bool>> set(n, std::vector<bool>(n, false));
    for (const auto& entry : metric_entries) {
        auto ra = spec.table->find(entry.a);
        auto rb = spec.table->find(entry.b);
        if (!ra || ra->kind != VarKind::Odd)
            throw SessionError("metric references non-odd variable: " + entry.a);
        if (!rb || rb->kind != VarKind::Odd)
            throw SessionError("metric references non-odd variable: " + entry.b);
        std::size_t a = ra->index, b = rb->index;
        if (set[a][b] && spec.odd_metric[a][b] != entry.value)
            throw SessionError("conflicting metric entries for (" + entry.a + "," + entry.b + ")");
        spec.odd_metric[a][b] = entry.value;
        spec.odd_metric[b][a] = entry.value;
        set[a][b] = set[b][a] = true;
    }
    spec.constraint_texts = std::move(constraint_texts);
    if (order) spec.order = *order;

    // Validate constraint expressions eagerly so errors carry positions.
    spec.parsed_constraints();
    return spec;
}

SessionSpec load_session_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SessionError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_session(buffer.str());
}

SessionSpec default_session() {
    static const char* text =
        "pair q1 p1\n"
        "pair q2 p2\n"
        "odd theta1 theta2 theta3\n"
        "metric theta1 theta1 1\n"
        "metric theta2 theta2 1\n"
        "metric theta3 theta3 1\n"
        "constraint q1\n"
        "constraint p1\n"
        "constraint theta1\n"
        "order 4\n";
    return parse_session(text);
}

} // namespace spalg
