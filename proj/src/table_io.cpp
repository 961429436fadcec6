#include "pbern/table_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pbern {

namespace {

struct ParsedCell {
    int n;
    int p;
    Rational value;
};

PBernoulliTable assemble(const std::vector<ParsedCell>& cells) {
    if (cells.empty()) throw std::runtime_error("table parse: no data rows");
    int n_max = 0, p_max = 0;
    for (const ParsedCell& c : cells) {
        if (c.n < 0 || c.p < 0) throw std::runtime_error("table parse: negative index");
        n_max = std::max(n_max, c.n);
        p_max = std::max(p_max, c.p);
    }
    PBernoulliTable table;
    table.n_max = n_max;
    table.p_max = p_max;
    table.values.assign(static_cast<size_t>(n_max) + 1,
                        std::vector<Rational>(static_cast<size_t>(p_max) + 1));
    std::vector<std::vector<bool>> seen(static_cast<size_t>(n_max) + 1,
                                        std::vector<bool>(static_cast<size_t>(p_max) + 1, false));
    for (const ParsedCell& c : cells) {
        if (seen[c.n][c.p])
            throw std::runtime_error("table parse: duplicate cell n=" + std::to_string(c.n) +
                                     " p=" + std::to_string(c.p));
        seen[c.n][c.p] = true;
        table.values[c.n][c.p] = c.value;
    }
    for (int n = 0; n <= n_max; ++n)
        for (int p = 0; p <= p_max; ++p)
            if (!seen[n][p])
                throw std::runtime_error("table parse: missing cell n=" + std::to_string(n) +
                                         " p=" + std::to_string(p));
    return table;
}

Rational rational_from_strings(const std::string& num, const std::string& den) {
    try {
        return Rational(mpz_class(num), mpz_class(den));
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("table parse: bad integer field '" + num + "'/'" + den + "'");
    }
}

int index_from_string(const std::string& s) {
    try {
        size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("table parse: bad index field '" + s + "'");
    }
}

}  // namespace

void write_table_csv(const PBernoulliTable& table, std::ostream& os) {
    os << "n,p,numerator,denominator\n";
    for (int n = 0; n <= table.n_max; ++n)
        for (int p = 0; p <= table.p_max; ++p) {
            const Rational& v = table.values[n][p];
            os << n << ',' << p << ',' << v.numerator().get_str() << ','
               << v.denominator().get_str() << '\n';
        }
}

void write_table_json(const PBernoulliTable& table, std::ostream& os) {
    os << "[\n";
    bool first = true;
    for (int n = 0; n <= table.n_max; ++n)
        for (int p = 0; p <= table.p_max; ++p) {
            const Rational& v = table.values[n][p];
            if (!first) os << ",\n";
            first = false;
            os << "  {\"n\": " << n << ", \"p\": " << p << ", \"numerator\": \""
               << v.numerator().get_str() << "\", \"denominator\": \""
               << v.denominator().get_str() << "\"}";
        }
    os << "\n]\n";
}

std::string table_to_csv(const PBernoulliTable& table) {
    std::ostringstream os;
    write_table_csv(table, os);
    return os.str();
}

std::string table_to_json(const PBernoulliTable& table) {
    std::ostringstream os;
    write_table_json(table, os);
    return os.str();
}

PBernoulliTable parse_table_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "n,p,numerator,denominator")
        throw std::runtime_error("table parse: missing CSV header");
    std::vector<ParsedCell> cells;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            const size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 4)
            throw std::runtime_error("table parse: expected 4 CSV fields, got line '" + line + "'");
        cells.push_back(ParsedCell{index_from_string(fields[0]), index_from_string(fields[1]),
                                   rational_from_strings(fields[2], fields[3])});
    }
    return assemble(cells);
}

PBernoulliTable parse_table_json(std::istream& is) {
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("table parse: invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw std::runtime_error("table parse: expected a JSON array");
    std::vector<ParsedCell> cells;
    for (const auto& rec : doc) {
        if (!rec.is_object() || !rec.contains("n") || !rec.contains("p") ||
            !rec.contains("numerator") || !rec.contains("denominator"))
            throw std::runtime_error("table parse: record missing a required field");
        try {
            cells.push_back(
                ParsedCell{rec.at("n").get<int>(), rec.at("p").get<int>(),
                           rational_from_strings(rec.at("numerator").get<std::string>(),
                                                 rec.at("denominator").get<std::string>())});
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(std::string("table parse: bad record field: ") + e.what());
        }
    }
    return assemble(cells);
}

}  // namespace pbern
