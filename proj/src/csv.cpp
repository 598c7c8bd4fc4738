#include "dearank/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace dearank {

namespace {

std::string make_message(const std::string& msg, std::size_t row, std::size_t col) {
    std::ostringstream os;
    os << msg << " (row " << row << ", column " << col << ")";
    return os.str();
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& f : out) {
        while (!f.empty() && std::isspace(static_cast<unsigned char>(f.front())))
            f.erase(f.begin());
        while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back())))
            f.pop_back();
    }
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

CsvError::CsvError(std::string message, std::size_t row, std::size_t column)
    : std::runtime_error(make_message(message, row, column)),
      row_(row),
      column_(column) {}

DecisionMatrix parse_csv(std::string_view text, std::string_view source_name) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    const std::string where = std::string(source_name);
    if (lines.size() < 3)
        throw CsvError(where + ": need a header row, a role row and at least one data row",
                       lines.size(), 1);

    auto header = split_fields(lines[0]);
    if (header.size() < 2)
        throw CsvError(where + ": header must name at least one attribute", 1, 1);
    const std::size_t na = header.size() - 1;

    auto roles = split_fields(lines[1]);
    if (roles.size() != header.size())
        throw CsvError(where + ": role row width does not match header", 2, roles.size());

    std::vector<Attribute> attrs(na);
    for (std::size_t i = 0; i < na; ++i) {
        attrs[i].label = header[i + 1];
        std::string r = lower(roles[i + 1]);
        if (r == "input" || r == "cost")
            attrs[i].role = AttributeRole::Input;
        else if (r == "output" || r == "benefit")
            attrs[i].role = AttributeRole::Output;
        else
            throw CsvError(where + ": unknown role '" + roles[i + 1] +
                           "' (expected input/cost or output/benefit)", 2, i + 2);
    }

    std::vector<std::string> names;
    std::vector<std::vector<double>> values;
    for (std::size_t li = 2; li < lines.size(); ++li) {
        if (lines[li].empty()) continue;
        auto fields = split_fields(lines[li]);
        if (fields.size() != header.size())
            throw CsvError(where + ": data row width does not match header", li + 1,
                           fields.size());
        names.push_back(fields[0]);
        std::vector<double> row(na);
        for (std::size_t i = 0; i < na; ++i) {
            const std::string& f = fields[i + 1];
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc{} || ptr != f.data() + f.size())
                throw CsvError(where + ": cannot parse number '" + f + "'", li + 1, i + 2);
            row[i] = v;
        }
        values.push_back(std::move(row));
    }
    if (names.empty())
        throw CsvError(where + ": no data rows", lines.size(), 1);

    try {
        return DecisionMatrix(std::move(names), std::move(attrs), std::move(values));
    } catch (const std::invalid_argument& e) {
        throw CsvError(where + ": " + e.what(), 1, 1);
    }
}

DecisionMatrix ingest_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CsvError("cannot open '" + path.string() + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    DecisionMatrix m = parse_csv(buf.str(), path.string());
    m.ensure_valid();
    return m;
}

std::string to_csv(const DecisionMatrix& m) {
    std::ostringstream os;
    os << "name";
    for (std::size_t i = 0; i < m.attributes(); ++i) os << ',' << m.attribute(i).label;
    os << '\n' << "role";
    for (std::size_t i = 0; i < m.attributes(); ++i)
        os << ',' << (m.attribute(i).role == AttributeRole::Input ? "input" : "output");
    os << '\n';
    char buf[64];
    for (std::size_t j = 0; j < m.alternatives(); ++j) {
        os << m.name(j);
        for (std::size_t i = 0; i < m.attributes(); ++i) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, m.value(j, i));
            os << ',' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
        }
        os << '\n';
    }
    return os.str();
}

} // namespace dearank
