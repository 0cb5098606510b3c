#include "wiso/space_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wiso {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::bad_input, "cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

FiniteMetricSpace parse_space_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::bad_input, std::string("JSON parse failure: ") + e.what());
    }
    if (!j.is_object() || !j.contains("labels") || !j.contains("distances"))
        raise(Errc::bad_input, "space JSON needs 'labels' and 'distances'");
    std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
    std::vector<std::vector<double>> dist = j["distances"].get<std::vector<std::vector<double>>>();
    return FiniteMetricSpace::validate(std::move(labels), dist);
}

std::string space_to_json(const FiniteMetricSpace& X) {
    nlohmann::json j;
    j["labels"] = X.labels();
    const int n = X.size();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jj = 0; jj < n; ++jj) row.push_back(X(i, jj));
        rows.push_back(std::move(row));
    }
    j["distances"] = std::move(rows);
    return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& s : out) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    }
    return out;
}

double parse_number(const std::string& s) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) raise(Errc::bad_input, "bad number '" + s + "'");
    return v;
}

}  // namespace

FiniteMetricSpace parse_space_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rows;
    bool have_labels = false;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto cells = split_csv_line(line);
        if (!have_labels) {
            labels = cells;
            have_labels = true;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(parse_number(c));
        rows.push_back(std::move(row));
    }
    if (!have_labels) raise(Errc::bad_input, "empty CSV file");
    return FiniteMetricSpace::validate(std::move(labels), rows);
}

std::string space_to_csv(const FiniteMetricSpace& X) {
    std::ostringstream out;
    const int n = X.size();
    for (int i = 0; i < n; ++i) out << (i ? "," : "") << X.labels()[i];
    out << "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out << (j ? "," : "") << format_double(X(i, j));
        out << "\n";
    }
    return out.str();
}

FiniteMetricSpace read_space_file(const std::string& path) {
    const std::string text = read_file(path);
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
        if (c == '{') return parse_space_json(text);
        break;
    }
    return parse_space_csv(text);
}

void write_space_file(const FiniteMetricSpace& X, const std::string& path, bool as_csv) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::bad_input, "cannot write '" + path + "'");
    out << (as_csv ? space_to_csv(X) : space_to_json(X));
}

std::string barcode_to_text(const Barcode& bc) {
    std::ostringstream out;
    for (const Bar& b : bc.bars) {
        out << b.dim << " " << format_double(b.birth) << " ";
        if (b.infinite())
            out << "inf";
        else
            out << format_double(b.death);
        out << "\n";
    }
    return out.str();
}

Barcode parse_barcode_text(const std::string& text) {
    Barcode bc;
    std::istringstream in(text);
    std::string dim_s, birth_s, death_s;
    while (in >> dim_s >> birth_s >> death_s) {
        Bar b;
        b.dim = static_cast<int>(parse_number(dim_s));
        b.birth = parse_number(birth_s);
        b.death = death_s == "inf" ? kInfiniteDeath : parse_number(death_s);
        bc.bars.push_back(b);
    }
    std::sort(bc.bars.begin(), bc.bars.end());
    return bc;
}

bool looks_like_barcode(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string a, b, c, extra;
        if (!(ls >> a >> b >> c) || (ls >> extra)) return false;
        if (a.find(',') != std::string::npos) return false;
        return c == "inf" || (!c.empty() && (std::isdigit(c.front()) || c.front() == '-'));
    }
    return false;
}

}  // namespace wiso
