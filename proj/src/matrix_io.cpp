#include "qgi/matrix_io.hpp"

#include "qgi/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace qgi {

namespace {

struct Scanner {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }
};

// term := sign? ( number ('*'? unit)? | unit )
// number := digits ('/' digits)?
void parse_term(Scanner& sc, Quaternion& out, bool first) {
    sc.skip_ws();
    int sign = 1;
    bool saw_sign = false;
    if (!sc.done() && (sc.peek() == '+' || sc.peek() == '-')) {
        sign = sc.peek() == '-' ? -1 : 1;
        ++sc.pos;
        saw_sign = true;
    }
    if (!first && !saw_sign) throw parse_error("expected '+' or '-' between quaternion terms");
    sc.skip_ws();
    if (sc.done()) throw parse_error("dangling sign in quaternion literal");

    auto is_unit = [](char c) { return c == 'i' || c == 'j' || c == 'k'; };
    Rational coeff(1);
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        std::size_t begin = sc.pos;
        while (sc.pos < sc.s.size() &&
               std::isdigit(static_cast<unsigned char>(sc.s[sc.pos])))
            ++sc.pos;
        std::string num(sc.s.substr(begin, sc.pos - begin));
        std::string text = num;
        sc.skip_ws();
        if (!sc.done() && sc.peek() == '/') {
            ++sc.pos;
            sc.skip_ws();
            std::size_t dbegin = sc.pos;
            while (sc.pos < sc.s.size() &&
                   std::isdigit(static_cast<unsigned char>(sc.s[sc.pos])))
                ++sc.pos;
            if (sc.pos == dbegin) throw parse_error("missing denominator in quaternion literal");
            text += "/" + std::string(sc.s.substr(dbegin, sc.pos - dbegin));
        }
        coeff = Rational::from_string(text);
        have_number = true;
    }

    sc.skip_ws();
    char unit = 0;
    if (!sc.done() && (is_unit(sc.peek()) || sc.peek() == '*')) {
        if (sc.peek() == '*') {
            if (!have_number) throw parse_error("'*' without coefficient");
            ++sc.pos;
            sc.skip_ws();
            if (sc.done() || !is_unit(sc.peek())) throw parse_error("'*' must be followed by i, j or k");
        }
        unit = sc.peek();
        ++sc.pos;
    }
    if (!have_number && unit == 0)
        throw parse_error("expected coefficient or unit in quaternion literal");

    if (sign < 0) coeff = -coeff;
    switch (unit) {
    case 0: out.w += coeff; break;
    case 'i': out.x += coeff; break;
    case 'j': out.y += coeff; break;
    case 'k': out.z += coeff; break;
    default: break;
    }
}

std::string format_coeff_term(const Rational& c, const char* unit, bool& first,
                              std::string& out) {
    if (c.is_zero()) return out;
    std::string mag = (c.sign() < 0 ? (-c).str() : c.str());
    if (first) {
        if (c.sign() < 0) out += "-";
        first = false;
    } else {
        out += c.sign() < 0 ? "-" : "+";
    }
    if (unit[0] == 0) {
        out += mag;
    } else if (mag == "1") {
        out += unit;
    } else {
        out += mag + "*" + unit;
    }
    return out;
}

} // namespace

Quaternion parse_quaternion(std::string_view text) {
    Scanner sc{text};
    if (sc.done()) throw parse_error("empty quaternion literal");
    Quaternion q;
    bool first = true;
    while (!sc.done()) {
        parse_term(sc, q, first);
        first = false;
    }
    return q;
}

std::string format_quaternion(const Quaternion& q) {
    std::string out;
    bool first = true;
    format_coeff_term(q.w, "", first, out);
    format_coeff_term(q.x, "i", first, out);
    format_coeff_term(q.y, "j", first, out);
    format_coeff_term(q.z, "k", first, out);
    if (first) out = "0";
    return out;
}

namespace {

QMatrix parse_matrix_text(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    auto next_content_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            std::size_t p = line.find_first_not_of(" \t\r");
            if (p == std::string::npos) continue;
            if (line[p] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw parse_error("empty matrix file");
    std::istringstream hs(header);
    long long m = -1, n = -1;
    if (!(hs >> m >> n) || m < 0 || n < 0) throw parse_error("bad matrix header: '" + header + "'");

    QMatrix out(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (long long i = 1; i <= m; ++i) {
        std::string row;
        if (!next_content_line(row))
            throw parse_error("matrix file ended before row " + std::to_string(i));
        std::size_t begin = 0;
        for (long long j = 1; j <= n; ++j) {
            std::size_t sep = row.find(';', begin);
            std::string cell = sep == std::string::npos ? row.substr(begin)
                                                        : row.substr(begin, sep - begin);
            if (j < n && sep == std::string::npos)
                throw parse_error("row " + std::to_string(i) + " has fewer than " +
                                  std::to_string(n) + " entries");
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                parse_quaternion(cell);
            begin = sep == std::string::npos ? row.size() : sep + 1;
        }
        if (row.find(';', begin) != std::string::npos ||
            row.find_first_not_of(" \t\r", begin) != std::string::npos)
            throw parse_error("row " + std::to_string(i) + " has more than " +
                              std::to_string(n) + " entries");
    }
    return out;
}

QMatrix parse_matrix_json(const std::string& content) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad JSON matrix: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("data"))
        throw parse_error("JSON matrix needs rows, cols and data");
    const std::size_t m = doc["rows"].get<std::size_t>();
    const std::size_t n = doc["cols"].get<std::size_t>();
    const auto& data = doc["data"];
    if (!data.is_array() || data.size() != m) throw parse_error("JSON data has wrong row count");
    QMatrix out(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (!data[i].is_array() || data[i].size() != n)
            throw parse_error("JSON data row " + std::to_string(i + 1) + " has wrong length");
        for (std::size_t j = 0; j < n; ++j)
            out(i + 1, j + 1) = parse_quaternion(data[i][j].get<std::string>());
    }
    return out;
}

} // namespace

QMatrix parse_matrix(const std::string& content) {
    std::size_t p = content.find_first_not_of(" \t\r\n");
    if (p == std::string::npos) throw parse_error("empty matrix input");
    if (content[p] == '{') return parse_matrix_json(content);
    return parse_matrix_text(content);
}

QMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

std::string format_matrix(const QMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            if (j > 1) out += " ; ";
            out += format_quaternion(m(i, j));
        }
        out += "\n";
    }
    return out;
}

std::string format_matrix_json(const QMatrix& m) {
    nlohmann::json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    nlohmann::json data = nlohmann::json::array();
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 1; j <= m.cols(); ++j) row.push_back(format_quaternion(m(i, j)));
        data.push_back(row);
    }
    doc["data"] = data;
    return doc.dump();
}

} // namespace qgi
