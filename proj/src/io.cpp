#include "rcds/io.hpp"

#include <json.hpp>

#include <istream>
#include <sstream>
#include <vector>

namespace rcds {

namespace {

RatMatrix from_token_rows(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) throw error("empty matrix input");
    const int nr = static_cast<int>(rows.size());
    const int nc = static_cast<int>(rows.front().size());
    if (nc == 0) throw error("empty matrix input");
    RatMatrix X(nr, nc);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != nc)
            throw error("ragged rows in matrix input");
        for (int j = 0; j < nc; ++j)
            X.at(i, j) = parse_rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return X;
}

RatMatrix parse_plain(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream toks(line);
        std::vector<std::string> row;
        std::string tok;
        while (toks >> tok) row.push_back(tok);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return from_token_rows(rows);
}

RatMatrix parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("invalid JSON matrix: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw error("JSON matrix must be an object with \"n\" and \"rows\"");
    const int n = j.at("n").get<int>();
    const auto& rows = j.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw error("JSON matrix: \"rows\" must hold n rows");
    std::vector<std::vector<std::string>> toks;
    for (const auto& r : rows) {
        if (!r.is_array() || static_cast<int>(r.size()) != n)
            throw error("JSON matrix: each row must hold n tokens");
        std::vector<std::string> row;
        for (const auto& t : r) row.push_back(t.is_string() ? t.get<std::string>() : t.dump());
        toks.push_back(std::move(row));
    }
    return from_token_rows(toks);
}

} // namespace

MatrixFormat sniff_format(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{' ? MatrixFormat::json : MatrixFormat::plain;
    }
    return MatrixFormat::plain;
}

RatMatrix parse_matrix(std::string_view text, MatrixFormat format) {
    return format == MatrixFormat::plain ? parse_plain(text) : parse_json(text);
}

RatMatrix parse_matrix(std::istream& in, MatrixFormat format) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str(), format);
}

std::string serialize_matrix(const RatMatrix& X, MatrixFormat format) {
    if (format == MatrixFormat::plain) {
        std::ostringstream out;
        for (int i = 0; i < X.rows(); ++i) {
            for (int j = 0; j < X.cols(); ++j) {
                if (j) out << ' ';
                out << to_string(X.at(i, j));
            }
            out << '\n';
        }
        return out.str();
    }
    if (!X.is_square()) throw error("JSON matrix format requires a square matrix");
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < X.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < X.cols(); ++j) row.push_back(to_string(X.at(i, j)));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"n", X.n()}, {"rows", std::move(rows)}}.dump();
}

Pattern parse_pattern(std::string_view text) {
    std::vector<std::vector<bool>> rows;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<bool> row;
        for (char c : line) {
            if (c == '0')
                row.push_back(false);
            else if (c == '1')
                row.push_back(true);
            else if (c == ' ' || c == '\t' || c == '\r')
                continue;
            else
                throw error(std::string("invalid pattern character '") + c + "'");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw error("empty pattern input");
    const int nr = static_cast<int>(rows.size());
    const int nc = static_cast<int>(rows.front().size());
    Pattern A(nr, nc);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != nc)
            throw error("ragged rows in pattern input");
        for (int j = 0; j < nc; ++j)
            A.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return A;
}

Pattern parse_pattern(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern(buf.str());
}

std::string serialize_pattern(const Pattern& A) {
    std::ostringstream out;
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) out << (A.at(i, j) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

} // namespace rcds
