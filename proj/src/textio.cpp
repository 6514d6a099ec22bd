#include "textio.hpp"

#include <cctype>
#include <sstream>

namespace ffgroup {

namespace {

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    if (s.empty()) fail(Errc::ParseError, "empty " + what);
    std::uint64_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(Errc::ParseError, "bad " + what + " '" + s + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > (1ull << 62)) fail(Errc::ParseError, what + " out of range");
    }
    return v;
}

Elem parse_elem(const FieldPtr& ctx, const std::string& s) {
    const std::uint64_t v = parse_u64(s, "element code");
    if (v >= ctx->q())
        fail(Errc::ParseError, "element code " + s + " out of range for GF(" + ctx->descriptor() + ")");
    return static_cast<Elem>(v);
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

std::string poly_text(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.coeff(i));
    }
    return out;
}

std::string poly_pretty(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const Elem c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += 'X';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

Poly parse_poly_pretty(const FieldPtr& ctx, const std::string& text) {
    std::vector<Elem> coeffs;
    auto put = [&](std::size_t deg, Elem c, bool negate) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        if (negate) c = ctx->neg(c);
        coeffs[deg] = ctx->add(coeffs[deg], c);
    };
    std::size_t i = 0;
    bool negate = false;
    const std::string s = text;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '+') {
            negate = false;
            ++i;
            continue;
        }
        if (c == '-') {
            negate = true;
            ++i;
            continue;
        }
        std::uint64_t coef = 1;
        bool has_coef = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            if (!has_coef) coef = 0;
            has_coef = true;
            coef = coef * 10 + static_cast<std::uint64_t>(s[i] - '0');
            ++i;
        }
        std::size_t deg = 0;
        if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
                deg = static_cast<std::size_t>(parse_u64(e, "exponent"));
            }
        } else if (!has_coef) {
            fail(Errc::ParseError, "unexpected character '" + std::string(1, c) + "' in polynomial");
        }
        if (coef >= ctx->q())
            fail(Errc::ParseError, "coefficient " + std::to_string(coef) + " out of range");
        put(deg, static_cast<Elem>(coef), negate);
        negate = false;
    }
    return Poly(ctx, std::move(coeffs));
}

}  // namespace

Poly parse_poly(const FieldPtr& ctx, const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) fail(Errc::ParseError, "empty polynomial");
    if (s.find('X') != std::string::npos || s.find('x') != std::string::npos ||
        s.find('+') != std::string::npos || s.find('-') != std::string::npos)
        return parse_poly_pretty(ctx, s);
    std::vector<Elem> coeffs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(parse_elem(ctx, trim(tok)));
    return Poly(ctx, std::move(coeffs));
}

std::string mat_text(const Mat& m) {
    std::string out;
    for (unsigned i = 0; i < m.dim(); ++i) {
        for (unsigned j = 0; j < m.dim(); ++j) {
            if (j) out += ' ';
            out += std::to_string(m.at(i, j));
        }
        if (i + 1 < m.dim()) out += '\n';
    }
    return out;
}

Mat parse_mat(const FieldPtr& ctx, unsigned n, const std::string& text) {
    const auto mats = parse_generator_file(ctx, n, text);
    if (mats.size() != 1) fail(Errc::ParseError, "expected exactly one matrix");
    return mats.front();
}

std::vector<Mat> parse_generator_file(const FieldPtr& ctx, unsigned n, const std::string& text) {
    std::vector<Mat> out;
    std::vector<std::vector<Elem>> rows;
    std::size_t first_line_of_block = 0;

    auto flush = [&](std::size_t line_no) {
        if (rows.empty()) return;
        if (rows.size() != n)
            fail(Errc::ParseError, "matrix block starting near line " +
                                       std::to_string(first_line_of_block) + " has " +
                                       std::to_string(rows.size()) + " rows, expected " +
                                       std::to_string(n));
        Mat m(ctx, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
        out.push_back(std::move(m));
        rows.clear();
        (void)line_no;
    };

    std::stringstream ss(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            flush(line_no);
            continue;
        }
        if (rows.empty()) first_line_of_block = line_no;
        std::vector<Elem> row;
        std::stringstream ls(line);
        std::string tok;
        while (ls >> tok) row.push_back(parse_elem(ctx, tok));
        if (row.size() != n)
            fail(Errc::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                       std::to_string(n) + " entries, found " +
                                       std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    flush(line_no + 1);
    if (out.empty()) fail(Errc::ParseError, "no matrices in generator input");
    return out;
}

std::pair<std::uint64_t, unsigned> parse_field_descriptor(const std::string& text) {
    const std::string s = trim(text);
    const auto caret = s.find('^');
    if (caret != std::string::npos) {
        const std::uint64_t p = parse_u64(trim(s.substr(0, caret)), "characteristic");
        const std::uint64_t k = parse_u64(trim(s.substr(caret + 1)), "extension degree");
        if (k < 1 || k > 64) fail(Errc::ParseError, "extension degree out of range");
        // validated as prime by Field::make
        return {p, static_cast<unsigned>(k)};
    }
    return split_prime_power(parse_u64(s, "field order"));
}

}  // namespace ffgroup
