#include "bilpair/pair/bp_format.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace bilpair {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Reads "e<k>" and returns k (1-based).
std::size_t parse_basis(std::string_view s, std::size_t line) {
    s = trim(s);
    if (s.size() < 2 || s[0] != 'e' || !all_digits(s.substr(1))) fail(line, "expected e<index>, got '" + std::string(s) + "'");
    return std::stoul(std::string(s.substr(1)));
}

}  // namespace

Scalar parse_coefficient(std::string_view text, const Field& field) {
    std::string_view s = trim(text);
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = trim(s.substr(1));
    }
    auto slash = s.find('/');
    std::string_view num = slash == std::string_view::npos ? s : trim(s.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(ErrorCode::parse_error, "bad coefficient '" + std::string(text) + "'");
    }
    mpz_class a{std::string(num)}, b{std::string(den)};
    if (neg) a = -a;
    return Scalar::from_fraction(field, a, b);
}

BilinearPair parse_bp(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    int header = 0;
    Field field = Field::rationals();
    BilinearPair p;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        line = trim(line);
        if (line.empty()) continue;
        if (header == 0) {
            if (line == "field rational") {
                field = Field::rationals();
            } else if (line.rfind("field p=", 0) == 0 && all_digits(trim(line.substr(8)))) {
                unsigned long long m = std::stoull(std::string(trim(line.substr(8))));
                if (m >= (1u << 15) || !is_prime_number(m)) {
                    throw Error(ErrorCode::non_prime_modulus, "line " + std::to_string(lineno) + ": modulus " +
                                                                  std::to_string(m) + " is not an admissible prime");
                }
                field = Field::prime(static_cast<std::uint32_t>(m));
            } else {
                fail(lineno, "expected 'field p=<prime>' or 'field rational'");
            }
            header = 1;
            continue;
        }
        if (header == 1) {
            if (line.rfind("dim ", 0) != 0 || !all_digits(trim(line.substr(4)))) fail(lineno, "expected 'dim <n>'");
            p = BilinearPair(std::stoul(std::string(trim(line.substr(4)))), field);
            header = 2;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(lineno, "expected '='");
        std::string_view lhs = trim(line.substr(0, eq));
        auto star = lhs.find('*');
        if (star == std::string_view::npos) fail(lineno, "expected e<i>*e<j> on the left");
        std::size_t i = parse_basis(lhs.substr(0, star), lineno);
        std::size_t j = parse_basis(lhs.substr(star + 1), lineno);
        std::size_t n = p.dim();
        if (i < 1 || i > n || j < 1 || j > n) {
            throw Error(ErrorCode::index_out_of_range, "line " + std::to_string(lineno) + ": index outside 1.." + std::to_string(n));
        }
        if (!seen.insert({i, j}).second) fail(lineno, "duplicate product e" + std::to_string(i) + "*e" + std::to_string(j));

        // Split the right-hand side into signed terms.
        std::string_view rhs = trim(line.substr(eq + 1));
        if (rhs.empty()) fail(lineno, "empty right-hand side");
        if (rhs == "0") continue;
        std::vector<std::string> terms;
        std::string cur;
        for (std::size_t t = 0; t < rhs.size(); ++t) {
            char c = rhs[t];
            bool sep = (c == '+' || c == '-') && !trim(cur).empty() && trim(cur).back() != '*' && trim(cur).back() != '/';
            if (sep) {
                terms.push_back(cur);
                cur.clear();
                if (c == '-') cur.push_back('-');
                continue;
            }
            cur.push_back(c);
        }
        terms.push_back(cur);
        Vector v = zero_vector(field, n);
        for (const auto& term_raw : terms) {
            std::string_view term = trim(term_raw);
            if (term.empty()) fail(lineno, "empty term");
            auto tstar = term.rfind('*');
            Scalar coef = Scalar::one(field);
            std::string_view basis = term;
            if (tstar != std::string_view::npos) {
                try {
                    coef = parse_coefficient(term.substr(0, tstar), field);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::parse_error) throw;
                    fail(lineno, e.what());
                }
                basis = term.substr(tstar + 1);
            } else if (term[0] == '-') {
                coef = -coef;
                basis = term.substr(1);
            }
            std::size_t k = parse_basis(basis, lineno);
            if (k < 1 || k > n) {
                throw Error(ErrorCode::index_out_of_range, "line " + std::to_string(lineno) + ": index outside 1.." + std::to_string(n));
            }
            v[k - 1] += coef;
        }
        p.set_product(i - 1, j - 1, v);
    }
    if (header < 2) fail(lineno, "missing field or dim header");
    return p;
}

std::string serialize_bp(const BilinearPair& p) {
    std::ostringstream os;
    if (p.field().is_prime()) {
        os << "field p=" << p.field().modulus() << '\n';
    } else {
        os << "field rational\n";
    }
    os << "dim " << p.dim() << '\n';
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j) {
            bool first = true;
            for (std::size_t k = 0; k < p.dim(); ++k) {
                const Scalar& c = p.at(i, j, k);
                if (c.is_zero()) continue;
                if (first) {
                    os << 'e' << (i + 1) << "*e" << (j + 1) << " = ";
                } else {
                    os << " + ";
                }
                first = false;
                os << c.to_string() << "*e" << (k + 1);
            }
            if (!first) os << '\n';
        }
    return os.str();
}

BilinearPair read_bp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_input, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_bp(ss.str());
}

void write_bp_file(const std::string& path, const BilinearPair& p) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::invalid_input, "cannot write " + path);
    out << serialize_bp(p);
}

}  // namespace bilpair
