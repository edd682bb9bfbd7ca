#include "bilpair/catalog/expression.hpp"

#include <algorithm>
#include <cctype>

namespace bilpair {

struct Expression::Node {
    enum class Kind { number, parameter, basis, form, add, sub, mul, div, neg };
    Kind kind;
    mpz_class number;
    std::string name;
    std::size_t i = 0, j = 0;  // 1-based basis indices
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

[[noreturn]] void fail(std::string_view text, const std::string& what) {
    throw Error(ErrorCode::parse_error, "expression '" + std::string(text) + "': " + what);
}

NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
// unary := '-' unary | atom ; atom := number | identifier | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip();
        if (pos_ != text_.size()) fail(text_, "unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    NodePtr expr() {
        NodePtr e = term();
        for (;;) {
            if (eat('+')) {
                e = make(Node::Kind::add, e, term());
            } else if (eat('-')) {
                e = make(Node::Kind::sub, e, term());
            } else {
                return e;
            }
        }
    }
    NodePtr term() {
        NodePtr e = unary();
        for (;;) {
            if (eat('*')) {
                e = make(Node::Kind::mul, e, unary());
            } else if (eat('/')) {
                e = make(Node::Kind::div, e, unary());
            } else {
                return e;
            }
        }
    }
    NodePtr unary() {
        if (eat('-')) return make(Node::Kind::neg, unary());
        if (eat('+')) return unary();
        return atom();
    }
    NodePtr atom() {
        skip();
        if (pos_ >= text_.size()) fail(text_, "unexpected end");
        if (eat('(')) {
            NodePtr e = expr();
            if (!eat(')')) fail(text_, "missing ')'");
            return e;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::number;
            n->number = mpz_class(std::string(text_.substr(start, pos_ - start)));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view id = text_.substr(start, pos_ - start);
            auto n = std::make_shared<Node>();
            if (id.size() >= 2 && id[0] == 'e' && all_digits(id.substr(1))) {
                n->kind = Node::Kind::basis;
                n->i = std::stoul(std::string(id.substr(1)));
                if (n->i == 0) fail(text_, "basis index starts at 1");
            } else if (id.size() == 3 && id[0] == 'D' && all_digits(id.substr(1))) {
                n->kind = Node::Kind::form;
                n->i = static_cast<std::size_t>(id[1] - '0');
                n->j = static_cast<std::size_t>(id[2] - '0');
                if (n->i == 0 || n->j == 0) fail(text_, "form index starts at 1");
            } else {
                n->kind = Node::Kind::parameter;
                n->name = std::string(id);
            }
            return n;
        }
        fail(text_, "unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Scalar, or a coefficient vector when `vec` is non-empty.
struct Value {
    Scalar s;
    Vector vec;
    bool is_vector = false;
};

struct Context {
    const Field& field;
    const Assignment& values;
    std::size_t n;
    bool forms;
    std::string_view text;
};

Value evaluate(const Node& node, const Context& ctx) {
    using K = Node::Kind;
    switch (node.kind) {
        case K::number:
            return {Scalar::from_fraction(ctx.field, node.number, 1), {}, false};
        case K::parameter: {
            auto it = ctx.values.find(node.name);
            if (it == ctx.values.end()) {
                throw Error(ErrorCode::invalid_input, "no value for parameter '" + node.name + "'");
            }
            if (!(it->second.field() == ctx.field)) throw Error(ErrorCode::field_mismatch, "parameter '" + node.name + "'");
            return {it->second, {}, false};
        }
        case K::basis:
        case K::form: {
            bool is_form = node.kind == K::form;
            if (ctx.n == 0 || is_form != ctx.forms) {
                throw Error(ErrorCode::invalid_input, "unexpected basis symbol in '" + std::string(ctx.text) + "'");
            }
            if (node.i > ctx.n || node.j > ctx.n) {
                throw Error(ErrorCode::index_out_of_range, "index outside 1.." + std::to_string(ctx.n) + " in '" +
                                                               std::string(ctx.text) + "'");
            }
            std::size_t len = is_form ? ctx.n * ctx.n : ctx.n;
            std::size_t at = is_form ? (node.i - 1) * ctx.n + (node.j - 1) : node.i - 1;
            return {Scalar::zero(ctx.field), unit_vector(ctx.field, len, at), true};
        }
        case K::neg: {
            Value v = evaluate(*node.lhs, ctx);
            if (v.is_vector) {
                for (auto& x : v.vec) x = -x;
            } else {
                v.s = -v.s;
            }
            return v;
        }
        case K::add:
        case K::sub: {
            Value a = evaluate(*node.lhs, ctx), b = evaluate(*node.rhs, ctx);
            bool minus = node.kind == K::sub;
            if (a.is_vector != b.is_vector) {
                // A literal zero may stand beside vectors.
                Value& sc = a.is_vector ? b : a;
                if (!sc.s.is_zero()) throw Error(ErrorCode::invalid_input, "mixing scalars and vectors in '" + std::string(ctx.text) + "'");
                Value out = a.is_vector ? a : b;
                if (minus && !a.is_vector)
                    for (auto& x : out.vec) x = -x;
                return out;
            }
            if (!a.is_vector) return {minus ? a.s - b.s : a.s + b.s, {}, false};
            for (std::size_t k = 0; k < a.vec.size(); ++k) a.vec[k] = minus ? a.vec[k] - b.vec[k] : a.vec[k] + b.vec[k];
            return a;
        }
        case K::mul: {
            Value a = evaluate(*node.lhs, ctx), b = evaluate(*node.rhs, ctx);
            if (a.is_vector && b.is_vector) throw Error(ErrorCode::invalid_input, "product of basis symbols in '" + std::string(ctx.text) + "'");
            if (!a.is_vector && !b.is_vector) return {a.s * b.s, {}, false};
            Value& v = a.is_vector ? a : b;
            const Scalar& c = a.is_vector ? b.s : a.s;
            for (auto& x : v.vec) x *= c;
            return v;
        }
        case K::div: {
            Value a = evaluate(*node.lhs, ctx), b = evaluate(*node.rhs, ctx);
            if (b.is_vector) throw Error(ErrorCode::invalid_input, "division by a basis symbol in '" + std::string(ctx.text) + "'");
            if (b.s.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero in '" + std::string(ctx.text) + "'");
            Scalar inv = b.s.inverse();
            if (!a.is_vector) return {a.s * inv, {}, false};
            for (auto& x : a.vec) x *= inv;
            return a;
        }
    }
    throw Error(ErrorCode::invalid_input, "bad expression node");
}

bool has_kind(const Node& node, bool (*pred)(const Node&)) {
    if (pred(node)) return true;
    return (node.lhs && has_kind(*node.lhs, pred)) || (node.rhs && has_kind(*node.rhs, pred));
}

void collect_params(const Node& node, std::vector<std::string>& out) {
    if (node.kind == Node::Kind::parameter && std::find(out.begin(), out.end(), node.name) == out.end()) {
        out.push_back(node.name);
    }
    if (node.lhs) collect_params(*node.lhs, out);
    if (node.rhs) collect_params(*node.rhs, out);
}

void collect_exclusions(const Node& node, std::string_view text, std::vector<std::uint32_t>& out) {
    if (node.kind == Node::Kind::div) {
        const Node& d = *node.rhs;
        bool constant = !has_kind(d, [](const Node& x) {
            return x.kind == Node::Kind::parameter || x.kind == Node::Kind::basis || x.kind == Node::Kind::form;
        });
        if (constant) {
            Assignment none;
            Context ctx{Field::rationals(), none, 0, false, text};
            mpz_class num = abs(evaluate(d, ctx).s.rational().get_num());
            if (num == 0) throw Error(ErrorCode::division_by_zero, "constant zero divisor in '" + std::string(text) + "'");
            for (mpz_class q = 2; q * q <= num; ++q)
                while (num % q == 0) {
                    out.push_back(static_cast<std::uint32_t>(q.get_ui()));
                    num /= q;
                }
            if (num > 1) out.push_back(static_cast<std::uint32_t>(num.get_ui()));
        }
    }
    if (node.lhs) collect_exclusions(*node.lhs, text, out);
    if (node.rhs) collect_exclusions(*node.rhs, text, out);
}

}  // namespace

Expression Expression::parse(std::string_view text) {
    Expression e;
    e.root_ = Parser(text).parse();
    e.text_ = std::string(text);
    return e;
}

Scalar Expression::scalar(const Field& field, const Assignment& values) const {
    Context ctx{field, values, 0, false, text_};
    return evaluate(*root_, ctx).s;
}

Vector Expression::vector(const Field& field, const Assignment& values, std::size_t n, bool forms) const {
    Context ctx{field, values, n, forms, text_};
    Value v = evaluate(*root_, ctx);
    if (!v.is_vector) {
        if (!v.s.is_zero()) throw Error(ErrorCode::invalid_input, "expected a combination of basis symbols in '" + text_ + "'");
        return zero_vector(field, forms ? n * n : n);
    }
    return v.vec;
}

bool Expression::has_basis_symbols() const {
    return has_kind(*root_, [](const Node& x) { return x.kind == Node::Kind::basis || x.kind == Node::Kind::form; });
}

void Expression::collect_parameters(std::vector<std::string>& out) const { collect_params(*root_, out); }

std::vector<std::uint32_t> Expression::excluded_characteristics() const {
    std::vector<std::uint32_t> out;
    collect_exclusions(*root_, text_, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Inequation Inequation::parse(std::string_view text) {
    Inequation q;
    q.text = std::string(text);
    std::string_view rest = text;
    for (;;) {
        std::size_t split = rest.find(" or ");
        std::string_view part = rest.substr(0, split);
        std::size_t ne = part.find("!=");
        if (ne == std::string_view::npos) {
            throw Error(ErrorCode::parse_error, "requirement '" + std::string(text) + "': expected '!='");
        }
        q.alternatives.emplace_back(Expression::parse(part.substr(0, ne)), Expression::parse(part.substr(ne + 2)));
        if (split == std::string_view::npos) break;
        rest = rest.substr(split + 4);
    }
    return q;
}

bool Inequation::holds(const Field& field, const Assignment& values) const {
    for (const auto& [a, b] : alternatives)
        if (a.scalar(field, values) != b.scalar(field, values)) return true;
    return false;
}

}  // namespace bilpair
