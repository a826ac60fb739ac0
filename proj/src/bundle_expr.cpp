#include "bbwlab/bundle_expr.hpp"

#include <cctype>

namespace bbwlab {

BundleExpr BundleExpr::line(int t) {
    BundleExpr e;
    e.op = Op::Line;
    e.arg = t;
    return e;
}

BundleExpr BundleExpr::gen(Op which) {
    BundleExpr e;
    e.op = which;
    return e;
}

BundleExpr BundleExpr::wedge(int k, BundleExpr inner) {
    BundleExpr e;
    e.op = Op::Wedge;
    e.arg = k;
    e.kids.push_back(std::move(inner));
    return e;
}

BundleExpr BundleExpr::sym(int k, BundleExpr inner) {
    BundleExpr e;
    e.op = Op::Sym;
    e.arg = k;
    e.kids.push_back(std::move(inner));
    return e;
}

BundleExpr BundleExpr::dual(BundleExpr inner) {
    BundleExpr e;
    e.op = Op::Dual;
    e.kids.push_back(std::move(inner));
    return e;
}

BundleExpr BundleExpr::tensor(BundleExpr a, BundleExpr b) {
    BundleExpr e;
    e.op = Op::Tensor;
    e.kids.push_back(std::move(a));
    e.kids.push_back(std::move(b));
    return e;
}

std::string BundleExpr::str() const {
    switch (op) {
        case Op::U: return "U";
        case Op::Ud: return "Ud";
        case Op::Q: return "Q";
        case Op::Qd: return "Qd";
        case Op::Line: return arg == 0 ? "O" : "O(" + std::to_string(arg) + ")";
        case Op::Dual: return "dual(" + kids[0].str() + ")";
        case Op::Wedge: return "wedge^" + std::to_string(arg) + "(" + kids[0].str() + ")";
        case Op::Sym: return "sym^" + std::to_string(arg) + "(" + kids[0].str() + ")";
        case Op::Schur: {
            std::string w;
            for (std::size_t i = 0; i < weight.size(); ++i) {
                if (i) w += ",";
                w += std::to_string(weight[i]);
            }
            return "schur[" + w + "](" + kids[0].str() + ")";
        }
        case Op::Tensor: {
            std::string out;
            for (std::size_t i = 0; i < kids.size(); ++i) {
                if (i) out += "*";
                const bool paren = kids[i].op == Op::Sum;
                out += paren ? "(" + kids[i].str() + ")" : kids[i].str();
            }
            return out;
        }
        case Op::Sum: {
            std::string out;
            for (std::size_t i = 0; i < kids.size(); ++i) {
                if (i) out += "+";
                out += kids[i].str();
            }
            return out;
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError("parse error at position " + std::to_string(pos) + ": expected " +
                             expected,
                         pos);
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("'") + c + "'");
    }

    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) {
            pos = start;
            fail("integer");
        }
        return std::stoi(text.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("identifier ('U', 'Ud', 'Q', 'Qd', 'O', 'dual', 'wedge', 'sym', 'schur')");
        return text.substr(start, pos - start);
    }

    BundleExpr expr() {
        BundleExpr first = term();
        if (!peek('+')) return first;
        BundleExpr out;
        out.op = BundleExpr::Op::Sum;
        out.kids.push_back(std::move(first));
        while (eat('+')) out.kids.push_back(term());
        return out;
    }

    BundleExpr term() {
        BundleExpr first = factor();
        if (!peek('*')) return first;
        BundleExpr out;
        out.op = BundleExpr::Op::Tensor;
        out.kids.push_back(std::move(first));
        while (eat('*')) out.kids.push_back(factor());
        return out;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    BundleExpr factor() {
        skip_ws();
        if (eat('(')) {
            BundleExpr inner = expr();
            expect(')');
            return inner;
        }
        const std::size_t at = pos;
        std::string name = ident();
        if (name == "U") return BundleExpr::gen(BundleExpr::Op::U);
        if (name == "Ud") return BundleExpr::gen(BundleExpr::Op::Ud);
        if (name == "Q") return BundleExpr::gen(BundleExpr::Op::Q);
        if (name == "Qd") return BundleExpr::gen(BundleExpr::Op::Qd);
        if (name == "O") {
            int t = 0;
            if (eat('(')) {
                t = integer();
                expect(')');
            }
            return BundleExpr::line(t);
        }
        if (name == "dual") {
            expect('(');
            BundleExpr inner = expr();
            expect(')');
            return BundleExpr::dual(std::move(inner));
        }
        if (name == "wedge" || name == "sym") {
            expect('^');
            int k = integer();
            if (k < 0) fail("nonnegative exponent");
            expect('(');
            BundleExpr inner = expr();
            expect(')');
            return name == "wedge" ? BundleExpr::wedge(k, std::move(inner))
                                   : BundleExpr::sym(k, std::move(inner));
        }
        if (name == "schur") {
            expect('[');
            std::vector<int> w;
            w.push_back(integer());
            while (eat(',')) w.push_back(integer());
            expect(']');
            expect('(');
            BundleExpr inner = expr();
            expect(')');
            BundleExpr out;
            out.op = BundleExpr::Op::Schur;
            out.weight = std::move(w);
            out.kids.push_back(std::move(inner));
            return out;
        }
        pos = at;
        fail("generator or operator");
    }
};

}  // namespace

BundleExpr BundleExpr::parse(const std::string& text) {
    Parser p{text};
    BundleExpr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("end of input");
    return e;
}

// ---------------------------------------------------------------------------
// Normalization

PairDecomposition PairDecomposition::unit(int sub_rank, int quot_rank) {
    PairDecomposition d(sub_rank, quot_rank);
    d.add(Weight::zero(sub_rank), Weight::zero(quot_rank));
    return d;
}

void PairDecomposition::add(const Weight& u, const Weight& q, std::int64_t mult) {
    if (u.length() != sub_rank_ || q.length() != quot_rank_)
        throw std::invalid_argument("PairDecomposition::add: rank mismatch");
    terms_[{u, q}] += mult;
}

PairDecomposition PairDecomposition::dualized() const {
    PairDecomposition out(sub_rank_, quot_rank_);
    for (const auto& [key, m] : terms_) out.add(dual_negate(key.first), dual_negate(key.second), m);
    return out;
}

PairDecomposition PairDecomposition::twisted(int t) const {
    // O(1) = det U* on the U side.
    PairDecomposition out(sub_rank_, quot_rank_);
    for (const auto& [key, m] : terms_) out.add(det_shift(key.first, -t), key.second, m);
    return out;
}

PairDecomposition PairDecomposition::tensor(const PairDecomposition& other) const {
    if (sub_rank_ != other.sub_rank_ || quot_rank_ != other.quot_rank_)
        throw std::invalid_argument("PairDecomposition::tensor: rank mismatch");
    PairDecomposition out(sub_rank_, quot_rank_);
    for (const auto& [a, ma] : terms_)
        for (const auto& [b, mb] : other.terms_) {
            WeightMultiset us = tensor_product(a.first, b.first);
            WeightMultiset qs = tensor_product(a.second, b.second);
            for (const auto& [u, mu] : us.items())
                for (const auto& [q, mq] : qs.items()) out.add(u, q, ma * mb * mu * mq);
        }
    return out;
}

PairDecomposition PairDecomposition::plus(const PairDecomposition& other) const {
    if (sub_rank_ != other.sub_rank_ || quot_rank_ != other.quot_rank_)
        throw std::invalid_argument("PairDecomposition::plus: rank mismatch");
    PairDecomposition out = *this;
    for (const auto& [key, m] : other.terms_) out.terms_[key] += m;
    return out;
}

std::string PairDecomposition::str() const {
    std::string out;
    for (const auto& [key, m] : terms_) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m) + "*";
        out += "S" + key.first.str() + "U";
        if (!key.second.is_zero()) out += " S" + key.second.str() + "Q*";
    }
    return out.empty() ? "0" : out;
}

namespace {

// Schur functor of a single generator, as a pair.
PairDecomposition schur_of_generator(BundleExpr::Op gen, const Weight& w,
                                     const GrassmannianSpec& spec) {
    const int k = spec.k;
    const int q = spec.quotient_rank();
    PairDecomposition out(k, q);
    switch (gen) {
        case BundleExpr::Op::U:
            if (w.length() != k) throw std::invalid_argument("schur weight length != rank of U");
            out.add(w, Weight::zero(q));
            break;
        case BundleExpr::Op::Ud:
            if (w.length() != k) throw std::invalid_argument("schur weight length != rank of U");
            out.add(dual_negate(w), Weight::zero(q));
            break;
        case BundleExpr::Op::Q:
            if (w.length() != q) throw std::invalid_argument("schur weight length != rank of Q");
            out.add(Weight::zero(k), dual_negate(w));
            break;
        case BundleExpr::Op::Qd:
            if (w.length() != q) throw std::invalid_argument("schur weight length != rank of Q");
            out.add(Weight::zero(k), w);
            break;
        default:
            throw std::invalid_argument("schur[...] applies to a generator (U, Ud, Q, Qd)");
    }
    return out;
}

bool is_generator(const BundleExpr& e) {
    return e.op == BundleExpr::Op::U || e.op == BundleExpr::Op::Ud ||
           e.op == BundleExpr::Op::Q || e.op == BundleExpr::Op::Qd;
}

int generator_rank(const BundleExpr& e, const GrassmannianSpec& spec) {
    return (e.op == BundleExpr::Op::U || e.op == BundleExpr::Op::Ud) ? spec.k
                                                                     : spec.quotient_rank();
}

Weight column_weight(int k, int rank) {  // (1^k, 0^(rank-k))
    std::vector<int> e(static_cast<std::size_t>(rank), 0);
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = 1;
    return Weight(std::move(e));
}

Weight row_weight(int k, int rank) {  // (k, 0^(rank-1))
    std::vector<int> e(static_cast<std::size_t>(rank), 0);
    if (rank > 0) e[0] = k;
    return Weight(std::move(e));
}

}  // namespace

PairDecomposition normalize(const BundleExpr& e, const GrassmannianSpec& spec) {
    const int k = spec.k;
    const int q = spec.quotient_rank();
    using Op = BundleExpr::Op;
    switch (e.op) {
        case Op::U: return schur_of_generator(Op::U, row_weight(1, k), spec);
        case Op::Ud: return schur_of_generator(Op::Ud, row_weight(1, k), spec);
        case Op::Q: return schur_of_generator(Op::Q, row_weight(1, q), spec);
        case Op::Qd: return schur_of_generator(Op::Qd, row_weight(1, q), spec);
        case Op::Line: return PairDecomposition::unit(k, q).twisted(e.arg);
        case Op::Schur: return schur_of_generator(e.kids[0].op, Weight(e.weight), spec);
        case Op::Dual: return normalize(e.kids[0], spec).dualized();
        case Op::Sum: {
            PairDecomposition out(k, q);
            for (const auto& kid : e.kids) out = out.plus(normalize(kid, spec));
            return out;
        }
        case Op::Tensor: {
            PairDecomposition out = PairDecomposition::unit(k, q);
            for (const auto& kid : e.kids) out = out.tensor(normalize(kid, spec));
            return out;
        }
        case Op::Wedge:
        case Op::Sym: {
            const bool wedge = e.op == Op::Wedge;
            const BundleExpr& inner = e.kids[0];
            if (e.arg == 0) return PairDecomposition::unit(k, q);
            if (e.arg == 1) return normalize(inner, spec);
            if (is_generator(inner)) {
                const int rank = generator_rank(inner, spec);
                if (wedge && e.arg > rank) return PairDecomposition(k, q);  // vanishes
                const Weight w = wedge ? column_weight(e.arg, rank) : row_weight(e.arg, rank);
                return schur_of_generator(inner.op, w, spec);
            }
            if (inner.op == Op::Line) {
                if (!wedge) return PairDecomposition::unit(k, q).twisted(e.arg * inner.arg);
                return PairDecomposition(k, q);  // Lambda^k of a line bundle, k >= 2
            }
            // Lambda^s(Lambda^2 gen): almost symmetric diagrams with 2s boxes.
            if (wedge && inner.op == Op::Wedge && inner.arg == 2 && is_generator(inner.kids[0])) {
                const BundleExpr& g = inner.kids[0];
                const int rank = generator_rank(g, spec);
                PairDecomposition out(k, q);
                const WeightMultiset table = wedge_of_wedge_square(e.arg, rank);
                for (const auto& [w, m] : table.items()) {
                    PairDecomposition piece = schur_of_generator(g.op, w, spec);
                    out = out.plus(piece);
                    (void)m;  // multiplicities in L_s are all 1
                }
                return out;
            }
            throw std::invalid_argument(
                "normalize: plethysm not supported (wedge/sym of a composite expression)");
        }
    }
    throw std::logic_error("normalize: unhandled node");
}

}  // namespace bbwlab
