#include "qhopf/textio.hpp"

#include <cctype>
#include <sstream>

namespace qhopf {

namespace {

char family_letter(Family f) {
    switch (f) {
        case Family::Lambda: return 'L';
        case Family::Y: return 'Y';
        case Family::T: return 't';
    }
    return '?';
}

std::string int_str(const Int& c) { return c.str(); }

void append_signed(std::ostringstream& os, bool first, const Int& c, const std::string& body) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (body.empty()) {
        os << int_str(a);
    } else if (a == 1) {
        os << body;
    } else {
        os << int_str(a) << "*" << body;
    }
}

}  // namespace

std::string print_monomial(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m.factors) {
        if (!first) os << "*";
        first = false;
        os << family_letter(v.family) << "[" << v.row << "," << v.spectral << "]";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::string print_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        append_signed(os, first, c, m.is_one() ? "" : print_monomial(m));
        first = false;
    }
    return os.str();
}

std::string print_tensor(const TensorPoly& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : t.terms()) {
        std::string body = print_monomial(key.first) + " # " + print_monomial(key.second);
        append_signed(os, first, c, body);
        first = false;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected integer", start);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }
};

struct PolyParser {
    Cursor cur;
    int modulus;

    LaurentPoly expr() {
        LaurentPoly acc = term(true);
        while (true) {
            char c = cur.peek();
            if (c == '+') {
                cur.accept('+');
                acc += term(false);
            } else if (c == '-') {
                cur.accept('-');
                acc -= term(false);
            } else {
                return acc;
            }
        }
    }

    LaurentPoly term(bool allow_sign) {
        bool neg = false;
        if (allow_sign) {
            if (cur.peek() == '-') {
                cur.accept('-');
                neg = true;
            } else if (cur.peek() == '+') {
                cur.accept('+');
            }
        }
        LaurentPoly acc = factor();
        while (cur.peek() == '*') {
            cur.accept('*');
            acc = acc * factor();
        }
        return neg ? -acc : acc;
    }

    LaurentPoly factor() {
        LaurentPoly base = atom();
        if (cur.peek() == '^') {
            cur.accept('^');
            long e;
            if (cur.peek() == '(') {
                cur.expect('(');
                e = cur.integer();
                cur.expect(')');
            } else {
                e = cur.integer();
            }
            std::size_t at = cur.pos;
            try {
                return base.pow(static_cast<int>(e));
            } catch (const DomainError& err) {
                throw ParseError(err.what(), at);
            }
        }
        return base;
    }

    LaurentPoly atom() {
        char c = cur.peek();
        if (c == '(') {
            cur.expect('(');
            LaurentPoly inner = expr();
            cur.expect(')');
            return inner;
        }
        if (c == 't' || c == 'L' || c == 'Y') {
            Family f = c == 't' ? Family::T : (c == 'L' ? Family::Lambda : Family::Y);
            ++cur.pos;
            cur.expect('[');
            long row = cur.integer();
            cur.expect(',');
            long sp = cur.integer();
            cur.expect(']');
            if (row < 1) throw ParseError("row must be >= 1", cur.pos);
            return LaurentPoly::variable(f, static_cast<int>(row), static_cast<int>(sp), modulus);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
            return LaurentPoly::constant(cur.integer(), modulus);
        throw ParseError("expected variable, number or '('", cur.pos);
    }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, int modulus) {
    PolyParser p{Cursor{text}, modulus};
    LaurentPoly out = p.expr();
    if (!p.cur.eof()) throw ParseError("trailing input", p.cur.pos);
    return out;
}

TensorPoly parse_tensor(const std::string& text, int modulus) {
    // parse "c*monoA # monoB +/- ..." by splitting top-level on +/-, then '#'
    TensorPoly out(modulus);
    Cursor cur{text};
    if (cur.peek() == '0') {
        cur.accept('0');
        if (cur.eof()) return out;
        throw ParseError("trailing input", cur.pos);
    }
    bool first = true;
    while (!cur.eof()) {
        Int sign = 1;
        if (cur.peek() == '-') {
            cur.accept('-');
            sign = -1;
        } else if (cur.peek() == '+') {
            if (first) throw ParseError("unexpected '+'", cur.pos);
            cur.accept('+');
        } else if (!first) {
            throw ParseError("expected '+' or '-'", cur.pos);
        }
        first = false;
        std::size_t start = cur.pos;
        std::size_t hash = text.find('#', start);
        if (hash == std::string::npos) throw ParseError("expected '#'", cur.pos);
        std::size_t stop = hash + 1;
        int depth = 0;
        char prev = '\0';
        while (stop < text.size()) {
            char c = text[stop];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
            if (depth == 0 && (c == '+' || c == '-') && prev != '^') break;
            if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
            ++stop;
        }
        LaurentPoly a = parse_poly(text.substr(start, hash - start), modulus);
        LaurentPoly b = parse_poly(text.substr(hash + 1, stop - hash - 1), modulus);
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) out.add_term(ma, mb, sign * ca * cb);
        cur.pos = stop;
    }
    return out;
}

std::string print_aset(const ASet& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const Snake& sn : s.snakes) {
        if (!first) os << ",";
        first = false;
        os << "(" << sn.tail << ":" << sn.len << ")";
    }
    os << "}";
    return os.str();
}

std::string print_hall(const HallElement& h) {
    if (h.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : h.terms) {
        append_signed(os, first, c, print_aset(s));
        first = false;
    }
    return os.str();
}

namespace {

ASet parse_aset_at(Cursor& cur, int quiver_l) {
    cur.expect('{');
    std::vector<Snake> snakes;
    if (!cur.accept('}')) {
        while (true) {
            cur.expect('(');
            long tail = cur.integer();
            cur.expect(':');
            long len = cur.integer();
            cur.expect(')');
            if (len < 0) throw ParseError("negative snake length", cur.pos);
            snakes.push_back({static_cast<int>(tail), static_cast<int>(len)});
            if (cur.accept('}')) break;
            cur.expect(',');
        }
    }
    return ASet::make(std::move(snakes), quiver_l);
}

}  // namespace

ASet parse_aset(const std::string& text, int quiver_l) {
    Cursor cur{text};
    ASet s = parse_aset_at(cur, quiver_l);
    if (!cur.eof()) throw ParseError("trailing input", cur.pos);
    return s;
}

HallElement parse_hall(const std::string& text, int quiver_l) {
    HallElement out = HallElement::zero(quiver_l);
    Cursor cur{text};
    if (cur.peek() == '0') {
        cur.accept('0');
        if (cur.eof()) return out;
        throw ParseError("trailing input", cur.pos);
    }
    bool first = true;
    while (!cur.eof()) {
        Int sign = 1;
        if (cur.peek() == '-') {
            cur.accept('-');
            sign = -1;
        } else if (cur.peek() == '+') {
            if (first) throw ParseError("unexpected '+'", cur.pos);
            cur.accept('+');
        } else if (!first) {
            throw ParseError("expected '+' or '-'", cur.pos);
        }
        first = false;
        Int coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.integer();
            cur.expect('*');
        }
        out.add_term(parse_aset_at(cur, quiver_l), sign * coeff);
    }
    return out;
}

std::string print_partition(const Partition& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << "]";
    return os.str();
}

Partition parse_partition(const std::string& text) {
    Cursor cur{text};
    cur.expect('[');
    Partition p;
    if (!cur.accept(']')) {
        while (true) {
            p.push_back(static_cast<int>(cur.integer()));
            if (cur.accept(']')) break;
            cur.expect(',');
        }
    }
    if (!cur.eof()) throw ParseError("trailing input", cur.pos);
    if (!is_partition(p)) throw ParseError("not weakly decreasing", 0);
    return p;
}

namespace {

std::string print_boxmap(const std::map<std::pair<int, int>, int>& boxes) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [box, mult] : boxes) {
        if (!first) os << " ";
        first = false;
        os << "(" << box.first << "," << box.second << "," << mult << ")";
    }
    return first ? "()" : os.str();
}

}  // namespace

std::string print_sdiagram(const SDiagram& d) { return print_boxmap(d.boxes); }
std::string print_folded(const FoldedDiagram& d) { return print_boxmap(d.boxes); }

std::string print_fock(const FockVector& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : v.terms) {
        std::ostringstream body;
        body << "|";
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) body << ";";
            body << print_partition(key[i]);
        }
        body << ">";
        Rat a = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a == 1)
            os << body.str();
        else
            os << a << "*" << body.str();
        first = false;
    }
    return os.str();
}

FockVector parse_fock(const std::string& text) {
    FockVector out;
    Cursor cur{text};
    if (cur.peek() == '0') {
        cur.accept('0');
        if (cur.eof()) return out;
        throw ParseError("trailing input", cur.pos);
    }
    bool first = true;
    while (!cur.eof()) {
        Rat sign = 1;
        if (cur.peek() == '-') {
            cur.accept('-');
            sign = -1;
        } else if (cur.peek() == '+') {
            if (first) throw ParseError("unexpected '+'", cur.pos);
            cur.accept('+');
        } else if (!first) {
            throw ParseError("expected '+' or '-'", cur.pos);
        }
        first = false;
        Rat coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            long num = cur.integer();
            long den = 1;
            if (cur.accept('/')) den = cur.integer();
            coeff = Rat(num, den);
            cur.expect('*');
        }
        cur.expect('|');
        FockKey key;
        while (true) {
            std::size_t start = cur.pos;
            cur.skip_ws();
            std::size_t close = text.find(']', cur.pos);
            if (close == std::string::npos) throw ParseError("expected ']'", start);
            key.push_back(parse_partition(text.substr(cur.pos, close - cur.pos + 1)));
            cur.pos = close + 1;
            if (cur.accept('>')) break;
            cur.expect(';');
        }
        out.add_term(key, sign * coeff);
    }
    return out;
}

std::string print_series(const Series& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.c.size(); ++i) {
        if (i) os << ",";
        os << s.c[i].str();
    }
    return os.str();
}

}  // namespace qhopf
