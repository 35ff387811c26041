#include "rigidwitt/syntax.hpp"

#include <cctype>

#include "rigidwitt/errors.hpp"

namespace rigidwitt {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool peek_is(std::string_view s) {
        skip_space();
        return text_.substr(pos_, s.size()) == s;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    int number() {
        skip_space();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000) fail_at("number too large", start);
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return static_cast<int>(value);
    }
    /// Next tokens are '*' followed by a factor (not a form).
    bool continues_product() {
        if (peek() != '*') return false;
        std::size_t p = pos_ + 1;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        return p < text_.size() && (text_[p] == 't' || text_[p] == 'u');
    }
    std::size_t pos() const noexcept { return pos_; }
    [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) { throw ParseError(msg, at); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

void finish(Cursor& cur) {
    if (!cur.at_end()) cur.fail("unexpected trailing input");
}

ClassBits read_class(Cursor& cur, const FieldDesc& field) {
    ClassBits bits = 0;
    if (cur.accept('-')) bits ^= negate_bits(field, 0);
    bool first = true;
    for (;;) {
        const std::size_t at = (cur.skip_space(), cur.pos());
        const char c = cur.peek();
        if (c == '1' && first) {
            cur.expect('1');
        } else if (c == 'u') {
            cur.expect('u');
            if (field.base != Base::SquareMinusOne) cur.fail_at("unit 'u' exists only over F9", at);
            bits ^= 1u;
        } else if (c == 't') {
            cur.expect('t');
            const int k = cur.number();
            if (k < 1 || k > field.nvars) cur.fail_at("unknown variable t" + std::to_string(k), at);
            bits ^= ClassBits{1} << k;
        } else {
            cur.fail("expected '1', 'u' or a variable t<k>");
        }
        first = false;
        if (!cur.continues_product()) break;
        cur.expect('*');
    }
    return bits;
}

std::vector<SquareClass> read_class_list(Cursor& cur, const FieldDesc& field, char close) {
    std::vector<SquareClass> out;
    if (cur.peek() == close) return out;
    do {
        out.emplace_back(field, read_class(cur, field));
    } while (cur.accept(','));
    return out;
}

PfisterSpec read_pfister_tail(Cursor& cur, const FieldDesc& field, SquareClass scalar) {
    cur.expect('<');
    cur.expect('<');
    PfisterSpec spec{scalar, read_class_list(cur, field, '>')};
    if (spec.slots.empty()) cur.fail("Pfister form needs at least one slot");
    cur.expect('>');
    cur.expect('>');
    return spec;
}

DiagonalForm read_piece(Cursor& cur, const FieldDesc& field) {
    if (cur.peek_is("<<")) return pfister(read_pfister_tail(cur, field, SquareClass::one(field)));
    if (cur.peek() == '<') {
        cur.expect('<');
        DiagonalForm phi(field, read_class_list(cur, field, '>'));
        cur.expect('>');
        return phi;
    }
    const SquareClass scalar(field, read_class(cur, field));
    cur.expect('*');
    if (cur.peek_is("<<")) return pfister(read_pfister_tail(cur, field, scalar));
    return scale(scalar, read_piece(cur, field));
}

}  // namespace

FieldDesc parse_field(std::string_view text) {
    Cursor cur(text);
    FieldDesc field;
    if (cur.accept('F')) {
        if (cur.accept('3')) {
            field.base = Base::F3;
        } else if (cur.accept('9')) {
            field.base = Base::SquareMinusOne;
        } else {
            cur.fail("expected F3 or F9");
        }
    } else if (cur.accept('R')) {
        field.base = Base::R;
    } else if (cur.accept('C')) {
        field.base = Base::C;
    } else {
        cur.fail("expected base F3, R, C or F9");
    }
    cur.expect('[');
    if (cur.peek() != ']') {
        do {
            const std::size_t at = (cur.skip_space(), cur.pos());
            cur.expect('t');
            const int k = cur.number();
            if (k != field.nvars + 1) cur.fail_at("variables must be t1..tn in order", at);
            if (k > max_vars) cur.fail_at("too many variables", at);
            field.nvars = k;
        } while (cur.accept(','));
    }
    cur.expect(']');
    finish(cur);
    return field;
}

SquareClass parse_class(std::string_view text, const FieldDesc& field) {
    Cursor cur(text);
    const SquareClass a(field, read_class(cur, field));
    finish(cur);
    return a;
}

DiagonalForm parse_form(std::string_view text, const FieldDesc& field) {
    Cursor cur(text);
    DiagonalForm phi = read_piece(cur, field);
    while (cur.accept('+')) phi = orth_sum(phi, read_piece(cur, field));
    finish(cur);
    return phi;
}

PfisterSpec parse_pfister(std::string_view text, const FieldDesc& field) {
    Cursor cur(text);
    SquareClass scalar = SquareClass::one(field);
    if (!cur.peek_is("<<")) {
        scalar = SquareClass(field, read_class(cur, field));
        cur.expect('*');
    }
    PfisterSpec spec = read_pfister_tail(cur, field, scalar);
    finish(cur);
    return spec;
}

std::string to_string(const SquareClass& a) {
    const FieldDesc& field = a.field();
    std::string out;
    const bool unit = a.unit_bit();
    if (unit && field.base != Base::SquareMinusOne) out += "-";
    std::string body;
    if (unit && field.base == Base::SquareMinusOne) body = "u";
    for (int i = 1; i <= field.nvars; ++i) {
        if (!a.exponent(i)) continue;
        if (!body.empty()) body += "*";
        body += "t" + std::to_string(i);
    }
    return out + (body.empty() ? "1" : body);
}

std::string to_string(const DiagonalForm& phi) {
    std::string out = "<";
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        if (i) out += ",";
        out += to_string(phi.entry(i));
    }
    return out + ">";
}

std::string to_string(const PfisterSpec& spec) {
    std::string out = spec.scalar.is_one() ? "" : to_string(spec.scalar) + "*";
    out += "<<";
    for (std::size_t i = 0; i < spec.slots.size(); ++i) {
        if (i) out += ",";
        out += to_string(spec.slots[i]);
    }
    return out + ">>";
}

}  // namespace rigidwitt
