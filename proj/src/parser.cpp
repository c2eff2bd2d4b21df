#include "cyl/parser.hpp"

#include <cctype>

namespace cyl {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Semi, Equal, End };

struct Token {
    Tok type;
    std::string text;
    std::size_t offset;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Number: return "number";
        case Tok::Ident: return "identifier";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Semi: return "';'";
        case Tok::Equal: return "'='";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            // "a/b" fraction or "a.b" decimal, greedily part of the number.
            if (i < text.size() && (text[i] == '/' || text[i] == '.') && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                ++i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            }
            out.push_back({Tok::Number, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), start});
            continue;
        }
        Tok t;
        switch (c) {
            case '+': t = Tok::Plus; break;
            case '-': t = Tok::Minus; break;
            case '*': t = Tok::Star; break;
            case '^': t = Tok::Caret; break;
            case '(': t = Tok::LParen; break;
            case ')': t = Tok::RParen; break;
            case ';': t = Tok::Semi; break;
            case '=': t = Tok::Equal; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({t, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& opts, std::vector<std::string>& warnings)
        : opts_(opts), warnings_(warnings), toks_(lex(text)) {}

    DifferentialOperator run() {
        if (peek().type == Tok::Ident && peek().text == "p") return parse_separable();
        DifferentialOperator op = parse_plain();
        expect(Tok::End);
        return op;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok t) {
        if (peek().type == t) {
            advance();
            return true;
        }
        return false;
    }
    bool accept_ident(std::string_view name) {
        if (peek().type == Tok::Ident && peek().text == name) {
            advance();
            return true;
        }
        return false;
    }
    const Token& expect(Tok t, std::vector<std::string> also = {}) {
        if (peek().type != t) {
            also.insert(also.begin(), tok_name(t));
            fail(also);
        }
        return advance();
    }
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::string msg = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " or " : "") + expected[i];
        msg += ", got " + std::string(tok_name(peek().type));
        if (!peek().text.empty() && peek().type != Tok::End) msg += " '" + peek().text + "'";
        throw ParseError(msg, peek().offset, std::move(expected));
    }
    [[noreturn]] void reject(const std::string& why, std::size_t offset) const {
        throw ParseError(why, offset);
    }

    Rational number(const Token& tok) {
        if (tok.text.find('.') != std::string::npos) {
            if (!opts_.rationalize_tol)
                reject("decimal literal '" + tok.text + "' requires --rationalize=<tol>", tok.offset);
            Rational exact = parse_rational_or_decimal(tok.text);
            Rational snapped = simplest_rational_in(exact - *opts_.rationalize_tol, exact + *opts_.rationalize_tol);
            warnings_.push_back("rationalized " + tok.text + " to " + to_string(snapped));
            return snapped;
        }
        return parse_rational(tok.text);
    }

    // cplx := number ["i"] | "i" | "(" csum ")" ["i"]
    ComplexRational parse_cplx() {
        if (peek().type == Tok::Number) {
            Rational v = number(advance());
            if (accept_ident("i")) return {Rational(0), v};
            return {v};
        }
        if (peek().type == Tok::Ident && peek().text == "i") {
            advance();
            return imaginary_unit();
        }
        if (accept(Tok::LParen)) {
            ComplexRational v = parse_csum();
            expect(Tok::RParen);
            if (accept_ident("i")) v = v * imaginary_unit();
            return v;
        }
        fail({"number", "'i'", "'('"});
    }

    ComplexRational parse_catom() {
        if (peek().type == Tok::Number) {
            Rational v = number(advance());
            if (accept_ident("i")) return {Rational(0), v};
            return {v};
        }
        if (accept_ident("i")) return imaginary_unit();
        fail({"number", "'i'"});
    }

    ComplexRational parse_csum() {
        ComplexRational acc;
        bool neg = accept(Tok::Minus);
        if (!neg) accept(Tok::Plus);
        ComplexRational first = parse_catom();
        acc = neg ? -first : first;
        while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
            bool minus = advance().type == Tok::Minus;
            ComplexRational v = parse_catom();
            acc = minus ? acc - v : acc + v;
        }
        return acc;
    }

    // trig atom "sin(t)" / "cos(t)" if present at the cursor
    std::optional<TrigPolynomial> try_trig_atom() {
        if (peek().type == Tok::Ident && (peek().text == "sin" || peek().text == "cos") &&
            peek(1).type == Tok::LParen) {
            bool is_sin = peek().text == "sin";
            advance();
            expect(Tok::LParen);
            if (!accept_ident("t")) fail({"'t'"});
            expect(Tok::RParen);
            return is_sin ? TrigPolynomial::sine(1, ComplexRational(1)) : TrigPolynomial::cosine(1, ComplexRational(1));
        }
        return std::nullopt;
    }

    // One summand inside a parenthesized group: [cplx ["*"]] trig | cplx
    TrigPolynomial parse_group_atom() {
        if (auto trig = try_trig_atom()) return *trig;
        ComplexRational c = parse_cplx();
        accept(Tok::Star);
        if (auto trig = try_trig_atom()) return c * *trig;
        return TrigPolynomial::constant(c);
    }

    // "(" [sign] atom (("+"|"-") atom)* ")" ["i"]
    TrigPolynomial parse_group() {
        expect(Tok::LParen);
        TrigPolynomial acc;
        bool neg = accept(Tok::Minus);
        if (!neg) accept(Tok::Plus);
        TrigPolynomial first = parse_group_atom();
        acc = neg ? ComplexRational(-1) * first : first;
        while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
            bool minus = advance().type == Tok::Minus;
            TrigPolynomial v = parse_group_atom();
            acc = minus ? acc - v : acc + v;
        }
        expect(Tok::RParen);
        if (accept_ident("i")) acc = imaginary_unit() * acc;
        return acc;
    }

    struct RawTerm {
        TrigPolynomial coeff;
        int factor = 0; // 0 none, 1 Dt, 2 Dx
        int power = 1;
        std::size_t offset = 0;
    };

    std::optional<int> peek_factor() const {
        if (peek().type == Tok::Ident && peek().text == "Dt") return 1;
        if (peek().type == Tok::Ident && peek().text == "Dx") return 2;
        return std::nullopt;
    }

    RawTerm parse_term() {
        RawTerm term;
        term.offset = peek().offset;
        if (auto f = peek_factor()) {
            term.coeff = TrigPolynomial::constant(ComplexRational(1));
            term.factor = *f;
            advance();
        } else {
            if (peek().type == Tok::LParen)
                term.coeff = parse_group();
            else
                term.coeff = TrigPolynomial::constant(parse_cplx());
            accept(Tok::Star);
            if (auto f = peek_factor()) {
                term.factor = *f;
                advance();
            }
        }
        if (term.factor != 0 && accept(Tok::Caret)) {
            const Token& n = expect(Tok::Number);
            Rational p = parse_rational(n.text);
            if (!is_integer(p) || p < 1) reject("factor power must be a positive integer", n.offset);
            term.power = static_cast<int>(numerator(p).convert_to<long>());
        }
        // A second Dt/Dx in the same term is a product the theory does not
        // cover (mixed Dt*Dx), or a power written multiplicatively.
        if (peek_factor() || (peek().type == Tok::Star))
            reject("products of Dt/Dx factors are not supported (no mixed Dt*Dx terms)", peek().offset);
        return term;
    }

    DifferentialOperator parse_plain() {
        std::vector<RawTerm> terms;
        bool neg = accept(Tok::Minus);
        terms.push_back(parse_term());
        if (neg) terms.back().coeff = ComplexRational(-1) * terms.back().coeff;
        while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
            bool minus = advance().type == Tok::Minus;
            terms.push_back(parse_term());
            if (minus) terms.back().coeff = ComplexRational(-1) * terms.back().coeff;
        }
        return normalize(terms);
    }

    DifferentialOperator normalize(const std::vector<RawTerm>& terms) {
        TrigPolynomial c_dt, c_dx, c_const;
        for (const auto& t : terms) {
            if (t.power >= 2)
                reject("powers of Dt/Dx above 1 are only supported in the separable form "
                       "\"p(Dx)=...; q(Dt)=...\"",
                       t.offset);
            if (t.factor == 1)
                c_dt = c_dt + t.coeff;
            else if (t.factor == 2)
                c_dx = c_dx + t.coeff;
            else
                c_const = c_const + t.coeff;
        }
        if (c_dt.is_constant() && c_dx.is_constant() && c_const.is_constant())
            return make_first_order_constant(c_dt.mean(), c_dx.mean(), c_const.mean());
        if (!c_dt.is_constant() || !(c_dt.mean() == ComplexRational(1)))
            reject("variable coefficients require the form Dt + a(t) Dx + q(t) with unit Dt coefficient", 0);
        if (!c_dx.is_real_valued())
            reject("a(t), the Dx coefficient, must be real-valued", 0);
        auto op = make_first_order_variable(c_dx, c_const);
        if (op.a.is_constant() && op.q.is_constant())
            return make_first_order_constant(ComplexRational(1), op.a.mean(), op.q.mean());
        return op;
    }

    // "p(Dx)=" poly ";" "q(Dt)=" poly  (polynomials in the symbol variables)
    DifferentialOperator parse_separable() {
        if (!accept_ident("p")) fail({"'p'"});
        expect(Tok::LParen);
        if (!accept_ident("Dx")) fail({"'Dx'"});
        expect(Tok::RParen);
        expect(Tok::Equal);
        CPoly p = parse_symbol_poly("Dx");
        expect(Tok::Semi);
        if (!accept_ident("q")) fail({"'q'"});
        expect(Tok::LParen);
        if (!accept_ident("Dt")) fail({"'Dt'"});
        expect(Tok::RParen);
        expect(Tok::Equal);
        CPoly q = parse_symbol_poly("Dt");
        expect(Tok::End);
        return make_separable(std::move(p), std::move(q));
    }

    CPoly parse_symbol_poly(std::string_view var) {
        std::vector<ComplexRational> coeffs;
        auto add = [&coeffs](int deg, const ComplexRational& c) {
            if (static_cast<std::size_t>(deg) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(deg) + 1);
            coeffs[static_cast<std::size_t>(deg)] = coeffs[static_cast<std::size_t>(deg)] + c;
        };
        bool first = true;
        while (true) {
            bool minus = false;
            if (!first) {
                if (peek().type == Tok::Plus)
                    advance();
                else if (peek().type == Tok::Minus) {
                    advance();
                    minus = true;
                } else
                    break;
            } else {
                minus = accept(Tok::Minus);
                if (!minus) accept(Tok::Plus);
            }
            first = false;
            ComplexRational c(1);
            bool have_coeff = false;
            if (peek().type != Tok::Ident || peek().text != var) {
                c = parse_cplx();
                have_coeff = true;
                accept(Tok::Star);
            }
            int deg = 0;
            if (peek().type == Tok::Ident && peek().text == var) {
                advance();
                deg = 1;
                if (accept(Tok::Caret)) {
                    const Token& n = expect(Tok::Number);
                    Rational pw = parse_rational(n.text);
                    if (!is_integer(pw) || pw < 1) reject("power must be a positive integer", n.offset);
                    deg = static_cast<int>(numerator(pw).convert_to<long>());
                }
            } else if (!have_coeff) {
                fail({"number", "'i'", "'('", "'" + std::string(var) + "'"});
            }
            add(deg, minus ? -c : c);
        }
        return CPoly(coeffs);
    }

    ParseOptions opts_;
    std::vector<std::string>& warnings_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

DifferentialOperator parse_operator(std::string_view text, const ParseOptions& opts,
                                    std::vector<std::string>& warnings) {
    return Parser(text, opts, warnings).run();
}

DifferentialOperator parse_operator(std::string_view text) {
    std::vector<std::string> warnings;
    return parse_operator(text, ParseOptions{}, warnings);
}

} // namespace cyl
