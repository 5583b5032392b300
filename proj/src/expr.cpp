#include "borsuk/expr.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace borsuk {

namespace {

enum class TokenKind { Word, Number, LParen, RParen, Comma, Semi, Plus, Star, Caret, Slash, End };

struct Token {
    TokenKind kind;
    std::string text;  // word name or digits
    std::size_t pos;
};

const char* const kWords[] = {"pt", "RP", "Sg", "Ng", "ZC", "S", "P", "M", "K", "L",
                              "Z",  "F",  "v",  "x"};

[[noreturn]] void fail(const std::string& got, std::size_t pos,
                       std::vector<std::string> expected) {
    std::ostringstream msg;
    msg << "parse error at offset " << pos << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg << (i + 1 == expected.size() ? " or " : ", ");
        msg << expected[i];
    }
    msg << ", got " << got;
    throw ParseError(msg.str(), pos, std::move(expected));
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            tokens.push_back({TokenKind::Number, text.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            // Greedy longest-keyword split, so "S2xS3" lexes like "S2 x S3".
            std::size_t end = i;
            while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) ++end;
            while (i < end) {
                std::string_view rest(text.data() + i, end - i);
                const char* best = nullptr;
                std::size_t best_len = 0;
                for (const char* w : kWords) {
                    std::string_view word(w);
                    if (word.size() > best_len && rest.substr(0, word.size()) == word) {
                        best = w;
                        best_len = word.size();
                    }
                }
                if (!best) {
                    fail("'" + std::string(rest) + "'", i, {"a space or group name"});
                }
                tokens.push_back({TokenKind::Word, best, i});
                i += best_len;
            }
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case ',': kind = TokenKind::Comma; break;
            case ';': kind = TokenKind::Semi; break;
            case '+': kind = TokenKind::Plus; break;
            case '*': kind = TokenKind::Star; break;
            case '^': kind = TokenKind::Caret; break;
            case '/': kind = TokenKind::Slash; break;
            default:
                fail("'" + std::string(1, c) + "'", i, {"a space expression token"});
        }
        tokens.push_back({kind, std::string(1, c), i});
        ++i;
    }
    tokens.push_back({TokenKind::End, "", text.size()});
    return tokens;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    SpaceDescriptor parse() {
        SpaceDescriptor d = parse_wedge();
        expect(TokenKind::End, "end of input");
        return d;
    }

private:
    std::vector<Token> tokens_;
    std::size_t at_ = 0;

    const Token& peek() const { return tokens_[at_]; }

    bool accept_word(const std::string& w) {
        if (peek().kind == TokenKind::Word && peek().text == w) {
            ++at_;
            return true;
        }
        return false;
    }

    bool accept(TokenKind k) {
        if (peek().kind == k) {
            ++at_;
            return true;
        }
        return false;
    }

    Token expect(TokenKind k, const std::string& what) {
        if (peek().kind != k) fail(describe(peek()), peek().pos, {what});
        return tokens_[at_++];
    }

    static std::string describe(const Token& t) {
        if (t.kind == TokenKind::End) return "end of input";
        return "'" + t.text + "'";
    }

    long long number(long long min, long long max, const std::string& what) {
        Token t = expect(TokenKind::Number, "number (" + what + ")");
        long long value = 0;
        for (char c : t.text) {
            value = value * 10 + (c - '0');
            if (value > max) {
                throw InvalidDescriptor(what + " out of range: " + t.text);
            }
        }
        if (value < min) throw InvalidDescriptor(what + " out of range: " + t.text);
        return value;
    }

    // Group literal: terms joined by '+'.
    AbelianGroup group() {
        AbelianGroup result;
        while (true) {
            if (peek().kind == TokenKind::Number && peek().text == "0") {
                ++at_;
            } else if (accept_word("Z")) {
                if (accept(TokenKind::Caret)) {
                    result = direct_sum(result,
                                        AbelianGroup::free(number(0, 1'000'000, "free rank")));
                } else if (accept(TokenKind::Slash)) {
                    result = direct_sum(
                        result,
                        AbelianGroup::cyclic(number(1, 1'000'000'000'000'000'000LL,
                                                    "cyclic order")));
                } else {
                    result = direct_sum(result, AbelianGroup::free(1));
                }
            } else {
                fail(describe(peek()), peek().pos, {"'Z'", "'0'"});
            }
            if (!accept(TokenKind::Plus)) break;
        }
        return result;
    }

    SpaceDescriptor parse_wedge() {
        std::vector<SpaceDescriptor> parts{parse_product()};
        while (accept_word("v")) parts.push_back(parse_product());
        if (parts.size() == 1) return parts[0];
        // Only spheres (and point summands) wedge within this grammar.
        std::map<int, long long> counts;
        for (const SpaceDescriptor& part : parts) {
            if (std::holds_alternative<Point>(part)) continue;
            if (const auto* s = std::get_if<Sphere>(&part)) {
                counts[s->n] += 1;
            } else if (const auto* w = std::get_if<WedgeOfSpheres>(&part)) {
                for (const auto& [dim, count] : w->counts) counts[dim] += count;
            } else {
                throw InvalidDescriptor("wedge sums support spheres only");
            }
        }
        return counts.empty() ? SpaceDescriptor{Point{}}
                              : SpaceDescriptor{WedgeOfSpheres(std::move(counts))};
    }

    SpaceDescriptor parse_product() {
        std::vector<SpaceDescriptor> factors{parse_repeat()};
        while (accept_word("x")) factors.push_back(parse_repeat());
        if (factors.size() == 1) return factors[0];
        if (factors.size() != 2) {
            throw InvalidDescriptor("products are classified for exactly two spheres");
        }
        const auto* a = std::get_if<Sphere>(&factors[0]);
        const auto* b = std::get_if<Sphere>(&factors[1]);
        if (!a || !b) throw InvalidDescriptor("products are classified for spheres only");
        return ProductOfSpheres(a->n, b->n);
    }

    SpaceDescriptor parse_repeat() {
        SpaceDescriptor a = parse_atom();
        while (accept(TokenKind::Star)) {
            long long k = number(1, 1'000'000, "repetition count");
            if (std::holds_alternative<Point>(a)) continue;
            std::map<int, long long> counts;
            if (const auto* s = std::get_if<Sphere>(&a)) {
                counts[s->n] = k;
            } else if (const auto* w = std::get_if<WedgeOfSpheres>(&a)) {
                for (const auto& [dim, count] : w->counts) counts[dim] = count * k;
            } else {
                throw InvalidDescriptor("repetition applies to spheres and wedges only");
            }
            a = WedgeOfSpheres(std::move(counts));
        }
        return a;
    }

    SpaceDescriptor parse_atom() {
        if (accept(TokenKind::LParen)) {
            SpaceDescriptor inner = parse_wedge();
            expect(TokenKind::RParen, "')'");
            return inner;
        }
        if (accept_word("pt")) return Point{};
        if (accept_word("S"))
            return Sphere(static_cast<int>(number(1, 1'000'000, "sphere dimension")));
        if (accept_word("RP"))
            return RealProjective(
                static_cast<int>(number(1, 1'000'000, "projective dimension")));
        if (accept_word("M")) {
            expect(TokenKind::LParen, "'('");
            AbelianGroup a = group();
            expect(TokenKind::Comma, "','");
            int n = static_cast<int>(number(2, 1'000'000, "Moore degree"));
            expect(TokenKind::RParen, "')'");
            return MooreSpace(std::move(a), n);
        }
        if (accept_word("K")) {
            expect(TokenKind::LParen, "'('");
            AbelianGroup a = group();
            expect(TokenKind::Comma, "','");
            int n = static_cast<int>(number(1, 1'000'000, "Eilenberg-MacLane degree"));
            expect(TokenKind::RParen, "')'");
            return EilenbergMacLane(std::move(a), n);
        }
        if (accept_word("L")) {
            expect(TokenKind::LParen, "'('");
            long long p = number(1, 1'000'000'000'000LL, "lens order p");
            expect(TokenKind::Comma, "','");
            long long q = number(0, 1'000'000'000'000LL, "lens rotation q");
            expect(TokenKind::RParen, "')'");
            return LensSpace(p, q);
        }
        if (accept_word("Sg")) {
            expect(TokenKind::LParen, "'('");
            long long g = number(0, 1'000'000, "genus");
            expect(TokenKind::RParen, "')'");
            return Surface(true, g);
        }
        if (accept_word("Ng")) {
            expect(TokenKind::LParen, "'('");
            long long g = number(0, 1'000'000, "genus");
            expect(TokenKind::RParen, "')'");
            return Surface(false, g);
        }
        if (accept_word("ZC")) {
            expect(TokenKind::LParen, "'('");
            long long n = number(1, 1'000'000'000'000LL, "fundamental group order");
            expect(TokenKind::Semi, "';'");
            long long r = number(0, 1'000'000, "rank H_2");
            expect(TokenKind::RParen, "')'");
            return ZnComplex(n, r);
        }
        if (accept_word("P")) {
            expect(TokenKind::LParen, "'('");
            long long n = number(2, 1'000'000'000'000LL, "attaching degree");
            expect(TokenKind::RParen, "')'");
            return PseudoProjectivePlane(n);
        }
        if (accept_word("F")) {
            expect(TokenKind::LParen, "'('");
            long long g = number(0, 1'000'000, "rank pi_1");
            expect(TokenKind::Semi, "';'");
            long long r = number(0, 1'000'000, "rank H_2");
            expect(TokenKind::RParen, "')'");
            return FreePi1Complex(g, r);
        }
        fail(describe(peek()), peek().pos,
             {"'pt'", "'S'", "'RP'", "'M'", "'K'", "'L'", "'Sg'", "'Ng'", "'ZC'", "'P'", "'F'",
              "'('"});
    }
};

struct Render {
    std::ostringstream out;

    void operator()(const Point&) { out << "pt"; }
    void operator()(const Sphere& d) { out << "S" << d.n; }

    void operator()(const WedgeOfSpheres& d) {
        bool first = true;
        for (const auto& [dim, count] : d.counts) {
            if (!first) out << " v ";
            first = false;
            out << "S" << dim;
            if (count > 1) out << "*" << count;
        }
    }

    void operator()(const MooreSpace& d) {
        out << "M(" << d.group.to_string() << ", " << d.degree << ")";
    }

    void operator()(const EilenbergMacLane& d) {
        out << "K(" << d.group.to_string() << ", " << d.degree << ")";
    }

    void operator()(const ProductOfSpheres& d) { out << "S" << d.n << " x S" << d.m; }
    void operator()(const LensSpace& d) { out << "L(" << d.p << "," << d.q << ")"; }
    void operator()(const RealProjective& d) { out << "RP" << d.n; }

    void operator()(const Surface& d) {
        out << (d.orientable ? "Sg(" : "Ng(") << d.genus << ")";
    }

    void operator()(const ZnComplex& d) { out << "ZC(" << d.n << "; " << d.h2_rank << ")"; }
    void operator()(const PseudoProjectivePlane& d) { out << "P(" << d.n << ")"; }

    void operator()(const FreePi1Complex& d) {
        out << "F(" << d.pi1_rank << "; " << d.h2_rank << ")";
    }
};

}  // namespace

SpaceDescriptor parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string render_descriptor(const SpaceDescriptor& d) {
    Render r;
    std::visit(r, d);
    return r.out.str();
}

}  // namespace borsuk
