#include "pcl/expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pcl {

namespace {

// recursive-descent parser producing a LamPoly; lambda = false rejects
// lambda-variables so the result can be read back as a DiffPoly
class Parser {
  public:
    Parser(const std::string& text, int nvars, bool lambda, int ngens)
        : s_(text), nvars_(nvars), lambda_(lambda), ngens_(ngens) {}

    LamPoly parse() {
        LamPoly r = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;
    int nvars_;
    bool lambda_;
    int ngens_;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in '" + s_ +
                                    "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    long integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (pos_ == start) fail("expected a number");
        return std::stol(s_.substr(start, pos_ - start));
    }

    LamPoly sum() {
        LamPoly r = eat('-') ? -product() : product();
        for (;;) {
            if (eat('+'))
                r += product();
            else if (eat('-'))
                r -= product();
            else
                return r;
        }
    }

    LamPoly product() {
        LamPoly r = power();
        while (eat('*')) r *= power();
        return r;
    }

    LamPoly power() {
        LamPoly b = atom();
        if (!eat('^')) return b;
        long e = integer();
        LamPoly r = LamPoly::constant(nvars_, DiffPoly::one());
        for (long i = 0; i < e; ++i) r *= b;
        return r;
    }

    LamPoly atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            LamPoly r = sum();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'u') {
            ++pos_;
            int gen = optional_index();
            if (gen >= ngens_) fail("generator index out of range");
            int order = 0;
            while (pos_ < s_.size() && s_[pos_] == '\'') {
                ++order;
                ++pos_;
            }
            return LamPoly::constant(nvars_, DiffPoly::u(gen, order));
        }
        if (c == 'l') {
            ++pos_;
            int var = optional_index();
            if (!lambda_) fail("lambda-variable not allowed here");
            if (var >= nvars_) fail("lambda-variable index out of range");
            return LamPoly::lam(nvars_, var);
        }
        if (std::isdigit((unsigned char)c)) {
            long p = integer();
            Rat v(p);
            if (eat('/')) v /= Rat(integer());
            return LamPoly::constant(nvars_, DiffPoly::one() * v);
        }
        fail("expected a term");
    }

    int optional_index() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        return pos_ == start ? 0 : std::stoi(s_.substr(start, pos_ - start));
    }
};

} // namespace

DiffPoly parse_diffpoly(const std::string& text, int ngens) {
    return as_diffpoly(Parser(text, 1, false, ngens).parse());
}

LamPoly parse_lampoly(const std::string& text, int nvars, int ngens) {
    return Parser(text, nvars, true, ngens).parse();
}

PVAStructure parse_pva(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    int ngens = -1;
    PVAStructure P;
    P.name = name;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (line.rfind("ngens:", 0) == 0) {
            ngens = std::stoi(line.substr(6));
            if (ngens < 1) throw std::invalid_argument("ngens must be positive");
            P.ngens = ngens;
            P.table.assign(ngens, std::vector<LamPoly>(ngens, LamPoly(1)));
            continue;
        }
        if (line[0] != '[') throw std::invalid_argument("malformed descriptor line: " + line);
        if (ngens < 0) throw std::invalid_argument("descriptor must start with ngens:");
        size_t comma = line.find(','), close = line.find(']'), eq = line.find('=');
        if (comma == std::string::npos || close == std::string::npos || eq == std::string::npos ||
            comma > close || close > eq)
            throw std::invalid_argument("malformed descriptor line: " + line);
        int i = std::stoi(line.substr(1, comma - 1));
        int j = std::stoi(line.substr(comma + 1, close - comma - 1));
        if (i < 0 || j < 0 || i >= ngens || j >= ngens)
            throw std::invalid_argument("table index out of range: " + line);
        P.table[i][j] = parse_lampoly(line.substr(eq + 1), 1, ngens);
    }
    if (ngens < 0) throw std::invalid_argument("descriptor must declare ngens");
    return P;
}

} // namespace pcl
