#include "subtropical/cli/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace subtropical::cli {

namespace {

constexpr int kEof = -1;
constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::int32_t>::max();

class Scanner {
  public:
    explicit Scanner(std::istream &in) : in_(in) {}

    int peek() {
        if (pos_ == len_ && !fill()) return kEof;
        return static_cast<unsigned char>(buf_[pos_]);
    }

    int get() {
        int c = peek();
        if (c == kEof) return c;
        ++pos_;
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        for (int c = peek(); c != kEof && std::isspace(c); c = peek()) get();
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    bool fill() {
        in_.read(buf_.data(), static_cast<std::streamsize>(buf_.size()));
        len_ = static_cast<std::size_t>(in_.gcount());
        pos_ = 0;
        return len_ > 0;
    }

    std::istream &in_;
    std::array<char, 1 << 16> buf_{};
    std::size_t pos_ = 0, len_ = 0;
    std::size_t line_ = 1, column_ = 1;
};

bool is_var_start(int c) { return c != kEof && std::isalpha(c); }
bool is_var_char(int c) { return c != kEof && (std::isalnum(c) || c == '_'); }
bool is_digit(int c) { return c != kEof && std::isdigit(c); }
bool is_operator(int c) { return c == '+' || c == '-' || c == '*' || c == '^'; }

// Sparse monomial key: (variable id, exponent) pairs sorted by id.
using Key = std::vector<std::uint32_t>;

struct KeyHash {
    std::size_t operator()(const Key &k) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : k) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

class Parser {
  public:
    explicit Parser(std::istream &in) : sc_(in) {}

    MultiPoly run() {
        sc_.skip_space();
        if (sc_.peek() == kEof) throw EmptyInput("empty input", sc_.line(), sc_.column());
        bool first = true;
        for (;;) {
            sc_.skip_space();
            int c = sc_.peek();
            int sign = 1;
            if (c == '+' || c == '-') {
                sc_.get();
                sign = c == '-' ? -1 : 1;
                sc_.skip_space();
                if (is_operator(sc_.peek())) throw DuplicateOperator("operator follows an operator", sc_.line(), sc_.column());
            } else if (!first) {
                throw SyntaxError(std::string("expected '+' or '-', found '") + static_cast<char>(c) + "'", sc_.line(),
                                  sc_.column());
            }
            term(sign);
            first = false;
            sc_.skip_space();
            if (sc_.peek() == kEof) break;
        }
        return finish();
    }

  private:
    [[noreturn]] void fail(const std::string &msg) { throw SyntaxError(msg, sc_.line(), sc_.column()); }

    [[noreturn]] void unexpected() {
        int c = sc_.peek();
        if (c == kEof) fail("unexpected end of input");
        if (is_operator(c)) throw DuplicateOperator("operator follows an operator", sc_.line(), sc_.column());
        fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
    }

    std::string natural_text() {
        std::string digits;
        while (is_digit(sc_.peek())) digits.push_back(static_cast<char>(sc_.get()));
        return digits;
    }

    std::uint64_t exponent() {
        sc_.skip_space();
        if (!is_digit(sc_.peek())) unexpected();
        std::string digits = natural_text();
        digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
        if (digits.size() > 10 || std::stoull(digits) > kMaxExponent) fail("exponent too large");
        return std::stoull(digits);
    }

    void term(int sign) {
        Integer coeff(sign);
        monomial_.clear();
        for (;;) {
            sc_.skip_space();
            int c = sc_.peek();
            if (is_digit(c)) {
                std::string digits = natural_text();
                if (digits.size() < 19) coeff *= static_cast<unsigned long>(std::stoull(digits));
                else coeff *= Integer(digits, 10);
            } else if (is_var_start(c)) {
                name_.clear();
                while (is_var_char(sc_.peek())) name_.push_back(static_cast<char>(sc_.get()));
                std::uint64_t e = 1;
                sc_.skip_space();
                if (sc_.peek() == '^') {
                    sc_.get();
                    e = exponent();
                } else if (sc_.peek() == '*') {
                    sc_.get();
                    if (sc_.peek() == '*') {
                        sc_.get();
                        e = exponent();
                    } else {
                        add_factor(name_, e);
                        continue; // the '*' was a product
                    }
                }
                add_factor(name_, e);
            } else {
                unexpected();
            }
            sc_.skip_space();
            if (sc_.peek() != '*') break;
            sc_.get();
        }
        std::sort(monomial_.begin(), monomial_.end());
        Key key;
        key.reserve(monomial_.size() * 2);
        for (std::size_t i = 0; i < monomial_.size(); ++i) {
            std::uint64_t e = monomial_[i].second;
            while (i + 1 < monomial_.size() && monomial_[i + 1].first == monomial_[i].first) e += monomial_[++i].second;
            if (e > kMaxExponent) fail("exponent too large");
            if (e == 0) continue;
            key.push_back(monomial_[i].first);
            key.push_back(static_cast<std::uint32_t>(e));
        }
        terms_[std::move(key)] += coeff;
    }

    void add_factor(const std::string &name, std::uint64_t e) {
        auto [it, inserted] = ids_.try_emplace(name, static_cast<std::uint32_t>(names_.size()));
        if (inserted) names_.push_back(name);
        monomial_.emplace_back(it->second, e);
    }

    MultiPoly finish() {
        std::vector<bool> used(names_.size(), false);
        for (const auto &[key, coeff] : terms_)
            if (coeff != 0)
                for (std::size_t i = 0; i < key.size(); i += 2) used[key[i]] = true;
        std::vector<std::uint32_t> order;
        for (std::uint32_t id = 0; id < names_.size(); ++id)
            if (used[id]) order.push_back(id);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return names_[a] < names_[b]; });
        std::vector<std::size_t> position(names_.size(), 0);
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < order.size(); ++i) {
            position[order[i]] = i;
            vars.push_back(names_[order[i]]);
        }
        std::vector<Term> terms;
        terms.reserve(terms_.size());
        for (auto &[key, coeff] : terms_) {
            if (coeff == 0) continue;
            ExponentVector ev(vars.size(), 0);
            for (std::size_t i = 0; i < key.size(); i += 2) ev[position[key[i]]] = key[i + 1];
            terms.push_back({std::move(ev), std::move(coeff)});
        }
        terms_.clear();
        return MultiPoly(std::move(vars), std::move(terms));
    }

    Scanner sc_;
    std::unordered_map<std::string, std::uint32_t> ids_;
    std::vector<std::string> names_;
    std::unordered_map<Key, Integer, KeyHash> terms_;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> monomial_;
    std::string name_;
};

} // namespace

MultiPoly parse_polynomial(std::istream &in) { return Parser(in).run(); }

MultiPoly parse_polynomial(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_polynomial(in);
}

} // namespace subtropical::cli
