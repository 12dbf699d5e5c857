#include "polyspace/multipoly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "polyspace/errors.hpp"

namespace polyspace {

MultiIndex MultiIndex::unit(std::size_t nvars, std::size_t i) {
    MultiIndex m(nvars);
    m.exps_.at(i) = 1;
    return m;
}

unsigned MultiIndex::total() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size())
        throw Error(Errc::DimensionMismatch, "multi-index lengths differ");
    MultiIndex out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = a.exps_[i] + b.exps_[i];
    return out;
}

bool GrlexGreater::operator()(const MultiIndex& a, const MultiIndex& b) const {
    auto ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    return a.exponents() > b.exponents();
}

namespace {

void fill_monomials(std::vector<unsigned>& cur, std::size_t pos, unsigned left,
                    std::optional<std::size_t> skip, std::vector<MultiIndex>& out) {
    if (pos + 1 == cur.size()) {
        if (skip && *skip == pos && left > 0) return;
        cur[pos] = left;
        out.emplace_back(cur);
        cur[pos] = 0;
        return;
    }
    unsigned hi = (skip && *skip == pos) ? 0 : left;
    for (unsigned e = hi + 1; e-- > 0;) {
        cur[pos] = e;
        fill_monomials(cur, pos + 1, left - e, skip, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, unsigned degree,
                                            std::optional<std::size_t> skip) {
    std::vector<MultiIndex> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    std::vector<unsigned> cur(nvars, 0);
    fill_monomials(cur, 0, degree, skip, out);
    return out;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(MultiIndex(nvars), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw Error(Errc::DimensionMismatch, "variable index out of range");
    MultiPoly p(nvars);
    p.add_term(MultiIndex::unit(nvars, i), Rational(1));
    return p;
}

MultiPoly MultiPoly::linear_form(std::span<const Rational> coeffs) {
    MultiPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        p.add_term(MultiIndex::unit(coeffs.size(), i), coeffs[i]);
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.total());
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_.begin()->first.total();
    return terms_.rbegin()->first.total() == d;
}

bool MultiPoly::is_constant() const { return degree() <= 0; }

Rational MultiPoly::coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(MultiIndex(nvars_)); }

void MultiPoly::add_term(const MultiIndex& m, const Rational& c) {
    if (m.size() != nvars_) throw Error(Errc::DimensionMismatch, "monomial has wrong arity");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) it->second.canonicalize();
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void MultiPoly::check_same(const MultiPoly& o) const {
    if (o.nvars_ != nvars_)
        throw Error(Errc::DimensionMismatch, "polynomials live in different rings (" +
                                                 std::to_string(nvars_) + " vs " +
                                                 std::to_string(o.nvars_) + " variables)");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(nvars_, Rational(1));
    MultiPoly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string MultiPoly::to_string(std::string_view var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        bool neg = sgn(c) < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool has_var = m.total() > 0;
        bool unit = mag == 1;
        if (!unit || !has_var) {
            os << mag.get_str();
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << var << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

MultiPoly differentiate(const MultiPoly& p, const MultiIndex& alpha) {
    if (alpha.size() != p.nvars())
        throw Error(Errc::DimensionMismatch,
                    "multi-index has " + std::to_string(alpha.size()) + " entries, polynomial has " +
                        std::to_string(p.nvars()) + " variables");
    MultiPoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        MultiIndex reduced(p.nvars());
        Integer factor = 1;
        bool vanishes = false;
        for (std::size_t i = 0; i < m.size() && !vanishes; ++i) {
            if (alpha[i] > m[i]) {
                vanishes = true;
                break;
            }
            for (unsigned k = 0; k < alpha[i]; ++k) factor *= (m[i] - k);
            reduced[i] = m[i] - alpha[i];
        }
        if (!vanishes) out.add_term(reduced, c * Rational(factor));
    }
    return out;
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point) {
    if (point.size() != p.nvars())
        throw Error(Errc::DimensionMismatch,
                    "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                        std::to_string(p.nvars()) + " variables");
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            Rational power;
            mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
            mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
            term *= power;
        }
        total += term;
    }
    return total;
}

MultiPoly substitute(const MultiPoly& p, std::size_t var, const MultiPoly& replacement) {
    if (replacement.nvars() != p.nvars() || var >= p.nvars())
        throw Error(Errc::DimensionMismatch, "substitution arity mismatch");
    MultiPoly out(p.nvars());
    std::vector<MultiPoly> powers{MultiPoly::constant(p.nvars(), Rational(1))};
    for (const auto& [m, c] : p.terms()) {
        while (powers.size() <= m[var]) powers.push_back(powers.back() * replacement);
        MultiIndex rest = m;
        rest[var] = 0;
        MultiPoly mono(p.nvars());
        mono.add_term(rest, c);
        out += mono * powers[m[var]];
    }
    return out;
}

MultiPoly permute_variables(const MultiPoly& p, std::span<const std::size_t> perm) {
    if (perm.size() != p.nvars()) throw Error(Errc::DimensionMismatch, "permutation arity mismatch");
    MultiPoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        MultiIndex moved(p.nvars());
        for (std::size_t i = 0; i < m.size(); ++i) moved[perm[i]] = m[i];
        out.add_term(moved, c);
    }
    return out;
}

MultiPoly apply_operator(const MultiPoly& op, const MultiPoly& p) {
    if (op.nvars() != p.nvars()) throw Error(Errc::DimensionMismatch, "operator arity mismatch");
    MultiPoly out(p.nvars());
    for (const auto& [m, c] : op.terms()) out += differentiate(p, m) * c;
    return out;
}

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t nvars, char prefix)
        : text_(text), nvars_(nvars), prefix_(prefix) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(Errc::ParseError, "polynomial '" + std::string(text_) + "': " + why +
                                          " at offset " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                MultiPoly d = factor();
                if (!d.is_constant() || d.is_zero()) fail("can only divide by a nonzero constant");
                acc *= 1 / d.constant_term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        MultiPoly base = primary();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    MultiPoly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == prefix_) {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected variable index");
            auto idx = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (idx < 1 || idx > nvars_) fail("variable index out of range");
            return MultiPoly::variable(nvars_, idx - 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                    text_[pos_] == '/'))
                ++pos_;
            return MultiPoly::constant(nvars_, parse_rational(text_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t nvars_;
    char prefix_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text, std::size_t nvars, char prefix) {
    return ExprParser(text, nvars, prefix).parse();
}

}  // namespace polyspace
