#include "z2cob/representations.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "z2cob/error.hpp"

namespace z2cob {

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

void require_small(int n, int limit, const char* what) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " needs n >= 1");
    if (n > limit)
        throw Error(ErrorCode::DimensionTooLarge,
                    std::string(what) + " supports n <= " + std::to_string(limit));
}

BitMatrix dual_action_matrix(const BitMatrix& sigma) { return invert(sigma).transpose(); }

Character apply(const BitMatrix& m, const Character& c) { return m * c; }

RepMonomial apply(const BitMatrix& m, const RepMonomial& mono) {
    std::vector<Character> chars;
    chars.reserve(mono.chars().size());
    for (const auto& c : mono.chars()) chars.push_back(apply(m, c));
    return monomial_from_chars(chars);
}

PrimeRepSet apply(const BitMatrix& m, const PrimeRepSet& s) {
    PrimeRepSet out(s.dim());
    for (const auto& mono : s.entries()) out.insert(apply(m, mono));
    return out;
}

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    int generator(int n) {
        expect('r');
        std::size_t start = pos_;
        int k = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            k = k * 10 + (text_[pos_++] - '0');
        if (pos_ == start) fail("expected generator index");
        if (k < 1 || k > n) fail("generator r" + std::to_string(k) + " outside 1.." + std::to_string(n));
        return k - 1;
    }
    Character character(int n) {
        std::uint32_t bits = 0;
        if (accept('(')) {
            do {
                bits ^= 1u << generator(n);
            } while (accept('+'));
            expect(')');
        } else {
            bits = 1u << generator(n);
        }
        if (bits == 0) fail("zero character");
        return Character(n, bits);
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::SyntaxError, why + " at offset " + std::to_string(pos_) + " in '" +
                                                std::string(text_) + "'");
    }
    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

RepMonomial monomial_at(Cursor& cur, int n) {
    std::vector<Character> chars;
    chars.push_back(cur.character(n));
    while (true) {
        char c = cur.peek();
        if (c == '*') {
            cur.expect('*');
            chars.push_back(cur.character(n));
        } else if (c == 'r' || c == '(') {
            chars.push_back(cur.character(n));
        } else {
            break;
        }
    }
    return monomial_from_chars(chars);
}

}  // namespace

Character make_character(const BitVec& v) {
    if (v.is_zero()) throw Error(ErrorCode::ZeroCharacter, "character must be nonzero");
    return v;
}

bool RepMonomial::contains(const Character& c) const {
    return std::binary_search(chars_.begin(), chars_.end(), c);
}

BitMatrix RepMonomial::matrix() const { return BitMatrix::from_columns(chars_); }

std::string RepMonomial::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < chars_.size(); ++i) {
        if (i) s += '*';
        s += character_to_string(chars_[i]);
    }
    return s;
}

RepMonomial monomial_from_chars(std::span<const Character> chars) {
    if (chars.empty()) throw Error(ErrorCode::NotABasis, "empty character list");
    const int n = chars.front().dim();
    if (static_cast<int>(chars.size()) != n)
        throw Error(ErrorCode::NotABasis, "need exactly " + std::to_string(n) + " characters");
    for (const auto& c : chars) {
        if (c.dim() != n) throw Error(ErrorCode::DimensionMismatch, "character dimensions differ");
        if (c.is_zero()) throw Error(ErrorCode::ZeroCharacter, "zero character in monomial");
    }
    if (!linearly_independent(chars)) throw Error(ErrorCode::NotABasis, "characters are linearly dependent");
    RepMonomial m;
    m.dim_ = n;
    m.chars_.assign(chars.begin(), chars.end());
    std::sort(m.chars_.begin(), m.chars_.end());
    return m;
}

RepMonomial monomial_from_chars(std::initializer_list<Character> chars) {
    return monomial_from_chars(std::span<const Character>(chars.begin(), chars.size()));
}

RepMonomial monomial_from_matrix(const BitMatrix& m) {
    if (rank(m) != m.dim()) throw Error(ErrorCode::Singular, "tangent matrix " + m.to_string() + " is singular");
    std::vector<Character> cols;
    for (int j = 0; j < m.dim(); ++j) cols.push_back(m.column(j));
    return monomial_from_chars(cols);
}

void RepSet::add(const RepMonomial& m, int count) {
    if (dim_ == 0) dim_ = m.dim();
    if (m.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "monomial dimension differs from set");
    if (count <= 0) return;
    entries_[m] += count;
}

int RepSet::count(const RepMonomial& m) const {
    auto it = entries_.find(m);
    return it == entries_.end() ? 0 : it->second;
}

int RepSet::size() const {
    int total = 0;
    for (const auto& [m, k] : entries_) total += k;
    return total;
}

RepSet& RepSet::operator+=(const RepSet& other) {
    for (const auto& [m, k] : other.entries_) add(m, k);
    return *this;
}

std::string RepSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [m, k] : entries_)
        for (int i = 0; i < k; ++i) {
            if (!first) s += ", ";
            first = false;
            s += m.to_string();
        }
    return s + "}";
}

PrimeRepSet::PrimeRepSet(int dim, std::span<const RepMonomial> monomials) : dim_(dim) {
    for (const auto& m : monomials) insert(m);
}

void PrimeRepSet::insert(const RepMonomial& m) {
    if (dim_ == 0) dim_ = m.dim();
    if (m.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "monomial dimension differs from set");
    entries_.insert(m);
}

PrimeRepSet PrimeRepSet::operator^(const PrimeRepSet& other) const {
    if (dim_ != other.dim_ && dim_ != 0 && other.dim_ != 0)
        throw Error(ErrorCode::DimensionMismatch, "class dimensions differ");
    PrimeRepSet out(dim_ ? dim_ : other.dim_);
    std::set_symmetric_difference(entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end(),
                                  std::inserter(out.entries_, out.entries_.end()));
    return out;
}

PrimeRepSet PrimeRepSet::intersect(const PrimeRepSet& other) const {
    PrimeRepSet out(dim_ ? dim_ : other.dim_);
    std::set_intersection(entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end(),
                          std::inserter(out.entries_, out.entries_.end()));
    return out;
}

RepSet PrimeRepSet::as_multiset() const {
    RepSet s(dim_);
    for (const auto& m : entries_) s.add(m);
    return s;
}

std::string PrimeRepSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& m : entries_) {
        if (!first) s += ", ";
        first = false;
        s += m.to_string();
    }
    return s + "}";
}

std::vector<RepMonomial> enumerate_monomials(int n) {
    require_small(n, 4, "enumerate_monomials");
    std::set<RepMonomial> all;
    for (const auto& g : enumerate_gl(n)) all.insert(monomial_from_matrix(g));
    return {all.begin(), all.end()};
}

Character act(const BitMatrix& sigma, const Character& c) { return apply(dual_action_matrix(sigma), c); }

RepMonomial act(const BitMatrix& sigma, const RepMonomial& m) { return apply(dual_action_matrix(sigma), m); }

RepSet act(const BitMatrix& sigma, const RepSet& s) {
    const BitMatrix d = dual_action_matrix(sigma);
    RepSet out(s.dim());
    for (const auto& [m, k] : s.entries()) out.add(apply(d, m), k);
    return out;
}

PrimeRepSet act(const BitMatrix& sigma, const PrimeRepSet& s) {
    return apply(dual_action_matrix(sigma), s);
}

PrimeRepSet act_left(const BitMatrix& sigma, const PrimeRepSet& s) {
    if (rank(sigma) != sigma.dim()) throw Error(ErrorCode::Singular, "sigma is singular");
    return apply(sigma, s);
}

PrimeRepSet prime_reduce(const RepSet& s) {
    PrimeRepSet out(s.dim());
    for (const auto& [m, k] : s.entries())
        if (k % 2) out.insert(m);
    return out;
}

RepSet rp_standard_multiset(int n) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "rp_standard_multiset needs n >= 1");
    RepSet s(n);
    for (int i = 0; i <= n; ++i) s.add(monomial_from_matrix(delta_matrix(n, i)));
    return s;
}

PrimeRepSet rp_standard_set(int n) { return prime_reduce(rp_standard_multiset(n)); }

std::vector<BitMatrix> stabilizer(const PrimeRepSet& s) {
    if (s.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "stabilizer of a dimensionless set");
    require_small(s.dim(), 4, "stabilizer");
    std::vector<BitMatrix> out;
    for (const auto& g : enumerate_gl(s.dim()))
        if (act(g, s) == s) out.push_back(g);
    return out;
}

std::vector<BitMatrix> stabilizer_left(const PrimeRepSet& s) {
    if (s.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "stabilizer of a dimensionless set");
    require_small(s.dim(), 4, "stabilizer_left");
    std::vector<BitMatrix> out;
    for (const auto& g : enumerate_gl(s.dim()))
        if (apply(g, s) == s) out.push_back(g);
    return out;
}

std::vector<PrimeRepSet> orbit(const PrimeRepSet& s) {
    if (s.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "orbit of a dimensionless set");
    require_small(s.dim(), 4, "orbit");
    std::set<PrimeRepSet> images;
    for (const auto& g : enumerate_gl(s.dim())) images.insert(act(g, s));
    return {images.begin(), images.end()};
}

RepBounds rep_bounds(int n) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "rep_bounds needs n >= 1");
    return {static_cast<std::uint64_t>(n + 1), gl_order(n) / factorial(n)};
}

PrimeRepSet max_span_class(int n) {
    require_small(n, 4, "max_span_class");
    // One copy of the standard set per coset of its stabilizer; the copies are disjoint.
    PrimeRepSet total(n);
    for (const auto& piece : orbit(rp_standard_set(n))) total = total ^ piece;
    return total;
}

EssentialBound essential_bound(int n) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "essential_bound needs n >= 1");
    const std::uint64_t num = gl_order(n);
    const std::uint64_t den = n % 2 ? 2 * factorial(n) : 2 * factorial(n - 1) * static_cast<std::uint64_t>(n + 1);
    return {num / den, num % den == 0};
}

std::string character_to_string(const Character& c) {
    std::vector<int> gens;
    for (int i = 0; i < c.dim(); ++i)
        if (c.get(i)) gens.push_back(i + 1);
    if (gens.size() == 1) return "r" + std::to_string(gens.front());
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += '+';
        s += "r" + std::to_string(gens[i]);
    }
    return s + ")";
}

Character parse_character(std::string_view text, int n) {
    // A standalone sum may omit its parentheses.
    std::string wrapped;
    if (text.find('+') != std::string_view::npos && text.find('(') == std::string_view::npos) {
        wrapped = "(" + std::string(text) + ")";
        text = wrapped;
    }
    Cursor cur(text);
    Character c = cur.character(n);
    if (!cur.done()) cur.fail("trailing text");
    return c;
}

RepMonomial parse_monomial(std::string_view text, int n) {
    Cursor cur(text);
    RepMonomial m = monomial_at(cur, n);
    if (!cur.done()) cur.fail("trailing text");
    return m;
}

PrimeRepSet parse_prime_set(std::string_view text, int n) {
    Cursor cur(text);
    cur.expect('{');
    PrimeRepSet s(n);
    if (!cur.accept('}')) {
        do {
            RepMonomial m = monomial_at(cur, n);
            if (s.contains(m)) cur.fail("repeated monomial " + m.to_string());
            s.insert(m);
        } while (cur.accept(','));
        cur.expect('}');
    }
    if (!cur.done()) cur.fail("trailing text");
    return s;
}

}  // namespace z2cob
