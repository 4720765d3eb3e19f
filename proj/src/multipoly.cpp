#include "minorkit/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "minorkit/errors.hpp"

namespace minorkit {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t var, unsigned power) {
    if (var >= kMaxVars) throw UsageError("monomial: variable index exceeds kMaxVars");
    if (power > 255) throw InternalError("monomial: exponent overflow");
    Monomial m;
    m.exps_[var] = static_cast<Exponent>(power);
    m.degree_ = static_cast<std::uint16_t>(power);
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    for (std::size_t k = 0; k < kMaxVars; ++k) {
        unsigned e = unsigned{exps_[k]} + other.exps_[k];
        if (e > 255) throw InternalError("monomial: exponent overflow");
        r.exps_[k] = static_cast<Exponent>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t k = 0; k < kMaxVars; ++k)
        if (exps_[k] > other.exps_[k]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial r;
    for (std::size_t k = 0; k < kMaxVars; ++k)
        r.exps_[k] = static_cast<Exponent>(other.exps_[k] - exps_[k]);
    r.degree_ = static_cast<std::uint16_t>(other.degree_ - degree_);
    return r;
}

std::size_t Monomial::hash() const {
    static_assert(kMaxVars == 16);
    std::uint64_t lo = 0, hi = 0;
    std::memcpy(&lo, exps_.data(), 8);
    std::memcpy(&hi, exps_.data() + 8, 8);
    // splitmix-style finalizer over both words
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL);
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// MultiPoly

namespace {

void check_nvars(std::size_t nvars) {
    if (nvars > Monomial::kMaxVars)
        throw UsageError("MultiPoly: at most " + std::to_string(Monomial::kMaxVars) + " variables supported");
}

bool term_desc(const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.first > b.first; }

} // namespace

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) { check_nvars(nvars); }

MultiPoly::MultiPoly(std::size_t nvars, const Integer& c) : nvars_(nvars) {
    check_nvars(nvars);
    if (c != 0) terms_.emplace_back(Monomial{}, c);
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index < 1 || index > nvars) throw UsageError("MultiPoly::variable: index out of range");
    MultiPoly p(nvars);
    p.terms_.emplace_back(Monomial::variable(index - 1), Integer(1));
    return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
    MultiPoly p(nvars);
    for (const auto& [m, c] : terms)
        for (std::size_t k = nvars; k < Monomial::kMaxVars; ++k)
            if (m.exponent(k) != 0) throw UsageError("MultiPoly::from_terms: variable beyond nvars");
    std::sort(terms.begin(), terms.end(), term_desc);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.degree() == 0);
}

int MultiPoly::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.degree());
}

void MultiPoly::require_same_ring(const MultiPoly& other, const char* op) const {
    if (nvars_ != other.nvars_)
        throw UsageError(std::string("MultiPoly ") + op + ": mismatched nvars (" + std::to_string(nvars_) +
                         " vs " + std::to_string(other.nvars_) + ")");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

// Merge two descending term lists: out = a + sign*b.
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, bool subtract) {
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first > ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first > ia->first) {
            out.emplace_back(ib->first, subtract ? Integer(-ib->second) : ib->second);
            ++ib;
        } else {
            Integer c = subtract ? Integer(ia->second - ib->second) : Integer(ia->second + ib->second);
            if (c != 0) out.emplace_back(ia->first, std::move(c));
            ++ia;
            ++ib;
        }
    }
    return out;
}

} // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_same_ring(rhs, "add");
    terms_ = merge_terms(terms_, rhs.terms_, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    require_same_ring(rhs, "sub");
    terms_ = merge_terms(terms_, rhs.terms_, true);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    lhs.require_same_ring(rhs, "mul");
    MultiPoly out(lhs.nvars_);
    if (lhs.is_zero() || rhs.is_zero()) return out;
    if (lhs.terms_.size() == 1 || rhs.terms_.size() == 1) {
        // Monomial times polynomial preserves the order.
        const auto& single = lhs.terms_.size() == 1 ? lhs.terms_.front() : rhs.terms_.front();
        const auto& many = lhs.terms_.size() == 1 ? rhs.terms_ : lhs.terms_;
        out.terms_.reserve(many.size());
        for (const auto& [m, c] : many) out.terms_.emplace_back(m * single.first, Integer(c * single.second));
        return out;
    }
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(lhs.terms_.size() * rhs.terms_.size(), 1u << 20));
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            Integer& slot = acc[ma * mb];
            mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.terms_.emplace_back(m, std::move(c));
    std::sort(out.terms_.begin(), out.terms_.end(), term_desc);
    return out;
}

MultiPoly operator*(const MultiPoly& lhs, const Integer& c) {
    MultiPoly out(lhs.nvars_);
    if (c == 0) return out;
    out.terms_ = lhs.terms_;
    for (auto& t : out.terms_) t.second *= c;
    return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    require_same_ring(divisor, "divide_exact");
    if (divisor.is_zero()) throw InternalError("MultiPoly::divide_exact: division by zero polynomial");
    MultiPoly quotient(nvars_);
    if (is_zero()) return quotient;

    const auto& [lead_mono, lead_coef] = divisor.terms_.front();
    if (divisor.terms_.size() == 1) {
        quotient.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            if (!lead_mono.divides(m) || !mpz_divisible_p(c.get_mpz_t(), lead_coef.get_mpz_t()))
                throw InternalError("MultiPoly::divide_exact: nonzero remainder");
            Integer q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), lead_coef.get_mpz_t());
            quotient.terms_.emplace_back(lead_mono.quotient_of(m), std::move(q));
        }
        return quotient;
    }

    // Remainder keyed in descending order so begin() is always the leading term.
    std::map<Monomial, Integer, std::greater<>> rem;
    for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.first, t.second);

    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lead_mono.divides(it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lead_coef.get_mpz_t()))
            throw InternalError("MultiPoly::divide_exact: nonzero remainder");
        Monomial qm = lead_mono.quotient_of(it->first);
        Integer qc;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead_coef.get_mpz_t());
        rem.erase(it);
        for (auto dt = std::next(divisor.terms_.begin()); dt != divisor.terms_.end(); ++dt) {
            auto [slot, inserted] = rem.try_emplace(dt->first * qm);
            mpz_submul(slot->second.get_mpz_t(), dt->second.get_mpz_t(), qc.get_mpz_t());
            if (slot->second == 0) rem.erase(slot);
        }
        quotient.terms_.emplace_back(qm, std::move(qc));
    }
    return quotient;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& assignment) const {
    if (assignment.size() != nvars_)
        throw UsageError("MultiPoly::evaluate: assignment length " + std::to_string(assignment.size()) +
                         " != nvars " + std::to_string(nvars_));
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t k = 0; k < nvars_; ++k) {
            for (unsigned e = 0; e < m.exponent(k); ++e) v *= assignment[k];
        }
        total += v;
    }
    total.canonicalize();
    return total;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        bool star = false;
        for (std::size_t k = 0; k < nvars_; ++k) {
            unsigned e = m.exponent(k);
            if (e == 0) continue;
            os << (star ? " " : " * ");
            star = true;
            os << 'b' << (k + 1);
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

std::size_t MultiPoly::max_variable_index() const {
    std::size_t top = 0;
    for (const auto& [m, c] : terms_)
        for (std::size_t k = 0; k < Monomial::kMaxVars; ++k)
            if (m.exponent(k) != 0) top = std::max(top, k + 1);
    return top;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw InputError("polynomial parse error (" + why + ") in \"" + std::string(text) + "\"");
}

// Parses one term such as "-3 * b1^2 b4", "b2", "-b1", "7".
MultiPoly::Term parse_term(std::string_view term, std::string_view whole, std::size_t nvars) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < term.size() && std::isspace(static_cast<unsigned char>(term[pos]))) ++pos;
    };
    auto read_digits = [&] {
        std::size_t start = pos;
        while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
        return term.substr(start, pos - start);
    };

    skip_ws();
    bool negative = false;
    if (pos < term.size() && (term[pos] == '-' || term[pos] == '+')) {
        negative = term[pos] == '-';
        ++pos;
        skip_ws();
    }
    Integer coef = 1;
    auto digits = read_digits();
    if (!digits.empty()) coef = Integer(std::string(digits));
    if (negative) coef = -coef;

    auto small_number = [&](std::string_view d, const char* what) {
        if (d.size() > 4) parse_fail(whole, std::string(what) + " too large");
        return static_cast<unsigned>(std::stoul(std::string(d)));
    };

    Monomial mono;
    bool any_factor = !digits.empty();
    skip_ws();
    if (pos < term.size() && term[pos] == '*') {
        // only "c * b..." is accepted
        if (digits.empty()) parse_fail(whole, "'*' without a coefficient");
        ++pos;
        skip_ws();
        if (pos >= term.size() || term[pos] != 'b') parse_fail(whole, "'*' must be followed by a variable");
    }
    while (true) {
        skip_ws();
        if (pos >= term.size()) break;
        if (term[pos] != 'b') parse_fail(whole, "unexpected character '" + std::string(1, term[pos]) + "'");
        ++pos;
        auto idx = read_digits();
        if (idx.empty()) parse_fail(whole, "variable without index");
        const std::size_t var = small_number(idx, "variable index");
        if (var < 1 || var > nvars) parse_fail(whole, "variable b" + std::string(idx) + " outside nvars");
        unsigned power = 1;
        if (pos < term.size() && term[pos] == '^') {
            ++pos;
            auto e = read_digits();
            if (e.empty()) parse_fail(whole, "missing exponent");
            power = small_number(e, "exponent");
            if (power > 255) parse_fail(whole, "exponent above 255");
        }
        mono = mono * Monomial::variable(var - 1, power);
        any_factor = true;
    }
    if (!any_factor) parse_fail(whole, "empty term");
    return {mono, coef};
}

} // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::size_t nvars) {
    std::vector<Term> terms;
    std::size_t start = 0;
    bool nonblank = false;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) nonblank = true;
    if (!nonblank) parse_fail(text, "empty input");
    while (start <= text.size()) {
        std::size_t plus = text.find('+', start);
        std::string_view piece = text.substr(start, plus == std::string_view::npos ? text.npos : plus - start);
        terms.push_back(parse_term(piece, text, nvars));
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return from_terms(nvars, std::move(terms));
}

bool poly_is_zero(const MultiPoly& p) { return p.is_zero(); }

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

Rational poly_eval(const MultiPoly& p, const std::vector<Rational>& assignment) { return p.evaluate(assignment); }

} // namespace minorkit
