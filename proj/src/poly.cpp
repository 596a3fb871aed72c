#include "qovar/poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qovar {

// --- TermAccumulator ---------------------------------------------------

TermAccumulator::TermAccumulator(std::size_t expect) {
    rehash(std::bit_ceil(std::max<std::size_t>(expect * 2, 16)));
}

void TermAccumulator::rehash(std::size_t cap) {
    table_.assign(cap, 0);
    mask_ = cap - 1;
    for (std::uint32_t i = 0; i < entries_.size(); ++i) {
        std::size_t h = entries_[i].m.hash() & mask_;
        while (table_[h]) h = (h + 1) & mask_;
        table_[h] = i + 1;
    }
}

std::uint32_t* TermAccumulator::slot_for(const Monomial& m) {
    std::size_t h = m.hash() & mask_;
    while (true) {
        std::uint32_t v = table_[h];
        if (!v || entries_[v - 1].m == m) return &table_[h];
        h = (h + 1) & mask_;
    }
}

void TermAccumulator::add(const Monomial& m, const FieldElem& c) {
    if (c.is_zero()) return;
    std::uint32_t* slot = slot_for(m);
    if (*slot) {
        entries_[*slot - 1].c += c;
        return;
    }
    entries_.push_back({m, c});
    *slot = static_cast<std::uint32_t>(entries_.size());
    if (entries_.size() * 3 > table_.size() * 2) rehash(table_.size() * 2);
}

void TermAccumulator::add_poly(const Poly& p) {
    for (const Term& t : p.terms()) add(t.m, t.c);
}

void TermAccumulator::merge(TermAccumulator&& other) {
    for (Term& t : other.entries_) add(t.m, t.c);
    other.entries_.clear();
    other.table_.clear();
}

Poly TermAccumulator::take() {
    std::vector<Term> out;
    out.reserve(entries_.size());
    for (Term& t : entries_)
        if (!t.c.is_zero()) out.push_back(std::move(t));
    entries_.clear();
    table_.clear();
    return Poly::from_terms(std::move(out));
}

// --- Poly ---------------------------------------------------------------

Poly Poly::from_terms(std::vector<Term> raw) {
    std::erase_if(raw, [](const Term& t) { return t.c.is_zero(); });
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return mono_cmp(a.m, b.m) > 0; });
    Poly p;
    p.terms_ = std::move(raw);
    return p;
}

Poly Poly::constant(FieldElem c) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
}

Poly Poly::monomial(Monomial m, FieldElem c) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

FieldElem Poly::coefficient_of(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) {
        return mono_cmp(t.m, k) > 0;
    });
    if (it != terms_.end() && it->m == m) return it->c;
    return FieldElem();
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Poly operator+(const Poly& a, const Poly& b) {
    // sorted merge
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        int c = mono_cmp(ia->m, ib->m);
        if (c > 0) {
            out.push_back(*ia++);
        } else if (c < 0) {
            out.push_back(*ib++);
        } else {
            FieldElem s = ia->c + ib->c;
            if (!s.is_zero()) out.push_back({ia->m, std::move(s)});
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), ia, a.terms_.end());
    out.insert(out.end(), ib, b.terms_.end());
    Poly p;
    p.terms_ = std::move(out);
    return p;
}

Poly Poly::operator-() const {
    Poly p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.m, -t.c});
    return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::scaled(const FieldElem& c) const {
    if (c.is_zero()) return Poly();
    Poly p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        FieldElem v = t.c * c;
        if (!v.is_zero()) p.terms_.push_back({t.m, std::move(v)});
    }
    return p;
}

Poly mul_serial(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    TermAccumulator acc(std::max(a.nterms(), b.nterms()));
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms()) acc.add(ta.m.mul(tb.m), ta.c * tb.c);
    return acc.take();
}

Poly operator*(const Poly& a, const Poly& b) {
    const Poly& big = a.nterms() >= b.nterms() ? a : b;
    const Poly& small = a.nterms() >= b.nterms() ? b : a;
#ifdef _OPENMP
    std::size_t work = big.nterms() * small.nterms();
    if (work > (1u << 16) && omp_get_max_threads() > 1 && !omp_in_parallel()) {
        int nt = omp_get_max_threads();
        std::vector<TermAccumulator> accs;
        accs.reserve(nt);
        for (int i = 0; i < nt; ++i) accs.emplace_back(big.nterms() / nt + 16);
#pragma omp parallel num_threads(nt)
        {
            int id = omp_get_thread_num();
            TermAccumulator& acc = accs[id];
#pragma omp for schedule(static)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(big.nterms()); ++i) {
                const Term& tb = big.terms()[i];
                for (const Term& ts : small.terms()) acc.add(tb.m.mul(ts.m), tb.c * ts.c);
            }
        }
        TermAccumulator& main = accs[0];
        for (int i = 1; i < nt; ++i) main.merge(std::move(accs[i]));
        return main.take();
    }
#endif
    return mul_serial(big, small);
}

Poly Poly::pow(int n) const {
    if (n < 0) throw Error("poly: negative power");
    Poly r = Poly::constant(FieldElem(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

Poly Poly::derivative(int v) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        int e = t.m.e[v];
        if (!e) continue;
        Monomial m = t.m;
        m.e[v] = static_cast<std::uint8_t>(e - 1);
        out.push_back({m, t.c * FieldElem(e)});
    }
    return from_terms(std::move(out));
}

Poly Poly::derivative(int v, int times) const {
    Poly p = *this;
    for (int i = 0; i < times && !p.is_zero(); ++i) p = p.derivative(v);
    return p;
}

Poly Poly::substitute(const std::array<const Poly*, indet::kCount>& assignment) const {
    // memoized powers of each assigned image
    std::array<std::vector<Poly>, indet::kCount> powers;
    TermAccumulator acc(terms_.size());
    for (const Term& t : terms_) {
        Monomial fixed = Monomial::one();
        Poly prod = Poly::constant(t.c);
        bool dead = false;
        for (int v = 0; v < indet::kCount && !dead; ++v) {
            int e = t.m.e[v];
            if (!e) continue;
            if (!assignment[v]) {
                fixed.e[v] = static_cast<std::uint8_t>(e);
                continue;
            }
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(Poly::constant(FieldElem(1)));
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * *assignment[v]);
            if (pw[e].is_zero()) dead = true;
            else prod = prod * pw[e];
        }
        if (dead) continue;
        for (const Term& tp : prod.terms()) acc.add(tp.m.mul(fixed), tp.c);
    }
    return acc.take();
}

Poly Poly::coefficient_extract(const Monomial& vm) const {
    for (int v = 0; v < indet::kCount; ++v)
        if (vm.e[v] && !indet::is_var(v))
            throw Error("coefficient_extract: monomial must involve only variable components");
    std::vector<Term> out;
    for (const Term& t : terms_) {
        bool match = true;
        for (int v = indet::kVar; v < indet::kParam; ++v)
            if (t.m.e[v] != vm.e[v]) {
                match = false;
                break;
            }
        if (!match) continue;
        Monomial rest = t.m;
        for (int v = indet::kVar; v < indet::kParam; ++v) rest.e[v] = 0;
        out.push_back({rest, t.c});
    }
    return from_terms(std::move(out));
}

std::vector<Monomial> Poly::variable_support() const {
    std::vector<Monomial> pats;
    for (const Term& t : terms_) {
        Monomial vm = Monomial::one();
        for (int v = indet::kVar; v < indet::kParam; ++v) vm.e[v] = t.m.e[v];
        pats.push_back(vm);
    }
    std::sort(pats.begin(), pats.end(), mono_less);
    pats.erase(std::unique(pats.begin(), pats.end()), pats.end());
    return pats;
}

Poly Poly::exact_divide(const Poly& q) const {
    if (q.is_zero()) throw Error("exact_divide: division by zero polynomial");
    Poly r = *this;
    std::vector<Term> quot;
    const Term& qlead = q.terms_.front();
    while (!r.is_zero()) {
        const Monomial rlead_m = r.terms_.front().m;
        if (!qlead.m.divides(rlead_m))
            throw Error("exact_divide: not divisible");
        Term t{qlead.m.divide_into(rlead_m), r.terms_.front().c / qlead.c};
        r = r - q * Poly::monomial(t.m, t.c);
        if (!r.is_zero() && mono_cmp(r.terms_.front().m, rlead_m) >= 0)
            throw Error("exact_divide: not divisible");
        quot.push_back(std::move(t));
    }
    return from_terms(std::move(quot));
}

std::optional<MultiDegree> Poly::multidegree() const {
    std::optional<MultiDegree> md;
    for (const Term& t : terms_) {
        MultiDegree cur;
        for (int v = 0; v < indet::kVar; ++v) cur.d += t.m.e[v];
        for (int s = 0; s < 4; ++s)
            cur.mu[s] = t.m.e[indet::var(s, 0)] + t.m.e[indet::var(s, 1)];
        if (!md) md = cur;
        else if (!(*md == cur)) return std::nullopt;
    }
    if (!md) md = MultiDegree{};  // zero polynomial: degree of the empty sum
    return md;
}

Poly ground_form() {
    std::vector<Term> ts;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    Monomial m = Monomial::of(indet::form_coeff(i, j, k, l));
                    m.e[indet::var(0, i)] = 1;
                    m.e[indet::var(1, j)] = 1;
                    m.e[indet::var(2, k)] = 1;
                    m.e[indet::var(3, l)] = 1;
                    ts.push_back({m, FieldElem(1)});
                }
    return Poly::from_terms(std::move(ts));
}

// --- text format ----------------------------------------------------------

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        std::string coeff;
        bool neg = false;
        if (t.c.is_rational()) {
            const Rational& r = t.c.rat();
            neg = r.sign() < 0;
            coeff = r.abs().str();
        } else {
            coeff = t.c.str();
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        os << coeff;
        for (int v = 0; v < indet::kCount; ++v) {
            int e = t.m.e[v];
            if (!e) continue;
            os << "*" << indet::name(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// splits "COEFF*FACTOR*..." on '*' outside parentheses
std::vector<std::string> split_factors(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '*' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Term parse_term(const std::string& s) {
    auto factors = split_factors(s);
    // leading factor may be a coefficient; "I*R" inside parens already handled
    std::size_t start = 0;
    FieldElem c(1);
    const std::string& head = factors[0];
    if (!head.empty() && (head[0] == '(' || head[0] == '-' || head[0] == '+' || (head[0] >= '0' && head[0] <= '9'))) {
        c = FieldElem::parse(head);
        start = 1;
    }
    Monomial m = Monomial::one();
    for (std::size_t i = start; i < factors.size(); ++i) {
        const std::string& f = factors[i];
        auto caret = f.find('^');
        std::string name = caret == std::string::npos ? f : f.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) {
            e = std::stoi(f.substr(caret + 1));
            if (e < 0 || e > 255) throw Error("poly: exponent out of range in '" + f + "'");
        }
        int v = indet::from_name(name);
        int tot = m.e[v] + e;
        if (tot > 255) throw Error("poly: exponent overflow");
        m.e[v] = static_cast<std::uint8_t>(tot);
    }
    return {m, c};
}

}  // namespace

Poly Poly::parse(const std::string& s) {
    std::string trimmed;
    {
        std::size_t b = s.find_first_not_of(" \t\n");
        std::size_t e = s.find_last_not_of(" \t\n");
        if (b == std::string::npos) throw Error("poly: empty input");
        trimmed = s.substr(b, e - b + 1);
    }
    if (trimmed == "0") return Poly();
    // split into signed terms at depth 0: separators are " + " and " - "
    TermAccumulator acc;
    int depth = 0;
    std::size_t start = 0;
    int sign = 1;
    if (trimmed[0] == '-') {
        sign = -1;
        start = 1;
    }
    std::size_t i = start;
    auto flush = [&](std::size_t end, int next_sign) {
        std::string piece = trimmed.substr(start, end - start);
        if (piece.empty()) throw Error("poly: empty term");
        Term t = parse_term(piece);
        acc.add(t.m, sign < 0 ? -t.c : t.c);
        sign = next_sign;
    };
    while (i < trimmed.size()) {
        char ch = trimmed[i];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if (depth == 0 && ch == ' ' && i + 2 < trimmed.size() &&
                 (trimmed[i + 1] == '+' || trimmed[i + 1] == '-') && trimmed[i + 2] == ' ') {
            flush(i, trimmed[i + 1] == '-' ? -1 : 1);
            i += 3;
            start = i;
            continue;
        }
        ++i;
    }
    flush(trimmed.size(), 1);
    return acc.take();
}

}  // namespace qovar
