#pragma once

#include "lie_algebra.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

namespace liecg {

/// PBW monomial: exponent vector over the ordered basis of g.
struct Monomial {
    std::vector<int> e;

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }

    /// Word form: basis indices in non-decreasing order.
    std::vector<std::size_t> word() const {
        std::vector<std::size_t> w;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) w.push_back(i);
        return w;
    }
};

/// Graded-lex: lower degree first; within a degree, lexicographically larger
/// exponent vector first (so x^2 precedes xy precedes y^2).
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e > b.e;
    }
};

inline Monomial one_mono(std::size_t n) { return Monomial{std::vector<int>(n, 0)}; }

inline Monomial gen_mono(std::size_t n, std::size_t i) {
    Monomial m = one_mono(n);
    m.e[i] = 1;
    return m;
}

/// Element of U(g): finitely supported map from normal-ordered monomials to
/// rational coefficients. Zero coefficients are never stored.
struct UElement {
    std::map<Monomial, Rational, MonoLess> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const { return terms.empty() ? -1 : terms.rbegin()->first.degree(); }

    UElement& add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return *this;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
        return *this;
    }
    UElement& operator+=(const UElement& o) {
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    UElement& axpy(const Rational& a, const UElement& o) {
        for (const auto& [m, c] : o.terms) add_term(m, a * c);
        return *this;
    }
    UElement& operator*=(const Rational& a) {
        if (a == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [m, c] : terms) c *= a;
        return *this;
    }
    bool operator==(const UElement& o) const { return terms == o.terms; }
};

inline UElement u_zero() { return {}; }

inline UElement u_scalar(std::size_t n, const Rational& c) {
    UElement u;
    u.add_term(one_mono(n), c);
    return u;
}

inline UElement u_gen(std::size_t n, std::size_t i) {
    UElement u;
    u.add_term(gen_mono(n, i), Rational(1));
    return u;
}

/// U(g) with the PBW order fixed by the declared basis order of g.
/// Normal-form rewriting is memoized; the cache is guarded for concurrent
/// readers.
class UAlgebra {
  public:
    explicit UAlgebra(AlgebraPtr g) : g_(std::move(g)) {}

    const LieAlgebra& algebra() const { return *g_; }
    AlgebraPtr algebra_ptr() const { return g_; }
    std::size_t dim() const { return g_->dim(); }

    /// Normal form of (monomial) * b_i.
    const UElement& mono_times_gen(const Monomial& m, std::size_t i) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find({m.e, i});
            if (it != cache_.end()) return it->second;
        }
        UElement result = compute_mono_times_gen(m, i);
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = cache_.emplace(std::make_pair(m.e, i), std::move(result));
        return it->second;
    }

    UElement element_times_gen(const UElement& u, std::size_t i) const {
        UElement r;
        for (const auto& [m, c] : u.terms) r.axpy(c, mono_times_gen(m, i));
        return r;
    }

    UElement multiply(const UElement& u, const UElement& v) const {
        UElement r;
        for (const auto& [mv, cv] : v.terms) {
            // u * mv = ((u b_{j1}) b_{j2}) ...  folded over mv's word
            UElement cur = u;
            for (std::size_t j : mv.word()) cur = element_times_gen(cur, j);
            r.axpy(cv, cur);
        }
        return r;
    }

    /// Normal form of coeff * b_{w1} b_{w2} ... b_{wk}.
    UElement normalize(const std::vector<std::size_t>& word, const Rational& coeff) const {
        UElement u = u_scalar(dim(), coeff);
        for (std::size_t i : word) u = element_times_gen(u, i);
        return u;
    }

    /// Principal anti-automorphism: S(b_i) = -b_i, extended
    /// anti-multiplicatively; S o S = id.
    UElement antipode(const UElement& u) const {
        UElement r;
        for (const auto& [m, c] : u.terms) {
            auto w = m.word();
            std::vector<std::size_t> rev(w.rbegin(), w.rend());
            Rational sign = (w.size() % 2 == 0) ? 1 : -1;
            r += normalize(rev, c * sign);
        }
        return r;
    }

    Rational counit(const UElement& u) const {
        auto it = u.terms.find(one_mono(dim()));
        return it == u.terms.end() ? Rational(0) : it->second;
    }

  private:
    UElement compute_mono_times_gen(const Monomial& m, std::size_t i) const {
        std::size_t n = dim();
        // largest letter of m
        std::size_t j = n;
        for (std::size_t k = n; k-- > 0;)
            if (m.e[k] > 0) {
                j = k;
                break;
            }
        if (j == n || j <= i) {  // already normal: append b_i
            Monomial r = m;
            r.e[i] += 1;
            UElement u;
            u.add_term(r, Rational(1));
            return u;
        }
        // m = m' b_j with j > i:  m b_i = (m' b_i) b_j + m' [b_j, b_i]
        Monomial mp = m;
        mp.e[j] -= 1;
        UElement left = mono_times_gen(mp, i);
        UElement result = element_times_gen(left, j);
        const Vec& br = g_->bracket_basis(j, i);
        for (std::size_t k = 0; k < n; ++k)
            if (br[k] != 0) result.axpy(br[k], mono_times_gen(mp, k));
        return result;
    }

    AlgebraPtr g_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::vector<int>, std::size_t>, UElement> cache_;
};

/// All PBW monomials of degree <= d in graded-lex order.
/// Count is C(dim + d, d).
inline std::vector<Monomial> filtration_basis(std::size_t dim, int d) {
    std::vector<Monomial> out;
    // enumerate recursively, then sort canonically
    std::vector<int> stack(dim, 0);
    auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
        if (pos == dim) {
            out.push_back(Monomial{stack});
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            stack[pos] = k;
            self(self, pos + 1, rem - k);
        }
        stack[pos] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return MonoLess{}(a, b);
    });
    return out;
}

struct MonoIndex {
    std::map<Monomial, std::size_t, MonoLess> index;
    std::vector<Monomial> basis;

    explicit MonoIndex(std::vector<Monomial> b) : basis(std::move(b)) {
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    }
    std::size_t size() const { return basis.size(); }
};

inline Vec element_coords(const UElement& u, const MonoIndex& ix) {
    Vec v = zero_vec(ix.size());
    for (const auto& [m, c] : u.terms) {
        auto it = ix.index.find(m);
        if (it == ix.index.end()) throw std::out_of_range("element exceeds filtration degree");
        v[it->second] = c;
    }
    return v;
}

inline UElement element_from_coords(const Vec& v, const MonoIndex& ix) {
    UElement u;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) u.add_term(ix.basis[i], v[i]);
    return u;
}

// ---- canonical text form -------------------------------------------------
//
// sum of terms "c * b1^e1 b2^e2 ..." in graded-lex order; "^1" omitted, the
// constant term is the bare coefficient, "0" for the zero element.

inline std::string mono_str(const LieAlgebra& g, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += g.labels[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

inline std::string element_str(const LieAlgebra& g, const UElement& u) {
    if (u.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : u.terms) {
        if (!s.empty()) s += " + ";
        if (m.degree() == 0) {
            s += rational_str(c);
        } else {
            s += rational_str(c) + " * " + mono_str(g, m);
        }
    }
    return s;
}

inline UElement parse_element(const LieAlgebra& g, const std::string& text) {
    UElement u;
    if (text == "0") return u;
    std::size_t n = g.dim();
    std::size_t pos = 0;
    auto next_term = [&](std::size_t from) {
        return text.find(" + ", from);
    };
    while (pos < text.size()) {
        std::size_t end = next_term(pos);
        std::string term = text.substr(pos, end == std::string::npos ? std::string::npos
                                                                     : end - pos);
        pos = (end == std::string::npos) ? text.size() : end + 3;
        std::istringstream iss(term);
        std::string coeff_tok;
        iss >> coeff_tok;
        Rational c = parse_rational(coeff_tok);
        Monomial m = one_mono(n);
        std::string tok;
        while (iss >> tok) {
            if (tok == "*") continue;
            int exp = 1;
            auto caret = tok.find('^');
            std::string lab = tok;
            if (caret != std::string::npos) {
                lab = tok.substr(0, caret);
                exp = std::stoi(tok.substr(caret + 1));
            }
            auto idx = g.label_index(lab);
            if (!idx) throw ParseError("unknown basis label '" + lab + "'");
            m.e[*idx] += exp;
        }
        u.add_term(m, c);
    }
    return u;
}

// ---- coproduct -----------------------------------------------------------

struct PairLess {
    bool operator()(const std::pair<Monomial, Monomial>& a,
                    const std::pair<Monomial, Monomial>& b) const {
        MonoLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return less(a.second, b.second);
    }
};

/// Element of U(g) (x) U(g) with both legs in normal form.
using TensorElement = std::map<std::pair<Monomial, Monomial>, Rational, PairLess>;

inline void tensor_add(TensorElement& t, const Monomial& a, const Monomial& b,
                       const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

inline Rational binomial(int n, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// Delta(b_i) = b_i(x)1 + 1(x)b_i extended multiplicatively. Splitting a
/// normal monomial keeps both legs normal, so no rewriting is needed.
inline TensorElement coproduct(const UAlgebra& ua, const UElement& u) {
    std::size_t n = ua.dim();
    TensorElement out;
    for (const auto& [m, c] : u.terms) {
        std::vector<std::pair<std::pair<Monomial, Monomial>, Rational>> splits;
        splits.push_back({{one_mono(n), one_mono(n)}, c});
        for (std::size_t i = 0; i < n; ++i) {
            if (m.e[i] == 0) continue;
            std::vector<std::pair<std::pair<Monomial, Monomial>, Rational>> next;
            for (const auto& [legs, cc] : splits)
                for (int a = 0; a <= m.e[i]; ++a) {
                    auto l = legs.first;
                    auto r = legs.second;
                    l.e[i] += a;
                    r.e[i] += m.e[i] - a;
                    next.push_back({{l, r}, cc * binomial(m.e[i], a)});
                }
            splits = std::move(next);
        }
        for (const auto& [legs, cc] : splits) tensor_add(out, legs.first, legs.second, cc);
    }
    return out;
}

inline TensorElement tensor_flip(const TensorElement& t) {
    TensorElement out;
    for (const auto& [legs, c] : t) tensor_add(out, legs.second, legs.first, c);
    return out;
}

}  // namespace liecg
