#pragma once

#include "ideal.hpp"

#include <limits>
#include <memory>
#include <variant>

namespace liecg {

struct LevelExceeded : std::runtime_error {
    LevelExceeded() : std::runtime_error("action escapes the truncation level") {}
};
struct InsufficientLevel : std::runtime_error {
    InsufficientLevel()
        : std::runtime_error("truncation level below the certification bound (strict mode)") {}
};
struct NotSubordinate : std::runtime_error {
    NotSubordinate() : std::runtime_error("functional does not kill [h,h]") {}
};
struct InvalidModule : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotScalarAction : std::runtime_error {
    std::size_t witness;
    explicit NotScalarAction(std::size_t w)
        : std::runtime_error("central element does not act as a scalar (witness basis vector " +
                             std::to_string(w) + ")"),
          witness(w) {}
};

/// Sparse coordinate vector over a module basis.
using SparseVec = std::map<std::size_t, Rational>;

inline void sparse_add(SparseVec& v, std::size_t i, const Rational& c) {
    if (c == 0) return;
    auto it = v.find(i);
    if (it == v.end()) {
        v.emplace(i, c);
    } else {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

inline void sparse_axpy(SparseVec& dst, const Rational& a, const SparseVec& src) {
    for (const auto& [i, c] : src) sparse_add(dst, i, a * c);
}

// ---- finite-dimensional matrix representations -----------------------------

struct MatrixRep {
    AlgebraPtr g;
    std::size_t n = 0;
    std::vector<Mat> images;  // one n x n matrix per basis element
};

/// Checks rho([b_i,b_j]) = [rho(b_i), rho(b_j)] for all pairs and n >= 1.
inline MatrixRep make_rep(AlgebraPtr g, std::vector<Mat> images) {
    std::size_t dim = g->dim();
    if (images.size() != dim) throw InvalidModule("wrong number of generator images");
    std::size_t n = images.empty() ? 0 : images[0].size();
    if (n == 0) throw InvalidModule("zero-dimensional representation rejected");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Mat lhs(n, zero_vec(n));
            const Vec& br = g->bracket_basis(i, j);
            for (std::size_t k = 0; k < dim; ++k)
                if (br[k] != 0)
                    for (std::size_t r = 0; r < n; ++r) add_scaled(lhs[r], images[k][r], br[k]);
            Mat rhs = mat_mul(images[i], images[j]);
            Mat ji = mat_mul(images[j], images[i]);
            for (std::size_t r = 0; r < n; ++r) add_scaled(rhs[r], ji[r], Rational(-1));
            if (lhs != rhs) throw InvalidModule("bracket relation fails for generator pair");
        }
    return MatrixRep{std::move(g), n, std::move(images)};
}

/// Contragredient: rho*(x) = -rho(x)^T.
inline MatrixRep dual(const MatrixRep& r) {
    std::vector<Mat> images;
    for (const auto& m : r.images) {
        Mat t = mat_transpose(m);
        for (auto& row : t)
            for (auto& x : row) x = -x;
        images.push_back(std::move(t));
    }
    return make_rep(r.g, std::move(images));
}

/// x |-> rho1(x) (x) I + I (x) rho2(x).
inline MatrixRep tensor(const MatrixRep& a, const MatrixRep& b) {
    if (a.g->labels != b.g->labels) throw InvalidModule("tensor factors over different algebras");
    std::size_t n = a.n * b.n;
    std::vector<Mat> images;
    for (std::size_t i = 0; i < a.g->dim(); ++i) {
        Mat m(n, zero_vec(n));
        for (std::size_t p = 0; p < a.n; ++p)
            for (std::size_t q = 0; q < b.n; ++q) {
                for (std::size_t p2 = 0; p2 < a.n; ++p2)
                    m[p * b.n + q][p2 * b.n + q] += a.images[i][p][p2];
                for (std::size_t q2 = 0; q2 < b.n; ++q2)
                    m[p * b.n + q][p * b.n + q2] += b.images[i][q][q2];
            }
        images.push_back(std::move(m));
    }
    return make_rep(a.g, std::move(images));
}

inline MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
    std::size_t n = a.n + b.n;
    std::vector<Mat> images;
    for (std::size_t i = 0; i < a.g->dim(); ++i) {
        Mat m(n, zero_vec(n));
        for (std::size_t r = 0; r < a.n; ++r)
            for (std::size_t c = 0; c < a.n; ++c) m[r][c] = a.images[i][r][c];
        for (std::size_t r = 0; r < b.n; ++r)
            for (std::size_t c = 0; c < b.n; ++c) m[a.n + r][a.n + c] = b.images[i][r][c];
        images.push_back(std::move(m));
    }
    return make_rep(a.g, std::move(images));
}

/// 1-dimensional representation attached to a functional; make_rep's bracket
/// check enforces that it kills [g,g].
inline MatrixRep character_rep(AlgebraPtr g, const Functional& f) {
    std::vector<Mat> images;
    for (std::size_t i = 0; i < g->dim(); ++i) images.push_back(Mat{{f.coords[i]}});
    return make_rep(std::move(g), std::move(images));
}

inline MatrixRep trivial_rep(AlgebraPtr g) {
    Functional zero{zero_vec(g->dim())};
    return character_rep(std::move(g), zero);
}

struct SubalgebraContext {
    AlgebraPtr algebra;  // h in its own echelon basis
    Subspace h;          // rows = echelon basis inside the parent
};

inline SubalgebraContext subalgebra_context(const LieAlgebra& g, const Subspace& h,
                                            const std::string& name) {
    return SubalgebraContext{subalgebra_algebra(g, h, name), h};
}

/// Restriction of a matrix representation to a subalgebra.
inline MatrixRep restrict_rep(const MatrixRep& r, const SubalgebraContext& sub) {
    std::vector<Mat> images;
    for (std::size_t a = 0; a < sub.h.dim(); ++a) {
        Mat m(r.n, zero_vec(r.n));
        for (std::size_t i = 0; i < r.g->dim(); ++i)
            if (sub.h.basis[a][i] != 0)
                for (std::size_t row = 0; row < r.n; ++row)
                    add_scaled(m[row], r.images[i][row], sub.h.basis[a][i]);
        images.push_back(std::move(m));
    }
    return make_rep(sub.algebra, std::move(images));
}

// ---- module handles --------------------------------------------------------

/// Common interface of the concrete U(g)-modules: a (possibly truncated)
/// graded basis and the action of the generators of g on sparse coordinate
/// vectors. Implementations are immutable after construction.
class UModule {
  public:
    virtual ~UModule() = default;

    virtual const AlgebraPtr& algebra() const = 0;
    virtual std::size_t size() const = 0;
    virtual int level_of(std::size_t j) const = 0;
    virtual int max_level() const = 0;
    virtual SparseVec apply_gen(std::size_t i, const SparseVec& v) const = 0;
    virtual std::string kind() const = 0;

    /// Probe level that certifies degree-d kernels for this module kind.
    virtual int certification_bound(int d) const = 0;

    bool certified_at(int d) const { return certification_bound(d) + d <= max_level(); }

    /// Basis vectors usable as certification probes at degree d.
    virtual std::vector<std::size_t> probe_indices(int d) const {
        int cap = std::min(certification_bound(d), max_level() - d);
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < size(); ++j)
            if (level_of(j) <= cap) out.push_back(j);
        return out;
    }
};

using ModulePtr = std::shared_ptr<const UModule>;

class MatrixModule final : public UModule {
  public:
    explicit MatrixModule(MatrixRep rep) : rep_(std::move(rep)) {}

    const AlgebraPtr& algebra() const override { return rep_.g; }
    std::size_t size() const override { return rep_.n; }
    int level_of(std::size_t) const override { return 0; }
    int max_level() const override { return std::numeric_limits<int>::max() / 4; }
    std::string kind() const override { return "matrix"; }
    int certification_bound(int) const override { return 0; }

    SparseVec apply_gen(std::size_t i, const SparseVec& v) const override {
        SparseVec r;
        for (const auto& [col, c] : v)
            for (std::size_t row = 0; row < rep_.n; ++row)
                sparse_add(r, row, c * rep_.images[i][row][col]);
        return r;
    }

    const MatrixRep& rep() const { return rep_; }

  private:
    MatrixRep rep_;
};

inline ModulePtr as_module(MatrixRep r) { return std::make_shared<MatrixModule>(std::move(r)); }

/// Truncated induced module U(g) (x)_{U(h)} W with optional half-trace twist.
/// Basis: complement-monomials of degree <= L tensor a W-basis. Actions are
/// precomputed by PBW straightening in an adapted basis that lists the
/// complement coordinates first.
class InducedModule final : public UModule {
  public:
    struct Column {
        bool escaped = false;
        std::vector<std::pair<std::size_t, Rational>> entries;
    };

    InducedModule(AlgebraPtr g, const Subspace& h, std::variant<Functional, MatrixRep> w,
                  bool twist, int level, bool weight_graded = false)
        : g_(std::move(g)), h_(h), level_(level), weight_graded_(weight_graded) {
        const LieAlgebra& galg = *g_;
        if (!is_subalgebra(galg, h)) throw NotASubalgebra();
        auto comp = complement_indices(galg, h);
        comp_dim_ = comp.size();
        std::size_t n = galg.dim();

        Mat rows;
        std::vector<std::string> labels;
        for (auto c : comp) {
            rows.push_back(unit_vec(n, c));
            labels.push_back(galg.labels[c]);
        }
        for (std::size_t a = 0; a < h.dim(); ++a) {
            rows.push_back(h.basis[a]);
            labels.push_back("h" + std::to_string(a));
        }
        adapted_ = std::make_unique<UAlgebra>(
            change_of_basis(galg, rows, std::move(labels), galg.name + ".adapted"));
        Mat cols = mat_transpose(rows);
        orig_to_adapted_.assign(n, zero_vec(n));
        for (std::size_t i = 0; i < n; ++i) {
            auto sol = solve(cols, unit_vec(n, i));
            for (std::size_t j = 0; j < n; ++j) orig_to_adapted_[j][i] = sol[0][j];
        }

        Functional th = twist ? theta(galg, h) : Functional{zero_vec(h.dim())};
        if (std::holds_alternative<Functional>(w)) {
            Functional f = std::get<Functional>(w);
            if (f.coords.size() != h.dim()) throw InvalidModule("functional/subalgebra mismatch");
            for (std::size_t a = 0; a < h.dim(); ++a)
                for (std::size_t b = a + 1; b < h.dim(); ++b) {
                    Vec br = galg.bracket(h.basis[a], h.basis[b]);
                    if (f(coords_in(h, br)) != 0) throw NotSubordinate();
                }
            wdim_ = 1;
            for (std::size_t a = 0; a < h.dim(); ++a)
                haction_.push_back(Mat{{f.coords[a] + th.coords[a]}});
        } else {
            const MatrixRep& rep = std::get<MatrixRep>(w);
            if (rep.g->dim() != h.dim()) throw InvalidModule("rep/subalgebra dimension mismatch");
            wdim_ = rep.n;
            for (std::size_t a = 0; a < h.dim(); ++a) {
                Mat m = rep.images[a];
                for (std::size_t r = 0; r < wdim_; ++r) m[r][r] += th.coords[a];
                haction_.push_back(std::move(m));
            }
        }

        auto monos = filtration_basis(comp_dim_, level_);
        for (const auto& m : monos)
            for (std::size_t w_i = 0; w_i < wdim_; ++w_i) {
                slot_index_.emplace(std::make_pair(m.e, w_i), basis_.size());
                basis_.push_back({m.e, w_i});
            }

        build_action_tables();
    }

    const AlgebraPtr& algebra() const override { return g_; }
    std::size_t size() const override { return basis_.size(); }
    int level_of(std::size_t j) const override {
        int d = 0;
        for (int x : basis_[j].first) d += x;
        return d;
    }
    int max_level() const override { return level_; }
    std::string kind() const override { return "induced"; }
    int certification_bound(int d) const override {
        // weight-graded actions have matrix entries polynomial of total
        // degree <= 2d in the exponent multi-index (one raising contraction
        // contributes a quadratic factor), so the level-<=2d simplex grid is
        // unisolvent; the generic bound is the d * dim(g) one.
        return weight_graded_ ? 2 * d : d * static_cast<int>(g_->dim());
    }

    SparseVec apply_gen(std::size_t i, const SparseVec& v) const override {
        SparseVec r;
        for (const auto& [col, c] : v) {
            const Column& column = action_[i][col];
            if (column.escaped) throw LevelExceeded();
            for (const auto& [row, x] : column.entries) sparse_add(r, row, c * x);
        }
        return r;
    }

    std::size_t complement_dim() const { return comp_dim_; }
    std::size_t w_dim() const { return wdim_; }
    const Subspace& subalgebra() const { return h_; }
    std::size_t slot(const std::vector<int>& cexp, std::size_t w) const {
        return slot_index_.at({cexp, w});
    }

  private:
    void build_action_tables() {
        std::size_t n = g_->dim();
        std::vector<std::vector<Column>> adapted(n, std::vector<Column>(basis_.size()));
        for (std::size_t col = 0; col < basis_.size(); ++col) {
            std::vector<std::size_t> cword;
            for (std::size_t k = 0; k < comp_dim_; ++k)
                for (int t = 0; t < basis_[col].first[k]; ++t) cword.push_back(k);
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<std::size_t> word;
                word.push_back(j);
                word.insert(word.end(), cword.begin(), cword.end());
                UElement r = adapted_->normalize(word, Rational(1));
                Column c;
                std::map<std::size_t, Rational> acc;
                for (const auto& [mono, coeff] : r.terms) {
                    std::vector<int> cexp(mono.e.begin(),
                                          mono.e.begin() + static_cast<long>(comp_dim_));
                    int cdeg = 0;
                    for (int x : cexp) cdeg += x;
                    if (cdeg > level_) {
                        c.escaped = true;
                        break;
                    }
                    Vec wv = unit_vec(wdim_, basis_[col].second);
                    for (std::size_t k = n; k-- > comp_dim_;) {
                        std::size_t a = k - comp_dim_;
                        for (int t = 0; t < mono.e[k]; ++t) wv = mat_apply(haction_[a], wv);
                    }
                    for (std::size_t w_i = 0; w_i < wdim_; ++w_i)
                        if (wv[w_i] != 0) acc[slot(cexp, w_i)] += coeff * wv[w_i];
                }
                if (!c.escaped)
                    for (const auto& [row, x] : acc)
                        if (x != 0) c.entries.push_back({row, x});
                adapted[j][col] = std::move(c);
            }
        }
        action_.assign(n, std::vector<Column>(basis_.size()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t col = 0; col < basis_.size(); ++col) {
                Column out;
                std::map<std::size_t, Rational> acc;
                for (std::size_t j = 0; j < n; ++j) {
                    const Rational& cf = orig_to_adapted_[j][i];
                    if (cf == 0) continue;
                    const Column& c = adapted[j][col];
                    if (c.escaped) {
                        out.escaped = true;
                        break;
                    }
                    for (const auto& [row, x] : c.entries) acc[row] += cf * x;
                }
                if (!out.escaped)
                    for (const auto& [row, x] : acc)
                        if (x != 0) out.entries.push_back({row, x});
                action_[i][col] = std::move(out);
            }
    }

    AlgebraPtr g_;
    Subspace h_;
    int level_;
    bool weight_graded_;
    std::size_t comp_dim_ = 0, wdim_ = 1;
    std::unique_ptr<UAlgebra> adapted_;
    Mat orig_to_adapted_;
    std::vector<Mat> haction_;
    std::vector<std::pair<std::vector<int>, std::size_t>> basis_;
    std::map<std::pair<std::vector<int>, std::size_t>, std::size_t> slot_index_;
    std::vector<std::vector<Column>> action_;  // action_[gen][col]
};

/// Polynomials in one variable truncated at degree N: a acts as
/// multiplication by t, b as the shift p(t) |-> p(t-1). A concrete model of
/// U/U(b-1) for the non-abelian 2-dimensional algebra {[a,b]=b}.
class ShiftModule final : public UModule {
  public:
    ShiftModule(AlgebraPtr aff1, int truncation) : g_(std::move(aff1)), n_(truncation) {
        if (g_->dim() != 2 || g_->bracket_basis(0, 1) != Vec{Rational(0), Rational(1)})
            throw InvalidModule("shift module requires the algebra {[a,b]=b}");
    }

    const AlgebraPtr& algebra() const override { return g_; }
    std::size_t size() const override { return static_cast<std::size_t>(n_) + 1; }
    int level_of(std::size_t j) const override { return static_cast<int>(j); }
    int max_level() const override { return n_; }
    std::string kind() const override { return "shift"; }
    int certification_bound(int d) const override { return 2 * d; }

    SparseVec apply_gen(std::size_t i, const SparseVec& v) const override {
        SparseVec r;
        for (const auto& [k, c] : v) {
            if (i == 0) {
                if (k + 1 > static_cast<std::size_t>(n_)) throw LevelExceeded();
                sparse_add(r, k + 1, c);
            } else {
                for (std::size_t j = 0; j <= k; ++j) {
                    Rational b = binomial(static_cast<int>(k), static_cast<int>(j));
                    if ((k - j) % 2 == 1) b = -b;
                    sparse_add(r, j, c * b);
                }
            }
        }
        return r;
    }

  private:
    AlgebraPtr g_;
    int n_;
};

/// Internal tensor product, acting through the coproduct:
/// x(v (x) w) = xv (x) w + v (x) xw.
class TensorModule final : public UModule {
  public:
    TensorModule(ModulePtr a, ModulePtr b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_->algebra()->labels != b_->algebra()->labels)
            throw InvalidModule("tensor factors over different algebras");
    }

    const AlgebraPtr& algebra() const override { return a_->algebra(); }
    std::size_t size() const override { return a_->size() * b_->size(); }
    int level_of(std::size_t j) const override {
        return a_->level_of(j / b_->size()) + b_->level_of(j % b_->size());
    }
    int max_level() const override { return a_->max_level() + b_->max_level(); }
    std::string kind() const override { return "tensor"; }
    int certification_bound(int d) const override {
        return a_->certification_bound(d) + b_->certification_bound(d);
    }
    std::vector<std::size_t> probe_indices(int d) const override {
        auto pa = a_->probe_indices(d);
        auto pb = b_->probe_indices(d);
        std::vector<std::size_t> out;
        out.reserve(pa.size() * pb.size());
        for (auto i : pa)
            for (auto j : pb) out.push_back(i * b_->size() + j);
        return out;
    }

    SparseVec apply_gen(std::size_t g, const SparseVec& v) const override {
        std::size_t nb = b_->size();
        SparseVec r;
        for (const auto& [idx, c] : v) {
            std::size_t p = idx / nb, q = idx % nb;
            SparseVec la = a_->apply_gen(g, SparseVec{{p, c}});
            for (const auto& [p2, x] : la) sparse_add(r, p2 * nb + q, x);
            SparseVec lb = b_->apply_gen(g, SparseVec{{q, c}});
            for (const auto& [q2, x] : lb) sparse_add(r, p * nb + q2, x);
        }
        return r;
    }

    const ModulePtr& left() const { return a_; }
    const ModulePtr& right() const { return b_; }

  private:
    ModulePtr a_, b_;
};

inline ModulePtr tensor_modules(ModulePtr a, ModulePtr b) {
    return std::make_shared<TensorModule>(std::move(a), std::move(b));
}

/// Finite direct sum; ker(sum) = intersection of the summands' kernels.
class SumModule final : public UModule {
  public:
    explicit SumModule(std::vector<ModulePtr> children) : children_(std::move(children)) {
        if (children_.empty()) throw InvalidModule("empty direct sum rejected");
        offsets_.push_back(0);
        for (const auto& c : children_) {
            if (c->algebra()->labels != children_[0]->algebra()->labels)
                throw InvalidModule("direct sum over different algebras");
            offsets_.push_back(offsets_.back() + c->size());
        }
    }

    const AlgebraPtr& algebra() const override { return children_[0]->algebra(); }
    std::size_t size() const override { return offsets_.back(); }
    int level_of(std::size_t j) const override {
        std::size_t c = child_of(j);
        return children_[c]->level_of(j - offsets_[c]);
    }
    int max_level() const override {
        int m = std::numeric_limits<int>::max() / 4;
        for (const auto& c : children_) m = std::min(m, c->max_level());
        return m;
    }
    std::string kind() const override { return "sum"; }
    int certification_bound(int d) const override {
        int b = 0;
        for (const auto& c : children_) b = std::max(b, c->certification_bound(d));
        return b;
    }
    std::vector<std::size_t> probe_indices(int d) const override {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < children_.size(); ++c)
            for (auto j : children_[c]->probe_indices(d)) out.push_back(offsets_[c] + j);
        return out;
    }

    SparseVec apply_gen(std::size_t g, const SparseVec& v) const override {
        SparseVec r;
        for (const auto& [idx, c] : v) {
            std::size_t ch = child_of(idx);
            SparseVec img = children_[ch]->apply_gen(g, SparseVec{{idx - offsets_[ch], c}});
            for (const auto& [row, x] : img) sparse_add(r, offsets_[ch] + row, x);
        }
        return r;
    }

    std::size_t summands() const { return children_.size(); }

  private:
    std::size_t child_of(std::size_t j) const {
        std::size_t c = 0;
        while (offsets_[c + 1] <= j) ++c;
        return c;
    }
    std::vector<ModulePtr> children_;
    std::vector<std::size_t> offsets_;
};

inline ModulePtr direct_sum_modules(std::vector<ModulePtr> children) {
    return std::make_shared<SumModule>(std::move(children));
}

/// A module viewed over a subalgebra: same carrier, generators of h acting
/// through their coordinates in g.
class RestrictedModule final : public UModule {
  public:
    RestrictedModule(ModulePtr parent, SubalgebraContext sub)
        : parent_(std::move(parent)), sub_(std::move(sub)) {}

    const AlgebraPtr& algebra() const override { return sub_.algebra; }
    std::size_t size() const override { return parent_->size(); }
    int level_of(std::size_t j) const override { return parent_->level_of(j); }
    int max_level() const override { return parent_->max_level(); }
    std::string kind() const override { return "restricted"; }
    int certification_bound(int d) const override { return parent_->certification_bound(d); }

    SparseVec apply_gen(std::size_t a, const SparseVec& v) const override {
        SparseVec r;
        for (std::size_t i = 0; i < sub_.h.basis[a].size(); ++i)
            if (sub_.h.basis[a][i] != 0)
                sparse_axpy(r, sub_.h.basis[a][i], parent_->apply_gen(i, v));
        return r;
    }

  private:
    ModulePtr parent_;
    SubalgebraContext sub_;
};

// ---- actions, kernels, weak containment ------------------------------------

inline SparseVec apply_monomial(const UModule& m, const Monomial& mono, SparseVec v) {
    auto w = mono.word();
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = m.apply_gen(*it, v);
    return v;
}

inline SparseVec apply_element(const UModule& m, const UElement& u, const SparseVec& v) {
    SparseVec r;
    for (const auto& [mono, c] : u.terms) sparse_axpy(r, c, apply_monomial(m, mono, v));
    return r;
}

/// Kernel of the module action on U_{<=d}, computed from the action on probe
/// basis vectors. The probe kernel always contains the true kernel slice;
/// `certified` marks the cases where the probe bound makes them equal. A
/// probe kernel of {0} is exact regardless.
inline TruncatedIdeal kernel_truncated(const UAlgebra& ua, const UModule& mod, int d,
                                       bool strict = true) {
    if (ua.algebra().labels != mod.algebra()->labels)
        throw InvalidModule("module/algebra mismatch");
    bool cert = mod.certified_at(d);
    if (strict && !cert) throw InsufficientLevel();
    MonoIndex ix(filtration_basis(ua.dim(), d));
    std::size_t n = ix.size();
    Mat kernel = mat_identity(n);
    for (auto p : mod.probe_indices(d)) {
        if (kernel.empty()) break;
        // action of every monomial on e_p, one generator application each
        std::vector<SparseVec> act(n);
        act[0] = SparseVec{{p, Rational(1)}};
        for (std::size_t j = 1; j < n; ++j) {
            const Monomial& m = ix.basis[j];
            std::size_t first = 0;
            while (m.e[first] == 0) ++first;
            Monomial rest = m;
            rest.e[first] -= 1;
            act[j] = mod.apply_gen(first, act[ix.index.at(rest)]);
        }
        // quick pass: does the current kernel already annihilate this probe?
        bool ok = true;
        std::vector<SparseVec> images(kernel.size());
        for (std::size_t r = 0; r < kernel.size() && ok; ++r) {
            SparseVec img;
            for (std::size_t j = 0; j < n; ++j)
                if (kernel[r][j] != 0) sparse_axpy(img, kernel[r][j], act[j]);
            if (!img.empty()) ok = false;
            images[r] = std::move(img);
        }
        if (ok) continue;
        // restrict: coefficient vectors c with sum_r c_r * images_r = 0
        for (std::size_t r = 0; r < kernel.size(); ++r)
            if (images[r].empty()) {
                SparseVec img;
                for (std::size_t j = 0; j < n; ++j)
                    if (kernel[r][j] != 0) sparse_axpy(img, kernel[r][j], act[j]);
                images[r] = std::move(img);
            }
        std::map<std::size_t, std::size_t> out_rows;
        for (const auto& img : images)
            for (const auto& [row, x] : img) out_rows.emplace(row, out_rows.size());
        Mat sys(out_rows.size(), zero_vec(kernel.size()));
        for (std::size_t r = 0; r < kernel.size(); ++r)
            for (const auto& [row, x] : images[r]) sys[out_rows.at(row)][r] = x;
        Mat coeff = nullspace(std::move(sys), kernel.size());
        Mat next;
        for (const auto& c : coeff) {
            Vec row = zero_vec(n);
            for (std::size_t r = 0; r < c.size(); ++r)
                if (c[r] != 0) add_scaled(row, kernel[r], c[r]);
            next.push_back(std::move(row));
        }
        kernel = std::move(next);
    }
    rref(kernel);
    if (kernel.empty()) cert = true;
    int cap = std::min(mod.certification_bound(d), mod.max_level() - d);
    return TruncatedIdeal{d, cap, cert, std::move(kernel)};
}

struct ContainmentReport {
    bool holds = false;
    bool certified = false;
    int degree = 0;
    std::optional<UElement> witness_element;
    std::optional<std::size_t> witness_probe;
};

/// pi weakly contained in rho: ker(pi) must contain ker(rho), so every basis
/// element of the degree-d kernel of rho has to annihilate pi's probes.
inline ContainmentReport weakly_contains(const UAlgebra& ua, const UModule& pi,
                                         const UModule& rho, int d, bool strict = true) {
    TruncatedIdeal k = kernel_truncated(ua, rho, d, strict);
    ContainmentReport rep;
    rep.degree = d;
    rep.certified = k.certified && pi.certified_at(d);
    rep.holds = true;
    auto probes = pi.probe_indices(d);
    for (const auto& u : ideal_members(ua, k)) {
        for (auto p : probes) {
            SparseVec img = apply_element(pi, u, SparseVec{{p, Rational(1)}});
            if (!img.empty()) {
                rep.holds = false;
                rep.witness_element = u;
                rep.witness_probe = p;
                return rep;
            }
        }
    }
    return rep;
}

/// Functional on the center of g by which it acts, verified to be scalar on
/// the degree-1 probe set (which certifies it on the whole module).
inline Functional central_character(const UModule& mod) {
    const LieAlgebra& g = *mod.algebra();
    Subspace z = center(g);
    Vec scalars = zero_vec(z.dim());
    auto probes = mod.probe_indices(1);
    for (std::size_t a = 0; a < z.dim(); ++a) {
        std::optional<Rational> s;
        for (auto j : probes) {
            SparseVec img;
            for (std::size_t i = 0; i < g.dim(); ++i)
                if (z.basis[a][i] != 0)
                    sparse_axpy(img, z.basis[a][i],
                                mod.apply_gen(i, SparseVec{{j, Rational(1)}}));
            Rational cand = 0;
            auto it = img.find(j);
            if (it != img.end()) {
                cand = it->second;
                img.erase(it);
            }
            if (!img.empty()) throw NotScalarAction(j);
            if (!s) {
                s = cand;
            } else if (*s != cand) {
                throw NotScalarAction(j);
            }
        }
        scalars[a] = s.value_or(Rational(0));
    }
    return Functional{std::move(scalars)};
}

/// MC(rho)^perp ∩ U_{<=d} via the coefficient pairing u |-> rho(u)_{ij},
/// computed through matrix products rather than probe vectors.
inline TruncatedIdeal matrix_coefficients_perp(const UAlgebra& ua, const MatrixRep& rep, int d) {
    MonoIndex ix(filtration_basis(ua.dim(), d));
    std::size_t n = ix.size();
    std::vector<Mat> mono_images(n);
    mono_images[0] = mat_identity(rep.n);
    for (std::size_t j = 1; j < n; ++j) {
        const Monomial& m = ix.basis[j];
        std::size_t first = 0;
        while (m.e[first] == 0) ++first;
        Monomial rest = m;
        rest.e[first] -= 1;
        mono_images[j] = mat_mul(rep.images[first], mono_images[ix.index.at(rest)]);
    }
    Mat rows;
    for (std::size_t a = 0; a < rep.n; ++a)
        for (std::size_t b = 0; b < rep.n; ++b) {
            Vec row = zero_vec(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = mono_images[j][a][b];
            rows.push_back(std::move(row));
        }
    Mat perp = nullspace(std::move(rows), n);
    rref(perp);
    return TruncatedIdeal{d, 0, true, std::move(perp)};
}

/// Iterated first difference p |-> p(t) - p(t-1): after deg(p) steps the
/// result must be a nonzero constant, exhibiting 1 in the submodule
/// generated by p.
inline bool shift_simplicity_probe(const ShiftModule& mod, SparseVec p) {
    int deg = -1;
    for (const auto& [k, c] : p) deg = std::max(deg, static_cast<int>(k));
    if (deg < 0) return false;
    for (int step = 0; step < deg; ++step) {
        SparseVec shifted = mod.apply_gen(1, p);
        for (const auto& [k, c] : shifted) sparse_add(p, k, -c);
    }
    return p.size() == 1 && p.count(0) == 1;
}

}  // namespace liecg
