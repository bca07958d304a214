#include "brauer/oracle.hpp"

#include "brauer/errors.hpp"

#include <random>
#include <sstream>

namespace brauer {

namespace {

std::size_t idx(int simple) { return static_cast<std::size_t>(simple - 1); }

// Combinatorial basis of P(S_i): element 0 is the top, the last element is
// the socle, and each step records "arrow k sends element a to element b".
struct ProjectiveShape {
    struct Step {
        std::size_t from;
        int arrow;
        std::size_t to;
    };
    std::vector<int> component;  // simple label of each basis element
    std::vector<Step> steps;     // in walk order, so images can be propagated
};

ProjectiveShape projective_shape(const QuiverAlgebra& alg, int i)
{
    const auto& tree = alg.tree();
    auto [u, v] = tree.endpoints(i);
    ProjectiveShape s;
    s.component.push_back(i);
    // The socle index is only known after both arms are laid out; record
    // arm-final steps and patch them.
    std::vector<std::size_t> to_socle;
    for (std::size_t w : {u, v}) {
        if (!alg.has_arrows(w))
            continue;
        const int c = alg.cycle_length(w);
        std::size_t prev = 0;
        int cur = i;
        for (int k = 1; k <= c; ++k) {
            int a = alg.arrow_from(w, cur);
            int next = alg.arrows()[static_cast<std::size_t>(a)].target;
            if (k < c) {
                s.component.push_back(next);
                std::size_t el = s.component.size() - 1;
                s.steps.push_back({prev, a, el});
                prev = el;
            } else {
                to_socle.push_back(s.steps.size());
                s.steps.push_back({prev, a, 0});
            }
            cur = next;
        }
    }
    s.component.push_back(i);
    const std::size_t socle = s.component.size() - 1;
    for (auto k : to_socle)
        s.steps[k].to = socle;
    return s;
}

ModuleRep module_from_shape(const QuiverAlgebra& alg, const ProjectiveShape& s)
{
    const int e = alg.simple_count();
    ModuleRep m;
    m.dims.assign(static_cast<std::size_t>(e), 0);
    std::vector<std::size_t> pos(s.component.size());
    for (std::size_t el = 0; el < s.component.size(); ++el)
        pos[el] = m.dims[idx(s.component[el])]++;
    for (const auto& a : alg.arrows())
        m.maps.emplace_back(m.dims[idx(a.target)], m.dims[idx(a.source)]);
    for (const auto& st : s.steps)
        m.maps[static_cast<std::size_t>(st.arrow)](pos[st.to], pos[st.from]) = 1;
    return m;
}

// Product of arrow matrices along the walk of `len` arrows around w starting at edge f.
Matrix walk_product(const QuiverAlgebra& alg, const ModuleRep& m, std::size_t w, int f, int len)
{
    const auto& F = alg.field();
    Matrix acc = Matrix::identity(m.dims[idx(f)]);
    int cur = f;
    for (int k = 0; k < len; ++k) {
        int a = alg.arrow_from(w, cur);
        acc = multiply(F, m.maps[static_cast<std::size_t>(a)], acc);
        cur = alg.arrows()[static_cast<std::size_t>(a)].target;
    }
    return acc;
}

}  // namespace

QuiverAlgebra::QuiverAlgebra(BrauerTree tree, Elem p) : tree_(std::move(tree)), field_(p)
{
    require_valid(tree_);
    const std::size_t nv = tree_.vertex_count();
    cycle_.assign(nv, 0);
    arrow_index_.assign(nv, std::vector<int>(static_cast<std::size_t>(tree_.edge_count()) + 1, -1));
    // One edge with both ends of multiplicity 1: the algebra is k[x]/(x^2),
    // realised as a loop at the first vertex whose cycle has length one.
    const bool lone_plain_edge = tree_.edge_count() == 1 && tree_.walk_length(0) == 1 && tree_.walk_length(1) == 1;
    for (std::size_t w = 0; w < nv; ++w) {
        int c = tree_.walk_length(w);
        if (c < 2 && !(lone_plain_edge && w == 0))
            continue;
        cycle_[w] = c;
        for (int f : tree_.vertex(w).order) {
            arrow_index_[w][static_cast<std::size_t>(f)] = static_cast<int>(arrows_.size());
            arrows_.push_back({w, f, tree_.step(w, f, 1)});
        }
    }
}

int QuiverAlgebra::arrow_from(std::size_t w, int edge) const
{
    return arrow_index_.at(w).at(static_cast<std::size_t>(edge));
}

QuiverAlgebra build_algebra(const BrauerTree& tree, Elem p)
{
    if (!is_prime(p))
        throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
    return QuiverAlgebra(tree, p);
}

std::size_t ModuleRep::total_dim() const
{
    std::size_t n = 0;
    for (auto d : dims)
        n += d;
    return n;
}

static void check_index(const QuiverAlgebra& alg, int i)
{
    if (i < 1 || i > alg.simple_count())
        throw ParameterError("simple index " + std::to_string(i) + " out of range 1.." +
                             std::to_string(alg.simple_count()));
}

ModuleRep simple_module(const QuiverAlgebra& alg, int i)
{
    check_index(alg, i);
    ModuleRep m;
    m.dims.assign(static_cast<std::size_t>(alg.simple_count()), 0);
    m.dims[idx(i)] = 1;
    for (const auto& a : alg.arrows())
        m.maps.emplace_back(m.dims[idx(a.target)], m.dims[idx(a.source)]);
    return m;
}

ModuleRep projective_module(const QuiverAlgebra& alg, int i)
{
    check_index(alg, i);
    return module_from_shape(alg, projective_shape(alg, i));
}

ModuleRep direct_sum(const QuiverAlgebra& alg, const ModuleRep& a, const ModuleRep& b)
{
    ModuleRep s;
    for (std::size_t c = 0; c < a.dims.size(); ++c)
        s.dims.push_back(a.dims[c] + b.dims[c]);
    for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
        const auto& ar = alg.arrows()[k];
        Matrix mat(s.dims[idx(ar.target)], s.dims[idx(ar.source)]);
        const Matrix& x = a.maps[k];
        const Matrix& y = b.maps[k];
        for (std::size_t r = 0; r < x.rows(); ++r)
            for (std::size_t c = 0; c < x.cols(); ++c)
                mat(r, c) = x(r, c);
        for (std::size_t r = 0; r < y.rows(); ++r)
            for (std::size_t c = 0; c < y.cols(); ++c)
                mat(x.rows() + r, x.cols() + c) = y(r, c);
        s.maps.push_back(std::move(mat));
    }
    return s;
}

std::vector<std::string> relation_failures(const QuiverAlgebra& alg, const ModuleRep& m)
{
    std::vector<std::string> out;
    const auto& tree = alg.tree();
    const auto& F = alg.field();
    if (m.dims.size() != static_cast<std::size_t>(alg.simple_count()) || m.maps.size() != alg.arrows().size()) {
        out.push_back("shape: wrong number of components or arrow maps");
        return out;
    }
    for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
        const auto& a = alg.arrows()[k];
        if (m.maps[k].rows() != m.dims[idx(a.target)] || m.maps[k].cols() != m.dims[idx(a.source)])
            out.push_back("shape: arrow " + std::to_string(k) + " has the wrong matrix size");
    }
    if (!out.empty())
        return out;

    for (int i = 1; i <= alg.simple_count(); ++i) {
        auto [u, v] = tree.endpoints(i);
        if (alg.has_arrows(u) && alg.has_arrows(v)) {
            Matrix cu = walk_product(alg, m, u, i, alg.cycle_length(u));
            Matrix cv = walk_product(alg, m, v, i, alg.cycle_length(v));
            if (!(cu == cv))
                out.push_back("full cycles at edge " + std::to_string(i) + " differ");
        }
        for (std::size_t w : {u, v}) {
            if (!alg.has_arrows(w))
                continue;
            if (!walk_product(alg, m, w, i, alg.cycle_length(w) + 1).is_zero())
                out.push_back("cycle plus one arrow at edge " + std::to_string(i) + " is nonzero");
        }
    }
    // Mixed paths: an arrow around w followed by an arrow around the other end of its target.
    for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
        const auto& a = alg.arrows()[k];
        auto [x, y] = tree.endpoints(a.target);
        std::size_t other = (x == a.vertex) ? y : x;
        int b = alg.arrow_from(other, a.target);
        if (b < 0)
            continue;
        if (!multiply(F, m.maps[static_cast<std::size_t>(b)], m.maps[k]).is_zero())
            out.push_back("mixed path through edge " + std::to_string(a.target) + " is nonzero");
    }
    return out;
}

namespace {

// Stack, side by side, every arrow map landing in component c.
Matrix incoming(const QuiverAlgebra& alg, const ModuleRep& m, int c)
{
    Matrix acc(m.dims[idx(c)], 0);
    for (std::size_t k = 0; k < alg.arrows().size(); ++k)
        if (alg.arrows()[k].target == c)
            acc = hconcat(acc, m.maps[k]);
    return acc;
}

}  // namespace

std::vector<int> head_multiplicities(const QuiverAlgebra& alg, const ModuleRep& m)
{
    std::vector<int> h;
    for (int c = 1; c <= alg.simple_count(); ++c) {
        Matrix in = incoming(alg, m, c);
        h.push_back(static_cast<int>(m.dims[idx(c)] - rank(alg.field(), in)));
    }
    return h;
}

std::vector<int> socle_multiplicities(const QuiverAlgebra& alg, const ModuleRep& m)
{
    std::vector<int> s;
    for (int c = 1; c <= alg.simple_count(); ++c) {
        const std::size_t d = m.dims[idx(c)];
        Matrix stacked(0, d);
        for (std::size_t k = 0; k < alg.arrows().size(); ++k)
            if (alg.arrows()[k].source == c)
                stacked = transpose(hconcat(transpose(stacked), transpose(m.maps[k])));
        s.push_back(static_cast<int>(d - rank(alg.field(), stacked)));
    }
    return s;
}

ModuleRep omega(const QuiverAlgebra& alg, const ModuleRep& m, const OmegaOptions& opts)
{
    const auto& F = alg.field();
    const int e = alg.simple_count();

    // Head: complement the radical at each component by standard basis vectors
    // at the non-pivot positions of its echelon form.
    struct Summand {
        int simple;
        std::size_t coord;
    };
    std::vector<Summand> summands;
    for (int c = 1; c <= e; ++c)
        for (auto pos : complement_positions(F, incoming(alg, m, c)))
            summands.push_back({c, pos});

    std::vector<ProjectiveShape> shapes;
    std::size_t cover_dim = 0;
    for (int c = 1; c <= e; ++c) {
        shapes.push_back(projective_shape(alg, c));
    }
    for (const auto& s : summands)
        cover_dim += shapes[idx(s.simple)].component.size();
    if (cover_dim > opts.max_dim)
        throw ResourceError("projective cover of dimension " + std::to_string(cover_dim) + " exceeds budget " +
                            std::to_string(opts.max_dim));

    // Build the cover and the covering map component by component.
    ModuleRep cover;
    cover.dims.assign(static_cast<std::size_t>(e), 0);
    cover.maps.assign(alg.arrows().size(), Matrix(0, 0));
    std::vector<std::vector<Matrix>> image_cols(static_cast<std::size_t>(e));  // columns of pi_c
    for (const auto& s : summands) {
        const auto& shape = shapes[idx(s.simple)];
        ModuleRep p = module_from_shape(alg, shape);
        cover = direct_sum(alg, cover, p);

        std::vector<Matrix> img(shape.component.size());
        std::vector<bool> done(shape.component.size(), false);
        img[0] = Matrix(m.dims[idx(s.simple)], 1);
        img[0](s.coord, 0) = 1;
        done[0] = true;
        for (const auto& st : shape.steps) {
            if (done[st.to])
                continue;
            img[st.to] = multiply(F, m.maps[static_cast<std::size_t>(st.arrow)], img[st.from]);
            done[st.to] = true;
        }
        for (std::size_t el = 0; el < shape.component.size(); ++el)
            image_cols[idx(shape.component[el])].push_back(img[el]);
    }

    // Elements of P(S_c) are listed by element order inside each summand, and
    // direct_sum appends, so image_cols[c] matches the cover basis order.
    ModuleRep ker;
    std::vector<NullSpace> kernels;
    for (int c = 1; c <= e; ++c) {
        Matrix pi(m.dims[idx(c)], 0);
        for (const auto& col : image_cols[idx(c)])
            pi = hconcat(pi, col);
        if (pi.cols() != cover.dims[idx(c)])
            throw std::logic_error("cover basis bookkeeping mismatch");
        kernels.push_back(null_space(F, pi));
        ker.dims.push_back(kernels.back().dim());
    }
    for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
        const auto& a = alg.arrows()[k];
        const auto& ks = kernels[idx(a.source)];
        const auto& kt = kernels[idx(a.target)];
        Matrix y = multiply(F, cover.maps[k], ks.basis);
        Matrix x(kt.dim(), ks.dim());
        for (std::size_t r = 0; r < kt.dim(); ++r)
            for (std::size_t c = 0; c < ks.dim(); ++c)
                x(r, c) = y(kt.free_cols[r], c);
        ker.maps.push_back(std::move(x));
    }
    return ker;
}

std::vector<Hom> hom_basis(const QuiverAlgebra& alg, const ModuleRep& from, const ModuleRep& to)
{
    const auto& F = alg.field();
    const std::size_t e = static_cast<std::size_t>(alg.simple_count());
    std::vector<std::size_t> offset(e + 1, 0);
    for (std::size_t c = 0; c < e; ++c)
        offset[c + 1] = offset[c] + to.dims[c] * from.dims[c];
    const std::size_t nvars = offset[e];
    auto var = [&](std::size_t c, std::size_t r, std::size_t k) { return offset[c] + r * from.dims[c] + k; };

    std::size_t neq = 0;
    for (const auto& a : alg.arrows())
        neq += to.dims[idx(a.target)] * from.dims[idx(a.source)];
    Matrix sys(neq, nvars);
    std::size_t row = 0;
    for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
        const auto& a = alg.arrows()[k];
        const std::size_t s = idx(a.source), t = idx(a.target);
        const Matrix& A = from.maps[k];  // dims_from[t] x dims_from[s]
        const Matrix& B = to.maps[k];    // dims_to[t] x dims_to[s]
        // phi_t * A - B * phi_s = 0
        for (std::size_t r = 0; r < to.dims[t]; ++r)
            for (std::size_t c = 0; c < from.dims[s]; ++c, ++row) {
                for (std::size_t q = 0; q < from.dims[t]; ++q)
                    if (A(q, c))
                        sys(row, var(t, r, q)) = F.add(sys(row, var(t, r, q)), A(q, c));
                for (std::size_t q = 0; q < to.dims[s]; ++q)
                    if (B(r, q))
                        sys(row, var(s, q, c)) = F.sub(sys(row, var(s, q, c)), B(r, q));
            }
    }
    NullSpace ns = null_space(F, sys);
    std::vector<Hom> out;
    for (std::size_t b = 0; b < ns.dim(); ++b) {
        Hom h;
        for (std::size_t c = 0; c < e; ++c) {
            Matrix phi(to.dims[c], from.dims[c]);
            for (std::size_t r = 0; r < to.dims[c]; ++r)
                for (std::size_t q = 0; q < from.dims[c]; ++q)
                    phi(r, q) = ns.basis(var(c, r, q), b);
            h.push_back(std::move(phi));
        }
        out.push_back(std::move(h));
    }
    return out;
}

int hom_dim(const QuiverAlgebra& alg, const ModuleRep& from, const ModuleRep& to)
{
    // Hom(M, S_j) = head multiplicity of S_j in M.
    if (to.total_dim() == 1) {
        for (int c = 1; c <= alg.simple_count(); ++c)
            if (to.dims[idx(c)] == 1)
                return head_multiplicities(alg, from)[idx(c)];
    }
    return static_cast<int>(hom_basis(alg, from, to).size());
}

std::string to_string(IsoResult r)
{
    switch (r) {
    case IsoResult::yes:
        return "yes";
    case IsoResult::no:
        return "no";
    default:
        return "unknown";
    }
}

IsoResult is_isomorphic(const QuiverAlgebra& alg, const ModuleRep& a, const ModuleRep& b, const IsoOptions& opts)
{
    if (a.dims != b.dims)
        return IsoResult::no;
    if (a.total_dim() == 0)
        return IsoResult::yes;
    if (head_multiplicities(alg, a) != head_multiplicities(alg, b) ||
        socle_multiplicities(alg, a) != socle_multiplicities(alg, b))
        return IsoResult::no;

    const auto& F = alg.field();
    const auto basis = hom_basis(alg, a, b);
    if (basis.empty())
        return IsoResult::no;
    const std::size_t ncomp = a.dims.size();

    auto combine = [&](const std::vector<Elem>& coeff) {
        Hom h;
        for (std::size_t c = 0; c < ncomp; ++c) {
            Matrix acc(b.dims[c], a.dims[c]);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (coeff[k])
                    acc = add(F, acc, scale(F, coeff[k], basis[k][c]));
            h.push_back(std::move(acc));
        }
        return h;
    };
    auto invertible = [&](const Hom& h) {
        for (std::size_t c = 0; c < ncomp; ++c)
            if (!is_invertible(F, h[c]))
                return false;
        return true;
    };

    const std::uint64_t p = F.characteristic();
    std::uint64_t count = 1;
    bool small = true;
    for (std::size_t k = 0; k < basis.size() && small; ++k) {
        count *= p;
        small = count - 1 <= opts.exhaustive_limit;
    }
    if (small) {
        std::vector<Elem> coeff(basis.size(), 0);
        for (std::uint64_t n = 1; n < count; ++n) {
            std::uint64_t x = n;
            for (auto& c : coeff) {
                c = static_cast<Elem>(x % p);
                x /= p;
            }
            if (invertible(combine(coeff)))
                return IsoResult::yes;
        }
        return IsoResult::no;
    }

    std::vector<Elem> coeff(basis.size(), 0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[k] = 1;
        if (invertible(combine(coeff)))
            return IsoResult::yes;
    }
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t l = k + 1; l < basis.size(); ++l) {
            std::fill(coeff.begin(), coeff.end(), 0);
            coeff[k] = coeff[l] = 1;
            if (invertible(combine(coeff)))
                return IsoResult::yes;
        }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(p - 1));
    for (int t = 0; t < opts.random_trials; ++t) {
        for (auto& c : coeff)
            c = dist(rng);
        if (invertible(combine(coeff)))
            return IsoResult::yes;
    }
    return IsoResult::unknown;
}

std::vector<ModuleRep> omega_orbit(const QuiverAlgebra& alg, int i, int n_max, const OmegaOptions& opts)
{
    if (n_max < 0)
        throw ParameterError("n_max must be >= 0");
    std::vector<ModuleRep> orbit{simple_module(alg, i)};
    for (int n = 1; n <= n_max; ++n)
        orbit.push_back(omega(alg, orbit.back(), opts));
    return orbit;
}

std::vector<std::vector<int>> ext_dims_oracle(const BrauerTree& tree, Elem p, int i, int n_max,
                                              const OmegaOptions& opts)
{
    QuiverAlgebra alg = build_algebra(tree, p);
    std::vector<std::vector<int>> rows;
    for (const auto& mod : omega_orbit(alg, i, n_max, opts))
        rows.push_back(head_multiplicities(alg, mod));
    return rows;
}

}  // namespace brauer
