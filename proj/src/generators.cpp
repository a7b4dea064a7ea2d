#include "fredpair/generators.hpp"

#include "fredpair/errors.hpp"
#include "fredpair/subspace.hpp"

#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace fredpair {

namespace {

std::string level_name(const char* tag, std::size_t k) {
    std::ostringstream os;
    os << tag << "^" << k;
    return os.str();
}

// SynthSpec after validation: the free data plus the full signature.
struct ResolvedCase {
    std::size_t x1 = 0, y1 = 0, core = 0;
    std::vector<std::size_t> mm, nn;     // kernel cut sizes per level
    std::map<std::string, std::size_t> signature;
};

ResolvedCase resolve(const SynthSpec& spec) {
    const std::size_t n = spec.number;
    auto [x_names, y_names] = case_block_names(spec.kind, n); // checks n >= 1
    std::set<std::string> legal(x_names.begin(), x_names.end());
    legal.insert(y_names.begin(), y_names.end());
    std::string label = to_string(spec.kind) + "-" + std::to_string(n);
    for (const auto& [name, dim] : spec.blocks) {
        (void)dim;
        if (!legal.count(name))
            throw validation_error("block " + name + " does not occur in case " +
                                   label);
    }
    auto has = [&](const std::string& name) { return spec.blocks.count(name) != 0; };
    auto get = [&](const std::string& name) -> std::size_t {
        auto it = spec.blocks.find(name);
        return it == spec.blocks.end() ? 0 : it->second;
    };

    const bool one = n == 1;
    const std::size_t mm_top = one ? (spec.kind == PairCase::III ? 1 : 0)
                                   : (spec.kind == PairCase::III ? n : n - 1);
    const std::size_t nn_top = one ? (spec.kind == PairCase::II ? 1 : 0)
                                   : (spec.kind == PairCase::II ? n : n - 1);
    const std::size_t xx_top = one ? 0 : (spec.kind == PairCase::III ? n - 1 : n - 2);
    const std::size_t yy_top = one ? 0 : (spec.kind == PairCase::II ? n - 1 : n - 2);
    const std::string x2name =
        level_name("X2", one ? 2 : (spec.kind == PairCase::III ? n : n - 1));
    const std::string y2name =
        level_name("Y2", one ? 2 : (spec.kind == PairCase::II ? n : n - 1));

    ResolvedCase rc;
    rc.x1 = get("X1");
    rc.y1 = get("Y1");
    if (has(x2name) && has(y2name) && get(x2name) != get(y2name))
        throw validation_error(x2name + " and " + y2name +
                               " must have equal dimension: s carries one "
                               "isomorphically onto the other");
    rc.core = has(x2name) ? get(x2name) : get(y2name);

    rc.mm.assign(n + 3, 0);
    rc.nn.assign(n + 3, 0);
    for (std::size_t j = 1; j <= mm_top; ++j) rc.mm[j] = get(level_name("MM", j));
    for (std::size_t j = 1; j <= nn_top; ++j) rc.nn[j] = get(level_name("NN", j));

    // The exchange isomorphisms determine the finite towers from the
    // kernel cuts, one level at a time from the top down.
    std::vector<std::size_t> xx2d(n + 3, 0), yy2d(n + 3, 0);
    for (std::size_t k = n + 1; k >= 1; --k) {
        xx2d[k] = rc.mm[k + 1] + yy2d[k + 1];
        yy2d[k] = rc.nn[k + 1] + xx2d[k + 1];
    }

    auto check_derived = [&](const std::string& name, std::size_t expect,
                             const std::string& rule) {
        if (has(name) && get(name) != expect)
            throw validation_error(name + " must equal " + rule + " = " +
                                   std::to_string(expect));
    };
    for (std::size_t i = 1; i <= xx_top; ++i)
        check_derived(level_name("XX2", i), xx2d[i],
                      level_name("MM", i + 1) + " + " + level_name("YY2", i + 1));
    for (std::size_t j = 1; j <= yy_top; ++j)
        check_derived(level_name("YY2", j), yy2d[j],
                      level_name("NN", j + 1) + " + " + level_name("XX2", j + 1));
    if (legal.count("XtN")) check_derived("XtN", rc.mm[1], "MM^1");
    if (legal.count("Xt2")) check_derived("Xt2", yy2d[1], "YY2^1");
    if (legal.count("YtN")) check_derived("YtN", rc.nn[1], "NN^1");
    if (legal.count("Yt2")) check_derived("Yt2", xx2d[1], "XX2^1");

    // A request is only reachable when the slow tower actually dies at
    // the case's level.
    switch (spec.kind) {
    case PairCase::I:
        if (n >= 2 && (rc.mm[n - 1] < 1 || rc.nn[n - 1] < 1))
            throw validation_error("case " + label + " requires " +
                                   level_name("MM", n - 1) + " >= 1 and " +
                                   level_name("NN", n - 1) + " >= 1");
        break;
    case PairCase::II:
        if (rc.nn[n] < 1)
            throw validation_error("case " + label + " requires " +
                                   level_name("NN", n) + " >= 1");
        break;
    case PairCase::III:
        if (rc.mm[n] < 1)
            throw validation_error("case " + label + " requires " +
                                   level_name("MM", n) + " >= 1");
        break;
    }

    auto value_of = [&](const std::string& name) -> std::size_t {
        if (name == "X1") return rc.x1;
        if (name == "Y1") return rc.y1;
        if (name == x2name || name == y2name) return rc.core;
        if (name == "XtN") return rc.mm[1];
        if (name == "Xt2") return yy2d[1];
        if (name == "YtN") return rc.nn[1];
        if (name == "Yt2") return xx2d[1];
        auto caret = name.find('^');
        std::string tag = name.substr(0, caret);
        std::size_t k = std::stoul(name.substr(caret + 1));
        if (tag == "MM") return rc.mm[k];
        if (tag == "NN") return rc.nn[k];
        if (tag == "XX2") return xx2d[k];
        return yy2d[k];
    };
    for (const auto& name : x_names) rc.signature[name] = value_of(name);
    for (const auto& name : y_names) rc.signature[name] = value_of(name);
    return rc;
}

} // namespace

std::map<std::string, std::size_t> resolved_blocks(const SynthSpec& spec) {
    return resolve(spec).signature;
}

OperatorPair synth_from_case(const SynthSpec& spec) {
    ResolvedCase rc = resolve(spec);
    std::size_t x_dim = 0, y_dim = 0;
    std::vector<std::pair<std::size_t, std::size_t>> s_ones, t_ones;

    for (std::size_t i = 0; i < rc.core; ++i) {
        std::size_t u = x_dim++;
        std::size_t v = y_dim++;
        s_ones.emplace_back(v, u);
        t_ones.emplace_back(u, v);
    }
    x_dim += rc.x1;
    y_dim += rc.y1;

    // One alternating shift strand per tower unit.  A strand of j + 1
    // basis vectors w_1, ..., w_{j+1} with w_{i+1} mapped onto w_i walks
    // the exchange isomorphisms down to its bottom vector, which spans
    // one unit of the level-j kernel cut: bottom in Y for MM^j, bottom
    // in X for NN^j.
    auto add_strand = [&](std::size_t j, bool bottom_in_x) {
        bool in_x = bottom_in_x;
        std::size_t prev = in_x ? x_dim++ : y_dim++;
        for (std::size_t step = 0; step < j; ++step) {
            in_x = !in_x;
            std::size_t cur = in_x ? x_dim++ : y_dim++;
            if (in_x)
                s_ones.emplace_back(prev, cur);
            else
                t_ones.emplace_back(prev, cur);
            prev = cur;
        }
    };
    for (std::size_t j = 1; j < rc.mm.size(); ++j)
        for (std::size_t i = 0; i < rc.mm[j]; ++i) add_strand(j, false);
    for (std::size_t j = 1; j < rc.nn.size(); ++j)
        for (std::size_t i = 0; i < rc.nn[j]; ++i) add_strand(j, true);

    Matrix s(y_dim, x_dim), t(x_dim, y_dim);
    for (auto [r, c] : s_ones) s.at(r, c) = Rational(1);
    for (auto [r, c] : t_ones) t.at(r, c) = Rational(1);
    return OperatorPair(x_dim, y_dim, std::move(s), std::move(t));
}

PseudoInverseGrowth pseudo_inverse_growth_pair(std::size_t x1, std::size_t y1,
                                               std::size_t x2, std::size_t n1,
                                               std::size_t n2) {
    const std::size_t x_dim = x1 + n1 + x2 + n2;
    const std::size_t y_dim = y1 + n2 + x2 + n1;
    // Block offsets: X = [X1 | N1 | X2 | Xt], Y = [Y1 | N2 | Y2 | Yt].
    const std::size_t xo_n1 = x1, xo_x2 = x1 + n1, xo_xt = x1 + n1 + x2;
    const std::size_t yo_n2 = y1, yo_y2 = y1 + n2, yo_yt = y1 + n2 + x2;

    Matrix s(y_dim, x_dim), t(x_dim, y_dim);
    Matrix sp(x_dim, y_dim), tp(y_dim, x_dim);
    for (std::size_t i = 0; i < x2; ++i) {
        s.at(yo_y2 + i, xo_x2 + i) = Rational(1);  // X2 -> Y2
        t.at(xo_x2 + i, yo_y2 + i) = Rational(1);  // Y2 -> X2
        tp.at(yo_y2 + i, xo_x2 + i) = Rational(1); // X2 -> Y2, inverting t
        sp.at(xo_x2 + i, yo_y2 + i) = Rational(1); // Y2 -> X2, inverting s
    }
    for (std::size_t i = 0; i < n2; ++i) {
        s.at(yo_n2 + i, xo_xt + i) = Rational(1);  // Xt -> N2
        sp.at(xo_xt + i, yo_n2 + i) = Rational(1); // N2 -> Xt, inverting s
    }
    for (std::size_t i = 0; i < n1; ++i) {
        t.at(xo_n1 + i, yo_yt + i) = Rational(1);  // Yt -> N1
        tp.at(yo_yt + i, xo_n1 + i) = Rational(1); // N1 -> Yt, inverting t
        sp.at(xo_n1 + i, yo_yt + i) = Rational(1); // Yt -> N1, the extra leg
    }

    PseudoInverseGrowth out;
    out.pr = OperatorPair(x_dim, y_dim, std::move(s), std::move(t));
    out.s_prime = std::move(sp);
    out.t_prime = std::move(tp);
    if (matmul(out.pr.t, matmul(out.t_prime, out.pr.t)) != out.pr.t ||
        matmul(out.t_prime, matmul(out.pr.t, out.t_prime)) != out.t_prime)
        throw theorem_violation("t' is not a normalized generalized inverse");
    if (matmul(out.pr.s, matmul(out.s_prime, out.pr.s)) != out.pr.s)
        throw theorem_violation("s' is not a pseudo inverse");

    Subspace r_sp = Subspace::span(out.s_prime);
    Subspace n_tp = Subspace::kernel(out.t_prime);
    out.growth = r_sp.dim() - intersect(n_tp, r_sp).dim();
    return out;
}

OperatorPair symmetrical_nonzero_index_pair(std::size_t x1, std::size_t n,
                                            std::size_t m) {
    if (x1 < 1)
        throw validation_error("the symmetrical construction needs "
                               "dim X1 >= 1 for a nonzero index");
    const std::size_t x_dim = x1 + n + m;
    const std::size_t y_dim = m + n;
    Matrix s(y_dim, x_dim), t(x_dim, y_dim);
    for (std::size_t i = 0; i < m; ++i) s.at(i, x1 + n + i) = Rational(1);
    for (std::size_t i = 0; i < n; ++i) t.at(x1 + i, m + i) = Rational(1);
    return OperatorPair(x_dim, y_dim, std::move(s), std::move(t));
}

namespace {

Matrix random_entries(Rng& g, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Rational(g.span(-3, 3));
    return m;
}

Matrix random_invertible(Rng& g, std::size_t n) {
    for (;;) {
        Matrix m = random_entries(g, n, n);
        if (Subspace::span(m).dim() == n) return m;
    }
}

} // namespace

OperatorPair random_pair(std::size_t x_dim, std::size_t y_dim,
                         std::size_t rank_s, std::size_t rank_t,
                         std::uint64_t seed) {
    if (rank_s > std::min(x_dim, y_dim) || rank_t > std::min(x_dim, y_dim))
        throw validation_error("requested rank exceeds the dimensions");
    Rng g(seed);
    Matrix skel_s(y_dim, x_dim), skel_t(x_dim, y_dim);
    for (std::size_t i = 0; i < rank_s; ++i) skel_s.at(i, i) = Rational(1);
    for (std::size_t i = 0; i < rank_t; ++i) skel_t.at(i, i) = Rational(1);
    Matrix s = matmul(random_invertible(g, y_dim),
                      matmul(skel_s, random_invertible(g, x_dim)));
    Matrix t = matmul(random_invertible(g, x_dim),
                      matmul(skel_t, random_invertible(g, y_dim)));
    return OperatorPair(x_dim, y_dim, std::move(s), std::move(t));
}

ChainComplex random_chain(std::size_t spaces, std::size_t max_dim,
                          std::uint64_t seed, bool complex_flag) {
    Rng g(seed);
    ChainComplex c;
    c.is_complex = complex_flag;
    for (std::size_t p = 0; p < spaces; ++p)
        c.dims.push_back(static_cast<std::size_t>(g.below(max_dim + 1)));
    for (std::size_t p = 1; p < spaces; ++p) {
        if (!complex_flag || p == 1) {
            c.boundaries.push_back(random_entries(g, c.dims[p - 1], c.dims[p]));
        } else {
            // Drawing through the previous kernel forces delta*delta = 0.
            Subspace ker = Subspace::kernel(c.boundaries[p - 2]);
            c.boundaries.push_back(
                matmul(ker.basis(), random_entries(g, ker.dim(), c.dims[p])));
        }
    }
    return c;
}

} // namespace fredpair
