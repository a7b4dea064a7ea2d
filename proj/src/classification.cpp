#include "fredpair/classification.hpp"

#include "fredpair/errors.hpp"

#include <algorithm>
#include <sstream>

namespace fredpair {

std::string to_string(PairCase c) {
    switch (c) {
    case PairCase::I: return "I";
    case PairCase::II: return "II";
    case PairCase::III: return "III";
    }
    throw validation_error("unknown case value");
}

PairCase pair_case_from_string(const std::string& s) {
    if (s == "I") return PairCase::I;
    if (s == "II") return PairCase::II;
    if (s == "III") return PairCase::III;
    throw parse_error("unknown case \"" + s + "\"; expected I, II or III");
}

namespace {

// Plain and tilde sequences plus the adapted seed complements.  Joint
// equality of the plain sequences at one step is permanent because each
// term is the image of the term two steps back.
struct SequenceData {
    std::vector<Subspace> r_s, r_t, r_s_tilde, r_t_tilde;
    Subspace x_tilde, y_tilde; // adapted complements seeding the tilde layers
    std::size_t stab = 0;
};

SequenceData core_sequences(const OperatorPair& pr, std::size_t upto) {
    SequenceData d;
    d.r_s.push_back(Subspace::full(pr.y_dim));
    d.r_t.push_back(Subspace::full(pr.x_dim));
    const std::size_t bound = pr.x_dim + pr.y_dim + 2;
    bool found = false;
    for (std::size_t n = 0; !found || n < upto; ++n) {
        if (n > bound)
            throw theorem_violation("range sequences failed to stabilize "
                                    "within the dimension bound");
        d.r_s.push_back(image(pr.s, d.r_t[n]));
        d.r_t.push_back(image(pr.t, d.r_s[n]));
        if (!found && d.r_s[n] == d.r_s[n + 1] && d.r_t[n] == d.r_t[n + 1]) {
            d.stab = n;
            found = true;
        }
    }
    return d;
}

void extend_core(const OperatorPair& pr, SequenceData& d, std::size_t upto) {
    while (d.r_s.size() <= upto) {
        std::size_t n = d.r_s.size() - 1;
        d.r_s.push_back(image(pr.s, d.r_t[n]));
        d.r_t.push_back(image(pr.t, d.r_s[n]));
    }
}

// L ⊆ domain with op(L) = target and L ∩ N(op) = 0; requires
// target ⊆ op(domain).
Subspace lift_through(const Matrix& op, const Subspace& target,
                      const Subspace& domain) {
    Matrix restricted = matmul(op, domain.basis());
    Matrix coords = solve(restricted, target.basis());
    return Subspace::span(matmul(domain.basis(), coords));
}

// The tilde layers are built from the deepest level downward:
//   r_t_tilde[k] = K ⊕ L, K a complement of N^{k+1} in N^k,
//   L a lift of r_s_tilde[k+1] through s inside r_t[k],
// and mirrored through t.  This makes every splitting identity hold:
//   r_t[k] = r_t[k+1] ⊕ r_t_tilde[k],  N^k = N^{k+1} ⊕ (r_t_tilde[k] ∩ N(s)),
// and keeps the defining recursion exact: s(r_t_tilde[k]) = r_s_tilde[k+1].
// An arbitrary complement seed (for instance the greedy one) can violate
// these identities, so the seeds x_tilde, y_tilde are produced last, by
// lifting the level-one layers through the operators.
void add_tilde_layers(const OperatorPair& pr, SequenceData& d) {
    const std::size_t len = d.r_s.size();
    Subspace ker_s = Subspace::kernel(pr.s);
    Subspace ker_t = Subspace::kernel(pr.t);
    d.r_t_tilde.assign(len, Subspace::zero(pr.x_dim));
    d.r_s_tilde.assign(len, Subspace::zero(pr.y_dim));
    for (std::size_t k = d.stab; k >= 1; --k) {
        Subspace n_k = intersect(d.r_t[k], ker_s);
        Subspace n_k1 = intersect(d.r_t[k + 1], ker_s);
        d.r_t_tilde[k] = sum(complement_in(n_k1, n_k),
                             lift_through(pr.s, d.r_s_tilde[k + 1], d.r_t[k]));
        Subspace m_k = intersect(d.r_s[k], ker_t);
        Subspace m_k1 = intersect(d.r_s[k + 1], ker_t);
        d.r_s_tilde[k] = sum(complement_in(m_k1, m_k),
                             lift_through(pr.t, d.r_t_tilde[k + 1], d.r_s[k]));
    }
    d.x_tilde = lift_through(pr.s, d.r_s_tilde[1], Subspace::full(pr.x_dim));
    d.y_tilde = lift_through(pr.t, d.r_t_tilde[1], Subspace::full(pr.y_dim));
}

// First index >= 1 whose entry equals the limit.  The sequence
// decreases, so everything between that index and the stabilization
// point equals the limit as well.
std::size_t first_at_limit(const std::vector<Subspace>& seq, const Subspace& limit) {
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] == limit) return i;
    throw theorem_violation("range sequence never reaches its own limit");
}

void fill_pq(const SequenceData& d, std::size_t& p, std::size_t& q) {
    p = first_at_limit(d.r_s, d.r_s[d.stab == 0 ? 1 : d.stab]);
    q = first_at_limit(d.r_t, d.r_t[d.stab == 0 ? 1 : d.stab]);
    if (p > q + 1 || q > p + 1)
        throw theorem_violation("stabilization indices differ by more than one");
}

} // namespace

RangeSequences range_sequences(const OperatorPair& pr) {
    SequenceData d = core_sequences(pr, /*upto=*/1);
    add_tilde_layers(pr, d);
    RangeSequences r;
    const std::size_t len = d.stab + 2; // one entry past stabilization
    r.r_s.assign(d.r_s.begin(), d.r_s.begin() + std::min(len, d.r_s.size()));
    r.r_t.assign(d.r_t.begin(), d.r_t.begin() + std::min(len, d.r_t.size()));
    r.r_s_tilde.assign(d.r_s_tilde.begin(),
                       d.r_s_tilde.begin() + std::min(len, d.r_s_tilde.size()));
    r.r_t_tilde.assign(d.r_t_tilde.begin(),
                       d.r_t_tilde.begin() + std::min(len, d.r_t_tilde.size()));
    fill_pq(d, r.p, r.q);
    return r;
}

Classification classify(const OperatorPair& pr) {
    // The tilde layers do not enter the case decision, so they are skipped.
    SequenceData d = core_sequences(pr, /*upto=*/1);
    Classification c;
    fill_pq(d, c.p, c.q);
    c.number = std::min(c.p, c.q);
    c.kind = c.p == c.q ? PairCase::I
                        : (c.p < c.q ? PairCase::II : PairCase::III);
    return c;
}

namespace {

[[noreturn]] void family_fail(const std::string& what) {
    throw theorem_violation("subspace family identity failed: " + what);
}

void check_direct_sum(const std::string& what, const Subspace& whole,
                      const Subspace& a, const Subspace& b) {
    if (sum(a, b) != whole || a.dim() + b.dim() != whole.dim()) family_fail(what);
}

std::string at_level(const char* tag, std::size_t k) {
    std::ostringstream os;
    os << tag << "^" << k;
    return os.str();
}

// One nested tower inside one space.  `range[k]` is the ambient chain,
// `range_tilde[k]` its splitting layers, `ker` the kernel being
// intersected away.  Returns the complements tower built from level
// `top` downward so that tower[k+1] ⊆ tower[k] and
// cut[k] ⊕ tower[k] = range[k] hold simultaneously.
struct Tower {
    std::vector<Subspace> cut, tower;      // m / y2 on the s side
    std::vector<Subspace> cut_t, tower_t;  // mm / yy2
};

Tower build_tower(const std::vector<Subspace>& range,
                  const std::vector<Subspace>& range_tilde, const Subspace& ker,
                  std::size_t top, std::size_t ambient) {
    Tower tw;
    tw.cut.assign(top + 2, Subspace::zero(ambient));
    tw.tower.assign(top + 2, Subspace::zero(ambient));
    tw.cut_t.assign(top + 1, Subspace::zero(ambient));
    tw.tower_t.assign(top + 1, Subspace::zero(ambient));
    for (std::size_t k = 1; k <= top + 1; ++k)
        tw.cut[k] = intersect(range[k], ker);
    for (std::size_t k = 1; k <= top; ++k) {
        tw.cut_t[k] = intersect(range_tilde[k], ker);
        tw.tower_t[k] = complement_in(tw.cut_t[k], range_tilde[k]);
    }
    Subspace prev = Subspace::zero(ambient);
    for (std::size_t k = top; k >= 1; --k) {
        Subspace core = sum(prev, tw.tower_t[k]);
        Subspace fill = complement_in(sum(tw.cut[k], core), range[k]);
        tw.tower[k] = sum(core, fill);
        prev = tw.tower[k];
    }
    return tw;
}

// The splitting, exchange and nesting identities on a finished tower.
void check_tower(const char* cut_tag, const char* tower_tag, const char* range_tag,
                 const std::vector<Subspace>& range,
                 const std::vector<Subspace>& range_tilde, const Tower& tw,
                 std::size_t top) {
    for (std::size_t k = 1; k <= top; ++k) {
        check_direct_sum(at_level(range_tag, k) + " = " + at_level(cut_tag, k) +
                             " + " + at_level(tower_tag, k),
                         range[k], tw.cut[k], tw.tower[k]);
        check_direct_sum(at_level(range_tag, k) + " = " + at_level(range_tag, k + 1) +
                             " + tilde layer",
                         range[k], range[k + 1], range_tilde[k]);
        if (intersect(range_tilde[k], tw.tower[k]) != tw.tower_t[k])
            family_fail(at_level(tower_tag, k) + " does not cut the tilde layer");
        if (k < top) {
            check_direct_sum(at_level(cut_tag, k) + " exchange", tw.cut[k],
                             tw.cut[k + 1], tw.cut_t[k]);
            check_direct_sum(at_level(tower_tag, k) + " exchange", tw.tower[k],
                             tw.tower[k + 1], tw.tower_t[k]);
        }
        for (std::size_t j = 1; j < k; ++j)
            if (intersect(range[k], tw.tower[j]) != tw.tower[k])
                family_fail(at_level(range_tag, k) + " does not cut " +
                            at_level(tower_tag, j) + " to " +
                            at_level(tower_tag, k));
    }
}

// tilde = ker_part ⊕ ran_part with op carrying the parts onto the two
// layers of the image split.
void split_tilde(const Matrix& op, const Subspace& tilde, const Subspace& cut_t1,
                 const Subspace& tower_t1, const char* side, Subspace& ker_part,
                 Subspace& ran_part) {
    ker_part = intersect(preimage(op, cut_t1), tilde);
    ran_part = intersect(preimage(op, tower_t1), tilde);
    check_direct_sum(std::string(side) + " tilde split", tilde, ker_part, ran_part);
    if (image(op, ker_part) != cut_t1 || ker_part.dim() != cut_t1.dim())
        family_fail(std::string(side) + " tilde kernel part image");
    if (image(op, ran_part) != tower_t1 || ran_part.dim() != tower_t1.dim())
        family_fail(std::string(side) + " tilde tower part image");
}

} // namespace

SubspaceFamilies subspace_families(const OperatorPair& pr, std::size_t level) {
    if (level < 1) throw validation_error("families level must be >= 1");
    SubspaceFamilies fam;
    SequenceData d = core_sequences(pr, /*upto=*/0);
    const std::size_t top = std::max(level, d.stab) + 1;
    extend_core(pr, d, top + 1);
    add_tilde_layers(pr, d);
    fam.levels = top;
    fam.dec = decompose(pr);
    // The greedy complements are replaced by the adapted ones so that the
    // splitting identities checked below hold level by level.
    fam.dec.x_tilde = d.x_tilde;
    fam.dec.y_tilde = d.y_tilde;

    Subspace ker_t = Subspace::kernel(pr.t);
    Subspace ker_s = Subspace::kernel(pr.s);
    Tower y_side = build_tower(d.r_s, d.r_s_tilde, ker_t, top, pr.y_dim);
    Tower x_side = build_tower(d.r_t, d.r_t_tilde, ker_s, top, pr.x_dim);
    check_tower("M", "Y2", "R_s", d.r_s, d.r_s_tilde, y_side, top);
    check_tower("N", "X2", "R_t", d.r_t, d.r_t_tilde, x_side, top);

    fam.m = std::move(y_side.cut);
    fam.y2 = std::move(y_side.tower);
    fam.mm = std::move(y_side.cut_t);
    fam.yy2 = std::move(y_side.tower_t);
    fam.n = std::move(x_side.cut);
    fam.x2 = std::move(x_side.tower);
    fam.nn = std::move(x_side.cut_t);
    fam.xx2 = std::move(x_side.tower_t);

    split_tilde(pr.s, fam.dec.x_tilde, fam.mm[1], fam.yy2[1], "x",
                fam.x_tilde_n, fam.x_tilde_2);
    split_tilde(pr.t, fam.dec.y_tilde, fam.nn[1], fam.xx2[1], "y",
                fam.y_tilde_n, fam.y_tilde_2);

    fill_pq(d, fam.seq.p, fam.seq.q);
    fam.seq.r_s = std::move(d.r_s);
    fam.seq.r_t = std::move(d.r_t);
    fam.seq.r_s_tilde = std::move(d.r_s_tilde);
    fam.seq.r_t_tilde = std::move(d.r_t_tilde);
    return fam;
}

namespace {

// Resolves a block name ("X1", "N^2", "XX2^1", "YtN", ...) against the
// computed families.
Subspace block_space(const std::string& name, const SubspaceFamilies& fam) {
    if (name == "X1") return fam.dec.x1;
    if (name == "Y1") return fam.dec.y1;
    if (name == "XtN") return fam.x_tilde_n;
    if (name == "Xt2") return fam.x_tilde_2;
    if (name == "YtN") return fam.y_tilde_n;
    if (name == "Yt2") return fam.y_tilde_2;
    auto caret = name.find('^');
    if (caret != std::string::npos) {
        std::string tag = name.substr(0, caret);
        std::size_t k = std::stoul(name.substr(caret + 1));
        const std::vector<Subspace>* v = nullptr;
        if (tag == "M") v = &fam.m;
        else if (tag == "N") v = &fam.n;
        else if (tag == "MM") v = &fam.mm;
        else if (tag == "NN") v = &fam.nn;
        else if (tag == "X2") v = &fam.x2;
        else if (tag == "Y2") v = &fam.y2;
        else if (tag == "XX2") v = &fam.xx2;
        else if (tag == "YY2") v = &fam.yy2;
        if (v && k < v->size()) return (*v)[k];
    }
    throw validation_error("unknown block name \"" + name + "\"");
}

void check_coverage(const std::string& space, std::size_t ambient,
                    const std::vector<NamedBlock>& blocks) {
    Subspace acc = Subspace::zero(ambient);
    std::size_t total = 0;
    for (const auto& b : blocks) {
        acc = sum(acc, b.space);
        total += b.space.dim();
    }
    if (!acc.is_full() || total != ambient)
        throw theorem_violation("blocks do not decompose " + space +
                                " as a direct sum");
}

void check_killed(const Matrix& op, const char* opname,
                  const std::vector<NamedBlock>& blocks, std::size_t from,
                  std::size_t count, std::vector<BlockIso>& actions) {
    for (std::size_t i = from; i < from + count; ++i) {
        if (!image(op, blocks[i].space).is_zero())
            throw theorem_violation(std::string(opname) + " does not vanish on " +
                                    blocks[i].name);
        actions.push_back({opname, blocks[i].name, "0", blocks[i].space.dim()});
    }
}

void check_iso(const Matrix& op, const char* opname, const NamedBlock& from,
               const Subspace& to, const std::string& to_name,
               std::vector<BlockIso>& actions) {
    if (image(op, from.space) != to || from.space.dim() != to.dim())
        throw theorem_violation(std::string(opname) + " does not carry " +
                                from.name + " onto " + to_name);
    actions.push_back({opname, from.name, to_name, from.space.dim()});
}

} // namespace

FullDecomposition full_decomposition(const OperatorPair& pr, std::size_t level) {
    if (level == 0) level = classify(pr).number;
    SubspaceFamilies fam = subspace_families(pr, level);
    FullDecomposition out;
    out.level = level;
    const std::size_t n = level;

    out.x_blocks.push_back({"X1", fam.dec.x1});
    out.x_blocks.push_back({at_level("N", n), fam.n[n]});
    for (std::size_t i = 1; i < n; ++i)
        out.x_blocks.push_back({at_level("NN", i), fam.nn[i]});
    const std::size_t x_live = out.x_blocks.size(); // s kills everything above
    out.x_blocks.push_back({at_level("X2", n), fam.x2[n]});
    for (std::size_t i = 1; i < n; ++i)
        out.x_blocks.push_back({at_level("XX2", i), fam.xx2[i]});
    out.x_blocks.push_back({"XtN", fam.x_tilde_n});
    out.x_blocks.push_back({"Xt2", fam.x_tilde_2});

    out.y_blocks.push_back({"Y1", fam.dec.y1});
    out.y_blocks.push_back({at_level("M", n), fam.m[n]});
    for (std::size_t j = 1; j < n; ++j)
        out.y_blocks.push_back({at_level("MM", j), fam.mm[j]});
    const std::size_t y_live = out.y_blocks.size();
    out.y_blocks.push_back({at_level("Y2", n), fam.y2[n]});
    for (std::size_t j = 1; j < n; ++j)
        out.y_blocks.push_back({at_level("YY2", j), fam.yy2[j]});
    out.y_blocks.push_back({"YtN", fam.y_tilde_n});
    out.y_blocks.push_back({"Yt2", fam.y_tilde_2});

    check_coverage("X", pr.x_dim, out.x_blocks);
    check_coverage("Y", pr.y_dim, out.y_blocks);

    check_killed(pr.s, "s", out.x_blocks, 0, x_live, out.actions);
    check_iso(pr.s, "s", out.x_blocks[x_live], sum(fam.m[n + 1], fam.y2[n + 1]),
              at_level("M", n + 1) + " + " + at_level("Y2", n + 1), out.actions);
    for (std::size_t i = 1; i < n; ++i)
        check_iso(pr.s, "s", out.x_blocks[x_live + i],
                  sum(fam.mm[i + 1], fam.yy2[i + 1]),
                  at_level("MM", i + 1) + " + " + at_level("YY2", i + 1),
                  out.actions);
    check_iso(pr.s, "s", out.x_blocks[x_live + n], fam.mm[1], "MM^1", out.actions);
    check_iso(pr.s, "s", out.x_blocks[x_live + n + 1], fam.yy2[1], "YY2^1",
              out.actions);

    check_killed(pr.t, "t", out.y_blocks, 0, y_live, out.actions);
    check_iso(pr.t, "t", out.y_blocks[y_live], sum(fam.n[n + 1], fam.x2[n + 1]),
              at_level("N", n + 1) + " + " + at_level("X2", n + 1), out.actions);
    for (std::size_t j = 1; j < n; ++j)
        check_iso(pr.t, "t", out.y_blocks[y_live + j],
                  sum(fam.nn[j + 1], fam.xx2[j + 1]),
                  at_level("NN", j + 1) + " + " + at_level("XX2", j + 1),
                  out.actions);
    check_iso(pr.t, "t", out.y_blocks[y_live + n], fam.nn[1], "NN^1", out.actions);
    check_iso(pr.t, "t", out.y_blocks[y_live + n + 1], fam.xx2[1], "XX2^1",
              out.actions);
    return out;
}

std::pair<std::vector<std::string>, std::vector<std::string>>
case_block_names(PairCase kind, std::size_t number) {
    if (number < 1) throw validation_error("case number must be >= 1");
    std::vector<std::string> x, y;
    x.push_back("X1");
    y.push_back("Y1");
    if (number == 1) {
        switch (kind) {
        case PairCase::I:
            x.push_back("X2^2");
            y.push_back("Y2^2");
            break;
        case PairCase::II:
            x.insert(x.end(), {"NN^1", "X2^2"});
            y.insert(y.end(), {"Y2^2", "YtN"});
            break;
        case PairCase::III:
            x.insert(x.end(), {"X2^2", "XtN"});
            y.insert(y.end(), {"MM^1", "Y2^2"});
            break;
        }
        return {x, y};
    }
    // Block ranges at number n: the NN tower runs to n except in case I
    // where it stops at n-1, the XX2 tower stops two short of the r_s
    // stabilization index, and the limit blocks carry the stabilized
    // core.  Everything is mirrored through the case swap II <-> III.
    const std::size_t n = number;
    const std::size_t nn_top = kind == PairCase::II ? n : n - 1;
    const std::size_t mm_top = kind == PairCase::III ? n : n - 1;
    const std::size_t xx_top = kind == PairCase::III ? n - 1 : n - 2;
    const std::size_t yy_top = kind == PairCase::II ? n - 1 : n - 2;
    const std::size_t x2_level = kind == PairCase::III ? n : n - 1;
    const std::size_t y2_level = kind == PairCase::II ? n : n - 1;
    for (std::size_t i = 1; i <= nn_top; ++i) x.push_back(at_level("NN", i));
    x.push_back(at_level("X2", x2_level));
    for (std::size_t i = 1; i <= xx_top; ++i) x.push_back(at_level("XX2", i));
    x.insert(x.end(), {"XtN", "Xt2"});
    for (std::size_t j = 1; j <= mm_top; ++j) y.push_back(at_level("MM", j));
    y.push_back(at_level("Y2", y2_level));
    for (std::size_t j = 1; j <= yy_top; ++j) y.push_back(at_level("YY2", j));
    y.insert(y.end(), {"YtN", "Yt2"});
    return {x, y};
}

namespace {

struct CanonicalChecker {
    const OperatorPair& pr;
    const SubspaceFamilies& fam;
    CanonicalReport& rep;

    void zero(const std::string& name) {
        Subspace s = block_space(name, fam);
        if (!s.is_zero())
            throw theorem_violation("canonical form: " + name +
                                    " expected zero, has dimension " +
                                    std::to_string(s.dim()));
        rep.checks.push_back(name + " = 0");
    }

    void zero_space(const std::string& name, const Subspace& s) {
        if (!s.is_zero())
            throw theorem_violation("canonical form: " + name +
                                    " expected zero, has dimension " +
                                    std::to_string(s.dim()));
        rep.checks.push_back(name + " = 0");
    }

    void equal(const std::string& a, const std::string& b) {
        if (block_space(a, fam) != block_space(b, fam))
            throw theorem_violation("canonical form: " + a + " != " + b);
        rep.checks.push_back(a + " = " + b);
    }

    void iso(const char* opname, const std::string& from_name,
             const std::string& to_desc, const Subspace& from, const Subspace& to) {
        if (image(opname[0] == 's' ? pr.s : pr.t, from) != to ||
            from.dim() != to.dim())
            throw theorem_violation("canonical form: " + std::string(opname) +
                                    " does not carry " + from_name + " onto " +
                                    to_desc);
        rep.checks.push_back(std::string(opname) + ": " + from_name + " ~ " +
                             to_desc);
    }

    void iso(const char* opname, const std::string& from_name,
             const std::string& to_name) {
        iso(opname, from_name, to_name, block_space(from_name, fam),
            block_space(to_name, fam));
    }

    void cover(const char side, const std::vector<std::string>& names) {
        std::size_t ambient = side == 'X' ? pr.x_dim : pr.y_dim;
        Subspace acc = Subspace::zero(ambient);
        std::size_t total = 0;
        for (const auto& nm : names) {
            Subspace s = block_space(nm, fam);
            rep.block_dims[nm] = s.dim();
            acc = sum(acc, s);
            total += s.dim();
        }
        if (!acc.is_full() || total != ambient)
            throw theorem_violation(std::string("canonical form: blocks do not "
                                                 "decompose ") +
                                    side + " as a direct sum");
        rep.checks.push_back(std::string(1, side) + " = direct sum of " +
                             std::to_string(names.size()) + " blocks");
    }
};

} // namespace

CanonicalReport canonical_form(const OperatorPair& pr) {
    CanonicalReport rep;
    rep.cls = classify(pr);
    const std::size_t p = rep.cls.p, q = rep.cls.q, n = rep.cls.number;
    SubspaceFamilies fam = subspace_families(pr, std::max(p, q) + 1);
    CanonicalChecker ck{pr, fam, rep};

    if (n == 1) {
        switch (rep.cls.kind) {
        case PairCase::I:
            ck.zero("M^1");
            ck.zero("N^1");
            ck.zero_space("x~", fam.dec.x_tilde);
            ck.zero_space("y~", fam.dec.y_tilde);
            ck.equal("X2^1", "X2^2");
            ck.equal("Y2^1", "Y2^2");
            ck.iso("s", "X2^2", "Y2^2");
            ck.iso("t", "Y2^2", "X2^2");
            break;
        case PairCase::II:
            ck.zero("M^1");
            ck.zero("N^2");
            ck.zero_space("x~", fam.dec.x_tilde);
            ck.zero("XX2^1");
            ck.zero_space("Yt2", fam.y_tilde_2);
            ck.equal("N^1", "NN^1");
            ck.equal("X2^1", "X2^2");
            ck.equal("Y2^1", "Y2^2");
            ck.iso("s", "X2^2", "Y2^2");
            ck.iso("t", "Y2^2", "X2^2");
            ck.iso("t", "YtN", "NN^1");
            break;
        case PairCase::III:
            ck.zero("N^1");
            ck.zero("M^2");
            ck.zero_space("y~", fam.dec.y_tilde);
            ck.zero("YY2^1");
            ck.zero_space("Xt2", fam.x_tilde_2);
            ck.equal("M^1", "MM^1");
            ck.equal("X2^1", "X2^2");
            ck.equal("Y2^1", "Y2^2");
            ck.iso("s", "X2^2", "Y2^2");
            ck.iso("t", "Y2^2", "X2^2");
            ck.iso("s", "XtN", "MM^1");
            break;
        }
    } else {
        // Required vanishing at the top of each tower.
        ck.zero(at_level("M", p));
        ck.zero(at_level("N", q));
        ck.zero(at_level("MM", p));
        ck.zero(at_level("NN", q));
        if (p >= 2) ck.zero(at_level("XX2", p - 1));
        if (q >= 2) ck.zero(at_level("YY2", q - 1));

        const std::size_t x2_level = rep.cls.kind == PairCase::III ? n : n - 1;
        const std::size_t y2_level = rep.cls.kind == PairCase::II ? n : n - 1;
        ck.equal(at_level("X2", x2_level), at_level("X2", x2_level + 1));
        ck.equal(at_level("Y2", y2_level), at_level("Y2", y2_level + 1));

        // The stabilized cores exchange, and each finite tower level maps
        // one step down the opposite tilde tower.
        ck.iso("s", at_level("X2", x2_level), at_level("Y2", y2_level));
        ck.iso("t", at_level("Y2", y2_level), at_level("X2", x2_level));
        const std::size_t xx_top = rep.cls.kind == PairCase::III ? n - 1 : n - 2;
        const std::size_t yy_top = rep.cls.kind == PairCase::II ? n - 1 : n - 2;
        for (std::size_t i = 1; i <= xx_top; ++i)
            ck.iso("s", at_level("XX2", i),
                   at_level("MM", i + 1) + " + " + at_level("YY2", i + 1),
                   fam.xx2[i], sum(fam.mm[i + 1], fam.yy2[i + 1]));
        for (std::size_t j = 1; j <= yy_top; ++j)
            ck.iso("t", at_level("YY2", j),
                   at_level("NN", j + 1) + " + " + at_level("XX2", j + 1),
                   fam.yy2[j], sum(fam.nn[j + 1], fam.xx2[j + 1]));
        ck.iso("s", "XtN", "MM^1", fam.x_tilde_n, fam.mm[1]);
        ck.iso("s", "Xt2", "YY2^1", fam.x_tilde_2, fam.yy2[1]);
        ck.iso("t", "YtN", "NN^1", fam.y_tilde_n, fam.nn[1]);
        ck.iso("t", "Yt2", "XX2^1", fam.y_tilde_2, fam.xx2[1]);
    }

    auto [x_names, y_names] = case_block_names(rep.cls.kind, n);
    ck.cover('X', x_names);
    ck.cover('Y', y_names);
    return rep;
}

IndexFormulas index_formulas(const OperatorPair& pr) {
    IndexFormulas f;
    f.via_defects = pair_index(pr);
    SubspaceFamilies fam = subspace_families(pr, 2);
    auto ll = [](std::size_t v) { return static_cast<long long>(v); };
    f.via_n_blocks = ll(fam.dec.x1.dim()) + ll(fam.n[2].dim()) -
                     ll(fam.dec.y1.dim()) - ll(fam.y_tilde_2.dim());
    f.via_m_blocks = ll(fam.dec.x1.dim()) + ll(fam.x_tilde_2.dim()) -
                     ll(fam.dec.y1.dim()) - ll(fam.m[2].dim());
    return f;
}

bool is_weyl(const OperatorPair& pr) { return pair_index(pr) == 0; }
bool is_regular_weyl(const OperatorPair& pr) { return is_weyl(pr); }

} // namespace fredpair
