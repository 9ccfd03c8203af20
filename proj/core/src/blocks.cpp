#include "hermitian/blocks.hpp"

#include <algorithm>
#include <functional>

#include "hermitian/dimension.hpp"

namespace hermitian {

std::string to_string(FamilyKind f)
{
    switch (f) {
    case FamilyKind::I: return "I";
    case FamilyKind::II: return "II";
    case FamilyKind::IIIa: return "IIIa";
    case FamilyKind::IIIb: return "IIIb";
    case FamilyKind::IIIc: return "IIIc";
    case FamilyKind::IIId: return "IIId";
    }
    return "?";
}

std::string FamilyCfg::to_string() const
{
    if (kind == FamilyKind::I)
        return "I(P=" + std::to_string(P) + ",Q=" + std::to_string(Q) + ",k=" + std::to_string(k) + ")";
    return hermitian::to_string(kind) + "(N=" + std::to_string(N) + ",k=" + std::to_string(k) + ")";
}

namespace {

Weight constant_weight(int len, HalfInt v, std::optional<int> split = {})
{
    Weight w;
    w.coords.assign(len, v);
    w.split = split;
    return w;
}

/* subtract 1 from the last count coordinates */
Weight lower_tail(Weight w, int count)
{
    for (int i = w.size() - count; i < w.size(); i++)
        w.coords[i] -= HalfInt(1);
    return w;
}

std::vector<HalfInt> sorted_desc(std::vector<HalfInt> v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

} // namespace

Weight standard_twist(const HermitianPair &g, const Weight &v)
{
    int c = g.coords();
    switch (g.type) {
    case PairType::I: {
        HalfInt h = v[0] - v[c - 1];
        Weight z = constant_weight(c, HalfInt(0), g.p);
        for (int i = 0; i < g.p; i++)
            z.coords[i] = h;
        return z;
    }
    case PairType::II:
        return constant_weight(c, v[0]);
    case PairType::III:
        return constant_weight(c, HalfInt::from_twice((v[0] + v[1]).twice() / 2));
    }
    return {};
}

RawReduction reduce_coordinates(const Weight &v, ReductionRule rule)
{
    RawReduction r;
    std::vector<bool> gone(v.size(), false);
    if (rule == ReductionRule::MatchAcross) {
        require(v.split.has_value(), "Type I reduction needs a split weight");
        int s = *v.split;
        for (int i = 0; i < s; i++)
            for (int j = s; j < v.size(); j++)
                if (!gone[i] && !gone[j] && v[i] == v[j]) {
                    gone[i] = gone[j] = true;
                    r.deleted_left.push_back(v[i]);
                    r.deleted_right.push_back(v[j]);
                }
        int kept_left = 0;
        for (int i = 0; i < v.size(); i++) {
            if (gone[i])
                continue;
            r.reduced.coords.push_back(v[i]);
            kept_left += i < s;
        }
        r.reduced.split = kept_left;
        return r;
    }
    for (int i = 0; i < v.size(); i++)
        for (int j = 0; j < v.size(); j++)
            if (!gone[i] && !gone[j] && v[i] > HalfInt(0) && v[j] == -v[i]) {
                gone[i] = gone[j] = true;
                r.deleted_left.push_back(v[i]);
                r.deleted_left.push_back(v[j]);
            }
    if (rule == ReductionRule::OppositePairsAndZero)
        for (int i = 0; i < v.size(); i++)
            if (!gone[i] && v[i] == HalfInt(0)) {
                gone[i] = true;
                r.deleted_left.push_back(v[i]);
                break;
            }
    for (int i = 0; i < v.size(); i++)
        if (!gone[i])
            r.reduced.coords.push_back(v[i]);
    r.deleted_left = sorted_desc(r.deleted_left);
    return r;
}

namespace {

BlockPair assemble(std::string name, const HermitianPair &big, const Weight &lambda,
                   ReductionRule rule, PairType reduced_type, int expected_m)
{
    validate_weight(big, lambda);
    BlockPair b;
    b.name = std::move(name);
    b.big = big;
    b.lambda = lambda;
    b.rule = rule;
    RawReduction raw = reduce_coordinates(lambda + rho(big), rule);
    b.deleted_left = sorted_desc(raw.deleted_left);
    b.deleted_right = sorted_desc(raw.deleted_right);
    int removed = static_cast<int>(raw.deleted_left.size());
    if (reduced_type == PairType::I) {
        b.m = removed;
        b.reduced = HermitianPair::type_i(big.p - removed, big.q - removed);
    } else {
        b.m = removed;
        int n = big.coords() - removed;
        b.reduced = reduced_type == PairType::II ? HermitianPair::type_ii(n)
                                                 : HermitianPair::type_iii(n);
    }
    if (expected_m >= 0)
        require(b.m == expected_m, b.name + ": reduction removed " + std::to_string(b.m) +
                                       " coordinates, expected " + std::to_string(expected_m));
    b.lambda_reduced = raw.reduced - rho(b.reduced);
    b.lambda_reduced.split = raw.reduced.split;
    validate_weight(b.reduced, b.lambda_reduced);
    b.twist = standard_twist(big, b.lambda);
    b.twist_reduced = standard_twist(b.reduced, b.lambda_reduced);
    return b;
}

} // namespace

BlockPair explicit_pair(const HermitianPair &big, const Weight &lambda, ReductionRule rule,
                        PairType reduced_type, std::string name)
{
    return assemble(std::move(name), big, lambda, rule, reduced_type, -1);
}

BlockPair family_config(const FamilyCfg &cfg)
{
    const int k = cfg.k, N = cfg.N;
    const std::string name = cfg.to_string();
    switch (cfg.kind) {
    case FamilyKind::I: {
        require(k >= 1 && k < std::min(cfg.P, cfg.Q), name + ": need 1 <= k < min(P,Q)");
        Weight lambda = constant_weight(cfg.P + cfg.Q, HalfInt(0), cfg.P);
        for (int i = 0; i < cfg.P; i++)
            lambda.coords[i] = HalfInt(-k);
        return assemble(name, HermitianPair::type_i(cfg.P, cfg.Q), lambda,
                        ReductionRule::MatchAcross, PairType::I, k);
    }
    case FamilyKind::II:
        require(k >= 0 && N - 2 * k - 1 >= 1, name + ": need k >= 0 and N - 2k - 1 >= 1");
        return assemble(name, HermitianPair::type_iii(N), constant_weight(N, HalfInt(-k)),
                        ReductionRule::OppositePairsAndZero, PairType::II, 2 * k + 1);
    case FamilyKind::IIIa:
    case FamilyKind::IIIb: {
        require(k >= 1 && N - k + 1 >= 2, name + ": need k >= 1 and N - k + 1 >= 2");
        Weight base = constant_weight(N, half(-k));
        BlockPair a = assemble(name, HermitianPair::type_ii(N), base,
                               ReductionRule::OppositePairsAndZero, PairType::III, k - 1);
        if (cfg.kind == FamilyKind::IIIa)
            return a;
        BlockPair b = assemble(name, HermitianPair::type_ii(N), lower_tail(base, k),
                               ReductionRule::OppositePairsAndZero, PairType::III, k - 1);
        b.twist = a.lambda;
        b.twist_reduced = a.lambda_reduced;
        return b;
    }
    case FamilyKind::IIIc:
    case FamilyKind::IIId: {
        require(k >= 1 && N - 2 * k >= 2, name + ": need k >= 1 and N - 2k >= 2");
        Weight base = constant_weight(N, half(-(2 * k - 1)));
        BlockPair c = assemble(name, HermitianPair::type_iii(N), base,
                               ReductionRule::OppositePairs, PairType::III, 2 * k);
        if (cfg.kind == FamilyKind::IIIc)
            return c;
        BlockPair d = assemble(name, HermitianPair::type_iii(N), lower_tail(base, 2 * k + 1),
                               ReductionRule::OppositePairs, PairType::III, 2 * k);
        d.twist = c.lambda;
        d.twist_reduced = c.lambda_reduced;
        return d;
    }
    }
    throw ValidationError("unknown family");
}

Weight es_reduce(const BlockPair &b, const Weight &shifted)
{
    require(shifted.size() == b.big.coords(), "weight length does not match " + b.big.to_string());
    RawReduction raw = reduce_coordinates(shifted, b.rule);
    require(sorted_desc(raw.deleted_left) == b.deleted_left &&
                sorted_desc(raw.deleted_right) == b.deleted_right,
            shifted.to_string() + " does not carry the singular coordinates of the block");
    return raw.reduced;
}

namespace {

std::vector<HalfInt> merge_desc(std::vector<HalfInt> a, const std::vector<HalfInt> &extra,
                                const Weight &src)
{
    for (std::size_t i = 1; i < a.size(); i++)
        require(a[i] < a[i - 1], src.to_string() + " is not strictly decreasing");
    for (HalfInt e : extra) {
        require(std::find(a.begin(), a.end(), e) == a.end(),
                "no reinsertion position for " + e.to_string() + " in " + src.to_string());
        a.push_back(e);
    }
    return sorted_desc(a);
}

} // namespace

Weight es_sharp(const BlockPair &b, const Weight &x)
{
    require(x.size() == b.reduced.coords(),
            "weight length does not match " + b.reduced.to_string());
    Weight out;
    if (b.rule == ReductionRule::MatchAcross) {
        int s = x.split.value_or(b.reduced.p);
        std::vector<HalfInt> l(x.coords.begin(), x.coords.begin() + s);
        std::vector<HalfInt> r(x.coords.begin() + s, x.coords.end());
        l = merge_desc(l, b.deleted_left, x);
        r = merge_desc(r, b.deleted_right, x);
        out.coords = l;
        out.coords.insert(out.coords.end(), r.begin(), r.end());
        out.split = static_cast<int>(l.size());
    } else {
        out.coords = merge_desc(x.coords, b.deleted_left, x);
    }
    Weight back = es_reduce(b, out);
    back.split = x.split;
    require(back == x, "reinserting into " + x.to_string() + " is not inverted by reduction");
    return out;
}

bool root_order_leq(const HermitianPair &g, const Weight &a, const Weight &b)
{
    Weight d = b - a;
    int c = g.coords();
    std::vector<HalfInt> S(c);
    HalfInt run;
    for (int i = 0; i < c; i++) {
        run += d[i];
        S[i] = run;
    }
    auto nonneg_int = [](HalfInt h) { return h.is_integer() && h >= HalfInt(0); };
    auto half_of = [](HalfInt h) -> std::optional<HalfInt> {
        if (h.twice() % 2)
            return std::nullopt;
        return HalfInt::from_twice(h.twice() / 2);
    };
    switch (g.type) {
    case PairType::I:
        for (int i = 0; i + 1 < c; i++)
            if (!nonneg_int(S[i]))
                return false;
        return S[c - 1] == HalfInt(0);
    case PairType::II: {
        for (int i = 0; i + 1 < c; i++)
            if (!nonneg_int(S[i]))
                return false;
        auto cn = half_of(S[c - 1]);
        return cn && nonneg_int(*cn);
    }
    case PairType::III: {
        for (int i = 0; i + 2 < c; i++)
            if (!nonneg_int(S[i]))
                return false;
        auto cn1 = half_of(S[c - 2] - d[c - 1]);
        auto cn = half_of(S[c - 1]);
        return cn1 && cn && nonneg_int(*cn1) && nonneg_int(*cn);
    }
    }
    return false;
}

mpz_class levi_dimension(const HermitianPair &g, const Weight &mu)
{
    if (g.type == PairType::I) {
        std::vector<HalfInt> l(mu.coords.begin(), mu.coords.begin() + g.p);
        std::vector<HalfInt> r(mu.coords.begin() + g.p, mu.coords.end());
        return dim_gl(l) * dim_gl(r);
    }
    return dim_gl(mu.coords);
}

namespace {

std::optional<Partition> as_partition(const std::vector<HalfInt> &v)
{
    std::vector<int> parts;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (!v[i].is_integer() || v[i] < HalfInt(0) || (i && v[i] > v[i - 1]))
            return std::nullopt;
        parts.push_back(static_cast<int>(v[i].to_int()));
    }
    return Partition(parts);
}

std::vector<HalfInt> negated_reverse(std::vector<HalfInt> v)
{
    std::reverse(v.begin(), v.end());
    for (auto &h : v)
        h = -h;
    return v;
}

} // namespace

std::string TwistedShape::to_string() const
{
    auto s = [](const std::optional<Partition> &p) { return p ? p->to_string() : "?"; };
    if (left || right)
        return s(left) + "*;" + s(right);
    return s(whole) + "*";
}

TwistedShape twisted_shape(const HermitianPair &g, const Weight &t)
{
    TwistedShape s;
    if (g.type == PairType::I) {
        std::vector<HalfInt> l(t.coords.begin(), t.coords.begin() + g.p);
        std::vector<HalfInt> r(t.coords.begin() + g.p, t.coords.end());
        s.left = as_partition(negated_reverse(l));
        s.right = as_partition(r);
    } else {
        s.whole = as_partition(negated_reverse(t.coords));
    }
    return s;
}

BlockPoset regular_block_poset(const BlockPair &b)
{
    BggComplex c = bgg_complex(b.reduced, b.lambda_reduced);
    BlockPoset out{b.reduced, {}, c.edges};
    for (const auto &n : c.nodes) {
        Weight tw = n.weight - b.twist_reduced;
        tw.split = n.weight.split;
        out.nodes.push_back({n.ideal, n.level, n.weight, tw, twisted_shape(b.reduced, tw),
                             levi_dimension(b.reduced, n.weight)});
    }
    return out;
}

BlockPoset singular_block_poset(const BlockPair &b)
{
    BlockPoset reg = regular_block_poset(b);
    BlockPoset out{b.big, {}, reg.edges};
    const Weight rb = rho(b.big), rr = rho(b.reduced);
    for (const auto &n : reg.nodes) {
        Weight shifted = n.weight + rr;
        shifted.split = n.weight.split;
        Weight mu = es_sharp(b, shifted) - rb;
        mu.split = b.lambda.split;
        require(is_k_dominant(b.big, mu), "lifted weight " + mu.to_string() + " is not k-dominant");
        Weight tw = mu - b.twist;
        tw.split = mu.split;
        out.nodes.push_back({n.ideal, n.level, mu, tw, twisted_shape(b.big, tw),
                             levi_dimension(b.big, mu)});
    }
    return out;
}

namespace {

std::vector<Weight> positive_roots(const HermitianPair &g)
{
    const int c = g.coords();
    std::vector<Weight> out;
    auto root = [&](int i, int j, int sj) {
        Weight w;
        w.coords.assign(c, HalfInt(0));
        if (g.type == PairType::I)
            w.split = g.p;
        w.coords[i] += HalfInt(1);
        w.coords[j] += HalfInt(sj);
        out.push_back(w);
    };
    for (int i = 0; i < c; i++) {
        for (int j = i + 1; j < c; j++) {
            root(i, j, -1);
            if (g.type != PairType::I)
                root(i, j, 1);
        }
        if (g.type == PairType::II)
            root(i, i, 1);
    }
    return out;
}

/* coordinates sorted decreasingly inside each Levi block */
std::vector<HalfInt> levi_sorted(const HermitianPair &g, std::vector<HalfInt> v)
{
    const int s = g.type == PairType::I ? g.p : g.coords();
    std::sort(v.begin(), v.begin() + s, std::greater<>());
    std::sort(v.begin() + s, v.end(), std::greater<>());
    return v;
}

/* lower + rho is W_k-conjugate to a reflection of upper + rho, and lies below it */
bool reflection_step(const HermitianPair &g, const Weight &upper, const Weight &lower)
{
    if (upper == lower || !root_order_leq(g, lower, upper))
        return false;
    const Weight u = upper + rho(g);
    const auto target = levi_sorted(g, (lower + rho(g)).coords);
    for (const Weight &beta : positive_roots(g))
        if (levi_sorted(g, reflect(g, beta, u).coords) == target)
            return true;
    return false;
}

} // namespace

CongruenceReport congruence_check(const BlockPair &b)
{
    CongruenceReport r;
    r.pair = b;
    r.regular = regular_block_poset(b);
    r.singular = singular_block_poset(b);
    const auto &S = r.singular.nodes, &R = r.regular.nodes;
    const Weight rb = rho(b.big), rr = rho(b.reduced);

    r.bijection = S.size() == R.size();
    for (std::size_t i = 0; r.bijection && i < S.size(); i++) {
        Weight back = es_reduce(b, S[i].weight + rb) - rr;
        back.split = R[i].weight.split;
        r.bijection = back == R[i].weight;
    }

    r.poset_iso = r.bijection && r.singular.edges == r.regular.edges;
    for (auto [lo, hi] : r.regular.edges) {
        if (!r.poset_iso)
            break;
        r.poset_iso = S[lo].level + 1 == S[hi].level &&
                      reflection_step(b.big, S[lo].weight, S[hi].weight) &&
                      reflection_step(b.reduced, R[lo].weight, R[hi].weight);
    }

    r.root_order_agrees = r.bijection;
    for (std::size_t i = 0; r.root_order_agrees && i < S.size(); i++)
        for (std::size_t j = 0; r.root_order_agrees && j < S.size(); j++)
            r.root_order_agrees = root_order_leq(b.big, S[i].weight, S[j].weight) ==
                                  root_order_leq(b.reduced, R[i].weight, R[j].weight);

    r.dims_equal = r.bijection;
    for (std::size_t i = 0; r.dims_equal && i < S.size(); i++)
        r.dims_equal = S[i].dim == R[i].dim;

    r.conjugate_pairs = r.bijection;
    for (std::size_t i = 0; r.conjugate_pairs && i < S.size(); i++) {
        const TwistedShape &s = S[i].shape, &g = R[i].shape;
        if (b.big.type == PairType::I)
            r.conjugate_pairs = s.left && s.right && g.left && g.right &&
                                *s.left == g.right->conjugate() && *s.right == g.left->conjugate();
        else
            r.conjugate_pairs = s.whole && g.whole && *s.whole == g.whole->conjugate();
    }
    return r;
}

} // namespace hermitian
