#include "hermitian/diagrams.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hermitian {

HermitianPair HermitianPair::type_i(int p, int q)
{
    require(p >= 1 && q >= 1, "Type I needs p, q >= 1");
    return {PairType::I, p, q, 0};
}

HermitianPair HermitianPair::type_ii(int n)
{
    require(n >= 1, "Type II needs n >= 1");
    return {PairType::II, 0, 0, n};
}

HermitianPair HermitianPair::type_iii(int n)
{
    require(n >= 2, "Type III needs n >= 2");
    return {PairType::III, 0, 0, n};
}

int HermitianPair::noncompact_count() const
{
    switch (type) {
    case PairType::I: return p * q;
    case PairType::II: return n * (n + 1) / 2;
    case PairType::III: return n * (n - 1) / 2;
    }
    return 0;
}

std::string HermitianPair::to_string() const
{
    switch (type) {
    case PairType::I: return "I(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case PairType::II: return "II(" + std::to_string(n) + ")";
    case PairType::III: return "III(" + std::to_string(n) + ")";
    }
    return "?";
}

Weight rho(const HermitianPair &g)
{
    std::vector<std::int64_t> v;
    int c = g.coords();
    for (int i = 0; i < c; i++) {
        switch (g.type) {
        case PairType::I: v.push_back(c - 1 - i); break;
        case PairType::II: v.push_back(c - i); break;
        case PairType::III: v.push_back(c - 1 - i); break;
        }
    }
    return make_weight(v, g.type == PairType::I ? std::optional<int>(g.p) : std::nullopt);
}

namespace {

bool block_ok(const std::vector<HalfInt> &c, int lo, int hi)
{
    for (int i = lo + 1; i < hi; i++) {
        HalfInt d = c[i - 1] - c[i];
        if (!d.is_integer() || d < HalfInt(0))
            return false;
    }
    return true;
}

} // namespace

bool is_k_dominant(const HermitianPair &g, const Weight &lambda)
{
    if (lambda.size() != g.coords())
        return false;
    if (g.type == PairType::I)
        return block_ok(lambda.coords, 0, g.p) && block_ok(lambda.coords, g.p, g.p + g.q);
    return block_ok(lambda.coords, 0, g.n);
}

void validate_weight(const HermitianPair &g, const Weight &lambda)
{
    require(lambda.size() == g.coords(), "weight " + lambda.to_string() + " has " +
                                             std::to_string(lambda.size()) + " entries, " +
                                             g.to_string() + " needs " +
                                             std::to_string(g.coords()));
    require(is_k_dominant(g, lambda),
            "weight " + lambda.to_string() + " is not k-dominant for " + g.to_string());
}

std::vector<HalfInt> simple_pairings(const HermitianPair &g, const Weight &v)
{
    require(v.size() == g.coords(), "weight length does not match the pair");
    std::vector<HalfInt> d;
    int c = g.coords();
    for (int i = 0; i + 1 < c; i++)
        d.push_back(v[i] - v[i + 1]);
    if (g.type == PairType::II)
        d.push_back(v[c - 1]);
    else if (g.type == PairType::III)
        d.push_back(v[c - 2] + v[c - 1]);
    return d;
}

int row_start(const HermitianPair &g, int row)
{
    return g.type == PairType::I ? 0 : row;
}

RootIndex root_at(const HermitianPair &g, int row, int col)
{
    switch (g.type) {
    case PairType::I:
        require(row >= 0 && row < g.p && col >= 0 && col < g.q, "box outside the p x q diagram");
        return {g.p - row, col + 1};
    case PairType::II:
        require(row >= 0 && row <= col && col < g.n, "box outside the shifted diagram");
        return {g.n - row, g.n - col};
    case PairType::III:
        require(row >= 0 && row <= col && col <= g.n - 2, "box outside the shifted diagram");
        return {g.n - row, g.n - 1 - col};
    }
    return {0, 0};
}

Weight root_vector(const HermitianPair &g, RootIndex r)
{
    Weight w = make_weight(std::vector<std::int64_t>(g.coords(), 0),
                           g.type == PairType::I ? std::optional<int>(g.p) : std::nullopt);
    if (g.type == PairType::I) {
        w.coords[r.i - 1] += 1;
        w.coords[g.p + r.j - 1] -= 1;
    } else {
        w.coords[r.i - 1] += 1;
        w.coords[r.j - 1] += 1;
    }
    return w;
}

HalfInt coroot_pairing(const HermitianPair &g, const Weight &v, const Weight &root)
{
    (void)g;
    std::int64_t dot2 = 0, len2 = 0;
    for (int i = 0; i < v.size(); i++) {
        dot2 += v[i].twice() * root[i].twice();
        len2 += root[i].twice() * root[i].twice();
    }
    /* 2(v,r)/(r,r) with both doubled: 2 * (dot2/4) / (len2/4) */
    require(len2 > 0, "zero root");
    std::int64_t num = 2 * dot2 * 2; /* doubled result */
    if (num % len2)
        throw std::logic_error("coroot pairing is not a half-integer");
    return HalfInt::from_twice(num / len2);
}

Weight reflect(const HermitianPair &g, const Weight &root, const Weight &v)
{
    HalfInt c = coroot_pairing(g, v, root);
    Weight r = v;
    for (int i = 0; i < v.size(); i++)
        r.coords[i] -= HalfInt::from_twice(c.twice() * root[i].twice() / 2);
    return r;
}

bool is_lower_ideal(const HermitianPair &g, const Partition &rows)
{
    const auto &s = rows.parts();
    switch (g.type) {
    case PairType::I:
        return rows.fits_in(g.p, g.q);
    case PairType::II:
    case PairType::III: {
        int max_part = g.type == PairType::II ? g.n : g.n - 1;
        for (std::size_t i = 0; i < s.size(); i++)
            if (s[i] > max_part || (i && s[i] >= s[i - 1]))
                return false;
        return true;
    }
    }
    return false;
}

std::vector<Partition> lower_ideals(const HermitianPair &g)
{
    switch (g.type) {
    case PairType::I: return enumerate_shapes(ShapeFamily::box(g.p, g.q));
    case PairType::II: return enumerate_shapes(ShapeFamily::strict(g.n));
    case PairType::III: return enumerate_shapes(ShapeFamily::strict(g.n - 1));
    }
    return {};
}

namespace {

/* 1-based simple root index whose pairing fills the box */
int fill_index(const HermitianPair &g, int row, int col)
{
    switch (g.type) {
    case PairType::I: return g.p - row + col;
    case PairType::II: return g.n + row - col;
    case PairType::III:
        if (row == col)
            return row % 2 == 0 ? g.n : g.n - 1;
        return g.n - 1 + row - col;
    }
    return 0;
}

void check_ideal(const HermitianPair &g, const Partition &ideal)
{
    require(is_lower_ideal(g, ideal),
            ideal.to_string() + " is not a lower ideal of " + g.to_string());
}

} // namespace

std::vector<HalfInt> FilledDiagram::row_sums() const
{
    std::vector<HalfInt> r;
    for (const auto &row : entries) {
        HalfInt s;
        for (HalfInt h : row)
            s += h;
        r.push_back(s);
    }
    return r;
}

std::vector<HalfInt> FilledDiagram::column_sums() const
{
    std::vector<HalfInt> c;
    for (int r = 0; r < static_cast<int>(entries.size()); r++)
        for (int t = 0; t < static_cast<int>(entries[r].size()); t++) {
            std::size_t col = row_start(pair, r) + t;
            if (c.size() <= col)
                c.resize(col + 1);
            c[col] += entries[r][t];
        }
    return c;
}

std::string FilledDiagram::to_string() const
{
    std::ostringstream os;
    for (int r = 0; r < static_cast<int>(entries.size()); r++) {
        os << (r ? " / " : "") << std::string(row_start(pair, r), '.');
        for (std::size_t t = 0; t < entries[r].size(); t++)
            os << (t ? " " : "") << entries[r][t].to_string();
    }
    return os.str();
}

FilledDiagram fill_diagram(const HermitianPair &g, const Partition &ideal, const Weight &lambda)
{
    validate_weight(g, lambda);
    check_ideal(g, ideal);
    auto d = simple_pairings(g, lambda + rho(g));
    FilledDiagram f{g, ideal, {}};
    for (int r = 0; r < ideal.length(); r++) {
        std::vector<HalfInt> row;
        for (int t = 0; t < ideal.at(r); t++)
            row.push_back(d[fill_index(g, r, row_start(g, r) + t) - 1]);
        f.entries.push_back(std::move(row));
    }
    return f;
}

Weight rows_stacked(const FilledDiagram &f)
{
    const HermitianPair &g = f.pair;
    auto rows = f.row_sums();
    auto cols = f.column_sums();
    Weight out;
    switch (g.type) {
    case PairType::I: {
        rows.resize(g.p);
        cols.resize(g.q);
        for (int j = g.q - 1; j >= 0; j--)
            out.coords.push_back(-cols[j]);
        out.coords.insert(out.coords.end(), rows.begin(), rows.end());
        out.split = g.q;
        break;
    }
    case PairType::II:
        rows.resize(g.n);
        cols.resize(g.n);
        for (int i = 0; i < g.n; i++)
            out.coords.push_back(rows[i] + cols[i]);
        break;
    case PairType::III:
        rows.resize(g.n - 1);
        cols.resize(g.n - 1);
        out.coords.assign(g.n, HalfInt(0));
        for (int i = 0; i < g.n - 1; i++) {
            out.coords[i] += rows[i];
            out.coords[i + 1] += cols[i];
        }
        break;
    }
    return out;
}

Weight w_dot_lambda(const HermitianPair &g, const Partition &ideal, const Weight &lambda)
{
    Weight w = lambda + dual(rows_stacked(fill_diagram(g, ideal, lambda)));
    w.split = lambda.split;
    return w;
}

Weight w_dot_lambda_recursive(const HermitianPair &g, const Partition &ideal,
                              const Weight &lambda)
{
    validate_weight(g, lambda);
    check_ideal(g, ideal);
    const Weight shifted = lambda + rho(g);
    /* simple roots as weights, for recognising f(beta) */
    std::vector<Weight> simple;
    {
        Weight zero = make_weight(std::vector<std::int64_t>(g.coords(), 0), lambda.split);
        int c = g.coords();
        for (int i = 0; i + 1 < c; i++) {
            Weight a = zero;
            a.coords[i] = 1;
            a.coords[i + 1] = -1;
            simple.push_back(a);
        }
        if (g.type == PairType::II) {
            Weight a = zero;
            a.coords[c - 1] = 2;
            simple.push_back(a);
        } else if (g.type == PairType::III) {
            Weight a = zero;
            a.coords[c - 2] = 1;
            a.coords[c - 1] = 1;
            simple.push_back(a);
        }
    }
    std::vector<Weight> gammas; /* v = s_{gamma_1} ... s_{gamma_t}; v^{-1} applies gamma_1 first */
    Weight mu = lambda;
    for (int r = 0; r < ideal.length(); r++)
        for (int t = 0; t < ideal.at(r); t++) {
            Weight beta = root_vector(g, root_at(g, r, row_start(g, r) + t));
            Weight gamma = beta;
            for (const Weight &s : gammas)
                gamma = reflect(g, s, gamma);
            if (std::find(simple.begin(), simple.end(), gamma) == simple.end())
                throw std::logic_error("v^{-1} beta is not simple: ideal order is not a linear extension");
            HalfInt c = coroot_pairing(g, shifted, gamma);
            for (int i = 0; i < mu.size(); i++)
                mu.coords[i] -= HalfInt::from_twice(c.twice() * beta[i].twice() / 2);
            gammas.push_back(gamma);
        }
    return mu;
}

Weight weyl_apply(const HermitianPair &g, const Partition &ideal, const Weight &v)
{
    check_ideal(g, ideal);
    require(v.size() == g.coords(), "weight length does not match the pair");
    Weight out;
    out.split = v.split;
    if (g.type == PairType::I) {
        /* ideal = (alpha-1 | beta-1); left block is (c_p..c_1), right is (d_1..d_q) */
        Frobenius f = frobenius(ideal);
        std::vector<int> alpha = add_constant(f.arms, 1), beta = add_constant(f.legs, 1);
        auto c = [&](int j) { return v[g.p - j]; };
        auto d = [&](int j) { return v[g.p + j - 1]; };
        for (int j = g.p; j >= 1; j--)
            if (std::find(beta.begin(), beta.end(), j) == beta.end())
                out.coords.push_back(c(j));
        for (auto it = alpha.rbegin(); it != alpha.rend(); ++it)
            out.coords.push_back(d(*it));
        for (int b : beta)
            out.coords.push_back(c(b));
        for (int j = 1; j <= g.q; j++)
            if (std::find(alpha.begin(), alpha.end(), j) == alpha.end())
                out.coords.push_back(d(j));
        return out;
    }
    /* Type II: rows alpha; Type III: rows alpha - 1.  c_j sits at position n - j. */
    std::vector<int> alpha = ideal.parts();
    if (g.type == PairType::III)
        alpha = add_constant(alpha, 1);
    auto c = [&](int j) { return v[g.n - j]; };
    for (int j = g.n; j >= 1; j--)
        if (std::find(alpha.begin(), alpha.end(), j) == alpha.end())
            out.coords.push_back(c(j));
    if (g.type == PairType::III && alpha.size() % 2)
        out.coords.back() = -out.coords.back();
    for (auto it = alpha.rbegin(); it != alpha.rend(); ++it)
        out.coords.push_back(-c(*it));
    return out;
}

std::vector<int> BggComplex::level_sizes() const
{
    std::vector<int> s;
    for (const auto &node : nodes) {
        if (static_cast<int>(s.size()) <= node.level)
            s.resize(node.level + 1, 0);
        s[node.level]++;
    }
    return s;
}

BggComplex bgg_complex(const HermitianPair &g, const Weight &lambda)
{
    validate_weight(g, lambda);
    BggComplex c{g, lambda, {}, {}};
    auto ideals = lower_ideals(g);
    std::map<Partition, int> index;
    for (auto &I : ideals) {
        index[I] = static_cast<int>(c.nodes.size());
        c.nodes.push_back({I, I.size(), w_dot_lambda(g, I, lambda)});
    }
    for (int a = 0; a < static_cast<int>(c.nodes.size()); a++) {
        const auto &I = c.nodes[a].ideal;
        for (int r = 0; r <= I.length(); r++) {
            std::vector<int> parts = I.parts();
            if (r == I.length())
                parts.push_back(0);
            parts[r]++;
            bool ok = r == 0 || parts[r] <= parts[r - 1];
            if (g.type != PairType::I)
                ok = r == 0 || parts[r] < parts[r - 1];
            if (!ok)
                continue;
            Partition J(parts);
            if (auto it = index.find(J); it != index.end() && is_lower_ideal(g, J))
                c.edges.emplace_back(a, it->second);
        }
    }
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

std::string bgg_poset_json(const BggComplex &c)
{
    using nlohmann::ordered_json;
    auto strs = [](const Weight &w) {
        ordered_json a = ordered_json::array();
        for (HalfInt h : w.coords)
            a.push_back(h.to_string());
        return a;
    };
    ordered_json j;
    j["schema"] = "hermitian.bgg-poset/1";
    j["pair"] = c.pair.to_string();
    j["lambda"] = strs(c.lambda);
    if (c.lambda.split)
        j["split"] = *c.lambda.split;
    ordered_json nodes = ordered_json::array();
    for (std::size_t i = 0; i < c.nodes.size(); i++) {
        const auto &node = c.nodes[i];
        nodes.push_back({{"id", i},
                         {"ideal", node.ideal.parts()},
                         {"level", node.level},
                         {"weight", strs(node.weight)}});
    }
    j["nodes"] = nodes;
    ordered_json edges = ordered_json::array();
    for (auto [a, b] : c.edges)
        edges.push_back({a, b});
    j["edges"] = edges;
    return j.dump(2);
}

} // namespace hermitian
