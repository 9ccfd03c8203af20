#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermitian/blocks.hpp"
#include "hermitian/diagrams.hpp"
#include "hermitian/dimension.hpp"
#include "hermitian/hilbert.hpp"
#include "hermitian/literal.hpp"
#include "hermitian/report.hpp"
#include "hermitian/symmetric.hpp"

namespace hermtool {

namespace {

using namespace hermitian;
using nlohmann::ordered_json;

constexpr const char *schema = "hermtool/1";

struct Options {
    std::string format = "text";
    int cap = 10;
    unsigned seed = 1;

    std::string type;
    int p = 0, q = 0, n = 0;

    std::string family;
    int P = 0, Q = 0, N = 0, k = 0;

    std::string partition, weight, alpha, beta, lambda, ideal;
    std::string mu_plus_rho, reduced, kind, rule = "opposite", reduced_type;
    std::string side = "regular";
    int m = 0, n_max = 8, a = 0, b = 0, random = 0;
    bool invariant = false;
};

struct Output {
    int code = 0;
    std::string text;
    ordered_json json;
};

ordered_json header(const std::string &command)
{
    ordered_json j;
    j["schema"] = schema;
    j["command"] = command;
    return j;
}

std::string str(const mpz_class &z) { return z.get_str(); }

Partition shape_arg(const std::string &s)
{
    require(!s.empty(), "a partition literal is required");
    if (s.find('|') != std::string::npos)
        return from_frobenius(parse_frobenius(s));
    return parse_partition(s);
}

HermitianPair pair_arg(const Options &o)
{
    if (o.type == "I")
        return HermitianPair::type_i(o.p, o.q);
    if (o.type == "II")
        return HermitianPair::type_ii(o.n);
    if (o.type == "III")
        return HermitianPair::type_iii(o.n);
    throw ValidationError("--type must be I, II or III, got '" + o.type + "'");
}

Weight lambda_arg(const Options &o, const HermitianPair &g)
{
    Weight w;
    if (o.lambda.empty()) {
        w.coords.assign(g.coords(), HalfInt(0));
    } else {
        w = parse_weight(o.lambda);
    }
    if (g.type == PairType::I) {
        if (!w.split)
            w.split = g.p;
        require(*w.split == g.p, "the semicolon of a type I weight must follow coordinate p");
    }
    require(w.size() == g.coords(), "lambda needs " + std::to_string(g.coords()) + " coordinates");
    validate_weight(g, w);
    return w;
}

FamilyKind family_kind(const std::string &s)
{
    static const std::map<std::string, FamilyKind> names = {
        {"I", FamilyKind::I},       {"II", FamilyKind::II},     {"IIIa", FamilyKind::IIIa},
        {"IIIb", FamilyKind::IIIb}, {"IIIc", FamilyKind::IIIc}, {"IIId", FamilyKind::IIId}};
    auto it = names.find(s);
    require(it != names.end(), "unknown family '" + s + "'");
    return it->second;
}

FamilyCfg family_arg(const Options &o)
{
    FamilyKind f = family_kind(o.family);
    if (f == FamilyKind::I)
        return FamilyCfg::type_i(o.P, o.Q, o.k);
    return FamilyCfg::of(f, o.N, o.k);
}

ReductionRule rule_arg(const std::string &s)
{
    if (s == "match")
        return ReductionRule::MatchAcross;
    if (s == "opposite")
        return ReductionRule::OppositePairs;
    if (s == "opposite-zero")
        return ReductionRule::OppositePairsAndZero;
    throw ValidationError("--rule must be match, opposite or opposite-zero, got '" + s + "'");
}

PairType pair_type_arg(const std::string &s)
{
    if (s == "I")
        return PairType::I;
    if (s == "II")
        return PairType::II;
    if (s == "III")
        return PairType::III;
    throw ValidationError("--reduced-type must be I, II or III, got '" + s + "'");
}

/* a family from --family, or an explicit singular weight from --type/--lambda */
BlockPair block_arg(const Options &o)
{
    if (!o.family.empty())
        return family_config(family_arg(o));
    require(!o.type.empty(), "give --family, or --type with --lambda for an explicit block");
    HermitianPair g = pair_arg(o);
    return explicit_pair(g, lambda_arg(o, g), rule_arg(o.rule),
                         pair_type_arg(o.reduced_type.empty() ? o.type : o.reduced_type));
}

ordered_json weight_json(const Weight &w) { return w.to_string(); }

ordered_json block_json(const BlockPair &b)
{
    ordered_json j;
    j["name"] = b.name;
    j["pair"] = b.big.to_string();
    j["reduced_pair"] = b.reduced.to_string();
    j["m"] = b.m;
    j["lambda"] = weight_json(b.lambda);
    j["lambda_reduced"] = weight_json(b.lambda_reduced);
    j["twist"] = weight_json(b.twist);
    j["twist_reduced"] = weight_json(b.twist_reduced);
    return j;
}

std::string block_text(const BlockPair &b)
{
    std::ostringstream os;
    os << b.name << ": " << b.big.to_string() << " -> " << b.reduced.to_string() << ", m = " << b.m
       << "\nlambda  = " << b.lambda.to_string() << "\nlambda' = " << b.lambda_reduced.to_string()
       << "\ntwist   = " << b.twist.to_string() << "\ntwist'  = " << b.twist_reduced.to_string();
    return os.str();
}

ordered_json poset_json(const BlockPoset &p)
{
    ordered_json j;
    j["pair"] = p.pair.to_string();
    ordered_json nodes = ordered_json::array();
    for (std::size_t i = 0; i < p.nodes.size(); i++) {
        const auto &n = p.nodes[i];
        nodes.push_back({{"id", i},
                         {"ideal", n.ideal.parts()},
                         {"level", n.level},
                         {"weight", weight_json(n.weight)},
                         {"twisted", weight_json(n.twisted)},
                         {"shape", n.shape.to_string()},
                         {"dim", str(n.dim)}});
    }
    j["nodes"] = nodes;
    ordered_json edges = ordered_json::array();
    for (auto [a, b] : p.edges)
        edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

std::string poset_text(const BlockPoset &p)
{
    std::ostringstream os;
    os << p.pair.to_string() << ", " << p.nodes.size() << " nodes";
    for (const auto &n : p.nodes)
        os << "\n  " << n.level << "  " << n.weight.to_string() << "  " << n.shape.to_string()
           << "  dim " << n.dim.get_str();
    return os.str();
}

/* ---- subcommands ---- */

Output cmd_dim(const Options &o)
{
    require(o.n >= 1, "--n must be positive");
    Output r;
    mpz_class d;
    if (!o.weight.empty()) {
        Weight w = parse_weight(o.weight);
        require(w.size() <= o.n, "weight has more than n coordinates");
        std::vector<HalfInt> v = w.coords;
        v.resize(o.n, HalfInt(0));
        d = dim_gl(v);
    } else {
        d = dim_partition(shape_arg(o.partition), o.n);
    }
    r.text = str(d);
    r.json = header("dim");
    r.json["n"] = o.n;
    r.json["dim"] = str(d);
    return r;
}

Output cmd_two_block(const Options &o)
{
    auto res = verify_two_block(parse_int_list(o.alpha), parse_int_list(o.beta), o.p, o.q, o.m);
    Output r;
    std::ostringstream os;
    os << "lhs = dim " << res.lhs_x.to_string() << " (gl_" << o.p << ") * dim "
       << res.lhs_y.to_string() << " (gl_" << o.q << ") = " << str(res.lhs) << "\n"
       << "rhs = dim " << res.rhs_x.to_string() << " (gl_" << o.p + o.m << ") * dim "
       << res.rhs_y.to_string() << " (gl_" << o.q + o.m << ") = " << str(res.rhs) << "\n"
       << (res.equal ? "equal" : "NOT equal");
    r.text = os.str();
    r.json = header("thm21");
    r.json["lhs"] = str(res.lhs);
    r.json["rhs"] = str(res.rhs);
    r.json["equal"] = res.equal;
    r.code = res.equal ? 0 : 1;
    return r;
}

Output cmd_conjugate(const Options &o)
{
    require(o.n_max >= 1, "--n-max must be positive");
    Output r;
    r.json = header("thm23");
    std::ostringstream os;
    auto one = [&](const Partition &shape) {
        auto res = verify_conjugate(shape, o.m, o.n_max);
        ordered_json j;
        j["shape"] = shape.to_string();
        j["m"] = o.m;
        j["form"] = res.core ? ordered_json(*res.core) : ordered_json(nullptr);
        ordered_json rows = ordered_json::array();
        os << shape.to_string() << ", m = " << o.m << ": ";
        if (res.core) {
            os << "(alpha+" << o.m << "|alpha) with alpha = (";
            for (std::size_t i = 0; i < res.core->size(); i++)
                os << (i ? "," : "") << (*res.core)[i];
            os << ")";
        } else {
            os << "not of the form (alpha+" << o.m << "|alpha)";
        }
        for (const auto &row : res.rows) {
            rows.push_back({{"n", row.n},
                            {"dim", str(row.dim_shape)},
                            {"dim_conjugate", str(row.dim_conjugate)}});
            os << "\n  n=" << row.n << ": " << str(row.dim_shape) << " vs "
               << str(row.dim_conjugate) << (row.dim_shape == row.dim_conjugate ? "" : "  *");
        }
        j["rows"] = rows;
        j["all_equal"] = res.all_equal;
        j["least_witness"] = res.least_witness ? ordered_json(*res.least_witness)
                                               : ordered_json(nullptr);
        if (res.least_witness)
            os << "\nleast witness n = " << *res.least_witness;
        else
            os << "\nno witness for n <= " << o.n_max;
        bool falsified = res.core && !res.all_equal;
        return std::make_pair(j, falsified);
    };
    if (o.random > 0) {
        /* pseudo-random shapes not of the form, each must have a witness */
        std::mt19937 gen(o.seed);
        std::uniform_int_distribution<int> part(0, 6);
        ordered_json list = ordered_json::array();
        int found = 0, tried = 0;
        while (tried < o.random) {
            std::vector<int> v(4);
            for (int &x : v)
                x = part(gen);
            std::sort(v.rbegin(), v.rend());
            Partition s(v);
            if (asc_core(s, o.m))
                continue;
            tried++;
            if (tried > 1)
                os << "\n";
            auto [j, bad] = one(s);
            (void)bad;
            found += j["least_witness"].is_null() ? 0 : 1;
            list.push_back(j);
        }
        r.json["seed"] = o.seed;
        r.json["results"] = list;
        r.json["witnessed"] = found;
        os << "\nwitnessed " << found << " of " << tried;
        r.code = found == tried ? 0 : 1;
    } else {
        auto [j, bad] = one(shape_arg(o.partition));
        r.json["result"] = j;
        r.code = bad ? 1 : 0;
    }
    r.text = os.str();
    return r;
}

Output cmd_qspec(const Options &o)
{
    require(o.n >= 1, "--n must be positive");
    Partition s = shape_arg(o.partition);
    LaurentPoly f = principal_specialization(s, o.n);
    mpz_class at_one = 0;
    ordered_json coeffs = ordered_json::array();
    for (const auto &[e, c] : f) {
        at_one += c;
        coeffs.push_back({{"exponent", e}, {"coefficient", str(c)}});
    }
    Output r;
    r.text = to_string(f) + "\nat q=1: " + str(at_one);
    r.json = header("qspec");
    r.json["shape"] = s.to_string();
    r.json["n"] = o.n;
    r.json["terms"] = coeffs;
    r.json["at_one"] = str(at_one);
    return r;
}

IdentityKind identity_kind(const Options &o)
{
    using F = IdentityFamily;
    static const std::map<std::string, F> names = {
        {"dual-cauchy", F::DualCauchy},          {"littlewood-II", F::LittlewoodII},
        {"littlewood-III", F::LittlewoodIII},    {"littlewood-IIIab", F::LittlewoodIIIab},
        {"reciprocal-II", F::ReciprocalII},      {"reciprocal-III", F::ReciprocalIII},
        {"gen-I", F::GenI},                      {"gen-II", F::GenII},
        {"gen-IIIa", F::GenIIIa},                {"gen-IIIb", F::GenIIIb},
        {"general", F::General}};
    auto it = names.find(o.kind);
    require(it != names.end(), "unknown identity kind '" + o.kind + "'");
    require(o.k >= 0 && o.a >= 0 && o.b >= 0, "identity parameters must be nonnegative");
    return {it->second, o.k, o.a, o.b};
}

Output cmd_identity(const Options &o)
{
    require(o.cap >= 2, "--cap must be at least 2 for an identity");
    IdentityKind kind = identity_kind(o);
    auto rep = verify_identity(kind, {o.p, o.q, o.n}, o.cap);
    Output r;
    r.json = header("identity");
    r.json["kind"] = kind.to_string();
    r.json["sizes"] = {{"p", o.p}, {"q", o.q}, {"n", o.n}};
    r.json["cap"] = o.cap;
    r.json["verified"] = rep.verified;
    ordered_json terms = ordered_json::array();
    std::ostringstream ts;
    for (const auto &t : rep.terms) {
        ordered_json j;
        j["index"] = t.index.to_string();
        j["x_shape"] = t.x_shape.to_string();
        if (t.y_shape)
            j["y_shape"] = t.y_shape->to_string();
        j["sign"] = t.sign();
        if (t.t_power)
            j["t_power"] = t.t_power;
        terms.push_back(j);
        ts << " " << (t.sign() < 0 ? "-" : "+") << t.index.to_string();
        if (t.t_power)
            ts << "t^" << t.t_power;
    }
    r.json["terms"] = terms;
    r.json["lhs_terms"] = rep.lhs.term_count();
    r.json["residual_terms"] = rep.residual.term_count();
    if (!rep.verified)
        r.json["residual"] = rep.residual.to_string();
    std::ostringstream os;
    os << kind.to_string() << " p=" << o.p << " q=" << o.q << " n=" << o.n << " cap=" << o.cap
       << ": " << (rep.verified ? "verified" : "RESIDUAL NONZERO") << "\nterms:" << ts.str();
    if (!rep.verified)
        os << "\nresidual: " << rep.residual.to_string();
    r.text = os.str();
    r.code = rep.verified ? 0 : 1;
    return r;
}

Output cmd_bgg(const Options &o)
{
    HermitianPair g = pair_arg(o);
    BggComplex c = bgg_complex(g, lambda_arg(o, g));
    Output r;
    r.json = header("bgg");
    r.json["poset"] = ordered_json::parse(bgg_poset_json(c));
    std::ostringstream os;
    os << g.to_string() << ", lambda = " << c.lambda.to_string() << ", level sizes";
    for (int s : c.level_sizes())
        os << " " << s;
    for (const auto &n : c.nodes)
        os << "\n  " << n.level << "  " << n.ideal.to_string() << "  " << n.weight.to_string();
    r.text = os.str();
    return r;
}

Output cmd_fill(const Options &o)
{
    HermitianPair g = pair_arg(o);
    Weight lambda = lambda_arg(o, g);
    Partition ideal = o.ideal.empty() ? lower_ideals(g).back() : parse_partition(o.ideal);
    FilledDiagram f = fill_diagram(g, ideal, lambda);
    auto d = simple_pairings(g, lambda + rho(g));
    Weight rows = rows_stacked(f);
    Output r;
    std::ostringstream os, ds;
    for (std::size_t i = 0; i < d.size(); i++)
        ds << (i ? "," : "") << d[i].to_string();
    os << "d = (" << ds.str() << ")\ndiagram: " << f.to_string() << "\nrows = " << rows.to_string();
    r.text = os.str();
    r.json = header("fill");
    r.json["pair"] = g.to_string();
    r.json["lambda"] = weight_json(lambda);
    r.json["ideal"] = ideal.parts();
    r.json["d"] = "(" + ds.str() + ")";
    ordered_json entries = ordered_json::array();
    for (const auto &row : f.entries) {
        ordered_json a = ordered_json::array();
        for (HalfInt h : row)
            a.push_back(h.to_string());
        entries.push_back(a);
    }
    r.json["entries"] = entries;
    r.json["rows"] = weight_json(rows);
    return r;
}

Output cmd_wdot(const Options &o)
{
    HermitianPair g = pair_arg(o);
    Weight lambda = lambda_arg(o, g);
    Partition ideal = parse_partition(o.ideal);
    Weight closed = w_dot_lambda(g, ideal, lambda);
    Weight recursive = w_dot_lambda_recursive(g, ideal, lambda);
    Weight direct = weyl_apply(g, ideal, lambda + rho(g)) - rho(g);
    direct.split = lambda.split;
    bool agree = closed == recursive && closed == direct;
    Output r;
    r.text = closed.to_string() + "\nrecursive " + recursive.to_string() + "\nreflections " +
             direct.to_string() + "\n" + (agree ? "agree" : "DISAGREE");
    r.json = header("wdot");
    r.json["pair"] = g.to_string();
    r.json["lambda"] = weight_json(lambda);
    r.json["ideal"] = ideal.parts();
    r.json["closed"] = weight_json(closed);
    r.json["recursive"] = weight_json(recursive);
    r.json["reflections"] = weight_json(direct);
    r.json["agree"] = agree;
    r.code = agree ? 0 : 1;
    return r;
}

Output cmd_family(const Options &o)
{
    BlockPair b = family_config(family_arg(o));
    Output r;
    r.text = block_text(b);
    r.json = header("family");
    r.json["family"] = block_json(b);
    return r;
}

Output cmd_es(const Options &o)
{
    BlockPair b = block_arg(o);
    require(o.mu_plus_rho.empty() != o.reduced.empty(),
            "give exactly one of --mu-plus-rho and --reduced");
    Output r;
    r.json = header("es");
    r.json["block"] = b.name;
    Weight in, res;
    if (!o.mu_plus_rho.empty()) {
        in = parse_weight(o.mu_plus_rho);
        res = es_reduce(b, in);
        r.json["direction"] = "reduce";
    } else {
        in = parse_weight(o.reduced);
        res = es_sharp(b, in);
        r.json["direction"] = "sharp";
    }
    r.json["input"] = weight_json(in);
    r.json["output"] = weight_json(res);
    r.text = res.to_string();
    return r;
}

Output cmd_block(const Options &o)
{
    BlockPair b = block_arg(o);
    require(o.side == "regular" || o.side == "singular", "--side must be regular or singular");
    BlockPoset p = o.side == "regular" ? regular_block_poset(b) : singular_block_poset(b);
    Output r;
    r.text = block_text(b) + "\n" + o.side + " block: " + poset_text(p);
    r.json = header("block");
    r.json["block"] = block_json(b);
    r.json["side"] = o.side;
    r.json["poset"] = poset_json(p);
    return r;
}

Output cmd_congruence(const Options &o)
{
    BlockPair b = block_arg(o);
    CongruenceReport c = congruence_check(b);
    Output r;
    r.json = header("congruence");
    r.json["block"] = block_json(b);
    r.json["conditions"] = {{"poset_iso", c.bijection && c.poset_iso},
                            {"ext", "assumed"},
                            {"dims_equal", c.dims_equal}};
    r.json["congruent"] = c.congruent();
    r.json["conjugate_pairs"] = c.conjugate_pairs;
    r.json["root_order_agrees"] = c.root_order_agrees;
    ordered_json pairs = ordered_json::array();
    std::ostringstream os;
    os << block_text(b) << "\nposet isomorphism: " << (c.bijection && c.poset_iso ? "yes" : "no")
       << "\next condition: assumed\ndimensions equal: " << (c.dims_equal ? "yes" : "no")
       << "\nconjugate shapes: " << (c.conjugate_pairs ? "yes" : "no")
       << "\nfull root orders agree: " << (c.root_order_agrees ? "yes" : "no");
    for (std::size_t i = 0; i < c.singular.nodes.size() && i < c.regular.nodes.size(); i++) {
        const auto &s = c.singular.nodes[i];
        const auto &g = c.regular.nodes[i];
        pairs.push_back({{"level", s.level},
                         {"mu", weight_json(s.weight)},
                         {"mu_reduced", weight_json(g.weight)},
                         {"shape", s.shape.to_string()},
                         {"shape_reduced", g.shape.to_string()},
                         {"dim", str(s.dim)},
                         {"dim_reduced", str(g.dim)}});
        os << "\n  " << s.level << "  " << s.weight.to_string() << " " << s.shape.to_string()
           << " dim " << str(s.dim) << "  |  " << g.weight.to_string() << " "
           << g.shape.to_string() << " dim " << str(g.dim);
    }
    r.json["pairs"] = pairs;
    os << "\n" << (c.congruent() ? "congruent" : "NOT congruent");
    r.text = os.str();
    r.code = c.congruent() ? 0 : 1;
    return r;
}

std::string plain_series(const std::map<long, mpz_class> &num)
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : num) {
        os << (first ? "" : " + ");
        first = false;
        if (c != 1 || e == 0)
            os << c.get_str() << (e ? "·" : "");
        if (e == 1)
            os << "t";
        else if (e)
            os << "t^" << e;
    }
    return first ? "0" : os.str();
}

Output cmd_hilbert(const Options &o)
{
    FamilyCfg cfg = family_arg(o);
    HilbertSeries h = hilbert(cfg);
    Output r;
    r.json = header("hilbert");
    r.json["family"] = cfg.to_string();
    ordered_json num = ordered_json::array();
    for (const auto &[e, c] : h.numerator)
        num.push_back({{"doubled_exponent", e}, {"coefficient", str(c)}});
    r.json["numerator"] = num;
    r.json["gk_dimension"] = h.gk_dimension;
    r.json["bernstein_degree"] = str(h.bernstein_degree());
    std::ostringstream os;
    if (o.invariant) {
        os << "H(t^2) = (" << plain_series(h.invariant_numerator()) << ")/(1-t^2)^"
           << h.gk_dimension;
        r.json["form"] = "invariant";
    } else {
        os << h.to_string() << "\nH(t) = P(t)/(1-t)^" << h.gk_dimension;
        r.json["form"] = "module";
    }
    os << "\nGK dimension = " << h.gk_dimension << "\nBernstein degree = "
       << str(h.bernstein_degree());
    r.text = os.str();
    return r;
}

Output cmd_report(const Options &)
{
    auto lines = worked_examples_report();
    Output r;
    r.json = header("report");
    ordered_json items = ordered_json::array();
    std::ostringstream os;
    int pass = 0, dev = 0, fail = 0;
    for (const auto &l : lines) {
        ordered_json j;
        j["item"] = l.item;
        j["status"] = to_string(l.status);
        j["expected"] = l.expected;
        j["actual"] = l.actual;
        if (!l.note.empty())
            j["note"] = l.note;
        items.push_back(j);
        os << to_string(l.status) << "  " << l.item << ": " << l.actual;
        if (l.status != ReportStatus::Pass)
            os << " (recorded: " << l.expected << ")";
        if (!l.note.empty())
            os << "; " << l.note;
        os << "\n";
        (l.status == ReportStatus::Pass ? pass : l.status == ReportStatus::Fail ? fail : dev)++;
    }
    os << pass << " pass, " << dev << " deviation, " << fail << " fail";
    r.json["items"] = items;
    r.json["pass"] = pass;
    r.json["deviation"] = dev;
    r.json["fail"] = fail;
    r.text = os.str();
    r.code = report_passes(lines) ? 0 : 1;
    return r;
}

/* ---- output ---- */

int output_width()
{
    if (const char *w = std::getenv("HERMTOOL_WIDTH")) {
        try {
            return std::stoi(w);
        } catch (const std::exception &) {
        }
    }
    return 100;
}

/* wrap long lines at spaces; continuation lines are indented */
std::string wrap(const std::string &text, int width)
{
    if (width <= 0)
        return text;
    std::ostringstream os;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (!first)
            os << "\n";
        first = false;
        std::string rest = line;
        std::string indent;
        while (static_cast<int>(rest.size() + indent.size()) > width) {
            int limit = width - static_cast<int>(indent.size());
            auto cut = rest.rfind(' ', limit);
            if (cut == std::string::npos || cut == 0)
                cut = rest.find(' ', limit);
            if (cut == std::string::npos)
                break;
            os << indent << rest.substr(0, cut) << "\n";
            rest = rest.substr(cut + 1);
            indent = "    ";
        }
        os << indent << rest;
    }
    return os.str();
}

void pair_options(CLI::App *s, Options &o)
{
    s->add_option("--type", o.type, "pair type: I, II or III");
    s->add_option("--p", o.p, "type I: first block size");
    s->add_option("--q", o.q, "type I: second block size");
    s->add_option("--n", o.n, "types II, III: rank");
    s->add_option("--lambda", o.lambda, "weight, e.g. [9,5,3,3] or [3,3,3;0,0,0,0] (default 0)");
}

void family_options(CLI::App *s, Options &o)
{
    s->add_option("--family", o.family, "I, II, IIIa, IIIb, IIIc or IIId");
    s->add_option("--P", o.P, "family I: first block size");
    s->add_option("--Q", o.Q, "family I: second block size");
    s->add_option("--N", o.N, "rank for families II to IIId");
    s->add_option("--k", o.k, "family parameter k");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Dimension identities, congruent blocks and Hilbert series for Hermitian "
                 "symmetric pairs",
                 "hermtool"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", o.cap, "total degree cap for identities (default 10)");
    app.add_option("--seed", o.seed, "seed for randomized sweeps");

    std::vector<std::pair<CLI::App *, std::function<Output(const Options &)>>> commands;
    auto add = [&](const char *name, const char *help, auto fn) {
        CLI::App *s = app.add_subcommand(name, help);
        commands.emplace_back(s, fn);
        return s;
    };

    auto *dim = add("dim", "dimension of a gl_n module", cmd_dim);
    dim->add_option("--partition", o.partition, "partition or Frobenius literal");
    dim->add_option("--weight", o.weight, "dominant weight, entries may be negative");
    dim->add_option("--n", o.n, "rank of gl_n")->required();

    auto *t21 = add("thm21", "two-block dimension identity for (alpha|beta)", cmd_two_block);
    t21->add_option("--alpha", o.alpha, "strict list")->required();
    t21->add_option("--beta", o.beta, "strict list")->required();
    t21->add_option("--p", o.p)->required();
    t21->add_option("--q", o.q)->required();
    t21->add_option("--m", o.m)->required();

    auto *t23 = add("thm23", "compare dim F_pi^n with dim F_pi'^(n+m)", cmd_conjugate);
    t23->add_option("--partition", o.partition, "partition or Frobenius literal");
    t23->add_option("--m", o.m)->required();
    t23->add_option("--n-max", o.n_max, "largest n compared (default 8)");
    t23->add_option("--random", o.random, "check this many random shapes not of the form");

    auto *qs = add("qspec", "principal specialization of a Schur polynomial", cmd_qspec);
    qs->add_option("--partition", o.partition)->required();
    qs->add_option("--n", o.n)->required();

    auto *id = add("identity", "verify a symmetric function identity up to a degree cap",
                   cmd_identity);
    id->add_option("--kind", o.kind,
                   "dual-cauchy, littlewood-II, littlewood-III, littlewood-IIIab, "
                   "reciprocal-II, reciprocal-III, gen-I, gen-II, gen-IIIa, gen-IIIb, general")
        ->required();
    id->add_option("--p", o.p);
    id->add_option("--q", o.q);
    id->add_option("--n", o.n);
    id->add_option("--k", o.k);
    id->add_option("--a", o.a, "general: odd columns");
    id->add_option("--b", o.b, "general: even columns");

    pair_options(add("bgg", "BGG resolution poset", cmd_bgg), o);
    auto *fill = add("fill", "filled diagram of an ideal", cmd_fill);
    pair_options(fill, o);
    fill->add_option("--ideal", o.ideal, "ideal rows (default: all roots)");
    auto *wd = add("wdot", "w.lambda by three independent methods", cmd_wdot);
    pair_options(wd, o);
    wd->add_option("--ideal", o.ideal)->required();

    family_options(add("family", "lambda and lambda' of a family", cmd_family), o);

    auto explicit_options = [&](CLI::App *s) {
        family_options(s, o);
        pair_options(s, o);
        s->add_option("--rule", o.rule, "explicit blocks: match, opposite or opposite-zero");
        s->add_option("--reduced-type", o.reduced_type, "explicit blocks: type of the reduced pair");
    };
    auto *es = add("es", "reduction of mu+rho, or its inverse", cmd_es);
    explicit_options(es);
    es->add_option("--mu-plus-rho", o.mu_plus_rho);
    es->add_option("--reduced", o.reduced, "mu'+rho' to lift back");
    auto *blk = add("block", "block poset with twisted shapes", cmd_block);
    explicit_options(blk);
    blk->add_option("--side", o.side, "regular or singular (default regular)");
    explicit_options(add("congruence", "check congruence of a singular and a regular block",
                         cmd_congruence));

    auto *hil = add("hilbert", "Hilbert series of the twisted module", cmd_hilbert);
    family_options(hil, o);
    hil->add_flag("--invariant", o.invariant, "print in t^2 form");

    add("report", "recompute every recorded worked example", cmd_report);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    for (auto &[sub, fn] : commands) {
        if (!sub->parsed())
            continue;
        Output r;
        try {
            r = fn(o);
        } catch (const std::invalid_argument &e) {
            err << "error: " << e.what() << "\n";
            return 2;
        } catch (const std::out_of_range &e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        if (o.format == "json")
            out << r.json.dump(2) << "\n";
        else
            out << wrap(r.text, output_width()) << "\n";
        return r.code;
    }
    return 2;
}

} // namespace hermtool
