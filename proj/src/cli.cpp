#include "fockcb/cli.hpp"

#include "fockcb/rouquier.hpp"
#include "fockcb/scopes.hpp"
#include "fockcb/serialize.hpp"

#include "CLI11.hpp"

#include <array>
#include <ostream>

namespace fockcb::cli {

namespace {

struct Options {
    std::string format = "table";
    unsigned jobs = 1;
    int n = 0;
    int w = -1;
    int i = -1;
    int bound = 20;
    std::string core;
    bool minus = false;
    std::vector<std::string> partitions;
};

void require_n(const Options& o)
{
    if (o.n < 2) throw std::invalid_argument("--n must be at least 2");
}

void require_w(const Options& o, int least)
{
    if (o.w < least) throw std::invalid_argument("--w must be at least " + std::to_string(least));
}

void require_count(const Options& o, std::size_t k)
{
    if (o.partitions.size() != k)
        throw std::invalid_argument("expected " + std::to_string(k) + " partition argument(s), got " +
                                    std::to_string(o.partitions.size()));
}

Partition arg(const Options& o, std::size_t k) { return parse_partition(o.partitions.at(k)); }

std::string sign_string(int s) { return s > 0 ? "+1" : "-1"; }

Json cores_json(const std::vector<Partition>& ps)
{
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

// Each verb writes its result and returns the exit code.
int cmd_core(const Options& o, bool json, std::ostream& out)
{
    require_n(o);
    require_count(o, 1);
    const Partition lambda = arg(o, 0);
    const Partition core = n_core(lambda, o.n);
    if (json)
        out << Json{{"partition", lambda.to_string()}, {"n", o.n}, {"core", core.to_string()},
                    {"weight", n_weight(lambda, o.n)}}.dump() << '\n';
    else
        out << core.to_string() << '\n';
    return kOk;
}

int cmd_quotient(const Options& o, bool json, std::ostream& out)
{
    require_n(o);
    require_count(o, 1);
    const Partition lambda = arg(o, 0);
    const Partition core = n_core(lambda, o.n);
    const MultiPartition q = n_quotient(lambda, o.n, core);
    const int sign = n_sign(lambda, o.n);
    if (json) {
        Json comps = Json::array();
        for (const auto& c : q.components) comps.push_back(c.to_string());
        out << Json{{"partition", lambda.to_string()}, {"n", o.n}, {"core", core.to_string()},
                    {"weight", n_weight(lambda, o.n)}, {"quotient", comps}, {"sign", sign}}.dump() << '\n';
    } else {
        out << "core      " << core.to_string() << '\n'
            << "weight    " << n_weight(lambda, o.n) << '\n'
            << "quotient  " << q.to_string() << '\n'
            << "sign      " << sign_string(sign) << '\n';
    }
    return kOk;
}

int cmd_rouquier_core(const Options& o, bool json, std::ostream& out)
{
    require_n(o);
    require_w(o, 1);
    const Partition rho = rouquier_core(o.n, o.w);
    if (json)
        out << Json{{"n", o.n}, {"w", o.w}, {"core", rho.to_string()}, {"coords", rouquier_coords(o.n, o.w).a}}.dump()
            << '\n';
    else
        out << rho.to_string() << '\n';
    return kOk;
}

int cmd_gcan(const Options& o, bool json, std::ostream& out)
{
    require_n(o);
    require_count(o, 1);
    const Partition lambda = arg(o, 0);
    const FockVec g = o.minus ? canonical_vector_minus(lambda, o.n) : canonical_vector(lambda, o.n);
    if (json)
        out << Json{{"partition", lambda.to_string()}, {"n", o.n}, {"minus", o.minus}, {"terms", to_json(g)}}.dump()
            << '\n';
    else
        out << to_table(g);
    return kOk;
}

int cmd_dmatrix(const Options& o, bool json, std::ostream& out)
{
    require_n(o);
    require_w(o, 0);
    const Partition core = parse_partition(o.core);
    if (!is_n_core(core, o.n)) throw std::invalid_argument("--core " + core.to_string() + " is not an n-core");
    const auto m = canonical_basis(BlockId{o.n, core, o.w}, o.minus);
    if (json)
        out << to_json(*m).dump() << '\n';
    else
        out << to_table(*m);
    return kOk;
}

int cmd_closed(const Options& o, bool json, std::ostream& out, bool e)
{
    require_n(o);
    require_w(o, 1);
    require_count(o, 2);
    const Partition lambda = arg(o, 0), mu = arg(o, 1);
    const LaurentInt c = e ? closed_e(lambda, mu, o.n, o.w) : closed_d(lambda, mu, o.n, o.w);
    if (json)
        out << Json{{"lambda", lambda.to_string()}, {"mu", mu.to_string()}, {"n", o.n}, {"w", o.w}, {"value", to_json(c)}}
                   .dump()
            << '\n';
    else
        out << c.to_string() << '\n';
    return kOk;
}

int cmd_lrcoef(const Options& o, bool json, std::ostream& out)
{
    require_count(o, 3);
    const Partition lambda = arg(o, 0), mu = arg(o, 1), nu = arg(o, 2);
    const long c = lr_coefficient(mu, nu, lambda);
    if (json)
        out << Json{{"lambda", lambda.to_string()}, {"mu", mu.to_string()}, {"nu", nu.to_string()}, {"value", c}}.dump()
            << '\n';
    else
        out << c << '\n';
    return kOk;
}

int cmd_verify_theorem1(const Options& o, bool json, std::ostream& out)
{
    require_n(o);
    require_w(o, 1);
    const Theorem1Report r = verify_theorem1(o.n, o.w, o.jobs);
    if (json) {
        Json entries = Json::array();
        for (const auto& e : r.entries)
            entries.push_back({{"partition", e.lambda.to_string()}, {"plus", e.plus_ok}, {"minus", e.minus_ok}});
        out << Json{{"n", r.n}, {"w", r.w}, {"core", r.rho.to_string()}, {"ok", r.all_ok()}, {"entries", entries}}.dump()
            << '\n';
    } else {
        std::size_t bad = 0;
        for (const auto& e : r.entries)
            if (!e.plus_ok || !e.minus_ok) {
                ++bad;
                out << "MISMATCH " << e.lambda.to_string() << (e.plus_ok ? "" : " G") << (e.minus_ok ? "" : " G-") << '\n';
            }
        out << (bad ? "FAIL" : "OK") << "  n=" << r.n << " w=" << r.w << " core=" << r.rho.to_string() << " checked "
            << r.entries.size() << " partitions, " << bad << " mismatches\n";
    }
    return r.all_ok() ? kOk : kMismatch;
}

int cmd_scopes(const Options& o, bool json, std::ostream& out)
{
    require_n(o);
    require_w(o, 0);
    if (o.i < 0 || o.i >= o.n) throw std::invalid_argument("--i must lie in [0, n)");
    const Partition tau = parse_partition(o.core);
    if (!is_n_core(tau, o.n)) throw std::invalid_argument("--core " + tau.to_string() + " is not an n-core");
    const ScopesReport r = verify_scopes_invariance(tau, o.i, o.w, o.n);
    if (json) {
        Json pairs = Json::array();
        for (const auto& [a, b] : r.bijection) pairs.push_back(Json::array({a.to_string(), b.to_string()}));
        out << Json{{"n", o.n},
                    {"core", r.tau.to_string()},
                    {"image", r.image.to_string()},
                    {"i", r.i},
                    {"w", r.w},
                    {"k", r.k},
                    {"bijection", pairs},
                    {"bijective", r.bijective},
                    {"crystal", r.crystal_agrees},
                    {"divided_power", r.divided_power},
                    {"upper_basis", r.upper_basis},
                    {"d_equal", r.d_equal},
                    {"e_equal", r.e_equal},
                    {"ok", r.ok()}}
                   .dump()
            << '\n';
    } else {
        for (const auto& [a, b] : r.bijection) out << a.to_string() << " -> " << b.to_string() << '\n';
        out << (r.ok() ? "OK" : "FAIL") << "  " << r.tau.to_string() << " -> " << r.image.to_string() << " i=" << r.i
            << " w=" << r.w << " k=" << r.k << " d:" << (r.d_equal ? "equal" : "differ")
            << " e:" << (r.e_equal ? "equal" : "differ") << '\n';
    }
    return r.ok() ? kOk : kMismatch;
}

int cmd_orbit(const Options& o, bool json, std::ostream& out)
{
    require_n(o);
    require_w(o, 0);
    const auto classes = orbit_classes(o.n, o.w, o.bound);
    if (json) {
        Json a = Json::array();
        for (const auto& c : classes)
            a.push_back({{"cores", cores_json(c.cores)}, {"rouquier", c.rouquier}, {"frontier", c.frontier}});
        out << Json{{"n", o.n}, {"w", o.w}, {"bound", o.bound}, {"classes", a}}.dump() << '\n';
    } else {
        for (const auto& c : classes) {
            out << (c.rouquier ? "* " : "  ") << (c.frontier ? "~ " : "  ");
            for (std::size_t k = 0; k < c.cores.size(); ++k) out << (k ? " " : "") << c.cores[k].to_string();
            out << '\n';
        }
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Canonical bases of the Fock space and Rouquier blocks", "fockcb"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--jobs", o.jobs, "worker threads for verification sweeps")->check(CLI::PositiveNumber);

    auto sub = [&](const std::string& name, const std::string& help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        return s;
    };
    auto with_n = [&](CLI::App* s) { s->add_option("--n", o.n, "number of runners")->required(); };
    auto with_w = [&](CLI::App* s) { s->add_option("--w", o.w, "n-weight")->required(); };
    // One scalar option per partition: vector options would split "[a,b]" on commas.
    std::array<std::string, 3> slots;
    auto with_parts = [&](CLI::App* s, const std::vector<std::string>& names) {
        for (std::size_t k = 0; k < names.size(); ++k) s->add_option(names[k], slots[k], "partition, e.g. [4,2,1]");
    };

    CLI::App* core = sub("core", "n-core and n-weight");
    with_n(core);
    with_parts(core, {"lambda"});
    CLI::App* quotient = sub("quotient", "n-quotient and n-sign, labelled relative to the core");
    with_n(quotient);
    with_parts(quotient, {"lambda"});
    CLI::App* rcore = sub("rouquier-core", "the core rho(w)");
    with_n(rcore);
    with_w(rcore);
    CLI::App* gcan = sub("gcan", "canonical basis vector G(lambda) or G^-(lambda)");
    with_n(gcan);
    gcan->add_flag("--minus", o.minus, "G^- instead of G");
    with_parts(gcan, {"lambda"});
    CLI::App* dmatrix = sub("dmatrix", "decomposition matrix of a block");
    with_n(dmatrix);
    with_w(dmatrix);
    dmatrix->add_option("--core", o.core, "n-core")->required();
    dmatrix->add_flag("--minus", o.minus, "e instead of d");
    CLI::App* cd = sub("closed-d", "closed formula for d on a Rouquier block");
    CLI::App* ce = sub("closed-e", "closed formula for e on a Rouquier block");
    for (CLI::App* s : {cd, ce}) {
        with_n(s);
        with_w(s);
        with_parts(s, {"lambda", "mu"});
    }
    CLI::App* lr = sub("lrcoef", "Littlewood-Richardson coefficient c^lambda_{mu,nu}");
    with_parts(lr, {"lambda", "mu", "nu"});
    CLI::App* vt = sub("verify-theorem1", "compare canonical bases with the closed expansions on a Rouquier block");
    with_n(vt);
    with_w(vt);
    CLI::App* sc = sub("scopes", "check invariance of decomposition numbers under a Scopes reflection");
    with_n(sc);
    with_w(sc);
    sc->add_option("--core", o.core, "n-core tau")->required();
    sc->add_option("--i", o.i, "residue")->required();
    CLI::App* orbit = sub("orbit", "classes of blocks of weight w linked by Scopes reflections");
    with_n(orbit);
    with_w(orbit);
    orbit->add_option("--bound", o.bound, "largest core size explored")->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }

    for (const auto& x : slots)
        if (!x.empty()) o.partitions.push_back(x);
    const bool json = o.format == "json";
    try {
        if (core->parsed()) return cmd_core(o, json, out);
        if (quotient->parsed()) return cmd_quotient(o, json, out);
        if (rcore->parsed()) return cmd_rouquier_core(o, json, out);
        if (gcan->parsed()) return cmd_gcan(o, json, out);
        if (dmatrix->parsed()) return cmd_dmatrix(o, json, out);
        if (cd->parsed()) return cmd_closed(o, json, out, false);
        if (ce->parsed()) return cmd_closed(o, json, out, true);
        if (lr->parsed()) return cmd_lrcoef(o, json, out);
        if (vt->parsed()) return cmd_verify_theorem1(o, json, out);
        if (sc->parsed()) return cmd_scopes(o, json, out);
        if (orbit->parsed()) return cmd_orbit(o, json, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kDomainError;
}

}  // namespace fockcb::cli
