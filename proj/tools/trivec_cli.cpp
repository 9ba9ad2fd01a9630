// trivec_cli.cpp — command-line front end for the trivec library.
//
// Subcommands: gen | invariants | canonicalize | equiv | classify | gme |
//              region | qubit-map | verify
//
// Exit codes: 0 success; 1 domain error (the library error name appears in
// the JSON payload); 2 I/O, parse, or usage error.  All output is JSON on
// stdout (--format text pretty-prints it; region sample defaults to CSV).
// All randomness is seeded: batch item i derives its stream from --seed + i,
// so output is byte-identical for identical (input, seed, flags).
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trivec/trivec.hpp"

namespace {

using json = nlohmann::ordered_json;
using trivec::cx;
using trivec::mp50;
using trivec::QubitState;
using trivec::State;
using trivec::W6Point;

// I/O, schema, and usage problems (exit code 2, distinct from domain errors)
struct cli_error : std::runtime_error {
    std::string tag;
    cli_error(std::string t, const std::string& what)
        : std::runtime_error(what), tag(std::move(t)) {}
};

// ---------------------------------------------------------------------------
// Shared options
// ---------------------------------------------------------------------------

struct Common {
    std::uint64_t seed = 0;
    std::string precision = "binary64";  // binary64 | extended
    std::string format;                  // json | text | csv ("" = command default)
    double tol = 1e-9;
    int starts = 32;
    int count = 1;
    int jobs = 1;

    [[nodiscard]] bool extended() const { return precision == "extended"; }
};

void add_common(CLI::App* cmd, Common& c, bool with_count = false) {
    cmd->add_option("--seed", c.seed, "random seed (batch item i uses seed+i)");
    cmd->add_option("--precision", c.precision, "binary64 | extended (50 digits)")
        ->check(CLI::IsMember({"binary64", "extended"}));
    cmd->add_option("--format", c.format, "json | text | csv");
    cmd->add_option("--tol", c.tol, "tolerance for membership/equality decisions");
    cmd->add_option("--starts", c.starts, "restarts for overlap maximization");
    if (with_count) {
        cmd->add_option("--count", c.count, "number of items")->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", c.jobs, "worker threads for batch items")
            ->check(CLI::PositiveNumber);
    }
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads; exceptions propagate.
template <class Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(static_cast<size_t>(jobs));
    const int workers = std::min(jobs, n);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errs[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

// ---------------------------------------------------------------------------
// JSON state I/O (formats shared by every subcommand)
// ---------------------------------------------------------------------------

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cli_error("IoError", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw cli_error("ParseError", path + ": " + e.what());
    }
}

double num_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw cli_error("ParseError", std::string("missing numeric field \"") + key + "\"");
    return j[key].get<double>();
}

enum class Kind { Fermion, Qubit, W6 };

struct AnyState {
    Kind kind = Kind::Fermion;
    State<double> f;
    QubitState<double> q;
    W6Point<double> w;
};

AnyState parse_state(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw cli_error("ParseError", "state object needs a \"kind\" field");
    const std::string kind = j["kind"].get<std::string>();
    AnyState s;
    if (kind == "w6") {
        s.kind = Kind::W6;
        s.w = W6Point<double>{num_field(j, "a"), num_field(j, "b"), num_field(j, "c"),
                              num_field(j, "d"), num_field(j, "x"), num_field(j, "y")};
        return s;
    }
    if (kind != "fermion20" && kind != "qubit8")
        throw cli_error("ParseError", "unknown state kind \"" + kind + "\"");
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
        throw cli_error("ParseError", "state needs an \"amplitudes\" array");
    s.kind = (kind == "fermion20") ? Kind::Fermion : Kind::Qubit;
    for (const auto& e : j["amplitudes"]) {
        if (!e.contains("index") || !e["index"].is_array() || e["index"].size() != 3)
            throw cli_error("ParseError", "amplitude needs \"index\": [i, j, k]");
        const int i = e["index"][0].get<int>();
        const int jj = e["index"][1].get<int>();
        const int k = e["index"][2].get<int>();
        const double re = e.contains("re") ? e["re"].get<double>() : 0.0;
        const double im = e.contains("im") ? e["im"].get<double>() : 0.0;
        if (s.kind == Kind::Fermion) {
            const trivec::SignedIndex slot = trivec::triple_slot(i, jj, k);
            if (slot.index < 0)
                throw cli_error("ParseError", "fermion indices must be three distinct values in 1..6");
            s.f.add(i, jj, k, cx<double>(re, im));
        } else {
            if ((i | jj | k) < 0 || i > 1 || jj > 1 || k > 1)
                throw cli_error("ParseError", "qubit indices must be bits");
            s.q.amp(i, jj, k) += cx<double>(re, im);
        }
    }
    return s;
}

AnyState load_state(const std::string& path) { return parse_state(load_json(path)); }

// Every representation embeds into the 20-amplitude space.
State<double> as_fermion(const AnyState& s) {
    switch (s.kind) {
        case Kind::Fermion: return s.f;
        case Kind::Qubit: return trivec::sov_embed(s.q);
        case Kind::W6: return s.w.state();
    }
    throw cli_error("ParseError", "unreachable state kind");
}

// Qubit view of the input; fermionic states must lie in the single-occupancy
// subspace (throws NotSOV otherwise).
QubitState<double> as_qubit(const AnyState& s, double tol) {
    switch (s.kind) {
        case Kind::Fermion: return trivec::sov_extract(s.f, tol);
        case Kind::Qubit: return s.q;
        case Kind::W6: return trivec::sov_extract(s.w.state(), tol);
    }
    throw cli_error("ParseError", "unreachable state kind");
}

json fermion_to_json(const State<double>& s) {
    json amps = json::array();
    for (int n = 0; n < trivec::kTriples; ++n) {
        const auto& t = trivec::kTripleList[static_cast<size_t>(n)];
        const cx<double>& v = s.xi[static_cast<size_t>(n)];
        if (v.re == 0.0 && v.im == 0.0) continue;
        amps.push_back({{"index", {t.i, t.j, t.k}}, {"re", v.re}, {"im", v.im}});
    }
    return {{"kind", "fermion20"}, {"amplitudes", std::move(amps)}};
}

json qubit_to_json(const QubitState<double>& s) {
    json amps = json::array();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const cx<double>& v = s.amp(i, j, k);
                if (v.re == 0.0 && v.im == 0.0) continue;
                amps.push_back({{"index", {i, j, k}}, {"re", v.re}, {"im", v.im}});
            }
    return {{"kind", "qubit8"}, {"amplitudes", std::move(amps)}};
}

json w6_to_json(const W6Point<double>& p) {
    return {{"kind", "w6"}, {"a", p.a}, {"b", p.b}, {"c", p.c},
            {"d", p.d},     {"x", p.x}, {"y", p.y}};
}

std::string digits50(const mp50& v) {
    std::ostringstream os;
    os << std::setprecision(50) << v;
    return os.str();
}

json w6_to_json_extended(const W6Point<mp50>& p) {
    return {{"a", digits50(p.a)}, {"b", digits50(p.b)}, {"c", digits50(p.c)},
            {"d", digits50(p.d)}, {"x", digits50(p.x)}, {"y", digits50(p.y)}};
}

void emit(const json& out, const Common& c) {
    if (c.format == "text")
        std::cout << out.dump(2) << "\n";
    else if (c.format.empty() || c.format == "json")
        std::cout << out.dump() << "\n";
    else
        throw cli_error("UsageError", "format \"" + c.format + "\" not supported here");
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

json gen_one(const std::string& kind, std::uint64_t seed) {
    if (kind == "fermion20") return fermion_to_json(trivec::random_state_seeded<double>(seed));
    if (kind == "qubit8") {
        trivec::Rng rng(seed);
        return qubit_to_json(trivec::random_qubit_state<double>(rng));
    }
    if (kind == "w6") {
        trivec::Rng rng(seed);
        return w6_to_json(trivec::random_w6_point<double>(rng));
    }
    // members of the canonical region (rejection sampler)
    return w6_to_json(trivec::sample_delta_seeded<double>(seed));
}

void cmd_gen(const Common& c, const std::string& kind) {
    std::vector<json> items(static_cast<size_t>(c.count));
    parallel_for(c.count, c.jobs, [&](int i) {
        items[static_cast<size_t>(i)] = gen_one(kind, c.seed + static_cast<std::uint64_t>(i));
    });
    if (c.count == 1) {
        emit(items[0], c);
    } else {
        json arr = json::array();
        for (auto& it : items) arr.push_back(std::move(it));
        emit(arr, c);
    }
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

template <class R>
json invariants_json(const trivec::FermionInvariants<R>& v) {
    auto d = [](const R& x) { return trivec::scalar_traits<R>::to_double(x); };
    json m = json::array();
    for (int k = 1; k <= 7; ++k) m.push_back(d(v.M(k)));
    const trivec::IdentityReport<R> rep = trivec::identity_suite(v);
    return {{"M", std::move(m)},
            {"F", {d(v.f.re), d(v.f.im)}},
            {"J", {d(v.j.re), d(v.j.im)}},
            {"residuals",
             {{"j_squared", d(rep.inv_j2)},
              {"re_h", d(rep.reh)},
              {"syzygy", d(rep.syzygy)},
              {"m5_f", d(rep.m5_f)},
              {"nonneg_slack", d(rep.nonneg_slack)}}}};
}

void cmd_invariants(const Common& c, const std::string& in) {
    const AnyState s = load_state(in);
    const State<double> psi = trivec::normalized(as_fermion(s));
    json out;
    if (c.extended()) {
        out = invariants_json(trivec::fermion_invariants(trivec::widen(psi)));
        out["precision"] = "extended";
    } else {
        out = invariants_json(trivec::fermion_invariants(psi));
    }
    if (s.kind == Kind::Qubit) {
        const trivec::QubitInvariants<double> qv =
            trivec::qubit_invariants(trivec::normalized(s.q));
        json q = json::array(), sym = json::array();
        for (int k = 1; k <= 7; ++k) q.push_back(qv.Q(k));
        for (const double& g : qv.sym) sym.push_back(g);
        out["Q"] = std::move(q);
        out["sym"] = std::move(sym);
        out["hdet"] = {qv.hdet.re, qv.hdet.im};
    }
    emit(out, c);
}

// ---------------------------------------------------------------------------
// canonicalize
// ---------------------------------------------------------------------------

json orbit_case_json(const trivec::OrbitCase<double>& oc) {
    json j = {{"tag", trivec::orbit_tag_name(oc.tag)}};
    if (oc.tag == trivec::OrbitTag::Pair) j["partner"] = w6_to_json(oc.partner);
    if (oc.tag == trivec::OrbitTag::Semicircle) j["radius"] = oc.radius;
    return j;
}

json canonical_json(const trivec::CanonicalResult<double>& r) {
    json res;
    for (const auto& [k, v] : r.residuals) res[k] = v;
    return {{"point", w6_to_json(r.point)},
            {"case", orbit_case_json(r.orbit)},
            {"residuals", std::move(res)},
            {"d_source", trivec::d_source_name(r.d_source)},
            {"escalated", r.escalated}};
}

json mat2_json(const trivec::Mat2<double>& m) {
    return json::array({json::array({json::array({m[0][0].re, m[0][0].im}),
                                     json::array({m[0][1].re, m[0][1].im})}),
                        json::array({json::array({m[1][0].re, m[1][0].im}),
                                     json::array({m[1][1].re, m[1][1].im})})});
}

void cmd_canonicalize(const Common& c, const std::string& in, bool qubit, bool witness) {
    const AnyState s = load_state(in);
    trivec::CanonOptions opt;
    opt.mu_starts = c.starts;
    opt.seed = c.seed == 0 ? opt.seed : c.seed;

    if (witness && !qubit)
        throw cli_error("UsageError", "--witness requires --qubit (single-occupancy inputs)");

    json out;
    if (qubit) {
        const QubitState<double> phi = as_qubit(s, c.tol);
        const trivec::QubitCanonicalResult<double> r = trivec::qubit_canonicalize(phi, opt);
        out = canonical_json(r.fermionic);
        out["point"] = w6_to_json(r.point);  // site-matched coordinate order
        out["sigma"] = {r.sigma[0], r.sigma[1], r.sigma[2]};
        out["residuals"]["q_match"] = r.q_residual;
        if (witness) {
            const trivec::QubitWitness<double> w = trivec::qubit_witness(phi, opt);
            out["witness"] = {{"locals", json::array({mat2_json(w.locals[0]),
                                                      mat2_json(w.locals[1]),
                                                      mat2_json(w.locals[2])})},
                              {"perm", {w.perm[0], w.perm[1], w.perm[2]}},
                              {"point", w6_to_json(w.point)},
                              {"mu", w.mu},
                              {"residual", w.residual}};
        }
    } else if (c.extended()) {
        const trivec::CanonicalResult<mp50> r =
            trivec::canonicalize(trivec::widen(as_fermion(s)), opt);
        out = canonical_json(trivec::detail::narrow_result(r));
        out["point_extended"] = w6_to_json_extended(r.point);
        out["precision"] = "extended";
    } else {
        out = canonical_json(trivec::canonicalize(as_fermion(s), opt));
    }
    emit(out, c);
}

// ---------------------------------------------------------------------------
// equiv / classify
// ---------------------------------------------------------------------------

void cmd_equiv(const Common& c, const std::string& a_path, const std::string& b_path) {
    const AnyState a = load_state(a_path);
    const AnyState b = load_state(b_path);
    bool eq;
    if (a.kind == Kind::Qubit && b.kind == Kind::Qubit)
        eq = trivec::g_equivalent(a.q, b.q, c.tol);  // locals plus site swaps
    else
        eq = trivec::lu_equivalent(as_fermion(a), as_fermion(b), c.tol);
    emit(json{{"equivalent", eq}}, c);
}

void cmd_classify(const Common& c, const std::string& in) {
    const State<double> psi = as_fermion(load_state(in));
    emit(json{{"type", trivec::to_string(trivec::slocc_type(psi))},
              {"quasi_real", trivec::quasi_real(psi)}},
         c);
}

// ---------------------------------------------------------------------------
// gme
// ---------------------------------------------------------------------------

void cmd_gme(const Common& c, const std::string& in) {
    const AnyState s = load_state(in);
    json out;
    if (s.kind == Kind::Qubit) {
        const QubitState<double> unit = trivec::normalized(s.q);
        const trivec::QubitMuResult<double> r =
            trivec::mu_sov(unit, c.starts, 1e-12, c.seed == 0 ? 0x6eed6eedULL : c.seed);
        json maxi = json::array();
        for (const auto& v : r.maximizer)
            maxi.push_back(json::array({json::array({v[0].re, v[0].im}),
                                        json::array({v[1].re, v[1].im})}));
        out = {{"mu", r.mu},
               {"gme", 1.0 - r.mu * r.mu},
               {"maximizer", std::move(maxi)},
               {"converged", r.converged}};
    } else {
        const State<double> unit = trivec::normalized(as_fermion(s));
        const trivec::MuResult<double> r =
            trivec::mu_general(unit, c.starts, 1e-12, c.seed == 0 ? 0x6eed6eedULL : c.seed);
        json maxi = json::array();
        for (const auto& v : r.maximizer) {
            json row = json::array();
            for (const auto& e : v) row.push_back(json::array({e.re, e.im}));
            maxi.push_back(std::move(row));
        }
        out = {{"mu", r.mu},
               {"gme", 1.0 - r.mu * r.mu},
               {"maximizer", std::move(maxi)},
               {"converged", r.converged}};
    }
    emit(out, c);
}

// ---------------------------------------------------------------------------
// region
// ---------------------------------------------------------------------------

void cmd_region_sample(const Common& c, bool sphere) {
    struct Row {
        W6Point<double> p;
        bool interior = false;
        std::string tag;
    };
    std::vector<Row> rows(static_cast<size_t>(c.count));
    parallel_for(c.count, c.jobs, [&](int i) {
        Row& r = rows[static_cast<size_t>(i)];
        const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(i);
        if (sphere) {
            trivec::Rng rng(seed);
            r.p = trivec::random_w6_point<double>(rng);
        } else {
            r.p = trivec::sample_delta_seeded<double>(seed);
        }
        const trivec::RegionVerdict<double> v = trivec::in_delta(r.p, c.tol);
        r.interior = v.in_region && !v.on_boundary;
        r.tag = v.in_region ? trivec::orbit_tag_name(trivec::orbit_case(r.p, c.tol).tag) : "-";
    });

    if (c.format.empty() || c.format == "csv") {
        std::ostringstream os;
        os << std::setprecision(17);
        os << "a,b,c,d,x,y,interior_flag,case_tag\n";
        for (const Row& r : rows)
            os << r.p.a << ',' << r.p.b << ',' << r.p.c << ',' << r.p.d << ',' << r.p.x
               << ',' << r.p.y << ',' << (r.interior ? 1 : 0) << ',' << r.tag << "\n";
        std::cout << os.str();
        return;
    }
    json arr = json::array();
    for (const Row& r : rows) {
        json e = w6_to_json(r.p);
        e["interior"] = r.interior;
        e["case"] = r.tag;
        arr.push_back(std::move(e));
    }
    emit(arr, c);
}

void cmd_region_check(const Common& c, const std::string& in) {
    const AnyState s = load_state(in);
    if (s.kind != Kind::W6)
        throw cli_error("UsageError", "region check expects a \"w6\" point file");
    const trivec::RegionVerdict<double> v = trivec::in_delta(s.w, c.tol);
    json violated = json::array();
    for (const auto& q : v.violated) violated.push_back(trivec::ineq_name(q));
    json margins;
    for (const auto& sl : v.margins) margins[trivec::ineq_name(sl.id)] = sl.value;
    json out = {{"in_region", v.in_region},
                {"on_boundary", v.on_boundary},
                {"violated", std::move(violated)},
                {"margins", std::move(margins)}};
    if (v.in_region) out["case"] = orbit_case_json(trivec::orbit_case(s.w, c.tol));
    emit(out, c);
}

// ---------------------------------------------------------------------------
// qubit-map
// ---------------------------------------------------------------------------

void cmd_qubit_map(const Common& c, const std::string& in) {
    const AnyState s = load_state(in);
    if (s.kind == Kind::Qubit)
        emit(fermion_to_json(trivec::sov_embed(s.q)), c);
    else
        emit(qubit_to_json(as_qubit(s, c.tol)), c);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct Gate {
    json values;
    bool pass = true;

    void bound(const char* name, double value, double limit) {
        values[name] = value;
        values[std::string(name) + "_limit"] = limit;
        if (!(value <= limit)) pass = false;
    }
    void require(const char* name, bool ok) {
        values[name] = ok;
        if (!ok) pass = false;
    }
};

// max over `count` seeded items of fn(seed_i), evaluated in parallel
template <class Fn>
double seeded_max(const Common& c, int count, std::uint64_t base, Fn&& fn) {
    std::vector<double> vals(static_cast<size_t>(count));
    parallel_for(count, c.jobs, [&](int i) {
        vals[static_cast<size_t>(i)] = fn(base + static_cast<std::uint64_t>(i));
    });
    double worst = 0;
    for (double v : vals) worst = std::max(worst, v);
    return worst;
}

void suite_identities(const Common& c, int count, Gate& g) {
    const double worst = seeded_max(c, count, c.seed, [](std::uint64_t s) {
        const State<double> psi = trivec::random_state_seeded<double>(s);
        const trivec::IdentityReport<double> rep = trivec::identity_suite(psi);
        double m = std::max({rep.inv_j2, rep.reh, rep.syzygy, rep.m5_f, rep.nonneg_slack});
        return m;
    });
    g.bound("identity_residual", worst, 1e-8);

    // closed-form restrictions against the general contraction route
    const double worst_r = seeded_max(c, count, c.seed + 0x517e, [](std::uint64_t s) {
        const W6Point<double> p = trivec::sample_delta_seeded<double>(s);
        const trivec::FermionInvariants<double> gen = trivec::fermion_invariants(p.state());
        const trivec::W6Invariants<double> res = trivec::w6_invariants(p);
        double m = 0;
        for (int k = 1; k <= 7; ++k)
            m = std::max(m, std::abs(gen.M(k) - res.M(k)) /
                                std::max(1.0, std::abs(res.M(k))));
        return m;
    });
    g.bound("restriction_residual", worst_r, 1e-8);
}

void suite_roundtrip(const Common& c, int count, Gate& g) {
    trivec::CanonOptions opt;
    opt.mu_starts = c.starts;
    const bool ext = c.extended();
    const double worst = seeded_max(c, count, c.seed, [&](std::uint64_t s) {
        const W6Point<double> p = trivec::sample_delta_seeded<double>(s);
        if (ext) {
            // exact widening is off the unit sphere by binary64 round-off
            W6Point<mp50> pw{mp50(p.a), mp50(p.b), mp50(p.c), mp50(p.d), mp50(p.x), mp50(p.y)};
            const mp50 n = sqrt(pw.norm2());
            pw = W6Point<mp50>{pw.a / n, pw.b / n, pw.c / n, pw.d / n, pw.x / n, pw.y / n};
            const trivec::Mat<cx<mp50>> u = trivec::haar_unitary_seeded<mp50>(s ^ 0x5eedULL);
            const trivec::CanonicalResult<mp50> r =
                trivec::canonicalize(trivec::apply_unitary(u, pw.state()), opt);
            mp50 m(0);
            using std::abs;
            m = abs(r.point.a - pw.a);
            m = std::max(m, mp50(abs(r.point.b - pw.b)));
            m = std::max(m, mp50(abs(r.point.c - pw.c)));
            m = std::max(m, mp50(abs(r.point.d - pw.d)));
            m = std::max(m, mp50(abs(r.point.x - pw.x)));
            m = std::max(m, mp50(abs(r.point.y - pw.y)));
            return m.convert_to<double>();
        }
        const trivec::Mat<cx<double>> u = trivec::haar_unitary_seeded<double>(s ^ 0x5eedULL);
        const trivec::CanonicalResult<double> r =
            trivec::canonicalize(trivec::apply_unitary(u, p.state()), opt);
        double m = std::abs(r.point.a - p.a);
        m = std::max(m, std::abs(r.point.b - p.b));
        m = std::max(m, std::abs(r.point.c - p.c));
        m = std::max(m, std::abs(r.point.d - p.d));
        m = std::max(m, std::abs(r.point.x - p.x));
        m = std::max(m, std::abs(r.point.y - p.y));
        return m;
    });
    g.bound("roundtrip_error", worst, ext ? 1e-20 : 1e-6);
}

void suite_gme_floor(const Common& c, int count, Gate& g) {
    std::vector<double> mus(static_cast<size_t>(count));
    parallel_for(count, c.jobs, [&](int i) {
        const State<double> psi =
            trivec::random_state_seeded<double>(c.seed + static_cast<std::uint64_t>(i));
        mus[static_cast<size_t>(i)] = trivec::mu_general(psi, c.starts).mu;
    });
    double lo = 1.0;
    for (double m : mus) lo = std::min(lo, m);
    g.values["min_mu"] = lo;
    g.require("floor_two_thirds", lo >= 2.0 / 3.0 - 1e-6);
}

void suite_pairing(const Common& c, int count, Gate& g) {
    const double worst = seeded_max(c, count, c.seed, [](std::uint64_t s) {
        return trivec::spectrum_pairing_check(trivec::random_state_seeded<double>(s));
    });
    g.bound("pairing_residual", worst, 1e-10);
}

void suite_qubit_bridge(const Common& c, int count, Gate& g) {
    const double worst = seeded_max(c, count, c.seed, [](std::uint64_t s) {
        trivec::Rng rng(s);
        const QubitState<double> phi = trivec::random_qubit_state<double>(rng);
        const trivec::QubitInvariants<double> qv = trivec::qubit_invariants(phi);
        const trivec::FermionInvariants<double> fv =
            trivec::fermion_invariants(trivec::sov_embed(phi));
        const double r6 = std::abs(qv.Q(6) - fv.M(5)) / std::max(1.0, std::abs(fv.M(5)));
        const double r7 =
            std::abs(qv.Q(7) - 8.0 * fv.M(7)) / std::max(1.0, std::abs(8.0 * fv.M(7)));
        return std::max(r6, r7);
    });
    g.bound("q6_q7_residual", worst, 1e-9);

    trivec::CanonOptions opt;
    opt.mu_starts = c.starts;
    const double worst_c = seeded_max(c, count, c.seed + 0x9b1d, [&](std::uint64_t s) {
        trivec::Rng rng(s);
        const QubitState<double> phi = trivec::random_qubit_state<double>(rng);
        return trivec::qubit_canonicalize(phi, opt).q_residual;
    });
    g.bound("purity_match_residual", worst_c, 1e-8);

    const double worst_w = seeded_max(c, count, c.seed + 0x3a7b, [&](std::uint64_t s) {
        trivec::Rng rng(s);
        const QubitState<double> phi = trivec::random_qubit_state<double>(rng);
        return trivec::qubit_witness(phi, opt).residual;
    });
    g.bound("witness_residual", worst_w, 1e-8);
}

void suite_regions(const Common& c, Gate& g) {
    using trivec::Ineq;
    const double s73 = std::sqrt(73.0), s3 = std::sqrt(3.0);
    const W6Point<double> interior{8 / 15.0, 4 / 15.0, 2 / 15.0, 11 / 15.0, 2 / 15.0, 4 / 15.0};
    const W6Point<double> v_d{3 / 5.0, 0, 0, 0, 4 / 5.0, 0};
    const W6Point<double> v_balance{0.5, 0.5, 0.5, 0.5, 0, 0};
    const W6Point<double> v_floor{1 / s3, 0, 0, 1 / s3, 1 / s3, 0};
    const W6Point<double> v_budget{4 / s73, 2 / s73, 2 / s73, 6 / s73, 2 / s73, 3 / s73};

    const auto vi = trivec::in_delta(interior, c.tol);
    g.require("interior_point", vi.in_region && !vi.on_boundary);
    g.require("d_positive_witness",
              trivec::in_delta(v_d, c.tol).violates_only(Ineq::DPositive));
    g.require("cubic_balance_witness",
              trivec::in_delta(v_balance, c.tol).violates_only(Ineq::CubicBalance));
    g.require("cubic_floor_witness",
              trivec::in_delta(v_floor, c.tol).violates_only(Ineq::CubicFloor));
    g.require("phase_budget_witness",
              trivec::in_delta(v_budget, c.tol).violates_only(Ineq::PhaseBudget));
}

void suite_transcription(const Common& c, int count, Gate& g) {
    // coefficient-table checks run in extended precision: the integer tables
    // amplify invariant round-off far above any binary64 identity gate
    const double worst_f = seeded_max(c, count, c.seed, [](std::uint64_t s) {
        const W6Point<double> pd = trivec::sample_delta_seeded<double>(s);
        using std::abs;
        using std::sqrt;
        W6Point<mp50> p{mp50(pd.a), mp50(pd.b), mp50(pd.c), mp50(pd.d), mp50(pd.x), mp50(pd.y)};
        const mp50 n = sqrt(p.norm2());
        p = W6Point<mp50>{p.a / n, p.b / n, p.c / n, p.d / n, p.x / n, p.y / n};
        auto mv = trivec::w6_invariants(p).m;
        mv[0] = mp50(1);
        const trivec::DsqPoly<mp50> f = trivec::dsq_polynomial(mv);
        const mp50 resid = abs(f.eval(p.d * p.d));
        mp50 scale = f.scale();
        if (scale < mp50(1)) scale = mp50(1);
        return (resid / scale).convert_to<double>();
    });
    g.bound("dsq_root_residual", worst_f, 1e-8);
}

void cmd_verify(const Common& c, const std::string& suite, int count) {
    Gate g;
    const bool all = suite == "all";
    if (all || suite == "identities") suite_identities(c, count, g);
    if (all || suite == "roundtrip") suite_roundtrip(c, all ? std::min(count, 25) : count, g);
    if (all || suite == "gme-floor") suite_gme_floor(c, count, g);
    if (all || suite == "pairing") suite_pairing(c, count, g);
    if (all || suite == "qubit-bridge") suite_qubit_bridge(c, all ? std::min(count, 25) : count, g);
    if (all || suite == "regions") suite_regions(c, g);
    if (all || suite == "transcription") suite_transcription(c, count, g);
    if (g.values.empty())
        throw cli_error("UsageError",
                        "unknown suite \"" + suite +
                            "\" (identities, roundtrip, gme-floor, pairing, qubit-bridge, "
                            "regions, transcription, all)");
    json out = {{"suite", suite},
                {"count", count},
                {"seed", c.seed},
                {"residuals", g.values},
                {"pass", g.pass}};
    emit(out, c);
    if (!g.pass) std::exit(1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"three-fermion and three-qubit invariant toolkit"};
    app.require_subcommand(1);

    Common c;
    std::string in_path, a_path, b_path, gen_kind = "fermion20", suite = "identities";
    bool flag_qubit = false, flag_witness = false, flag_sphere = false;
    int verify_count = 100;

    CLI::App* gen = app.add_subcommand("gen", "generate seeded random states");
    gen->add_option("--kind", gen_kind, "fermion20 | qubit8 | w6 | delta")
        ->check(CLI::IsMember({"fermion20", "qubit8", "w6", "delta"}));
    add_common(gen, c, true);
    gen->callback([&] { cmd_gen(c, gen_kind); });

    CLI::App* inv = app.add_subcommand("invariants", "evaluate the invariant family");
    inv->add_option("--in", in_path, "state file (JSON)")->required();
    add_common(inv, c);
    inv->callback([&] { cmd_invariants(c, in_path); });

    CLI::App* canon = app.add_subcommand("canonicalize", "canonical-region representative");
    canon->add_option("--in", in_path, "state file (JSON)")->required();
    canon->add_flag("--qubit", flag_qubit, "qubit pipeline (site-purity matched point)");
    canon->add_flag("--witness", flag_witness, "also emit the explicit local witness");
    add_common(canon, c);
    canon->callback([&] { cmd_canonicalize(c, in_path, flag_qubit, flag_witness); });

    CLI::App* equiv = app.add_subcommand("equiv", "decide local-unitary equivalence");
    equiv->add_option("--a", a_path, "first state file")->required();
    equiv->add_option("--b", b_path, "second state file")->required();
    add_common(equiv, c);
    equiv->callback([&] { cmd_equiv(c, a_path, b_path); });

    CLI::App* cls = app.add_subcommand("classify", "coarse orbit type of a state");
    cls->add_option("--in", in_path, "state file (JSON)")->required();
    add_common(cls, c);
    cls->callback([&] { cmd_classify(c, in_path); });

    CLI::App* gm = app.add_subcommand("gme", "geometric measure of entanglement");
    gm->add_option("--in", in_path, "state file (JSON)")->required();
    add_common(gm, c);
    gm->callback([&] { cmd_gme(c, in_path); });

    CLI::App* region = app.add_subcommand("region", "canonical-region utilities");
    region->require_subcommand(1);
    CLI::App* rs = region->add_subcommand("sample", "sample points for plotting (CSV default)");
    rs->add_flag("--sphere", flag_sphere, "sample the whole unit sphere, not just members");
    add_common(rs, c, true);
    rs->callback([&] { cmd_region_sample(c, flag_sphere); });
    CLI::App* rc = region->add_subcommand("check", "membership verdict for a w6 point");
    rc->add_option("--in", in_path, "point file (JSON, kind w6)")->required();
    add_common(rc, c);
    rc->callback([&] { cmd_region_check(c, in_path); });

    CLI::App* qm = app.add_subcommand("qubit-map", "move between qubit and fermion encodings");
    qm->add_option("--in", in_path, "state file (JSON)")->required();
    add_common(qm, c);
    qm->callback([&] { cmd_qubit_map(c, in_path); });

    CLI::App* ver = app.add_subcommand("verify", "run a self-verification suite");
    ver->add_option("--suite", suite,
                    "identities | roundtrip | gme-floor | pairing | qubit-bridge | regions | "
                    "transcription | all");
    ver->add_option("--count", verify_count, "items per suite")->check(CLI::PositiveNumber);
    ver->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    ver->add_option("--seed", c.seed, "random seed");
    ver->add_option("--precision", c.precision, "binary64 | extended (50 digits)")
        ->check(CLI::IsMember({"binary64", "extended"}));
    ver->add_option("--format", c.format, "json | text");
    ver->add_option("--tol", c.tol, "membership tolerance");
    ver->add_option("--starts", c.starts, "optimizer restarts");
    ver->callback([&] { cmd_verify(c, suite, verify_count); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const trivec::domain_error& e) {
        std::cout << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const cli_error& e) {
        std::cout << json{{"error", e.tag}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << json{{"error", "Inconsistent"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
