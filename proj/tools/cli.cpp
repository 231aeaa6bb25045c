#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dersyz/corpus.hpp"
#include "dersyz/decompose.hpp"
#include "dersyz/finiteness.hpp"
#include "dersyz/lemmas.hpp"

namespace dersyz::cli {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct InputError {
    std::string code;
    std::string message;
};

struct Document {
    std::string path;
    AlgebraPtr alg;
    std::map<std::string, Representation> named;
    std::uint64_t seed = 0;
};

std::size_t vertex_ref(const json& j, const std::vector<std::string>& vertices)
{
    if (j.is_number_integer()) {
        auto i = j.get<long long>();
        if (i < 0 || static_cast<std::size_t>(i) >= vertices.size())
            throw InputError{"E_ALGEBRA", "vertex index out of range: " + std::to_string(i)};
        return static_cast<std::size_t>(i);
    }
    auto label = j.get<std::string>();
    auto it = std::find(vertices.begin(), vertices.end(), label);
    if (it == vertices.end())
        throw InputError{"E_ALGEBRA", "unknown vertex: " + label};
    return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t arrow_ref(const std::string& name, const std::vector<Arrow>& arrows)
{
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].name == name)
            return a;
    throw InputError{"E_ALGEBRA", "unknown arrow: " + name};
}

Representation parse_module(const AlgebraPtr& alg, const std::string& name, const json& j)
{
    auto dims = j.at("dims").get<std::vector<std::size_t>>();
    if (dims.size() != alg->num_vertices())
        throw InputError{"E_MODULE", name + ": dims has " + std::to_string(dims.size()) + " entries"};
    std::vector<Matrix> maps;
    const json& given = j.contains("maps") ? j.at("maps") : json::object();
    for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
        const Arrow& arr = alg->arrow(a);
        Matrix m(alg->field(), dims[arr.target], dims[arr.source]);
        if (given.contains(arr.name)) {
            auto rows = given.at(arr.name).get<std::vector<std::vector<long long>>>();
            bool empty_ok = rows.empty() && (m.rows() == 0 || m.cols() == 0);
            if (!empty_ok && rows.size() != m.rows())
                throw InputError{"E_MODULE", name + ": matrix for " + arr.name + " has wrong row count"};
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r].size() != m.cols())
                    throw InputError{"E_MODULE", name + ": matrix for " + arr.name + " has wrong column count"};
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m.set(r, c, rows[r][c]);
            }
        }
        maps.push_back(m);
    }
    try {
        return Representation(alg, dims, maps);
    } catch (const ArgumentError& e) {
        throw InputError{"E_MODULE", name + ": " + e.what()};
    }
}

Document load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError{"E_IO", "cannot read " + path};
    Document doc;
    doc.path = path;
    try {
        json j = json::parse(in);
        QuiverSpec spec;
        try {
            spec.field = PrimeField(j.at("field_p").get<std::uint64_t>());
        } catch (const ArgumentError& e) {
            throw InputError{"E_ALGEBRA", e.what()};
        }
        spec.vertices = j.at("vertices").get<std::vector<std::string>>();
        for (const auto& a : j.at("arrows"))
            spec.arrows.push_back({a.at("name").get<std::string>(), vertex_ref(a.at("from"), spec.vertices),
                                   vertex_ref(a.at("to"), spec.vertices)});
        for (const auto& rel : j.value("relations", json::array())) {
            Relation r;
            for (const auto& term : rel) {
                PathTerm t;
                t.coeff = term.value("coeff", 1LL);
                for (const auto& name : term.at("path"))
                    t.arrows.push_back(arrow_ref(name.get<std::string>(), spec.arrows));
                r.push_back(t);
            }
            spec.relations.push_back(r);
        }
        spec.nilpotency_bound = j.at("nilpotency_bound").get<int>();
        doc.seed = j.value("seed", std::uint64_t(0));
        try {
            doc.alg = build_algebra(spec);
        } catch (const ArgumentError& e) {
            throw InputError{"E_ALGEBRA", e.what()};
        }
        if (j.contains("named_modules"))
            for (const auto& [name, m] : j.at("named_modules").items())
                doc.named.emplace(name, parse_module(doc.alg, name, m));
    } catch (const json::exception& e) {
        throw InputError{"E_JSON", std::string(e.what())};
    }
    return doc;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string part;
    std::istringstream is(s);
    while (std::getline(is, part, sep))
        if (!trim(part).empty())
            out.push_back(trim(part));
    return out;
}

Representation builtin(const Document& doc, const std::string& name)
{
    const AlgebraPtr& alg = doc.alg;
    if (auto it = doc.named.find(name); it != doc.named.end())
        return it->second;
    if (name == "R")
        return regular(alg);
    if (name == "0")
        return Representation::zero(alg);
    if (std::isdigit(static_cast<unsigned char>(name[0])) || name[0] == '[') {
        std::string body = name;
        body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '[' || c == ']'; }),
                   body.end());
        std::vector<std::size_t> dims;
        for (const auto& d : split(body, ','))
            try {
                dims.push_back(std::stoul(d));
            } catch (const std::exception&) {
                throw InputError{"E_MODULE", "bad inline dims: " + name};
            }
        if (dims.size() != alg->num_vertices())
            throw InputError{"E_MODULE", "inline dims need " + std::to_string(alg->num_vertices()) + " entries"};
        return semisimple(alg, dims);
    }
    char kind = name[0];
    if (kind == 'S' || kind == 'P' || kind == 'I') {
        std::string label = name.substr(1);
        std::optional<std::size_t> v;
        if (label.empty() && alg->num_vertices() == 1)
            v = 0;
        for (std::size_t w = 0; w < alg->num_vertices() && !v; ++w)
            if (alg->spec().vertices[w] == label)
                v = w;
        if (v)
            return kind == 'S' ? simple(alg, *v) : kind == 'P' ? projective(alg, *v) : injective(alg, *v);
    }
    throw InputError{"E_MODULE", "unknown module: " + name};
}

/// NAME, NAME+NAME, or inline dims such as 1,0,1.
Representation module_ref(const Document& doc, const std::string& text)
{
    std::vector<std::string> parts = split(text, '+');
    if (parts.empty())
        throw InputError{"E_MODULE", "empty module name"};
    Representation m = builtin(doc, parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
        m = direct_sum(m, builtin(doc, parts[i]));
    return m;
}

std::vector<std::string> default_targets(const Document& doc)
{
    std::vector<std::string> out;
    for (std::size_t v = 0; v < doc.alg->num_vertices(); ++v)
        out.push_back("S" + (doc.alg->num_vertices() == 1 ? std::string() : doc.alg->spec().vertices[v]));
    out.push_back("R");
    return out;
}

json classes_json(IsoClassRegistry& reg, const Representation& m, std::uint64_t seed)
{
    std::vector<std::string> names;
    if (!m.is_zero())
        for (const auto& [piece, k] : decompose(m, false, seed).pieces)
            for (std::size_t i = 0; i < k; ++i)
                names.push_back(reg.name(reg.classify(piece)));
    std::sort(names.begin(), names.end());
    return names;
}

json module_json(IsoClassRegistry& reg, const Representation& m, std::uint64_t seed)
{
    return {{"dims", m.dim_vector()}, {"total_dim", m.total_dim()}, {"classes", classes_json(reg, m, seed)}};
}

json complex_json(const BoundedComplex& x)
{
    BoundedComplex t = x.trimmed();
    json terms = json::array();
    if (!t.is_zero())
        for (int i = t.lo(); i <= t.hi(); ++i)
            terms.push_back({{"degree", i}, {"dims", t.term(i).dim_vector()}});
    return {{"terms", terms}};
}

json verdict_json(const std::string& name, const BoundedVerdict& v)
{
    json bounds = json::object(), witness = json::object();
    for (const auto& [k, x] : v.bounds)
        bounds[k] = x;
    for (const auto& [k, x] : v.witness)
        witness[k] = x;
    return {{"name", name}, {"verdict", to_string(v.verdict)}, {"bounds", bounds}, {"witness", witness},
            {"reason", v.reason}};
}

int exit_for(Verdict v)
{
    switch (v) {
    case Verdict::HoldsUpToBound:
        return Ok;
    case Verdict::FailsWithCounterexample:
        return Fails;
    case Verdict::Inconclusive:
        break;
    }
    return Inconclusive;
}

int worst(int a, int b)
{
    if (a == Fails || b == Fails)
        return Fails;
    return std::max(a, b);
}

struct Options {
    std::string algebra;
    std::string module;
    std::optional<int> level, window, imax, nmax, from, mmax, jmax;
    std::optional<std::size_t> dimcap;
    std::optional<std::uint64_t> seed;
    std::string tests;
    std::string format = "json";
    bool dual = false;
};

struct Report {
    json inputs = json::object();
    json results = json::object();
    json verdicts = json::array();
    json windows = json::object();
    int code = Ok;
};

Representation need_module(const Document& doc, const Options& o, Report& r)
{
    if (o.module.empty())
        throw InputError{"E_USAGE", "--module is required"};
    r.inputs["module"] = o.module;
    return module_ref(doc, o.module);
}

std::vector<std::pair<std::string, Representation>> module_list(const Document& doc, const std::string& text,
                                                                const std::vector<std::string>& fallback)
{
    std::vector<std::pair<std::string, Representation>> out;
    for (const auto& name : text.empty() ? fallback : split(text, ','))
        out.push_back({name, module_ref(doc, name)});
    return out;
}

void cmd_resolve(const Document& doc, const Options& o, Report& r, std::uint64_t seed)
{
    Representation m = need_module(doc, o, r);
    int w = o.window.value_or(4);
    if (w < 0)
        throw InputError{"E_WINDOW", "--window must be nonnegative"};
    r.inputs["window"] = w;
    r.windows["window_top"] = w;
    CappedResolution p = min_proj_resolution(m, w);
    json terms = json::array();
    for (int i = std::max(p.lo(), 0); i <= w; ++i) {
        const Representation& t = p.complex.term(i);
        json gens = json::array();
        if (t.free_generators())
            for (std::size_t g : *t.free_generators())
                gens.push_back(doc.alg->spec().vertices[g]);
        terms.push_back({{"degree", i}, {"dims", t.dim_vector()}, {"generators", gens}});
    }
    r.results["terms"] = terms;
    r.results["cap_dims"] = p.cap().dim_vector();
    r.results["closes"] = p.closes();
    r.results["minimal"] = is_minimal(p);
    if (p.closes()) {
        int pd = 0;
        for (int i = 0; i <= w; ++i)
            if (!p.complex.term(i).is_zero())
                pd = i;
        r.results["projective_dimension"] = pd;
    } else {
        r.results["projective_dimension"] = nullptr;
    }
    (void)seed;
}

void cmd_syzygy(const Document& doc, const Options& o, Report& r, std::uint64_t seed, bool co)
{
    Representation m = need_module(doc, o, r);
    DerivedObject x = DerivedObject::module(m);
    int n = o.level.value_or(co ? -1 : 1);
    int req = co ? required_window_bottom(x, n) : required_window_top(x, n);
    int w = o.window.value_or(req);
    if (co ? w > req : w < req)
        throw InputError{"E_WINDOW", std::string("window ") + std::to_string(w) + (co ? " above " : " below ") +
                                         "the required " + std::to_string(req)};
    r.inputs["level"] = n;
    r.inputs["window"] = w;
    r.windows[co ? "window_bottom" : "window_top"] = w;
    r.windows[co ? "required_window_bottom" : "required_window_top"] = req;
    SyzygyResult s = co ? cosyzygy(x, n, w) : syzygy(x, n, w);
    IsoClassRegistry reg(doc.alg);
    r.results["level"] = n;
    r.results["representative"] = complex_json(s.representative);
    r.results["module"] = s.module ? module_json(reg, *s.module, seed) : json(nullptr);
    r.results["reduced_module"] = s.reduced_module ? module_json(reg, *s.reduced_module, seed) : json(nullptr);
}

void cmd_ext_table(const Document& doc, const Options& o, Report& r)
{
    Representation m = need_module(doc, o, r);
    int imax = o.imax.value_or(6);
    if (imax < 0)
        throw InputError{"E_WINDOW", "--imax must be nonnegative"};
    r.inputs["imax"] = imax;
    r.windows["imax"] = imax;
    auto targets = module_list(doc, o.tests, default_targets(doc));
    json rows = json::array();
    BoundedComplex x = BoundedComplex::concentrated(m);
    for (const auto& [name, n] : targets) {
        std::vector<std::size_t> dims;
        for (int i = 0; i <= imax; ++i)
            dims.push_back(derived_hom_dim(x, BoundedComplex::concentrated(n), i));
        rows.push_back({{"target", name}, {"dims", dims}});
    }
    r.inputs["targets"] = [&] {
        json t = json::array();
        for (const auto& p : targets)
            t.push_back(p.first);
        return t;
    }();
    r.results["rows"] = rows;
}

void cmd_triangle(const Document& doc, const Options& o, Report& r)
{
    Representation m = need_module(doc, o, r);
    DerivedObject x = DerivedObject::module(m);
    int n = o.level.value_or(1), mm = o.from.value_or(0);
    if (n < mm)
        throw InputError{"E_WINDOW", "--level must be at least --from"};
    r.inputs["level"] = n;
    r.inputs["from"] = mm;
    r.inputs["dual"] = o.dual;
    TriangleWitness t = o.dual ? cosyzygy_triangle(x, n, mm) : syzygy_triangle(x, n, mm);
    bool ok = t.verify();
    r.results["first"] = complex_json(t.first);
    r.results["second"] = complex_json(t.second);
    r.results["third"] = complex_json(t.third);
    r.results["verified"] = ok;
    r.code = ok ? Ok : Fails;
}

void cmd_verify_lemmas(const Document& doc, const Options& o, Report& r, std::uint64_t seed)
{
    LemmaOptions opt;
    opt.n_max = o.nmax.value_or(3);
    opt.m_max = o.mmax.value_or(3);
    opt.j_max = o.jmax.value_or(4);
    opt.seed = seed;
    r.inputs["nmax"] = opt.n_max;
    r.inputs["mmax"] = opt.m_max;
    r.inputs["jmax"] = opt.j_max;
    r.windows = {{"nmax", opt.n_max}, {"mmax", opt.m_max}, {"jmax", opt.j_max}};
    std::vector<Representation> mods = corpus::test_modules(doc.alg);
    for (const auto& [name, m] : doc.named)
        mods.push_back(m);
    LemmaReport rep = verify_lemmas(mods, opt);
    json families = json::object(), checks = json::array();
    for (const auto& c : rep.checks) {
        json& f = families[c.family];
        if (f.is_null())
            f = {{"checks", 0}, {"failed", 0}};
        f["checks"] = f["checks"].get<int>() + 1;
        if (!c.passed)
            f["failed"] = f["failed"].get<int>() + 1;
        checks.push_back({{"family", c.family}, {"input", c.input}, {"passed", c.passed}, {"detail", c.detail}});
    }
    r.results["total"] = rep.checks.size();
    r.results["failures"] = rep.failures();
    r.results["families"] = families;
    r.results["checks"] = checks;
    r.code = rep.all_passed() ? Ok : Fails;
}

void cmd_orbit(const Document& doc, const Options& o, Report& r, std::uint64_t seed)
{
    int n_start = o.level.value_or(0), n_max = o.nmax.value_or(6);
    std::size_t cap = o.dimcap.value_or(12);
    if (n_max < 1 || n_start < 0 || n_start > n_max)
        throw InputError{"E_WINDOW", "need 0 <= --level <= --nmax and --nmax >= 1"};
    r.inputs["level"] = n_start;
    r.inputs["nmax"] = n_max;
    r.inputs["dimcap"] = cap;
    std::optional<std::vector<Representation>> seeds;
    if (!o.module.empty()) {
        r.inputs["module"] = o.module;
        seeds.emplace();
        for (const auto& [name, m] : module_list(doc, o.module, {}))
            seeds->push_back(m);
    }
    SyzygyFiniteResult res = detect_syzygy_finite(doc.alg, n_start, n_max, cap, seeds, seed);
    const OrbitReport& orb = res.orbit;
    json levels = json::array();
    for (std::size_t n = 0; n < orb.levels.size(); ++n)
        levels.push_back({{"level", n}, {"classes", orb.level_names(static_cast<int>(n))}});
    r.results["seed_count"] = orb.seeds.size();
    r.results["levels"] = levels;
    r.results["union_sizes"] = orb.union_sizes;
    r.results["stabilized"] = orb.stabilized;
    r.results["support_stabilized"] = orb.support_stabilized;
    r.results["classes"] = orb.class_names;
    r.windows = {{"n_start", n_start}, {"n_max", n_max}, {"dim_cap", cap}};
    r.verdicts.push_back(verdict_json("syzygy_finite", res.verdict));
    r.code = exit_for(res.verdict.verdict);
}

void cmd_it(const Document& doc, const Options& o, Report& r, std::uint64_t seed)
{
    Representation v = need_module(doc, o, r);
    int n = o.level.value_or(1), cap = o.nmax.value_or(8);
    r.inputs["level"] = n;
    r.inputs["nmax"] = cap;
    r.windows = {{"level", n}, {"n_cap", cap}};
    IsoClassRegistry reg(doc.alg);

    PhiPsi pp = phi_psi(v, cap, seed);
    BoundedVerdict pv;
    pv.verdict = pp.conclusive ? Verdict::HoldsUpToBound : Verdict::Inconclusive;
    pv.bounds = {{"n_cap", cap}, {"certified_level", pp.certified_level}};
    pv.reason = pp.reason;
    r.results["phi"] = pp.conclusive ? json(pp.phi) : json(nullptr);
    r.results["psi"] = pp.conclusive ? json(pp.psi) : json(nullptr);
    r.results["ranks"] = pp.ranks;
    r.verdicts.push_back(verdict_json("phi_psi", pv));

    std::vector<std::string> fallback;
    std::vector<Representation> tests;
    for (const auto& m : corpus::test_modules(doc.alg))
        tests.push_back(m);
    json test_names = json::array();
    if (!o.tests.empty()) {
        tests.clear();
        for (const auto& [name, m] : module_list(doc, o.tests, {})) {
            tests.push_back(m);
            test_names.push_back(name);
        }
    } else {
        for (const auto& m : tests)
            test_names.push_back(classes_json(reg, m, seed));
    }
    r.inputs["tests"] = test_names;
    ITResult it = check_it_witness(v, n, tests, seed);
    json seqs = json::array();
    for (const auto& s : it.sequences)
        seqs.push_back({{"syzygy", module_json(reg, s.syzygy, seed)},
                        {"v0", module_json(reg, s.v0, seed)},
                        {"v1", module_json(reg, s.v1, seed)}});
    r.results["sequences"] = seqs;
    r.verdicts.push_back(verdict_json("it_witness", it.verdict));
    r.code = worst(exit_for(pv.verdict), exit_for(it.verdict.verdict));
}

void cmd_auslander(const Document& doc, const Options& o, Report& r)
{
    Representation m = need_module(doc, o, r);
    int imax = o.imax.value_or(10);
    if (imax < 1)
        throw InputError{"E_WINDOW", "--imax must be at least 1"};
    r.inputs["imax"] = imax;
    auto targets = module_list(doc, o.tests, default_targets(doc));
    std::vector<Representation> mods;
    std::vector<std::string> names;
    for (const auto& [name, n] : targets) {
        names.push_back(name);
        mods.push_back(n);
    }
    r.inputs["targets"] = names;
    AuslanderEstimate e = auslander_bound_estimate(m, mods, imax, names);
    json rows = json::array();
    for (const auto& row : e.rows)
        rows.push_back({{"target", row.target}, {"dims", row.dims}, {"qualifies", row.qualifies},
                        {"unstable", row.unstable}, {"last_nonzero", row.last_nonzero}});
    r.results["rows"] = rows;
    r.results["bound"] = e.bound ? json(*e.bound) : json(nullptr);
    r.windows = {{"imax", imax}, {"tail_from", imax / 2 + 1}};
    r.verdicts.push_back(verdict_json("auslander_bound", e.verdict));
    r.code = exit_for(e.verdict.verdict);
}

void cmd_garc(const Document& doc, const Options& o, Report& r)
{
    Representation m = need_module(doc, o, r);
    int n = o.level.value_or(1);
    int imax = o.imax.value_or(std::max(8, n + 2));
    if (n < 0 || imax < n + 2)
        throw InputError{"E_WINDOW", "need --level >= 0 and --imax >= level + 2"};
    r.inputs["level"] = n;
    r.inputs["imax"] = imax;
    GarcResult g = garc_check(m, n, imax);
    r.results["hypothesis"] = g.hypothesis;
    r.results["vacuous"] = g.vacuous;
    r.results["projective_dimension"] = g.pd ? json(*g.pd) : json(nullptr);
    r.results["condition_1"] = g.condition_module;
    r.results["condition_2"] = g.condition_syzygy;
    r.results["conditions_agree"] = g.conditions_agree;
    r.windows = {{"hypothesis_from", n + 1}, {"imax", imax}, {"tail_from", imax / 2 + 1}};
    json v = verdict_json("garc", g.verdict);
    if (g.vacuous)
        v["verdict"] = "vacuous-holds";
    r.verdicts.push_back(v);
    BoundedVerdict agree;
    agree.verdict = g.conditions_agree ? Verdict::HoldsUpToBound : Verdict::FailsWithCounterexample;
    agree.bounds = {{"tail_from", imax / 2 + 1}, {"imax", imax}};
    agree.witness = {{"condition_1", g.condition_module ? "true" : "false"},
                     {"condition_2", g.condition_syzygy ? "true" : "false"}};
    r.verdicts.push_back(verdict_json("conditions_agree", agree));
    r.code = worst(exit_for(g.verdict.verdict), exit_for(agree.verdict));
}

void cmd_tilting(const Document& doc, const Options& o, Report& r)
{
    if (o.module.empty())
        throw InputError{"E_USAGE", "--module is required"};
    r.inputs["module"] = o.module;
    int w = o.window.value_or(4);
    if (w < 0)
        throw InputError{"E_WINDOW", "--window must be nonnegative"};
    r.inputs["window"] = w;
    std::vector<BoundedComplex> summands;
    for (const auto& [name, m] : module_list(doc, o.module, {}))
        summands.push_back(BoundedComplex::concentrated(m));
    TiltingResult t = tilting_hom_check(summands, -w, w);
    json dims = json::array();
    for (const auto& [i, d] : t.dims)
        dims.push_back({{"degree", i}, {"dim", d}});
    r.results["dims"] = dims;
    r.results["end_dim"] = t.end_dim;
    r.windows = {{"i_lo", -w}, {"i_hi", w}};
    r.verdicts.push_back(verdict_json("tilting_hom", t.verdict));
    r.code = exit_for(t.verdict.verdict);
}

void flatten(const json& j, const std::string& prefix, std::ostream& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Syzygies of complexes over bound quiver algebras", "dersyz"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--algebra", o.algebra, "algebra JSON file")->required();
        s->add_option("--module", o.module, "module name, NAME+NAME, or inline dims");
        s->add_option("--level", o.level, "syzygy level n");
        s->add_option("--window", o.window, "resolution window");
        s->add_option("--imax", o.imax, "largest Hom degree");
        s->add_option("--nmax", o.nmax, "largest orbit level");
        s->add_option("--dimcap", o.dimcap, "dimension cap for decompositions");
        s->add_option("--seed", o.seed, "seed, overriding the document");
        s->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        s->add_option("--tests", o.tests, "comma-separated module list");
    };
    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (const char* name : {"resolve", "syzygy", "cosyzygy", "ext-table", "triangle", "verify-lemmas", "orbit",
                             "it", "auslander", "garc", "tilting-check"}) {
        CLI::App* s = app.add_subcommand(name);
        add_common(s);
        subs.push_back({name, s});
    }
    app.get_subcommand("triangle")->add_option("--from", o.from, "lower level m");
    app.get_subcommand("triangle")->add_flag("--dual", o.dual, "cosyzygy triangle");
    app.get_subcommand("verify-lemmas")->add_option("--mmax", o.mmax, "largest shift");
    app.get_subcommand("verify-lemmas")->add_option("--jmax", o.jmax, "largest |j|");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error E_USAGE: " << e.what() << '\n';
        return Usage;
    }
    std::string command;
    for (const auto& [name, s] : subs)
        if (s->parsed())
            command = name;

    Report r;
    std::uint64_t seed = 0;
    try {
        Document doc = load(o.algebra);
        seed = o.seed.value_or(doc.seed);
        r.inputs["algebra"] = o.algebra;
        if (command == "resolve")
            cmd_resolve(doc, o, r, seed);
        else if (command == "syzygy")
            cmd_syzygy(doc, o, r, seed, false);
        else if (command == "cosyzygy")
            cmd_syzygy(doc, o, r, seed, true);
        else if (command == "ext-table")
            cmd_ext_table(doc, o, r);
        else if (command == "triangle")
            cmd_triangle(doc, o, r);
        else if (command == "verify-lemmas")
            cmd_verify_lemmas(doc, o, r, seed);
        else if (command == "orbit")
            cmd_orbit(doc, o, r, seed);
        else if (command == "it")
            cmd_it(doc, o, r, seed);
        else if (command == "auslander")
            cmd_auslander(doc, o, r);
        else if (command == "garc")
            cmd_garc(doc, o, r);
        else
            cmd_tilting(doc, o, r);
    } catch (const InputError& e) {
        err << "error " << e.code << ": " << e.message << '\n';
        return e.code == "E_USAGE" ? Usage : DataError;
    } catch (const InconclusiveError& e) {
        err << "error E_INCONCLUSIVE: " << e.what() << '\n';
        return Inconclusive;
    } catch (const ArgumentError& e) {
        err << "error E_ARGUMENT: " << e.what() << '\n';
        return DataError;
    }

    json report = {{"command", command}, {"inputs", r.inputs}, {"results", r.results}, {"verdicts", r.verdicts},
                   {"windows", r.windows}, {"seed", seed}, {"version", kVersion}};
    if (o.format == "text") {
        out << "command: " << command << '\n';
        for (const auto& v : r.verdicts) {
            std::string name = v["name"].get<std::string>();
            out << "verdict " << name << ": " << v["verdict"].get<std::string>() << '\n';
            flatten(v["witness"], "witness." + name, out);
            if (!v["reason"].get<std::string>().empty())
                out << "reason." << name << ": " << v["reason"].get<std::string>() << '\n';
        }
        flatten(r.results, "results", out);
        flatten(r.windows, "windows", out);
        out << "seed: " << seed << '\n';
    } else {
        out << report.dump(2) << '\n';
    }
    return r.code;
}

}  // namespace dersyz::cli
