// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance <path-to-dersyz-binary> <data-dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "dersyz/corpus.hpp"
#include "dersyz/decompose.hpp"
#include "dersyz/finiteness.hpp"
#include "dersyz/lemmas.hpp"
#include "oracles.hpp"

using namespace dersyz;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::vector<DerivedObject> corpus_objects(const AlgebraPtr& alg)
{
    return lemma_objects(corpus::test_modules(alg));
}

/// Checks of exactly these families, with the failures listed.
Outcome families(const LemmaReport& r, const std::vector<std::string>& names, std::size_t min_checks = 1)
{
    std::size_t total = 0, failed = 0;
    std::string first;
    for (const auto& c : r.checks) {
        if (std::find(names.begin(), names.end(), c.family) == names.end())
            continue;
        ++total;
        if (!c.passed) {
            ++failed;
            if (first.empty())
                first = c.family + " " + c.input + " " + c.detail;
        }
    }
    std::ostringstream os;
    os << total << " checks, " << failed << " failed";
    if (!first.empty())
        os << "; first: " << first;
    return {failed == 0 && total >= min_checks, os.str()};
}

LemmaReport over_corpus(const std::function<LemmaReport(const std::vector<DerivedObject>&, const LemmaOptions&)>& f,
                        const LemmaOptions& opt)
{
    LemmaReport all;
    for (const auto& alg : corpus::algebras())
        all.append(f(corpus_objects(alg), opt));
    return all;
}

Outcome criterion_classical_syzygy()
{
    std::size_t checked = 0, failed = 0;
    for (const auto& alg : corpus::algebras())
        for (const auto& m : corpus::test_modules(alg))
            for (int n = 1; n <= 4; ++n) {
                SyzygyResult s = syzygy(DerivedObject::module(m), n);
                Representation expect = strip_projectives(oracle::kernel_syzygy(m, n));
                ++checked;
                if (!s.reduced_module || !is_isomorphic(*s.reduced_module, expect).isomorphic)
                    ++failed;
            }
    return {failed == 0, std::to_string(checked) + " modules x levels, " + std::to_string(failed) + " mismatches"};
}

Outcome criterion_lemma_items()
{
    LemmaOptions opt;
    opt.n_max = 4;
    LemmaReport r = over_corpus(check_syzygy_items, opt);
    return families(r, {"syzygy.nonnegative", "syzygy.projective-hom", "syzygy.window", "syzygy.module-at-top",
                        "syzygy.recovers-object", "syzygy.shift", "syzygy.iterate", "syzygy.projective-summand",
                        "syzygy.sum", "syzygy.perfect"});
}

Outcome criterion_resolution_independence()
{
    LemmaOptions opt;
    opt.n_max = 4;
    return families(over_corpus(check_resolution_independence, opt), {"resolution.padded"});
}

Outcome criterion_dimension_shift()
{
    LemmaOptions opt;
    opt.m_max = 3;
    opt.j_max = 4;
    return families(over_corpus(check_dimension_shift, opt), {"shift.syzygy"});
}

Outcome criterion_triangles()
{
    LemmaOptions opt;
    LemmaReport r = over_corpus(check_triangles, opt);
    std::size_t count = 0;
    for (const auto& alg : corpus::algebras())
        count += projective_middle_triangles(alg, corpus::test_modules(alg), opt.seed).size();
    Outcome o = families(r, {"triangle.syzygy", "triangle.witness", "triangle.syzygy-shift", "triangle.of-syzygies"});
    o.detail += "; " + std::to_string(count) + " projective-middle triangles";
    o.passed = o.passed && count >= 20;
    return o;
}

Outcome criterion_auslander_shift_identity()
{
    return families(over_corpus(check_syzygy_cosyzygy_shift, LemmaOptions{}), {"shift.syzygy-cosyzygy"});
}

Outcome criterion_dual_suite()
{
    LemmaOptions opt;
    opt.n_max = 4;
    LemmaReport r = over_corpus(check_cosyzygy_items, opt);
    r.append(over_corpus(check_resolution_independence, opt));
    r.append(over_corpus(check_dimension_shift, opt));
    r.append(over_corpus(check_triangles, opt));
    return families(r, {"cosyzygy.nonpositive", "cosyzygy.injective-hom", "cosyzygy.window",
                        "cosyzygy.module-at-bottom", "cosyzygy.shift", "cosyzygy.iterate",
                        "cosyzygy.injective-summand", "cosyzygy.sum", "cosyzygy.perfect", "cosyzygy.duality",
                        "resolution.padded-cosyzygy", "shift.cosyzygy", "triangle.cosyzygy",
                        "triangle.cosyzygy-shift"});
}

Outcome criterion_orbit_verdicts()
{
    using Names = std::vector<std::string>;
    struct Case {
        AlgebraPtr alg;
        std::vector<Names> levels;  // the last entry repeats
    };
    std::vector<Case> cases{{corpus::dual_numbers(), {{"S"}}},
                            {corpus::a2(), {{"S1"}, {}}},
                            {corpus::a3_rad2(), {{"S1", "S2"}, {"S2"}, {}}}};
    std::string bad;
    for (const auto& c : cases) {
        SyzygyFiniteResult r = detect_syzygy_finite(c.alg, 0, 6, 12);
        if (r.verdict.verdict != Verdict::HoldsUpToBound)
            bad += " verdict:" + c.alg->fingerprint().substr(0, 12);
        for (int n = 0; n <= 6; ++n) {
            const Names& expect = c.levels[std::min<std::size_t>(n, c.levels.size() - 1)];
            if (r.orbit.level_names(n) != expect)
                bad += " level" + std::to_string(n);
        }
    }
    return {bad.empty(), bad.empty() ? "3 algebras, levels 0..6 match" : "mismatch:" + bad};
}

Outcome criterion_igusa_todorov()
{
    auto a = corpus::dual_numbers();
    auto c = corpus::a3_rad2();
    Representation s = simple(a, 0), t = direct_sum(simple(c, 0), simple(c, 1));
    PhiPsi ps = phi_psi(s, 8), pt = phi_psi(t, 8);
    auto os = oracle::phi_psi_oracle(s), ot = oracle::phi_psi_oracle(t);
    bool ok = ps.conclusive && pt.conclusive && std::pair{ps.phi, ps.psi} == std::pair{0, 0} &&
              std::pair{pt.phi, pt.psi} == std::pair{2, 2} && os == std::pair{0, 0} && ot == std::pair{2, 2};
    std::ostringstream d;
    d << "S/ALG-A (" << ps.phi << "," << ps.psi << ") oracle (" << os.first << "," << os.second << "); "
      << "S1+S2/ALG-C (" << pt.phi << "," << pt.psi << ") oracle (" << ot.first << "," << ot.second << ")";
    return {ok, d.str()};
}

Outcome criterion_garc_and_tilting()
{
    std::size_t instances = 0, disagree = 0;
    bool tilting_r = true;
    for (const auto& alg : corpus::algebras()) {
        for (const auto& m : corpus::test_modules(alg))
            for (int n = 0; n <= 2; ++n)
                for (int i_max : {6, 8}) {
                    ++instances;
                    if (!garc_check(m, n, i_max).conditions_agree)
                        ++disagree;
                }
        TiltingResult t = tilting_hom_check({BoundedComplex::concentrated(regular(alg))}, -4, 4);
        tilting_r = tilting_r && t.verdict.verdict == Verdict::HoldsUpToBound;
    }
    TiltingResult s = tilting_hom_check({BoundedComplex::concentrated(simple(corpus::dual_numbers(), 0))}, -4, 4);
    bool s_fails = s.verdict.verdict == Verdict::FailsWithCounterexample && !s.verdict.witness.empty() &&
                   s.verdict.witness[0].second == "1";
    std::ostringstream d;
    d << instances << " garc instances, " << disagree << " disagreements; tilting R "
      << (tilting_r ? "holds" : "fails") << "; tilting S fails at i=" << (s_fails ? "1" : "?");
    return {disagree == 0 && tilting_r && s_fails, d.str()};
}

std::pair<int, std::string> capture(const std::string& cmd)
{
    std::string out;
    std::array<char, 4096> buf;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return {-1, ""};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome determinism(const std::string& binary, const std::string& data)
{
    std::string cmd = "'" + binary + "' verify-lemmas --algebra '" + data + "/alg-c.json' --nmax 3 --seed 17";
    auto [c1, o1] = capture(cmd);
    auto [c2, o2] = capture(cmd);
    bool ok = c1 == 0 && c2 == 0 && !o1.empty() && o1 == o2;
    return {ok, std::to_string(o1.size()) + " bytes, exit " + std::to_string(c1) + "/" + std::to_string(c2) +
                    (o1 == o2 ? ", identical" : ", differ")};
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 3) {
        std::cerr << "usage: acceptance <dersyz-binary> <data-dir>\n";
        return 64;
    }
    std::string binary = argv[1], data = argv[2];
    struct Criterion {
        int id;
        const char* title;
        double limit_s;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{
        {1, "classical syzygy oracle", 10, criterion_classical_syzygy},
        {2, "syzygy window, shift, iteration, summand, perfectness, sum items", 60, criterion_lemma_items},
        {3, "minimal vs padded resolutions", 30, criterion_resolution_independence},
        {4, "dimension shifting", 60, criterion_dimension_shift},
        {5, "syzygy triangles and projective-middle shifts", 60, criterion_triangles},
        {6, "Hom(M,N[j]) = Hom(syz_k M, cosyz_c N[j-k+c]) for j > k-c", 30, criterion_auslander_shift_identity},
        {7, "dual suite via opposite-algebra duality", 60, criterion_dual_suite},
        {8, "orbit verdicts", 30, criterion_orbit_verdicts},
        {9, "Igusa-Todorov values", 10, criterion_igusa_todorov},
        {10, "windowed GARC agreement and tilting checks", 10, criterion_garc_and_tilting},
        {11, "byte-identical verify-lemmas reports", 60, [&] { return determinism(binary, data); }},
    };
    int failures = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.limit_s;
        bool ok = o.passed && in_time;
        failures += !ok;
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  ("
             << o.detail << "; " << secs << "s of " << c.limit_s << "s" << (in_time ? "" : ", over time") << ")";
        std::cout << line.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
