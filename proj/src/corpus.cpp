#include "dersyz/corpus.hpp"

namespace dersyz::corpus {

QuiverSpec dual_numbers_spec()
{
    QuiverSpec s;
    s.field = PrimeField(2);
    s.vertices = {"v"};
    s.arrows = {{"a", 0, 0}};
    s.relations = {{{1, {0, 0}}}};
    s.nilpotency_bound = 2;
    return s;
}

QuiverSpec a2_spec()
{
    QuiverSpec s;
    s.field = PrimeField(2);
    s.vertices = {"1", "2"};
    s.arrows = {{"alpha", 0, 1}};
    s.nilpotency_bound = 2;
    return s;
}

QuiverSpec a3_rad2_spec()
{
    QuiverSpec s;
    s.field = PrimeField(2);
    s.vertices = {"1", "2", "3"};
    s.arrows = {{"alpha", 0, 1}, {"beta", 1, 2}};
    // traversal order: alpha first, then beta
    s.relations = {{{1, {0, 1}}}};
    s.nilpotency_bound = 2;
    return s;
}

AlgebraPtr dual_numbers()
{
    return build_algebra(dual_numbers_spec());
}

AlgebraPtr a2()
{
    return build_algebra(a2_spec());
}

AlgebraPtr a3_rad2()
{
    return build_algebra(a3_rad2_spec());
}

std::vector<AlgebraPtr> algebras()
{
    return {dual_numbers(), a2(), a3_rad2()};
}

std::vector<Representation> test_modules(const AlgebraPtr& alg)
{
    std::vector<Representation> out;
    for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
        out.push_back(simple(alg, v));
        out.push_back(projective(alg, v));
        out.push_back(injective(alg, v));
    }
    out.push_back(regular(alg));
    out.push_back(direct_sum(simple(alg, 0), injective(alg, alg->num_vertices() - 1)));
    return out;
}

}  // namespace dersyz::corpus
