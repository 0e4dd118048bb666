#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "routing/error.hpp"
#include "routing/rng.hpp"
#include "routing/scheme.hpp"

using namespace routing;

namespace {

// relabel only the top row of gk(k) positions 2k+1..3k with the given labels
LabeledGraph relabeled_gk(int k, const std::vector<int>& top_labels)
{
    LabeledGraph g = build_gk(k);
    std::vector<int> perm(3 * k + 1);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < k; ++i)
        perm[2 * k + 1 + i] = top_labels[i];
    return relabel_nodes(g, perm);
}

std::vector<int> recovered(int k, const std::vector<int>& top_labels)
{
    LabeledGraph g = relabeled_gk(k, top_labels);
    RoutingScheme s = build_canonical_sp(g);
    return reconstruct_permutation(s, g, k);
}

} // namespace

TEST_CASE("identity labeling reconstructs to the identity")
{
    CHECK(recovered(1, {3}) == std::vector<int>{3});
    CHECK(recovered(2, {5, 6}) == std::vector<int>{5, 6});
}

TEST_CASE("a swap of the two top labels is recovered")
{
    CHECK(recovered(2, {6, 5}) == std::vector<int>{6, 5});
}

TEST_CASE("all top labelings of gk(3) are recovered")
{
    std::vector<int> labels{7, 8, 9};
    do {
        CHECK(recovered(3, labels) == labels);
    } while (std::next_permutation(labels.begin(), labels.end()));
}

TEST_CASE("random labelings at k=32, from every bottom function")
{
    int k = 32;
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> labels(k);
        std::iota(labels.begin(), labels.end(), 2 * k + 1);
        for (int i = k; i > 1; --i)
            std::swap(labels[i - 1], labels[bounded_random(rng, std::uint64_t(i))]);
        LabeledGraph g = relabeled_gk(k, labels);
        RoutingScheme s = build_canonical_sp(g);
        CHECK(reconstruct_permutation(s, g, k) == labels);

        // each single function suffices on its own
        for (int u : {1, k / 2, k}) {
            RoutingResponder f = [&](int dst) {
                return evaluate(s, g, u, DestRef{dst, nullptr}, Header{}).action.target;
            };
            std::vector<RoutingResponder> one{f};
            // reconstruct with k copies of the same responder
            std::vector<RoutingResponder> copies(k, f);
            CHECK(reconstruct_permutation(copies, k) == labels);
        }
    }
}

TEST_CASE("functions from different labelings are flagged as inconsistent")
{
    int k = 2;
    LabeledGraph ga = relabeled_gk(k, {5, 6});
    LabeledGraph gb = relabeled_gk(k, {6, 5});
    RoutingScheme sa = build_canonical_sp(ga);
    RoutingScheme sb = build_canonical_sp(gb);
    std::vector<RoutingResponder> fs;
    fs.push_back([&](int dst) {
        return evaluate(sa, ga, 1, DestRef{dst, nullptr}, Header{}).action.target;
    });
    fs.push_back([&](int dst) {
        return evaluate(sb, gb, 2, DestRef{dst, nullptr}, Header{}).action.target;
    });
    CHECK_THROWS_AS((void)reconstruct_permutation(fs, k), Error);
    CHECK_THROWS_AS((void)reconstruct_permutation(std::span<const RoutingResponder>{fs.data(), 1}, 2),
                    Error);
}
