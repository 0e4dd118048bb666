#include "routing/error.hpp"
#include "scheme_internal.hpp"

namespace routing {

std::vector<int> reconstruct_permutation(std::span<const RoutingResponder> fs, int k)
{
    if (int(fs.size()) != k)
        fail(Errc::invalid_argument, "need exactly the k bottom-row routing functions");
    std::vector<int> result;
    for (int i = 0; i < k; ++i) {
        // group the labels k+1..3k by the middle-row edge they leave over;
        // each edge carries one middle label and the label of its top node
        std::vector<int> top_label(k + 1, 0); // by middle position offset 1..k
        std::vector<int> edge_of(k + 1, 0);   // middle label -> middle position
        for (int mid = k + 1; mid <= 2 * k; ++mid) {
            int via = fs[i](mid);
            if (via < k + 1 || via > 2 * k)
                fail(Errc::inconsistent_function,
                     "middle label " + std::to_string(mid) + " not reached over a middle edge");
            edge_of[mid - k] = via;
        }
        for (int top = 2 * k + 1; top <= 3 * k; ++top) {
            int via = fs[i](top);
            if (via < k + 1 || via > 2 * k)
                fail(Errc::inconsistent_function,
                     "top label " + std::to_string(top) + " not reached over a middle edge");
            // find the middle position whose direct edge this is
            int pos = 0;
            for (int p = 1; p <= k; ++p) {
                if (edge_of[p] == via) {
                    pos = p;
                    break;
                }
            }
            if (pos == 0 || top_label[pos] != 0)
                fail(Errc::inconsistent_function,
                     "grouping for label " + std::to_string(top) + " is not a bijection");
            top_label[pos] = top;
        }
        std::vector<int> perm(top_label.begin() + 1, top_label.end());
        if (i == 0)
            result = perm;
        else if (perm != result)
            fail(Errc::inconsistent_function,
                 "bottom nodes " + std::to_string(1) + " and " + std::to_string(i + 1) +
                     " imply different permutations");
    }
    return result;
}

std::vector<int> reconstruct_permutation(const RoutingScheme& s, const LabeledGraph& gk, int k)
{
    if (gk.node_count() != 3 * k)
        fail(Errc::invalid_argument, "graph is not a gk gadget for this k");
    std::vector<RoutingResponder> fs;
    fs.reserve(k);
    for (int u = 1; u <= k; ++u) {
        fs.push_back([&s, &gk, u](int dst) {
            EvalResult r = evaluate(s, gk, u, DestRef{dst, nullptr}, Header{});
            if (r.action.kind != ActionKind::forward_neighbor)
                fail(Errc::inconsistent_function, "expected a neighbor forward");
            return r.action.target;
        });
    }
    return reconstruct_permutation(fs, k);
}

} // namespace routing
