#include "brauer/pim.hpp"

#include "brauer/errors.hpp"

#include <algorithm>
#include <sstream>

namespace brauer {

namespace {

Arm walk_arm(const BrauerTree& tree, std::size_t w, int i)
{
    Arm arm{w, {}};
    const int len = tree.walk_length(w) - 1;
    for (int k = 1; k <= len; ++k)
        arm.word.push_back(tree.step(w, i, k));
    return arm;
}

}  // namespace

std::string PimSpec::to_string() const
{
    std::ostringstream os;
    auto word = [&](const std::vector<int>& w) {
        for (std::size_t k = 0; k < w.size(); ++k)
            os << (k ? "," : "") << w[k];
    };
    os << "[" << edge << " | ";
    word(arm_u.word);
    if (!arm_u.word.empty() && !arm_v.word.empty())
        os << " (+) ";
    word(arm_v.word);
    os << " | " << edge << "]";
    return os.str();
}

PimSpec pim(const BrauerTree& tree, int i)
{
    if (i < 1 || i > tree.edge_count())
        throw ParameterError("simple index " + std::to_string(i) + " out of range 1.." +
                             std::to_string(tree.edge_count()));
    auto [u, v] = tree.endpoints(i);
    return PimSpec{i, walk_arm(tree, u, i), walk_arm(tree, v, i)};
}

int cartan_entry(const BrauerTree& tree, int i, int j)
{
    PimSpec p = pim(tree, i);
    if (j < 1 || j > tree.edge_count())
        throw ParameterError("simple index " + std::to_string(j) + " out of range");
    int n = (i == j) ? 2 : 0;
    n += static_cast<int>(std::count(p.arm_u.word.begin(), p.arm_u.word.end(), j));
    n += static_cast<int>(std::count(p.arm_v.word.begin(), p.arm_v.word.end(), j));
    return n;
}

std::vector<std::vector<int>> cartan_matrix(const BrauerTree& tree)
{
    const int e = tree.edge_count();
    std::vector<std::vector<int>> c(static_cast<std::size_t>(e), std::vector<int>(static_cast<std::size_t>(e), 0));
    for (int i = 1; i <= e; ++i)
        for (int j = 1; j <= e; ++j)
            c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = cartan_entry(tree, i, j);
    return c;
}

}  // namespace brauer
