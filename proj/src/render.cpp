#include "brauer/verify.hpp"

#include <json.hpp>

#include <sstream>

namespace brauer {

std::string render_csv(const ExtGrid& g)
{
    std::ostringstream os;
    os << "i,j,ell,dim\n";
    for (int i = 1; i <= g.simple_count; ++i)
        for (int j = 1; j <= g.simple_count; ++j)
            for (int n = 0; n <= g.n_max; ++n)
                os << i << ',' << j << ',' << n << ',' << g.at(i, j, n) << '\n';
    return os.str();
}

std::string render_json(const ExtGrid& g)
{
    nlohmann::ordered_json out;
    out["period"] = g.period;
    auto dims = nlohmann::ordered_json::array();
    for (int i = 1; i <= g.simple_count; ++i)
        for (int j = 1; j <= g.simple_count; ++j)
            for (int n = 0; n <= g.n_max; ++n)
                dims.push_back({i, j, n, g.at(i, j, n)});
    out["dims"] = std::move(dims);
    out["provenance"] = to_string(g.provenance);
    return out.dump() + "\n";
}

}  // namespace brauer
