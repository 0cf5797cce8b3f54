#include "matdec/latticepath.hpp"

#include <memory>

namespace matdec {

void validate(const LatticePathPresentation& L) {
    if (L.lower.size() != L.upper.size())
        throw std::domain_error("bounding paths differ in length");
    if (L.lower.empty()) throw std::domain_error("bounding paths are empty");
    for (char c : L.lower + L.upper)
        if (c != 'N' && c != 'E') throw std::domain_error("path characters must be N or E");
    int len = static_cast<int>(L.lower.size());
    if (ncount(L.lower, len) != ncount(L.upper, len))
        throw std::domain_error("bounding paths have different north counts");
    for (int i = 1; i <= len; ++i)
        if (ncount(L.lower, i) > ncount(L.upper, i))
            throw std::domain_error("lower path rises above upper path at prefix " +
                                    std::to_string(i));
}

int ncount(const std::string& path, int i) {
    int c = 0;
    for (int j = 0; j < i; ++j)
        if (path[static_cast<std::size_t>(j)] == 'N') ++c;
    return c;
}

MatroidOracle lattice_path_oracle(const LatticePathPresentation& L) {
    validate(L);
    int len = static_cast<int>(L.lower.size());
    auto np = std::make_shared<std::vector<int>>(len + 1, 0);
    auto nq = std::make_shared<std::vector<int>>(len + 1, 0);
    for (int i = 1; i <= len; ++i) {
        (*np)[i] = ncount(L.lower, i);
        (*nq)[i] = ncount(L.upper, i);
    }
    GroundSet g = iota_ground(len, 1);
    auto f = [np, nq, len](subset_t Y) {
        int h = 0;
        for (int i = 1; i <= len; ++i) {
            bool north = (Y >> (i - 1) & 1u) || h < (*np)[i];
            if (north) ++h;
            if (h > (*nq)[i]) return false;
        }
        return true;
    };
    return {g, f};
}

}  // namespace matdec
