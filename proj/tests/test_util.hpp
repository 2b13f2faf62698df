#ifndef OPL_TEST_UTIL_HPP
#define OPL_TEST_UTIL_HPP

#include <map>

#include "opl/operad.hpp"

namespace opl::testutil {

// Bilinear extension of basis composition.
inline SVec compose_vec(const Operad& op, int m, const SVec& a, int i, int n, const SVec& b) {
    std::map<int, Q> acc;
    for (auto& [x, cx] : a)
        for (auto& [y, cy] : b)
            for (auto& [r, w] : op.compose(m, x, i, n, y)) {
                Q& slot = acc[r];
                slot += cx * cy * w;
            }
    return svec_normalize(std::move(acc));
}

inline SVec act_vec(const Operad& op, int n, const SVec& v, const Perm& sigma) {
    std::map<int, Q> acc;
    for (auto& [x, cx] : v)
        for (auto& [r, w] : op.act(n, x, sigma)) {
            Q& slot = acc[r];
            slot += cx * w;
        }
    return svec_normalize(std::move(acc));
}

}  // namespace opl::testutil

#endif
