#pragma once

#include <cstdint>
#include <vector>

#include "sumcard/arith.hpp"
#include "sumcard/error.hpp"
#include "sumcard/geometry.hpp"

namespace sumcard {

// Signed integer dependency among the dim+2 lifted points and the Radon
// split it induces: x1/x2 hold the indices with positive/negative entries,
// r is the positive-part sum (= dim! times the hull volume).
struct RadonData {
    std::vector<Int> lambda;
    std::vector<int> x1;
    std::vector<int> x2;
    std::vector<int> zero_set;
    Int r = 0;
};

struct InstanceD2 {
    PointSet base;
    Int generation_index = 0;  // index of the lattice generated by A - A; must be 1
    RadonData radon;
};

inline RadonData affine_dependency(const PointSet& a) {
    RadonData out;
    out.lambda = lifted_kernel_dependency(a.points, a.dim);
    for (int i = 0; i < static_cast<int>(out.lambda.size()); ++i) {
        if (out.lambda[i] > 0) {
            out.x1.push_back(i);
            out.r += out.lambda[i];
        } else if (out.lambda[i] < 0) {
            out.x2.push_back(i);
        } else {
            out.zero_set.push_back(i);
        }
    }
    if (out.r <= 0) raise(ErrorKind::Internal, "dependency has empty positive part");
    return out;
}

inline InstanceD2 make_instance_d2(const PointSet& a) {
    if (static_cast<int>(a.points.size()) != a.dim + 2)
        raise(ErrorKind::Argument, "instance requires exactly dim+2 points");
    auto index = difference_lattice_index(a);
    if (!index) raise(ErrorKind::Degenerate, "points do not affinely span the space");
    if (*index != 1)
        raise(ErrorKind::Hypothesis,
              "differences generate a proper sublattice (index " + index->str() + ", need 1)");
    InstanceD2 inst;
    inst.base = a;
    inst.generation_index = *index;
    inst.radon = affine_dependency(a);
    return inst;
}

// |hA| = C(h+d+1, d+1) - C(h-r+d+1, d+1), the second term vanishing for
// h < r under the zero convention, so both branches are one expression.
inline Int card_d2(const InstanceD2& inst, std::int64_t h) {
    if (h < 0) raise(ErrorKind::Argument, "h must be nonnegative");
    const std::int64_t d = inst.base.dim;
    const Int r = inst.radon.r;
    Int first = binomial(h + d + 1, d + 1);
    if (r > h) return first;
    std::int64_t r64 = r.convert_to<std::int64_t>();
    return first - binomial(h - r64 + d + 1, d + 1);
}

// The point where the hulls of the two Radon parts meet:
// sum_{i in x1} (lambda_i / r) v_i, verified to equal the x2-side value.
inline RationalVector radon_common_point(const InstanceD2& inst) {
    const int d = inst.base.dim;
    RationalVector p1(d, Rational(0)), p2(d, Rational(0));
    for (int i : inst.radon.x1)
        for (int c = 0; c < d; ++c)
            p1[c] += make_rational(inst.radon.lambda[i] * inst.base.points[i][c], inst.radon.r);
    for (int i : inst.radon.x2)
        for (int c = 0; c < d; ++c)
            p2[c] += make_rational(-inst.radon.lambda[i] * inst.base.points[i][c], inst.radon.r);
    if (p1 != p2) raise(ErrorKind::Internal, "Radon part hulls fail to meet at the common point");
    return p1;
}

}  // namespace sumcard
