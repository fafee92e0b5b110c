#include "tbvp/core.hpp"

#include "tbvp/errors.hpp"

namespace tbvp {

double full_norm(const GridFunction& v, const ShiftSequence& ts, int p) {
    if (p != 1 && p != 2) throw UnsupportedNorm(p);
    if (!ts.same_grid(v)) throw GridError("full_norm: input grid differs from the shift grid");
    const Vector w = simpson_weights(v.size(), v.spacing());
    double total = 0.0;
    for (int i = 0; i < ts.K(); ++i) {
        const Vector d = (ts[i].values() - v.values()).cwiseAbs();
        total += p == 1 ? w.dot(d) : w.dot(d.cwiseAbs2());
    }
    return total;
}

double full_norm(const GridFunction& v, const ProblemSpec& spec, int p) {
    return full_norm(v, shift_sequence(spec, v.size()), p);
}

GridFunction f_profile(const GridFunction& v, const ProblemSpec& spec) {
    Vector out(v.size());
    for (int i = 0; i < v.size(); ++i) out[i] = 0.5 * (spec.f0().d1(v.node(i)) - v[i]);
    return v.with_values(std::move(out));
}

}  // namespace tbvp
