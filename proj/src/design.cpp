#include "rwnca/design.hpp"

namespace rwnca {

WeightRegime classify_weight_regime(const Rational& c1, const Rational& c2, int demand_count,
                                    int wavelength_count) {
    if (c1 <= Rational(0) || c2 <= Rational(0))
        throw Error("weight regime analysis requires positive weights");
    if (demand_count < 1 || wavelength_count < 1)
        throw Error("weight regime analysis requires nonempty demand and wavelength sets");
    Rational ratio = c1 / c2;
    if (ratio > Rational(demand_count)) return WeightRegime::o1_strict;
    if (ratio < Rational(1, wavelength_count)) return WeightRegime::o2_strict;
    return WeightRegime::indeterminate;
}

const char* to_string(WeightRegime r) {
    switch (r) {
        case WeightRegime::o1_strict: return "O1-strict";
        case WeightRegime::o2_strict: return "O2-strict";
        default: return "indeterminate";
    }
}

}  // namespace rwnca
