#pragma once

#include "rwnca/rational.hpp"
#include "rwnca/topology.hpp"

namespace rwnca {

// One of the five benchmark design variants, or a custom weighted variant.
//
//   1  no coding, working and protection share one wavelength
//   2  no coding, wavelengths free per path
//   3  coding,    shared wavelength
//   4  coding,    free wavelengths, single objective (wavelength count)
//   5  coding,    free wavelengths, secondary objective (client-side count)
struct DesignSpec {
    int design_id = 0;
    bool coding_enabled = false;
    bool force_same_wavelength = false;
    bool secondary_objective = false;
    Rational c1 = 1;  // weight on the wavelength count
    Rational c2 = 0;  // weight on the client-side connection count

    static DesignSpec standard(int id, int demand_count) {
        switch (id) {
            case 1: return {1, false, true, false, 1, 0};
            case 2: return {2, false, false, false, 1, 0};
            case 3: return {3, true, true, false, 1, 0};
            case 4: return {4, true, false, false, 1, 0};
            case 5: return {5, true, false, true, 1, Rational(1, 1 + demand_count)};
        }
        throw Error("design id must be 1..5, got " + std::to_string(id));
    }

    // Custom bi-objective variant for weight experiments.
    static DesignSpec weighted(bool coding, Rational c1, Rational c2) {
        return {5, coding, false, true, c1, c2};
    }
};

enum class WeightRegime { o1_strict, o2_strict, indeterminate };

// Classifies which objective a weight pair strictly prioritizes:
// the wavelength count dominates when c1/c2 > |D|, the client-side count
// dominates when c1/c2 < 1/|W|, and nothing is guaranteed in between.
WeightRegime classify_weight_regime(const Rational& c1, const Rational& c2, int demand_count,
                                    int wavelength_count);

const char* to_string(WeightRegime r);

}  // namespace rwnca
