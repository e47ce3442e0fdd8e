#include <cmath>

#include "foxopt/engineering/constrained.hpp"

namespace foxopt::eng {

// Bulk carrier design, after Parsons & Scott (2004). Variables: length L,
// beam B, depth D, draft T, speed Vk (knots), block coefficient Cb.
// Minimizes the annual transportation cost per tonne of cargo under nine
// structural and hydrodynamic constraints.
namespace {

constexpr double kGravity = 9.8065;
constexpr double kRoundTripMiles = 5000.0;
constexpr double kHandlingRate = 8000.0; // tonnes/day
constexpr double kFuelPrice = 100.0;     // per tonne
constexpr double kDaysAtSeaPerYear = 350.0;

struct ShipModel {
    double displacement;
    double power;
    double deadweight;
    double cargo_dwt;
    double froude;
    double cost_per_tonne;
};

ShipModel evaluate_ship(const Vec& x) {
    const double l = x[0], b = x[1], d = x[2], t = x[3], vk = x[4], cb = x[5];

    ShipModel s{};
    s.displacement = 1.025 * l * b * t * cb;
    const double v = 0.5144 * vk; // m/s
    s.froude = v / std::sqrt(kGravity * l);

    const double a = 4977.06 * cb * cb - 8105.61 * cb + 4456.51;
    const double bb = -10847.2 * cb * cb + 12817.0 * cb - 6960.32;
    s.power = std::pow(s.displacement, 2.0 / 3.0) * std::pow(vk, 3) / (a + bb * s.froude);

    const double steel = 0.034 * std::pow(l, 1.7) * std::pow(b, 0.7) * std::pow(d, 0.4) *
                         std::pow(cb, 0.5);
    const double outfit = 1.0 * std::pow(l, 0.8) * std::pow(b, 0.6) * std::pow(d, 0.3) *
                          std::pow(cb, 0.1);
    const double machinery = 0.17 * std::pow(s.power, 0.9);
    const double light_ship = steel + outfit + machinery;
    s.deadweight = s.displacement - light_ship;

    const double daily_consumption = 0.19 * s.power * 24.0 / 1000.0 + 0.2;
    const double sea_days = kRoundTripMiles / (24.0 * vk);
    const double fuel_carried = daily_consumption * (sea_days + 5.0);
    const double miscellaneous = 2.0 * std::pow(s.deadweight, 0.5);
    s.cargo_dwt = s.deadweight - fuel_carried - miscellaneous;

    const double ship_cost = 1.3 * (2000.0 * std::pow(steel, 0.85) + 3500.0 * outfit +
                                    2400.0 * std::pow(s.power, 0.8));
    const double capital_charges = 0.2 * ship_cost;
    const double running_cost = 40000.0 * std::pow(s.deadweight, 0.3);

    const double port_days = 2.0 * (s.cargo_dwt / kHandlingRate + 0.5);
    const double round_trips = kDaysAtSeaPerYear / (sea_days + port_days);
    const double fuel_cost = 1.05 * daily_consumption * sea_days * kFuelPrice;
    const double port_cost = 6.3 * std::pow(s.deadweight, 0.8);
    const double voyage_cost = (fuel_cost + port_cost) * round_trips;

    const double annual_cargo = s.cargo_dwt * round_trips;
    s.cost_per_tonne = (capital_charges + running_cost + voyage_cost) / annual_cargo;
    return s;
}

} // namespace

ConstrainedProblem make_bcp() {
    ConstrainedProblem p;
    p.base.name = "bcp";
    p.base.dim = 6;
    p.base.lower = {150.0, 20.0, 13.0, 10.0, 14.0, 0.63};
    p.base.upper = {274.32, 32.31, 25.0, 11.71, 18.0, 0.75};
    p.base.objective = [](const Vec& x) { return evaluate_ship(x).cost_per_tonne; };
    p.constraints = {
        [](const Vec& x) { return 6.0 - x[0] / x[1]; },         // L/B >= 6
        [](const Vec& x) { return x[0] / x[2] - 15.0; },        // L/D <= 15
        [](const Vec& x) { return x[0] / x[3] - 19.0; },        // L/T <= 19
        [](const Vec& x) {                                      // T <= 0.45 DWT^0.31
            return x[3] - 0.45 * std::pow(evaluate_ship(x).deadweight, 0.31);
        },
        [](const Vec& x) { return x[3] - 0.7 * x[2] - 0.7; },   // T <= 0.7 D + 0.7
        [](const Vec& x) { return 3000.0 - evaluate_ship(x).deadweight; },
        [](const Vec& x) { return evaluate_ship(x).deadweight - 500000.0; },
        [](const Vec& x) { return evaluate_ship(x).froude - 0.32; },
        [](const Vec& x) {                                      // GM >= 0.07 B
            const double b = x[1], d = x[2], t = x[3], cb = x[5];
            const double kb = 0.53 * t;
            const double bm = (0.085 * cb - 0.002) * b * b / (t * cb);
            const double kg = 1.0 + 0.52 * d;
            return 0.07 * b - (kb + bm - kg);
        },
    };
    p.reference_feasible = {200.0, 32.0, 17.0, 11.0, 14.0, 0.68};
    return p;
}

} // namespace foxopt::eng
