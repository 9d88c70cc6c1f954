#pragma once

#include <string>
#include <vector>

#include "uavmoe/errors.hpp"

namespace uavmoe {

// Van Aerde single-regime fundamental diagram. Units follow the traffic
// convention: km/h, veh/km, veh/h.
struct VanAerdeParams {
    double u_f = 0.0;  // free speed, km/h
    double u_c = 0.0;  // speed at capacity, km/h
    double q_c = 0.0;  // capacity, veh/h
    double k_j = 0.0;  // jam density, veh/km

    // 0 < u_c < u_f, q_c > 0, k_j > q_c / u_c.
    bool valid() const;
};

struct HeadwayConstants {
    double c1 = 0.0;  // fixed distance headway, km
    double c2 = 0.0;  // first variable headway constant, km^2/h
    double c3 = 0.0;  // second variable headway constant, h
    double m = 0.0;   // intermediate constant, h/km
};

// Solves the three headway constants from the macroscopic parameters.
// Throws DataError on u_c == u_f (pole) or infeasible parameters.
HeadwayConstants calibrate_constants(const VanAerdeParams& p);

// Distance headway h(u) = c1 + c3 u + c2/(u_f - u), km/veh, strictly
// increasing on [0, u_f). Throws DataError for u >= u_f.
double headway(double u_kmh, const HeadwayConstants& c, double u_f_kmh);

struct FdSample {
    double u = 0.0;  // km/h
    double k = 0.0;  // veh/km, = 1/h(u)
    double q = 0.0;  // veh/h, = k*u
};

// n samples with u spanning (0, u_f) exclusive; the sampled peak flow
// approaches q_c as n grows.
std::vector<FdSample> fd_curve(const VanAerdeParams& p, int n);

struct Observation {
    double u = 0.0;  // km/h
    double k = 0.0;  // veh/km
};

struct FdFit {
    VanAerdeParams params;
    double residual = 0.0;      // sum of squared density errors
    bool coverage_ok = false;   // both regimes represented in the data
    std::string note;
};

// Least squares over a bounded grid with iterative refinement. Requires at
// least min_samples observations; raises the coverage diagnostic when the
// data covers only one side of the capacity point.
FdFit fit_from_observations(const std::vector<Observation>& samples, int min_samples = 8);

}  // namespace uavmoe
