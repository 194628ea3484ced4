#pragma once

#include "hhv/interval.hpp"

namespace hhv {

// The six special means of an interval 0 < a < b. Always A > I > L > G > H
// strictly; each lies inside [a, b].
struct MeanSet {
    double A = 0.0;  // arithmetic (a+b)/2
    double G = 0.0;  // geometric sqrt(ab)
    double H = 0.0;  // harmonic 2ab/(a+b)
    double L = 0.0;  // logarithmic (b-a)/(ln b - ln a)
    double I = 0.0;  // identric (1/e)(b^b/a^a)^{1/(b-a)}
    bool has_Lp = false;
    double Lp = 0.0;
    double Lp_exponent = 0.0;
};

MeanSet mean_set(const Interval& iv);
MeanSet mean_set(const Interval& iv, double p);  // also fills Lp

// Generalized logarithmic mean ((b^{p+1}-a^{p+1})/((p+1)(b-a)))^{1/p}.
// p = 0 and p = -1 are outside the closed form; with limit_extension set they
// evaluate to the identric and logarithmic limits instead of throwing.
// Near-singular p goes through series forms to avoid cancellation. p = 1
// returns (a+b)/2 exactly.
double gen_log(const Interval& iv, double p, bool limit_extension = false);

}  // namespace hhv
