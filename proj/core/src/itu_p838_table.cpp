// Built-in copy of the P.838-3 coefficient grid (see core/data/itu_p838.csv).
// Generated from the recommendation's curve-fit constants; do not edit by hand.

#include "eband/rain.hpp"

namespace eband::detail {

const ItuCoefficientRow kItuP838Table[] = {
    {1, 2.589271e-05, 3.079736e-05, 0.969074, 0.859221},
    {1.5, 4.425041e-05, 5.736410e-05, 1.018532, 0.895712},
    {2, 8.468688e-05, 9.976606e-05, 1.066419, 0.948961},
    {2.5, 1.320532e-04, 1.464327e-04, 1.120914, 1.008452},
    {3, 1.389790e-04, 1.942318e-04, 1.232160, 1.068759},
    {3.5, 1.154933e-04, 2.345735e-04, 1.418910, 1.138665},
    {4, 1.071345e-04, 2.460772e-04, 1.600882, 1.247549},
    {4.5, 1.339564e-04, 2.347375e-04, 1.694757, 1.398674},
    {5, 2.161503e-04, 2.427637e-04, 1.696927, 1.531732},
    {5.5, 3.909390e-04, 3.115163e-04, 1.649941, 1.588223},
    {6, 7.055867e-04, 4.878245e-04, 1.590046, 1.572756},
    {6.5, 1.202482e-03, 8.369532e-04, 1.532789, 1.525442},
    {7, 1.914988e-03, 1.424771e-03, 1.481028, 1.474490},
    {7.5, 2.874815e-03, 2.291079e-03, 1.433858, 1.426539},
    {8, 4.115430e-03, 3.449825e-03, 1.390512, 1.379736},
    {8.5, 5.664889e-03, 4.910478e-03, 1.350956, 1.333468},
    {9, 7.534644e-03, 6.690808e-03, 1.315460, 1.289510},
    {9.5, 9.712990e-03, 8.812782e-03, 1.284198, 1.249917},
    {10, 1.216699e-02, 1.129187e-02, 1.257097, 1.215645},
    {11, 1.771880e-02, 1.730734e-02, 1.214008, 1.161706},
    {12, 2.385779e-02, 2.454833e-02, 1.182473, 1.121594},
    {13, 3.041288e-02, 3.265603e-02, 1.158639, 1.090080},
    {14, 3.737501e-02, 4.125832e-02, 1.139556, 1.064626},
    {15, 4.481464e-02, 5.008245e-02, 1.123275, 1.043992},
    {16, 5.281737e-02, 5.899189e-02, 1.108621, 1.027290},
    {17, 6.145594e-02, 6.796898e-02, 1.094925, 1.013711},
    {18, 7.078407e-02, 7.707612e-02, 1.081827, 1.002505},
    {19, 8.083851e-02, 8.641763e-02, 1.069142, 0.993012},
    {20, 9.164267e-02, 9.611121e-02, 1.056781, 0.984690},
    {21, 1.032095e-01, 1.062702e-01, 1.044706, 0.977110},
    {22, 1.155435e-01, 1.169938e-01, 1.032903, 0.969954},
    {23, 1.286420e-01, 1.283632e-01, 1.021370, 0.962997},
    {24, 1.424958e-01, 1.404403e-01, 1.010110, 0.956086},
    {25, 1.570902e-01, 1.532685e-01, 0.999128, 0.949132},
    {26, 1.724048e-01, 1.668741e-01, 0.988427, 0.942085},
    {27, 1.884149e-01, 1.812676e-01, 0.978010, 0.934929},
    {28, 2.050913e-01, 1.964463e-01, 0.967876, 0.927669},
    {29, 2.224010e-01, 2.123955e-01, 0.958026, 0.920325},
    {30, 2.403082e-01, 2.290903e-01, 0.948457, 0.912923},
    {31, 2.587740e-01, 2.464976e-01, 0.939168, 0.905495},
    {32, 2.777577e-01, 2.645773e-01, 0.930153, 0.898073},
    {33, 2.972169e-01, 2.832838e-01, 0.921410, 0.890688},
    {34, 3.171081e-01, 3.025676e-01, 0.912931, 0.883369},
    {35, 3.373870e-01, 3.223760e-01, 0.904713, 0.876142},
    {36, 3.580093e-01, 3.426550e-01, 0.896749, 0.869029},
    {37, 3.789308e-01, 3.633492e-01, 0.889032, 0.862050},
    {38, 4.001077e-01, 3.844035e-01, 0.881557, 0.855219},
    {39, 4.214971e-01, 4.057633e-01, 0.874318, 0.848550},
    {40, 4.430572e-01, 4.273753e-01, 0.867306, 0.842053},
    {41, 4.647475e-01, 4.491881e-01, 0.860517, 0.835733},
    {42, 4.865288e-01, 4.711520e-01, 0.853943, 0.829597},
    {43, 5.083637e-01, 4.932200e-01, 0.847578, 0.823647},
    {44, 5.302168e-01, 5.153476e-01, 0.841416, 0.817883},
    {45, 5.520541e-01, 5.374928e-01, 0.835450, 0.812306},
    {46, 5.738438e-01, 5.596167e-01, 0.829674, 0.806914},
    {47, 5.955560e-01, 5.816829e-01, 0.824082, 0.801705},
    {48, 6.171627e-01, 6.036580e-01, 0.818669, 0.796675},
    {49, 6.386380e-01, 6.255113e-01, 0.813427, 0.791820},
    {50, 6.599578e-01, 6.472147e-01, 0.808352, 0.787136},
    {51, 6.811001e-01, 6.687428e-01, 0.803438, 0.782618},
    {52, 7.020446e-01, 6.900724e-01, 0.798680, 0.778261},
    {53, 7.227727e-01, 7.111829e-01, 0.794073, 0.774059},
    {54, 7.432679e-01, 7.320560e-01, 0.789611, 0.770008},
    {55, 7.635151e-01, 7.526751e-01, 0.785290, 0.766103},
    {56, 7.835009e-01, 7.730260e-01, 0.781104, 0.762336},
    {57, 8.032133e-01, 7.930960e-01, 0.777050, 0.758705},
    {58, 8.226420e-01, 8.128743e-01, 0.773123, 0.755202},
    {59, 8.417778e-01, 8.323516e-01, 0.769318, 0.751824},
    {60, 8.606130e-01, 8.515201e-01, 0.765632, 0.748565},
    {61, 8.791410e-01, 8.703733e-01, 0.762060, 0.745420},
    {62, 8.973562e-01, 8.889060e-01, 0.758599, 0.742384},
    {63, 9.152544e-01, 9.071141e-01, 0.755245, 0.739454},
    {64, 9.328319e-01, 9.249946e-01, 0.751994, 0.736624},
    {65, 9.500864e-01, 9.425453e-01, 0.748842, 0.733891},
    {66, 9.670160e-01, 9.597649e-01, 0.745787, 0.731250},
    {67, 9.836199e-01, 9.766530e-01, 0.742824, 0.728697},
    {68, 9.998978e-01, 9.932099e-01, 0.739952, 0.726229},
    {69, 1.015850e+00, 1.009436e+00, 0.737167, 0.723843},
    {70, 1.031478e+00, 1.025334e+00, 0.734465, 0.721534},
    {71, 1.046783e+00, 1.040904e+00, 0.731845, 0.719300},
    {72, 1.061766e+00, 1.056150e+00, 0.729303, 0.717137},
    {73, 1.076431e+00, 1.071074e+00, 0.726837, 0.715042},
    {74, 1.090781e+00, 1.085679e+00, 0.724444, 0.713014},
    {75, 1.104818e+00, 1.099969e+00, 0.722122, 0.711048},
    {76, 1.118545e+00, 1.113948e+00, 0.719868, 0.709142},
    {77, 1.131968e+00, 1.127619e+00, 0.717681, 0.707295},
    {78, 1.145089e+00, 1.140987e+00, 0.715558, 0.705503},
    {79, 1.157913e+00, 1.154056e+00, 0.713496, 0.703764},
    {80, 1.170445e+00, 1.166831e+00, 0.711495, 0.702076},
    {81, 1.182689e+00, 1.179316e+00, 0.709551, 0.700438},
    {82, 1.194649e+00, 1.191517e+00, 0.707663, 0.698847},
    {83, 1.206330e+00, 1.203437e+00, 0.705830, 0.697301},
    {84, 1.217738e+00, 1.215083e+00, 0.704048, 0.695799},
    {85, 1.228877e+00, 1.226458e+00, 0.702318, 0.694339},
    {86, 1.239752e+00, 1.237568e+00, 0.700636, 0.692919},
    {87, 1.250368e+00, 1.248418e+00, 0.699002, 0.691538},
    {88, 1.260731e+00, 1.259013e+00, 0.697414, 0.690194},
    {89, 1.270844e+00, 1.269358e+00, 0.695871, 0.688887},
    {90, 1.280715e+00, 1.279457e+00, 0.694370, 0.687614},
    {91, 1.290346e+00, 1.289317e+00, 0.692911, 0.686375},
    {92, 1.299745e+00, 1.298941e+00, 0.691493, 0.685167},
    {93, 1.308914e+00, 1.308335e+00, 0.690113, 0.683991},
    {94, 1.317860e+00, 1.317504e+00, 0.688771, 0.682845},
    {95, 1.326587e+00, 1.326452e+00, 0.687466, 0.681727},
    {96, 1.335100e+00, 1.335184e+00, 0.686196, 0.680638},
    {97, 1.343404e+00, 1.343705e+00, 0.684961, 0.679575},
    {98, 1.351504e+00, 1.352020e+00, 0.683759, 0.678539},
    {99, 1.359404e+00, 1.360132e+00, 0.682589, 0.677528},
    {100, 1.367108e+00, 1.368047e+00, 0.681450, 0.676541},
};

const std::size_t kItuP838TableSize = sizeof(kItuP838Table) / sizeof(kItuP838Table[0]);

}  // namespace eband::detail
