#pragma once

// Frozen expected values for the closed-form bound evaluators, produced by
// direct long-double evaluation of each printed formula (n^r and a^depth
// formed explicitly, factorial family sizes through lgamma). The unit and
// acceptance suites require the module output to match these to 1e-12
// relative error.

#include <cstdint>

namespace umtlab_test {

struct KgCase {
  std::uint64_t m, n, r;
  double p, alpha, delta;
  double expected;
};
inline constexpr KgCase kKgCases[] = {
    {1000000, 10, 9, 0.5, 1.0, 0.01, 171.42642088873123},
    {100, 10, 9, 0.5, 0.33, 0.01, 1574.1636445246209},
    {1000, 10, 9, 0.5, 0.66, 0.05, 370.18637216216511},
    {10, 5, 4, 0.5, 1.0, 0.1, 337.02707878267207},
    {50, 8, 5, 0.3, 0.5, 0.02, 1121.5927855407286},
    {200, 12, 7, 0.7, 0.8, 0.01, 770.69245881866344},
    {1, 6, 3, 0.4, 0.25, 0.5, 6210.5165886199826},
    {1000000000, 20, 10, 0.5, 0.9, 0.001, 244.34939248987718},
    {123456, 15, 9, 0.6, 0.4, 0.25, 1417.2070802606909},
    {77, 10, 1, 0.5, 1.0, 0.1, 3275.2279834706669},
};

struct CnCase {
  std::uint64_t m, t;
  double theta, alpha, delta;
  bool proof_form;
  double expected;
};
inline constexpr CnCase kCnCases[] = {
    {100, 100000, 1e5, 0.5, 0.01, false, 2.149182614422365},
    {1, 100000, 1e5, 0.1, 0.01, false, 1074.5913072111824},
    {10000000, 100000, 1e5, 0.5, 0.01, false, 0.03438692183075784},
    {50, 1000, 1024.0, 0.25, 0.1, false, 5.2923918565543458},
    {100, 16, 2.0, 0.5, 0.5, false, 38.136645964175347},
    {12, 345, 678.0, 0.33, 0.05, false, 17.131271258670365},
    {1000, 1000000, 1000.0, 0.01, 0.001, false, 9.3643620163153973},
    {8, 64, 256.0, 0.125, 0.2, true, 61.346570236400351},
    {500, 2000, 4096.0, 0.45, 0.02, true, 1.3596653228000528},
    {3, 7, 9.0, 0.4, 0.3, false, 178.04423488766435},
};

struct CnLowerCase {
  std::uint64_t m, t;
  double theta, alpha;
  double expected;  // at the default c2
};
inline constexpr CnLowerCase kCnLowerCases[] = {
    {10000, 10000, 1024.0, 0.5, 7.8125e-16},
    {20000, 10000, 1024.0, 0.5, 7.8125e-16},
    {100, 100000, 32.0, 0.5, 3.90625e-14},
    {1000, 500, 128.0, 0.3, 1.8229166666666667e-14},
    {64, 64, 16.0, 0.25, 9.765625e-14},
    {1000000, 1000000, 1048576.0, 0.5, 1.5625e-17},
    {40, 400, 1024.0, 0.5, 1.953125e-13},
    {80, 400, 1024.0, 0.5, 9.765625e-14},
    {256, 1024, 65536.0, 0.5, 4.8828125e-14},
    {5000, 777, 512.0, 0.4, 1.1311534749034748e-14},
};

struct RtCase {
  std::uint64_t m, a, depth;
  double ln_theta, delta;
  double expected;
};
inline constexpr RtCase kRtCases[] = {
    {100, 2, 8, 11.512925464970228, 0.01, 4.4774637800465937},
    {1000000, 3, 8, 11.512925464970228, 0.01, 0.17470366219965371},
    {10, 1, 4, 4.6051701859880914, 0.1, 556.76894388545229},
    {1000, 2, 10, 10.60460290274525, 0.05, 0.96200591534545601},
    {7, 4, 5, 13.815510557964274, 0.25, 38.842432887570788},
    {10000, 3, 6, 6.579251212010101, 0.02, 1.0783458929309236},
    {50, 2, 12, 20.723265836946411, 0.001, 9.415289787250113},
    {123, 5, 4, 10.308952660644292, 0.5, 1.6642418615196478},
    {100000000, 2, 16, 16.11809565095832, 0.01, 0.021987329400561002},
    // ln(100000!) via lgamma; the module's log_factorial must agree too.
    {1000000, 3, 8, 1051299.2218991219, 0.01, 10255.076909776213},
};

struct GammaCase {
  std::uint64_t m;
  double theta, delta;
  double expected;
};
inline constexpr GammaCase kGammaCases[] = {
    {100, 5040.0, 0.1, 0.1082774645405946},
    {200, 5040.0, 0.1, 0.0541387322702973},
    {1, 1.0, 1.0, 0.0},
    {20, 120.0, 0.1, 0.35450384178880458},
    {1000, 1e6, 0.05, 0.016811242831518265},
    {7, 42.0, 0.5, 0.63297382840618766},
    {1000000, 4294967296.0, 0.001, 2.9088465056900387e-05},
    {3, 10.0, 0.9, 0.80264853621729065},
    {50, 3628800.0, 0.01, 0.39419165518127213},
    {12345, 98765.0, 0.123, 0.0011013422028004715},
};

struct OccamCase {
  std::uint64_t m;
  double theta, delta;
  bool realizable;
  double loss_star;
  double expected;
};
inline constexpr OccamCase kOccamCases[] = {
    {1000, 1e6, 0.05, true, 0.0, 0.016811242831518265},
    {1000, 1e6, 0.05, false, 0.0, 0.1296581768787386},
    {1000, 1e6, 0.05, false, 0.25, 0.3796581768787386},
    {10, 1024.0, 0.1, true, 0.0, 0.92340568985934987},
    {10, 1024.0, 0.1, false, 0.5, 1.460940003256889},
    {1000000, 2.0, 0.5, true, 0.0, 1.3862943611198906e-06},
    {123, 456.0, 0.01, false, 0.1, 0.39532485896239476},
    {55, 3125.0, 0.2, true, 0.0, 0.17557504499281095},
    {100000, 1e9, 0.001, false, 0.01, 0.026622581362691099},
    {42, 7.0, 0.35, true, 0.0, 0.071326958894142644},
};

}  // namespace umtlab_test
