// Generated by tests/oracles/generate_oracles.py. Do not edit by hand.
#pragma once

#include <array>

namespace singh::oracle {

struct BetaCase { double x, a, b, expected; };
inline constexpr std::array<BetaCase, 16> kBetaCases{{
    {0.1, 1, 10, 0.65132155990000002151},
    {0.5, 0.5, 0.5, 0.5},
    {0.3, 2.5, 7.5, 0.67894348586618163054},
    {0.999, 50, 2, 0.99876590960688291533},
    {0.001, 0.5, 300, 0.56134573112990880281},
    {0.5, 10000, 10000, 0.5},
    {0.4995, 10000, 10000, 0.44376922624204514035},
    {0.3, 3000, 7000, 0.50116076913624899291},
    {0.305, 3000, 7000, 0.86226606804161721151},
    {0.9, 10000, 1000, 0.00061529556729750104745},
    {0.2, 0.1, 0.2, 0.59253465735547831337},
    {0.7, 0.001, 5, 0.99999934889129117676},
    {0.05, 20, 0.5, 1.2251567758630516163e-27},
    {0.62, 7, 4, 0.43359696714976476021},
    {0.999999, 0.5, 0.5, 0.9993633801215199223},
    {1e-09, 2, 3, 5.9999999920000007504e-18},
}};

struct StudentCase { double t, nu, expected; };
inline constexpr std::array<StudentCase, 10> kStudentCases{{
    {1.5, 3, 0.88470806737758847386},
    {-2.2, 7, 0.031865507651318396744},
    {0.3, 1, 0.59277357907774234032},
    {10, 2, 0.99507377148833715458},
    {-40, 4.5, 3.2247826064604990785e-7},
    {2.0, 200, 0.9765734069064645114},
    {1e-08, 5, 0.50000000379606689822},
    {0.7, 10000, 0.75802820590994177252},
    {-0.05, 2.5, 0.48192010785471624951},
    {3.1, 29, 0.99786090881322221443},
}};

inline constexpr double kJeffreysN10K0Theta01 = 0.85844690818711307;

// Max over the 1001-point alpha grid of alpha - S(alpha), Jeffreys, n = 10.
inline constexpr double kJeffreysDeficitTheta01 = 0.2066784401;
inline constexpr double kJeffreysDeficitTheta02 = 0.1488096384;
inline constexpr double kJeffreysDeficitTheta03 = 0.1296107184;
inline constexpr double kJeffreysDeficitTheta04 = 0.1241032576;
inline constexpr double kJeffreysDeficitTheta05 = 0.122046875;

// Exact Jeffreys Singh curve at theta0 = 0.3, n = 10.
inline constexpr double kJeffreysTheta03Alpha100 = 0.1502683326;
inline constexpr double kJeffreysTheta03Alpha250 = 0.3503892816;
inline constexpr double kJeffreysTheta03Alpha500 = 0.6172172136;
inline constexpr double kJeffreysTheta03Alpha750 = 0.8506916541;
inline constexpr double kJeffreysTheta03Alpha900 = 0.8506916541;

// Scaled c-box at theta0 = 0.4, n = 20.
inline constexpr double kCboxC05LowerDeficit = 0.053892937557535621;
inline constexpr double kCboxC05Area = 0.064623194229603251;
inline constexpr double kCboxC1LowerDeficit = -1.1479437019748901e-40;
inline constexpr double kCboxC1Area = 0.12804051743994508;
inline constexpr double kCboxC3LowerDeficit = -1.1479437019748901e-40;
inline constexpr double kCboxC3Area = 0.36229989736714327;

// Clopper-Pearson conservatism area at theta0 = 0.4.
inline constexpr double kClopperPearsonAreaN10 = 0.1799801022464;
inline constexpr double kClopperPearsonAreaN50 = 0.081266825358000409;
inline constexpr double kClopperPearsonAreaN250 = 0.036399116824465792;

// Chebyshev UCL over scaled Bernoulli (mean 2).
inline constexpr double kChebyshevP02N5At095 = 0.67232;
inline constexpr double kChebyshevP005N30DeficitAt095 = 0.16463876394293757;
inline constexpr double kChebyshevP05N30MaxDeficitTo095 = -0.0498375428840518;
inline constexpr double kChebyshevP05N5MaxDeficit = 0.03125;

}  // namespace singh::oracle
