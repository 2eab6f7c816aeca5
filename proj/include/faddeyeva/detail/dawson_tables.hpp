// Generated by calibration/fit_dawson.py -- do not edit by hand.
#pragma once

namespace faddeyeva::detail {

inline constexpr double kDawsonCheb0[27] = {
    0.3866277394929603,
    -0.14481842149518295,
    -0.05334272370729779,
    0.04533934359410623,
    -0.010588711111138151,
    -0.0010443977190245021,
    0.0010988113429891953,
    -0.00016720095852083074,
    -3.4565276778822075e-05,
    1.49187209879197e-05,
    -5.921239982092414e-07,
    -5.834390801146448e-07,
    9.872346109612787e-08,
    1.0518847481405962e-08,
    -4.634714690324833e-09,
    1.2548176126832043e-10,
    1.3154692744546942e-10,
    -1.5484533855332904e-11,
    -2.3141266988518257e-12,
    5.907726199653911e-13,
    1.244686090880655e-14,
    -1.4894975929941566e-14,
    7.505251864342499e-16,
    2.7263807496207934e-16,
    -3.287290279739838e-17,
    -3.4302139909729716e-18,
    8.307190182845324e-19,
};

inline constexpr double kDawsonCheb1[24] = {
    0.1637060220709064,
    -0.04941270090110314,
    0.008169038200493582,
    -0.0014733023199302818,
    0.0002728832365682749,
    -4.538487027583875e-05,
    5.026387301281041e-06,
    2.399667306749534e-07,
    -2.98864270058597e-07,
    8.360492112331167e-08,
    -1.304634217779081e-08,
    6.543305751637492e-10,
    2.378776889065948e-10,
    -7.135764773038134e-11,
    8.561463321658227e-12,
    9.399246479961602e-14,
    -2.1573397844312532e-13,
    3.51300625487429e-14,
    -1.2550416211723257e-15,
    -4.977803561734721e-16,
    9.68118196777281e-17,
    -4.68085646536124e-18,
    -1.0284071862434683e-18,
    2.0869639163482725e-19,
};

inline constexpr double kDawsonCheb2[20] = {
    0.10119367783775397,
    -0.018179828251409846,
    0.0016729224541944742,
    -0.0001580598258289358,
    1.5377552861851042e-05,
    -1.5466137238398087e-06,
    1.61705560650406e-07,
    -1.771220379933838e-08,
    2.0507817751610582e-09,
    -2.523264891268774e-10,
    3.2723134151328994e-11,
    -4.335544942014869e-12,
    5.534027445283188e-13,
    -6.162077694573837e-14,
    4.6473114476944695e-15,
    1.4170595594133996e-16,
    -1.4180794710292675e-16,
    3.289587101832e-17,
    -5.0495098765617015e-18,
    5.23759368498938e-19,
};

struct DawsonChebInterval {
    double lo;
    double hi;
    const double* coeffs;
    int count;
};

inline constexpr DawsonChebInterval kDawsonChebIntervals[3] = {
    {0.5, 2.5, kDawsonCheb0, 27},
    {2.5, 4.25, kDawsonCheb1, 24},
    {4.25, 6.0, kDawsonCheb2, 20},
};

}  // namespace faddeyeva::detail
