#pragma once

// Machine-generated coefficient table: the degree-8 polynomial in the
// squared dominant coordinate satisfied by every unit five-coordinate
// state, expressed through the invariant values m[0..6] (m[0] must be 1).
// Regenerate with the companion notes script rather than editing by hand.

#include <array>
#include <cstdint>

namespace trivec::detail {

struct DsqTerm {
    std::int32_t coef;
    std::uint8_t e[6];  // exponents of m1..m6
};

inline constexpr DsqTerm kDsqC0[13] = {
    {64,{0,0,0,0,2,2}}, {-1,{0,0,0,0,5,0}}, {-8,{0,0,0,1,4,0}},
    {-16,{0,0,0,2,3,0}}, {-16,{0,1,0,0,3,1}}, {-64,{0,1,0,1,2,1}},
    {3,{0,2,0,0,4,0}}, {16,{0,2,0,1,3,0}}, {16,{0,2,0,2,2,0}},
    {16,{0,3,0,0,2,1}}, {-3,{0,4,0,0,3,0}}, {-8,{0,4,0,1,2,0}},
    {1,{0,6,0,0,2,0}}
};

inline constexpr DsqTerm kDsqC1[27] = {
    {128,{0,0,1,0,1,2}}, {-5,{0,0,1,0,4,0}}, {-32,{0,0,1,1,3,0}},
    {-48,{0,0,1,2,2,0}}, {-48,{0,1,1,0,2,1}}, {-128,{0,1,1,1,1,1}},
    {12,{0,2,1,0,3,0}}, {48,{0,2,1,1,2,0}}, {32,{0,2,1,2,1,0}},
    {32,{0,3,1,0,1,1}}, {-9,{0,4,1,0,2,0}}, {-16,{0,4,1,1,1,0}},
    {2,{0,6,1,0,1,0}}, {36,{1,0,0,0,3,1}}, {48,{1,0,0,1,2,1}},
    {-64,{1,1,0,0,1,2}}, {1,{1,1,0,0,4,0}}, {4,{1,1,0,1,3,0}},
    {12,{1,2,0,0,2,1}}, {64,{1,2,0,1,1,1}}, {-3,{1,3,0,0,3,0}},
    {-12,{1,3,0,1,2,0}}, {-16,{1,3,0,2,1,0}}, {-16,{1,4,0,0,1,1}},
    {3,{1,5,0,0,2,0}}, {8,{1,5,0,1,1,0}}, {-1,{1,7,0,0,1,0}}
};

inline constexpr DsqTerm kDsqC2[73] = {
    {36864,{0,0,0,0,0,3}}, {-1224,{0,0,0,0,3,1}}, {-6336,{0,0,0,1,2,1}},
    {-10368,{0,0,0,2,1,1}}, {1024,{0,0,2,0,0,2}}, {-160,{0,0,2,0,3,0}},
    {-768,{0,0,2,1,2,0}}, {-768,{0,0,2,2,1,0}}, {-9216,{0,1,0,0,1,2}},
    {-27,{0,1,0,0,4,0}}, {-55296,{0,1,0,1,0,2}}, {252,{0,1,0,1,3,0}},
    {2736,{0,1,0,2,2,0}}, {5184,{0,1,0,3,1,0}}, {-768,{0,1,2,0,1,1}},
    {-1024,{0,1,2,1,0,1}}, {1872,{0,2,0,0,2,1}}, {14400,{0,2,0,1,1,1}},
    {27648,{0,2,0,2,0,1}}, {288,{0,2,2,0,2,0}}, {768,{0,2,2,1,1,0}},
    {256,{0,2,2,2,0,0}}, {13824,{0,3,0,0,0,2}}, {-27,{0,3,0,0,3,0}},
    {-1512,{0,3,0,1,2,0}}, {-6192,{0,3,0,2,1,0}}, {-4608,{0,3,0,3,0,0}},
    {256,{0,3,2,0,0,1}}, {-2952,{0,4,0,0,1,1}}, {-13824,{0,4,0,1,0,1}},
    {-144,{0,4,2,0,1,0}}, {-128,{0,4,2,1,0,0}}, {207,{0,5,0,0,2,0}},
    {2124,{0,5,0,1,1,0}}, {3456,{0,5,0,2,0,0}}, {1728,{0,6,0,0,0,1}},
    {16,{0,6,2,0,0,0}}, {-225,{0,7,0,0,1,0}}, {-864,{0,7,0,1,0,0}},
    {72,{0,9,0,0,0,0}}, {1728,{1,0,1,0,2,1}}, {1536,{1,0,1,1,1,1}},
    {-1024,{1,1,1,0,0,2}}, {64,{1,1,1,0,3,0}}, {192,{1,1,1,1,2,0}},
    {384,{1,2,1,0,1,1}}, {1024,{1,2,1,1,0,1}}, {-144,{1,3,1,0,2,0}},
    {-384,{1,3,1,1,1,0}}, {-256,{1,3,1,2,0,0}}, {-256,{1,4,1,0,0,1}},
    {96,{1,5,1,0,1,0}}, {128,{1,5,1,1,0,0}}, {-16,{1,7,1,0,0,0}},
    {1152,{2,0,0,0,1,2}}, {-18,{2,0,0,0,4,0}}, {-288,{2,0,0,1,3,0}},
    {-288,{2,0,0,2,2,0}}, {-1440,{2,1,0,0,2,1}}, {-1920,{2,1,0,1,1,1}},
    {256,{2,2,0,0,0,2}}, {98,{2,2,0,0,3,0}}, {528,{2,2,0,1,2,0}},
    {480,{2,2,0,2,1,0}}, {288,{2,3,0,0,1,1}}, {-256,{2,3,0,1,0,1}},
    {-90,{2,4,0,0,2,0}}, {-144,{2,4,0,1,1,0}}, {64,{2,4,0,2,0,0}},
    {64,{2,5,0,0,0,1}}, {6,{2,6,0,0,1,0}}, {-32,{2,6,0,1,0,0}},
    {4,{2,8,0,0,0,0}}
};

inline constexpr DsqTerm kDsqC3[82] = {
    {-14688,{0,0,1,0,2,1}}, {-50688,{0,0,1,1,1,1}}, {-41472,{0,0,1,2,0,1}},
    {-640,{0,0,3,0,2,0}}, {-2048,{0,0,3,1,1,0}}, {-1024,{0,0,3,2,0,0}},
    {-36864,{0,1,1,0,0,2}}, {-432,{0,1,1,0,3,0}}, {3024,{0,1,1,1,2,0}},
    {21888,{0,1,1,2,1,0}}, {20736,{0,1,1,3,0,0}}, {-1024,{0,1,3,0,0,1}},
    {14976,{0,2,1,0,1,1}}, {57600,{0,2,1,1,0,1}}, {768,{0,2,3,0,1,0}},
    {1024,{0,2,3,1,0,0}}, {-324,{0,3,1,0,2,0}}, {-12096,{0,3,1,1,1,0}},
    {-24768,{0,3,1,2,0,0}}, {-11808,{0,4,1,0,0,1}}, {-192,{0,4,3,0,0,0}},
    {1656,{0,5,1,0,1,0}}, {8496,{0,5,1,1,0,0}}, {-900,{0,7,1,0,0,0}},
    {82944,{1,0,0,0,1,2}}, {243,{1,0,0,0,4,0}}, {165888,{1,0,0,1,0,2}},
    {1404,{1,0,0,1,3,0}}, {-5616,{1,0,0,2,2,0}}, {-15552,{1,0,0,3,1,0}},
    {6912,{1,0,2,0,1,1}}, {3072,{1,0,2,1,0,1}}, {11664,{1,1,0,0,2,1}},
    {-54144,{1,1,0,1,1,1}}, {-145152,{1,1,0,2,0,1}}, {384,{1,1,2,0,2,0}},
    {768,{1,1,2,1,1,0}}, {-23040,{1,2,0,0,0,2}}, {-567,{1,2,0,0,3,0}},
    {864,{1,2,0,1,2,0}}, {19728,{1,2,0,2,1,0}}, {31104,{1,2,0,3,0,0}},
    {768,{1,2,2,0,0,1}}, {12384,{1,3,0,0,1,1}}, {54144,{1,3,0,1,0,1}},
    {-576,{1,3,2,0,1,0}}, {-768,{1,3,2,1,0,0}}, {-81,{1,4,0,0,2,0}},
    {-6372,{1,4,0,1,1,0}}, {-18720,{1,4,0,2,0,0}}, {-4464,{1,5,0,0,0,1}},
    {192,{1,5,2,0,0,0}}, {603,{1,6,0,0,1,0}}, {3528,{1,6,0,1,0,0}},
    {-198,{1,8,0,0,0,0}}, {4608,{2,0,1,0,0,2}}, {-288,{2,0,1,0,3,0}},
    {-3456,{2,0,1,1,2,0}}, {-2304,{2,0,1,2,1,0}}, {-11520,{2,1,1,0,1,1}},
    {-7680,{2,1,1,1,0,1}}, {1176,{2,2,1,0,2,0}}, {4224,{2,2,1,1,1,0}},
    {1920,{2,2,1,2,0,0}}, {1152,{2,3,1,0,0,1}}, {-720,{2,4,1,0,1,0}},
    {-576,{2,4,1,1,0,0}}, {24,{2,6,1,0,0,0}}, {4320,{3,0,0,0,2,1}},
    {3456,{3,0,0,1,1,1}}, {-2304,{3,1,0,0,0,2}}, {36,{3,1,0,0,3,0}},
    {-576,{3,1,0,2,1,0}}, {3168,{3,2,0,0,1,1}}, {3072,{3,2,0,1,0,1}},
    {-172,{3,3,0,0,2,0}}, {-1184,{3,3,0,1,1,0}}, {-832,{3,3,0,2,0,0}},
    {-640,{3,4,0,0,0,1}}, {300,{3,5,0,0,1,0}}, {352,{3,5,0,1,0,0}},
    {-36,{3,7,0,0,0,0}}
};

inline constexpr DsqTerm kDsqC4[99] = {
    {-1492992,{0,0,0,0,1,2}}, {-2187,{0,0,0,0,4,0}}, {-3981312,{0,0,0,1,0,2}},
    {-11664,{0,0,0,1,3,0}}, {-2592,{0,0,0,2,2,0}}, {-186624,{0,0,0,3,1,0}},
    {-559872,{0,0,0,4,0,0}}, {-235008,{0,0,2,0,1,1}}, {-405504,{0,0,2,1,0,1}},
    {-5120,{0,0,4,0,1,0}}, {-8192,{0,0,4,1,0,0}}, {-155520,{0,1,0,0,2,1}},
    {663552,{0,1,0,1,1,1}}, {2488320,{0,1,0,2,0,1}}, {-10368,{0,1,2,0,2,0}},
    {48384,{0,1,2,1,1,0}}, {175104,{0,1,2,2,0,0}}, {331776,{0,2,0,0,0,2}},
    {4860,{0,2,0,0,3,0}}, {53136,{0,2,0,1,2,0}}, {212544,{0,2,0,2,1,0}},
    {311040,{0,2,0,3,0,0}}, {119808,{0,2,2,0,0,1}}, {3072,{0,2,4,0,0,0}},
    {-82944,{0,3,0,0,1,1}}, {-580608,{0,3,0,1,0,1}}, {-5184,{0,3,2,0,1,0}},
    {-96768,{0,3,2,1,0,0}}, {-11826,{0,4,0,0,2,0}}, {-112752,{0,4,0,1,1,0}},
    {-189216,{0,4,0,2,0,0}}, {-10368,{0,5,0,0,0,1}}, {13248,{0,5,2,0,0,0}},
    {17820,{0,6,0,0,1,0}}, {71280,{0,6,0,1,0,0}}, {-8667,{0,8,0,0,0,0}},
    {1327104,{1,0,1,0,0,2}}, {15552,{1,0,1,0,3,0}}, {67392,{1,0,1,1,2,0}},
    {-179712,{1,0,1,2,1,0}}, {-248832,{1,0,1,3,0,0}}, {36864,{1,0,3,0,0,1}},
    {373248,{1,1,1,0,1,1}}, {-866304,{1,1,1,1,0,1}}, {4096,{1,1,3,0,1,0}},
    {4096,{1,1,3,1,0,0}}, {-27216,{1,2,1,0,2,0}}, {27648,{1,2,1,1,1,0}},
    {315648,{1,2,1,2,0,0}}, {198144,{1,3,1,0,0,1}}, {-3072,{1,3,3,0,0,0}},
    {-2592,{1,4,1,0,1,0}}, {-101952,{1,4,1,1,0,0}}, {9648,{1,6,1,0,0,0}},
    {-209952,{2,0,0,0,2,1}}, {-20736,{2,0,0,1,1,1}}, {622080,{2,0,0,2,0,1}},
    {-6912,{2,0,2,0,2,0}}, {-55296,{2,0,2,1,1,0}}, {-18432,{2,0,2,2,0,0}},
    {-1492992,{2,1,0,0,0,2}}, {-324,{2,1,0,0,3,0}}, {16848,{2,1,0,1,2,0}},
    {219456,{2,1,0,2,1,0}}, {-186624,{2,1,0,3,0,0}}, {-92160,{2,1,2,0,0,1}},
    {-112320,{2,2,0,0,1,1}}, {1052928,{2,2,0,1,0,1}}, {18816,{2,2,2,0,1,0}},
    {33792,{2,2,2,1,0,0}}, {2268,{2,3,0,0,2,0}}, {-95904,{2,3,0,1,1,0}},
    {-175680,{2,3,0,2,0,0}}, {-297504,{2,4,0,0,0,1}}, {-5760,{2,4,2,0,0,0}},
    {11988,{2,5,0,0,1,0}}, {120528,{2,5,0,1,0,0}}, {-16236,{2,7,0,0,0,0}},
    {138240,{3,0,1,0,1,1}}, {55296,{3,0,1,1,0,1}}, {1728,{3,1,1,0,2,0}},
    {-9216,{3,1,1,2,0,0}}, {50688,{3,2,1,0,0,1}}, {-5504,{3,3,1,0,1,0}},
    {-18944,{3,3,1,1,0,0}}, {4800,{3,5,1,0,0,0}}, {20736,{4,0,0,0,0,2}},
    {-324,{4,0,0,0,3,0}}, {-12960,{4,0,0,1,2,0}}, {-5184,{4,0,0,2,1,0}},
    {-95040,{4,1,0,0,1,1}}, {-48384,{4,1,0,1,0,1}}, {4428,{4,2,0,0,2,0}},
    {29376,{4,2,0,1,1,0}}, {14400,{4,2,0,2,0,0}}, {-1728,{4,3,0,0,0,1}},
    {-5708,{4,4,0,0,1,0}}, {-1568,{4,4,0,1,0,0}}, {-444,{4,6,0,0,0,0}}
};

inline constexpr DsqTerm kDsqC5[87] = {
    {-1492992,{0,0,1,0,0,2}}, {-8748,{0,0,1,0,3,0}}, {-34992,{0,0,1,1,2,0}},
    {-5184,{0,0,1,2,1,0}}, {-186624,{0,0,1,3,0,0}}, {-78336,{0,0,3,0,0,1}},
    {-1024,{0,0,5,0,0,0}}, {-311040,{0,1,1,0,1,1}}, {663552,{0,1,1,1,0,1}},
    {-6912,{0,1,3,0,1,0}}, {16128,{0,1,3,1,0,0}}, {14580,{0,2,1,0,2,0}},
    {106272,{0,2,1,1,1,0}}, {212544,{0,2,1,2,0,0}}, {-82944,{0,3,1,0,0,1}},
    {-1728,{0,3,3,0,0,0}}, {-23652,{0,4,1,0,1,0}}, {-112752,{0,4,1,1,0,0}},
    {17820,{0,6,1,0,0,0}}, {349920,{1,0,0,0,2,1}}, {746496,{1,0,0,1,1,1}},
    {373248,{1,0,0,2,0,1}}, {23328,{1,0,2,0,2,0}}, {67392,{1,0,2,1,1,0}},
    {-89856,{1,0,2,2,0,0}}, {5225472,{1,1,0,0,0,2}}, {-97200,{1,1,0,1,2,0}},
    {-611712,{1,1,0,2,1,0}}, {186624,{1,1,0,3,0,0}}, {186624,{1,1,2,0,0,1}},
    {1024,{1,1,4,0,0,0}}, {-279936,{1,2,0,0,1,1}}, {-4375296,{1,2,0,1,0,1}},
    {-27216,{1,2,2,0,1,0}}, {13824,{1,2,2,1,0,0}}, {19440,{1,3,0,0,2,0}},
    {386208,{1,3,0,1,1,0}}, {632448,{1,3,0,2,0,0}}, {1029024,{1,4,0,0,0,1}},
    {-1296,{1,4,2,0,0,0}}, {-59616,{1,5,0,0,1,0}}, {-330480,{1,5,0,1,0,0}},
    {40176,{1,7,0,0,0,0}}, {-419904,{2,0,1,0,1,1}}, {-20736,{2,0,1,1,0,1}},
    {-4608,{2,0,3,0,1,0}}, {-18432,{2,0,3,1,0,0}}, {-972,{2,1,1,0,2,0}},
    {33696,{2,1,1,1,1,0}}, {219456,{2,1,1,2,0,0}}, {-112320,{2,2,1,0,0,1}},
    {6272,{2,2,3,0,0,0}}, {4536,{2,3,1,0,1,0}}, {-95904,{2,3,1,1,0,0}},
    {11988,{2,5,1,0,0,0}}, {1119744,{3,0,0,0,0,2}}, {243,{3,0,0,0,3,0}},
    {39852,{3,0,0,1,2,0}}, {-159408,{3,0,0,2,1,0}}, {-15552,{3,0,0,3,0,0}},
    {69120,{3,0,2,0,0,1}}, {248832,{3,1,0,0,1,1}}, {-1451520,{3,1,0,1,0,1}},
    {1728,{3,1,2,0,1,0}}, {-13365,{3,2,0,0,2,0}}, {18792,{3,2,0,1,1,0}},
    {375408,{3,2,0,2,0,0}}, {384768,{3,3,0,0,0,1}}, {-2752,{3,3,2,0,0,0}},
    {2241,{3,4,0,0,1,0}}, {-185940,{3,4,0,1,0,0}}, {22977,{3,6,0,0,0,0}},
    {-972,{4,0,1,0,2,0}}, {-25920,{4,0,1,1,1,0}}, {-5184,{4,0,1,2,0,0}},
    {-95040,{4,1,1,0,0,1}}, {8856,{4,2,1,0,1,0}}, {29376,{4,2,1,1,0,0}},
    {-5708,{4,4,1,0,0,0}}, {42768,{5,0,0,0,1,1}}, {15552,{5,0,0,1,0,1}},
    {-6480,{5,1,0,1,1,0}}, {-5184,{5,1,0,2,0,0}}, {26352,{5,2,0,0,0,1}},
    {576,{5,3,0,0,1,0}}, {-8496,{5,3,0,1,0,0}}, {2240,{5,5,0,0,0,0}}
};

inline constexpr DsqTerm kDsqC6[80] = {
    {-17496,{0,0,0,0,2,1}}, {-46656,{0,0,0,1,1,1}}, {-31104,{0,0,0,2,0,1}},
    {-1458,{0,0,2,0,2,0}}, {-3888,{0,0,2,1,1,0}}, {-288,{0,0,2,2,0,0}},
    {-373248,{0,1,0,0,0,2}}, {5832,{0,1,0,1,2,0}}, {25920,{0,1,0,2,1,0}},
    {-31104,{0,1,0,3,0,0}}, {-17280,{0,1,2,0,0,1}}, {-192,{0,1,4,0,0,0}},
    {19440,{0,2,0,0,1,1}}, {285120,{0,2,0,1,0,1}}, {1620,{0,2,2,0,1,0}},
    {5904,{0,2,2,1,0,0}}, {-1296,{0,3,0,0,2,0}}, {-16848,{0,3,0,1,1,0}},
    {-15552,{0,3,0,2,0,0}}, {-64152,{0,4,0,0,0,1}}, {-1314,{0,4,2,0,0,0}},
    {2592,{0,5,0,0,1,0}}, {11016,{0,5,0,1,0,0}}, {-1296,{0,7,0,0,0,0}},
    {77760,{1,0,1,0,1,1}}, {82944,{1,0,1,1,0,1}}, {1728,{1,0,3,0,1,0}},
    {2496,{1,0,3,1,0,0}}, {-21600,{1,1,1,1,1,0}}, {-67968,{1,1,1,2,0,0}},
    {-31104,{1,2,1,0,0,1}}, {-1008,{1,2,3,0,0,0}}, {4320,{1,3,1,0,1,0}},
    {42912,{1,3,1,1,0,0}}, {-6624,{1,5,1,0,0,0}}, {-653184,{2,0,0,0,0,2}},
    {-2430,{2,0,0,1,2,0}}, {45360,{2,0,0,2,1,0}}, {-38880,{2,0,0,3,0,0}},
    {-23328,{2,0,2,0,0,1}}, {-128,{2,0,4,0,0,0}}, {-11664,{2,1,0,0,1,1}},
    {575424,{2,1,0,1,0,1}}, {-108,{2,1,2,0,1,0}}, {1872,{2,1,2,1,0,0}},
    {810,{2,2,0,0,2,0}}, {-25812,{2,2,0,1,1,0}}, {-84528,{2,2,0,2,0,0}},
    {-142128,{2,3,0,0,0,1}}, {252,{2,3,2,0,0,0}}, {3996,{2,4,0,0,1,0}},
    {47538,{2,4,0,1,0,0}}, {-5958,{2,6,0,0,0,0}}, {81,{3,0,1,0,2,0}},
    {8856,{3,0,1,1,1,0}}, {-17712,{3,0,1,2,0,0}}, {27648,{3,1,1,0,0,1}},
    {64,{3,1,3,0,0,0}}, {-2970,{3,2,1,0,1,0}}, {2088,{3,2,1,1,0,0}},
    {249,{3,4,1,0,0,0}}, {-15552,{4,0,0,0,1,1}}, {44064,{4,0,0,1,0,1}},
    {-108,{4,0,2,0,1,0}}, {-1440,{4,0,2,1,0,0}}, {4644,{4,1,0,1,1,0}},
    {-12528,{4,1,0,2,0,0}}, {-15120,{4,2,0,0,0,1}}, {492,{4,2,2,0,0,0}},
    {-972,{4,3,0,0,1,0}}, {6924,{4,3,0,1,0,0}}, {-900,{4,5,0,0,0,0}},
    {4752,{5,0,1,0,0,1}}, {-720,{5,1,1,1,0,0}}, {64,{5,3,1,0,0,0}},
    {-324,{6,0,0,1,1,0}}, {-3024,{6,1,0,0,0,1}}, {108,{6,2,0,0,1,0}},
    {1044,{6,2,0,1,0,0}}, {-236,{6,4,0,0,0,0}}
};

inline constexpr DsqTerm kDsqC7[58] = {
    {-3888,{0,0,1,0,1,1}}, {-5184,{0,0,1,1,0,1}}, {-108,{0,0,3,0,1,0}},
    {-144,{0,0,3,1,0,0}}, {1296,{0,1,1,1,1,0}}, {2880,{0,1,1,2,0,0}},
    {2160,{0,2,1,0,0,1}}, {60,{0,2,3,0,0,0}}, {-288,{0,3,1,0,1,0}},
    {-1872,{0,3,1,1,0,0}}, {288,{0,5,1,0,0,0}}, {93312,{1,0,0,0,0,2}},
    {-2592,{1,0,0,2,1,0}}, {10368,{1,0,0,3,0,0}}, {4320,{1,0,2,0,0,1}},
    {48,{1,0,4,0,0,0}}, {-67392,{1,1,0,1,0,1}}, {-1200,{1,1,2,1,0,0}},
    {1728,{1,2,0,1,1,0}}, {2016,{1,2,0,2,0,0}}, {15552,{1,3,0,0,0,1}},
    {240,{1,3,2,0,0,0}}, {-288,{1,4,0,0,1,0}}, {-2304,{1,4,0,1,0,0}},
    {288,{1,6,0,0,0,0}}, {-540,{2,0,1,1,1,0}}, {5040,{2,0,1,2,0,0}},
    {-1296,{2,1,1,0,0,1}}, {-4,{2,1,3,0,0,0}}, {180,{2,2,1,0,1,0}},
    {-2868,{2,2,1,1,0,0}}, {444,{2,4,1,0,0,0}}, {972,{3,0,0,0,1,1}},
    {-11664,{3,0,0,1,0,1}}, {9,{3,0,2,0,1,0}}, {492,{3,0,2,1,0,0}},
    {-324,{3,1,0,1,1,0}}, {3744,{3,1,0,2,0,0}}, {3780,{3,2,0,0,0,1}},
    {-165,{3,2,2,0,0,0}}, {72,{3,3,0,0,1,0}}, {-2028,{3,3,0,1,0,0}},
    {264,{3,5,0,0,0,0}}, {-1728,{4,0,1,0,0,1}}, {-4,{4,0,3,0,0,0}},
    {516,{4,1,1,1,0,0}}, {-108,{4,3,1,0,0,0}}, {27,{5,0,0,1,1,0}},
    {-108,{5,0,0,2,0,0}}, {216,{5,1,0,0,0,1}}, {-9,{5,2,0,0,1,0}},
    {-3,{5,2,0,1,0,0}}, {5,{5,4,0,0,0,0}}, {-36,{6,0,1,1,0,0}},
    {12,{6,2,1,0,0,0}}, {108,{7,0,0,0,0,1}}, {-36,{7,1,0,1,0,0}},
    {8,{7,3,0,0,0,0}}
};

inline constexpr DsqTerm kDsqC8[31] = {
    {-11664,{0,0,0,0,0,2}}, {-1728,{0,0,0,3,0,0}}, {-648,{0,0,2,0,0,1}},
    {-9,{0,0,4,0,0,0}}, {7776,{0,1,0,1,0,1}}, {216,{0,1,2,1,0,0}},
    {432,{0,2,0,2,0,0}}, {-1728,{0,3,0,0,0,1}}, {-48,{0,3,2,0,0,0}},
    {-864,{1,0,1,2,0,0}}, {576,{1,2,1,1,0,0}}, {-96,{1,4,1,0,0,0}},
    {1944,{2,0,0,1,0,1}}, {-90,{2,0,2,1,0,0}}, {-648,{2,1,0,2,0,0}},
    {-648,{2,2,0,0,0,1}}, {30,{2,2,2,0,0,0}}, {360,{2,3,0,1,0,0}},
    {-48,{2,5,0,0,0,0}}, {324,{3,0,1,0,0,1}}, {1,{3,0,3,0,0,0}},
    {-108,{3,1,1,1,0,0}}, {24,{3,3,1,0,0,0}}, {27,{4,0,0,2,0,0}},
    {-18,{4,2,0,1,0,0}}, {3,{4,4,0,0,0,0}}, {9,{5,0,1,1,0,0}},
    {-3,{5,2,1,0,0,0}}, {-27,{6,0,0,0,0,1}}, {9,{6,1,0,1,0,0}},
    {-2,{6,3,0,0,0,0}}
};

inline constexpr std::int32_t kDsqPrefactor[9] = {972, 1296, 108, 36, 3, 4, 48, 576, 2304};

// c_k such that sum_k c_k t^k vanishes at t = (dominant coordinate)^2.
template <class R>
std::array<R, 9> dsq_poly_coefficients(const std::array<R, 7>& m) {
    R pw[6][10];
    for (int v = 0; v < 6; ++v) {
        pw[v][0] = R(1);
        for (int e = 1; e <= 9; ++e) pw[v][e] = pw[v][e - 1] * m[static_cast<std::size_t>(v)];
    }
    std::array<R, 9> c{};
    const DsqTerm* tab[9] = {kDsqC0, kDsqC1, kDsqC2, kDsqC3, kDsqC4, kDsqC5, kDsqC6, kDsqC7, kDsqC8};
    const int sizes[9] = {13, 27, 73, 82, 99, 87, 80, 58, 31};
    for (int k = 0; k < 9; ++k) {
        R acc{};
        for (int i = 0; i < sizes[k]; ++i) {
            const DsqTerm& tm = tab[k][i];
            R term = R(tm.coef);
            for (int v = 0; v < 6; ++v)
                if (tm.e[v] != 0) term = term * pw[v][tm.e[v]];
            acc += term;
        }
        c[static_cast<std::size_t>(k)] = R(kDsqPrefactor[k]) * acc;
    }
    return c;
}

}  // namespace trivec::detail
