#include "psp/reference.hpp"

namespace psp::reference {

using V = std::vector<Basis>;

const std::vector<MaximalRow>& maximal_rows() {
  static const std::vector<MaximalRow> rows = {
      {1, {{2, 3}}, 3, {{1, 0}}},
      {2, {{3, 4}}, 8, {{1, 1}}},
      {3, {{4, 5}}, 15, {{1, 2}}},
      {4, {{5, 8}}, 26, {{2, 2}}},
      {5, {{6, 7}}, 35, {{1, 4}}},
      {6, {{7, 12}}, 52, {{3, 3}}},
      {7, {{8, 13}}, 69, {{3, 2}}},
      {8, {{9, 14}}, 89, {{4, 2}}},
      {9, {{9, 20}}, 112, {{5, 2}}},
      {10, {{10, 26}}, 146, {{6, 2}}},
      {11, {{9, 30}, {10, 26}}, 172, {{7, 1}, {6, 2}}},
      {12, {{11, 37}}, 212, {{8, 1}}},
      {13, {{13, 34}}, 259, {{7, 2}}},
      {14, {{12, 52}}, 302, {{10, 1}}},
      {15, {{12, 52}}, 354, {{10, 1}}},
      {16, {{15, 54}}, 418, {{10, 2}}},
      {17, {{14, 61}}, 476, {{11, 1}}},
      {18, {{15, 80}}, 548, {{13, 1}}},
      {19, {{18, 65}}, 633, {{11, 2}}},
      {20, {{17, 91}}, 714, {{14, 1}}},
      {21, {{17, 91}}, 805, {{14, 1}}},
      {22, {{19, 102}, {20, 92}}, 902, {{15, 1}, {14, 2}}},
  };
  return rows;
}

const std::vector<CaseCountRow>& key1p_case_counts_p3() {
  static const std::vector<CaseCountRow> rows = {
      {2, {0, 0, 1, 2}},   {3, {1, 1, 1, 3}},   {4, {2, 2, 1, 4}},
      {5, {3, 2, 2, 6}},   {6, {4, 2, 3, 8}},   {7, {6, 3, 3, 10}},
      {8, {8, 4, 3, 12}},  {9, {10, 5, 4, 15}}, {10, {12, 5, 5, 18}},
  };
  return rows;
}

const std::vector<PpRow>& pp_rows() {
  static const std::vector<PpRow> rows = {
      {40, 3.89587147},  {41, 3.886196467}, {42, 3.877084829}, {43, 3.868488896},
      {44, 3.860366224}, {45, 3.852678896}, {46, 3.84539293},  {47, 3.838477784},
      {48, 3.831905935}, {49, 3.825652509}, {50, 3.819694975}, {51, 3.814012876},
      {52, 3.808587592}, {53, 3.803402143}, {54, 3.798441011}, {55, 3.793689985},
      {56, 3.789136026}, {57, 3.784767153}, {58, 3.780572334},
  };
  return rows;
}

const std::vector<ScanRow>& scan54_rows() {
  static const std::vector<ScanRow> rows = {
      {3, 51, {55, 954}, 914, 3816, 4730},  {15, 39, {43, 574}, 542, 9184, 9726},
      {16, 38, {41, 547}, 517, 9299, 9816}, {17, 37, {39, 520}, 492, 9360, 9852},
      {18, 36, {40, 494}, 464, 9386, 9850}, {19, 35, {38, 469}, 441, 9380, 9821},
  };
  return rows;
}

const std::vector<BestOsgRow>& best_osg_rows() {
  static const std::vector<BestOsgRow> rows = {
      {1, {V{{3, 4}}, V{{4, 5}}, V{{5, 6}}}, 9.82, 15.23},
      {2, {V{{5, 7}}, V{{7, 9}}, V{{9, 11}}}, 14.00, 20.31},
      {3, {V{{7, 10}}, V{{10, 13}, {8, 13}}, V{{13, 16}}}, 18.82, 26.00},
      {4, {V{{6, 14}}, V{{11, 18}}, V{{17, 21}}}, 24.29, 32.31},
      {5, {V{{8, 19}}, V{{14, 23}}, V{{21, 26}, {15, 26}}}, 30.39, 39.23},
      {6, {V{{10, 24}}, V{{17, 28}}, V{{19, 33}}}, 37.14, 46.77},
      {7, {V{{9, 30}}, V{{15, 34}, {13, 34}}, V{{23, 40}}}, 44.54, 54.92},
      {8, {V{{11, 37}}, V{{16, 42}}, V{{27, 47}}}, 52.57, 63.69},
      {9, {V{{13, 44}}, V{{19, 50}}, V{{31, 54}}}, 61.25, 73.08},
      {10, {V{{12, 52}}, V{{22, 58}}, V{{28, 62}}}, 70.57, 83.08},
      {11, {V{{14, 61}}, V{{25, 66}}, V{{32, 71}, {26, 71}}}, 80.54, 93.69},
      {12, {V{{16, 70}}, V{{21, 76}}, V{{30, 82}}}, 91.14, 104.92},
      {13, {V{{15, 80}}, V{{24, 87}}, V{{34, 93}}}, 102.39, 116.77},
      {14, {V{{17, 91}}, V{{27, 98}}, V{{38, 104}}}, 114.29, 129.23},
      {15, {V{{19, 102}}, V{{30, 109}}, V{{42, 115}}}, 126.82, 142.31},
      {16, {V{{18, 114}}, V{{33, 120}, {26, 120}}, V{{46, 126}}}, 140.00, 156.00},
      {17, {V{{20, 127}}, V{{29, 134}}, V{{43, 138}, {37, 138}}}, 153.82, 170.31},
      {18, {V{{22, 140}}, V{{32, 148}}, V{{41, 153}}}, 168.29, 185.23},
      {19, {V{{21, 154}}, V{{35, 162}}, V{{45, 168}}}, 183.39, 200.77},
      {20, {V{{23, 169}}, V{{38, 176}}, V{{49, 183}}}, 199.14, 216.92},
      {21, {V{{25, 184}}, V{{34, 191}}, V{{53, 198}}}, 215.54, 233.69},
      {22, {V{{24, 200}}, V{{37, 208}}, V{{57, 213}}}, 232.57, 251.08},
      {23, {V{{26, 217}}, V{{40, 225}}, V{{61, 228}}}, 250.25, 269.08},
      {24, {V{{28, 234}}, V{{43, 242}}, V{{52, 246}}}, 268.57, 287.69},
      {25, {V{{27, 252}}, V{{46, 259}}, V{{56, 265}}}, 287.54, 306.92},
      {26, {V{{29, 271}}, V{{42, 278}}, V{{60, 284}}}, 307.14, 326.77},
      {27, {V{{31, 290}}, V{{45, 298}}, V{{64, 303}}}, 327.39, 347.23},
      {28, {V{{30, 310}}, V{{48, 318}}, V{{68, 322}}}, 348.29, 368.31},
      {29, {V{{32, 331}}, V{{51, 338}}, V{{72, 341}}}, 369.82, 390.00},
      {30, {V{{34, 352}}, V{{54, 358}, {47, 358}}, V{{63, 361}}}, 392.00, 412.31},
      {31, {V{{33, 374}}, V{{50, 381}}, V{{67, 384}}}, 414.82, 435.23},
      {32, {V{{35, 397}}, V{{53, 404}}, V{{71, 407}}}, 438.29, 458.77},
      {33, {V{{37, 420}}, V{{56, 427}}, V{{75, 430}}}, 462.39, 482.92},
      {34, {V{{36, 444}}, V{{59, 450}}, V{{79, 453}}}, 487.14, 507.69},
      {35, {V{{38, 469}}, V{{55, 474}}, V{{83, 476}}}, 512.54, 533.08},
      {36, {V{{40, 494}}, V{{58, 500}}, V{{87, 499}}}, 538.57, 559.08},
      {37, {V{{39, 520}}, V{{61, 526}}, V{{78, 525}}}, 565.25, 585.69},
      {38, {V{{41, 547}}, V{{64, 552}}, V{{82, 552}}}, 592.57, 612.92},
      {39, {V{{43, 574}}, V{{67, 578}}, V{{86, 579}}}, 620.54, 640.77},
      {40, {V{{42, 602}}, V{{63, 606}}, V{{90, 606}}}, 649.14, 669.23},
      {41, {V{{44, 631}}, V{{66, 635}}, V{{94, 633}}}, 678.39, 698.31},
      {42, {V{{46, 660}}, V{{69, 664}}, V{{98, 660}}}, 708.29, 728.00},
      {43, {V{{45, 690}}, V{{72, 693}}, V{{89, 688}}}, 738.82, 758.31},
      {44, {V{{47, 721}}, V{{75, 722}, {68, 722}}, V{{93, 719}}}, 770.00, 789.23},
      {45, {V{{49, 752}}, V{{71, 754}}, V{{97, 750}}}, 801.82, 820.77},
      {46, {V{{48, 784}}, V{{74, 786}}, V{{101, 781}}}, 834.29, 852.92},
      {47, {V{{50, 817}}, V{{77, 818}}, V{{105, 812}}}, 867.39, 885.69},
      {48, {V{{52, 850}}, V{{80, 850}}, V{{109, 843}}}, 901.14, 919.08},
      {49, {V{{51, 884}}, V{{76, 883}}, V{{113, 874}}}, 935.54, 953.08},
      {50, {V{{53, 919}}, V{{79, 918}}, V{{104, 908}}}, 970.57, 987.69},
      {51, {V{{55, 954}}, V{{82, 953}}, V{{108, 943}}}, 1006.25, 1022.92},
      {52, {V{{54, 990}}, V{{85, 988}}, V{{112, 978}}}, 1042.57, 1058.77},
      {53, {V{{56, 1027}}, V{{88, 1023}}, V{{116, 1013}}}, 1079.54, 1095.23},
      {54, {V{{58, 1064}}, V{{84, 1060}}, V{{120, 1048}}}, 1117.14, 1132.31},
      {55, {V{{57, 1102}}, V{{87, 1098}}, V{{124, 1083}}}, 1155.39, 1170.00},
      {56, {V{{59, 1141}}, V{{90, 1136}}, V{{115, 1119}}}, 1194.29, 1208.31},
      {57, {V{{61, 1180}}, V{{93, 1174}}, V{{119, 1158}}}, 1233.82, 1247.23},
      {58, {V{{60, 1220}}, V{{96, 1212}, {89, 1212}}, V{{123, 1197}}}, 1274.00, 1286.77},
      {59, {V{{62, 1261}}, V{{92, 1253}}, V{{127, 1236}}}, 1314.82, 1326.92},
      {60, {V{{64, 1302}}, V{{95, 1294}}, V{{131, 1275}}}, 1356.29, 1367.69},
      {61, {V{{63, 1344}}, V{{98, 1335}}, V{{135, 1314}}}, 1398.39, 1409.08},
      {62, {V{{65, 1387}}, V{{101, 1376}}, V{{139, 1353}}}, 1441.14, 1451.08},
      {63, {V{{67, 1430}}, V{{97, 1418}}, V{{130, 1395}}}, 1484.54, 1493.69},
      {64, {V{{66, 1474}}, V{{100, 1462}}, V{{134, 1438}}}, 1528.57, 1536.92},
      {65, {V{{68, 1519}}, V{{103, 1506}}, V{{138, 1481}}}, 1573.25, 1580.77},
      {66, {V{{70, 1564}}, V{{106, 1550}}, V{{142, 1524}}}, 1618.57, 1625.23},
      {67, {V{{69, 1610}}, V{{109, 1594}}, V{{146, 1567}}}, 1664.54, 1670.31},
      {68, {V{{71, 1657}}, V{{105, 1640}}, V{{150, 1610}}}, 1711.14, 1716.00},
      {69, {V{{73, 1704}}, V{{108, 1687}}, V{{141, 1654}}}, 1758.39, 1762.31},
      {70, {V{{72, 1752}}, V{{111, 1734}}, V{{145, 1701}}}, 1806.29, 1809.23},
      {71, {V{{74, 1801}}, V{{114, 1781}}, V{{149, 1748}}}, 1854.82, 1856.77},
      {72, {V{{76, 1850}}, V{{117, 1828}, {110, 1828}}, V{{153, 1795}}}, 1904.00, 1904.92},
      {73, {V{{75, 1900}}, V{{113, 1878}}, V{{157, 1842}}}, 1953.82, 1953.69},
      {74, {V{{77, 1951}}, V{{116, 1928}}, V{{161, 1889}}}, 2004.29, 2003.08},
      {75, {V{{79, 2002}}, V{{119, 1978}}, V{{165, 1936}}}, 2055.39, 2053.08},
      {76, {V{{78, 2054}}, V{{122, 2028}}, V{{156, 1986}}}, 2107.14, 2103.69},
      {77, {V{{80, 2107}}, V{{118, 2079}}, V{{160, 2037}}}, 2159.54, 2154.92},
      {78, {V{{82, 2160}}, V{{121, 2132}}, V{{164, 2088}}}, 2212.57, 2206.77},
      {79, {V{{81, 2214}}, V{{124, 2185}}, V{{168, 2139}}}, 2266.25, 2259.23},
      {80, {V{{83, 2269}}, V{{127, 2238}}, V{{172, 2190}}}, 2320.57, 2312.31},
      {81, {V{{85, 2324}}, V{{130, 2291}}, V{{176, 2241}}}, 2375.54, 2366.00},
      {82, {V{{84, 2380}}, V{{126, 2346}}, V{{167, 2293}}}, 2431.14, 2420.31},
      {83, {V{{86, 2437}}, V{{129, 2402}}, V{{171, 2348}}}, 2487.39, 2475.23},
      {84, {V{{88, 2494}}, V{{132, 2458}}, V{{175, 2403}}}, 2544.29, 2530.77},
      {85, {V{{87, 2552}}, V{{135, 2514}}, V{{179, 2458}}}, 2601.82, 2586.92},
      {86, {V{{89, 2611}}, V{{138, 2570}, {131, 2570}}, V{{183, 2513}}}, 2660.00, 2643.69},
      {87, {V{{91, 2670}}, V{{134, 2629}}, V{{187, 2568}}}, 2718.82, 2701.08},
      {88, {V{{90, 2730}}, V{{137, 2688}}, V{{191, 2623}}}, 2778.29, 2759.08},
      {89, {V{{92, 2791}}, V{{140, 2747}}, V{{182, 2681}}}, 2838.39, 2817.69},
      {90, {V{{94, 2852}}, V{{143, 2806}}, V{{186, 2740}}}, 2899.14, 2876.92},
      {91, {V{{93, 2914}}, V{{139, 2866}}, V{{190, 2799}}}, 2960.54, 2936.77},
      {92, {V{{95, 2977}}, V{{142, 2928}}, V{{194, 2858}}}, 3022.57, 2997.23},
      {93, {V{{97, 3040}}, V{{145, 2990}}, V{{198, 2917}}}, 3085.25, 3058.31},
      {94, {V{{96, 3104}}, V{{148, 3052}}, V{{202, 2976}}}, 3148.57, 3120.00},
      {95, {V{{98, 3169}}, V{{151, 3114}}, V{{193, 3036}}}, 3212.54, 3182.31},
      {96, {V{{100, 3234}}, V{{147, 3178}}, V{{197, 3099}}}, 3277.14, 3245.23},
      {97, {V{{99, 3300}}, V{{150, 3243}}, V{{201, 3162}}}, 3342.39, 3308.77},
      {98, {V{{101, 3367}}, V{{153, 3308}}, V{{205, 3225}}}, 3408.29, 3372.92},
      {99, {V{{103, 3434}}, V{{156, 3373}}, V{{209, 3288}}}, 3474.82, 3437.69},
      {100, {V{{102, 3502}}, V{{159, 3438}, {152, 3438}}, V{{213, 3351}}}, 3542.00, 3503.08},
      {101, {V{{104, 3571}}, V{{155, 3506}}, V{{217, 3414}}}, 3609.82, 3569.08},
      {102, {V{{106, 3640}}, V{{158, 3574}}, V{{208, 3480}}}, 3678.29, 3635.69},
      {103, {V{{105, 3710}}, V{{161, 3642}}, V{{212, 3547}}}, 3747.39, 3702.92},
      {104, {V{{107, 3781}}, V{{164, 3710}}, V{{216, 3614}}}, 3817.14, 3770.77},
      {105, {V{{109, 3852}}, V{{160, 3779}}, V{{220, 3681}}}, 3887.54, 3839.23},
      {106, {V{{108, 3924}}, V{{163, 3850}}, V{{224, 3748}}}, 3958.57, 3908.31},
      {107, {V{{110, 3997}}, V{{166, 3921}}, V{{228, 3815}}}, 4030.25, 3978.00},
      {108, {V{{112, 4070}}, V{{169, 3992}}, V{{219, 3883}}}, 4102.57, 4048.31},
      {109, {V{{111, 4144}}, V{{172, 4063}}, V{{223, 3954}}}, 4175.54, 4119.23},
      {110, {V{{113, 4219}}, V{{168, 4136}}, V{{227, 4025}}}, 4249.14, 4190.77},
      {111, {V{{115, 4294}}, V{{171, 4210}}, V{{231, 4096}}}, 4323.39, 4262.92},
      {112, {V{{114, 4370}}, V{{174, 4284}}, V{{235, 4167}}}, 4398.29, 4335.69},
      {113, {V{{116, 4447}}, V{{177, 4358}}, V{{239, 4238}}}, 4473.82, 4409.08},
      {114, {V{{118, 4524}}, V{{180, 4432}, {173, 4432}}, V{{243, 4309}}}, 4550.00, 4483.08},
      {115, {V{{117, 4602}}, V{{176, 4509}}, V{{234, 4383}}}, 4626.82, 4557.69},
      {116, {V{{119, 4681}}, V{{179, 4586}}, V{{238, 4458}}}, 4704.29, 4632.92},
      {117, {V{{121, 4760}}, V{{182, 4663}}, V{{242, 4533}}}, 4782.39, 4708.77},
      {118, {V{{120, 4840}}, V{{185, 4740}}, V{{246, 4608}}}, 4861.14, 4785.23},
      {119, {V{{122, 4921}}, V{{181, 4818}}, V{{250, 4683}}}, 4940.54, 4862.31},
      {120, {V{{124, 5002}}, V{{184, 4898}}, V{{254, 4758}}}, 5020.57, 4940.00},
      {121, {V{{123, 5084}}, V{{187, 4978}}, V{{245, 4834}}}, 5101.25, 5018.31},
      {122, {V{{125, 5167}}, V{{190, 5058}}, V{{249, 4913}}}, 5182.57, 5097.23},
      {123, {V{{127, 5250}}, V{{193, 5138}}, V{{253, 4992}}}, 5264.54, 5176.77},
      {124, {V{{126, 5334}}, V{{189, 5220}}, V{{257, 5071}}}, 5347.14, 5256.92},
      {125, {V{{128, 5419}}, V{{192, 5303}}, V{{261, 5150}}}, 5430.39, 5337.69},
      {126, {V{{130, 5504}}, V{{195, 5386}}, V{{265, 5229}}}, 5514.29, 5419.08},
      {127, {V{{129, 5590}}, V{{198, 5469}}, V{{269, 5308}}}, 5598.82, 5501.08},
      {128, {V{{131, 5677}}, V{{201, 5552}, {194, 5552}}, V{{260, 5390}}}, 5684.00, 5583.69},
      {129, {V{{133, 5764}}, V{{197, 5638}}, V{{264, 5473}}}, 5769.82, 5666.92},
      {130, {V{{132, 5852}}, V{{200, 5724}}, V{{268, 5556}}}, 5856.29, 5750.77},
      {131, {V{{134, 5941}}, V{{203, 5810}}, V{{272, 5639}}}, 5943.39, 5835.23},
      {132, {V{{136, 6030}}, V{{206, 5896}}, V{{276, 5722}}}, 6031.14, 5920.31},
      {133, {V{{135, 6120}}, V{{202, 5983}}, V{{280, 5805}}}, 6119.54, 6006.00},
  };
  return rows;
}

const std::vector<Key1pRow>& key1p_rows_p3() {
  static const std::vector<Key1pRow> rows = {
      {2, {0, 0}, {9, 11}, 20.31},
      {3, {7, 12}, {13, 16}, 26.00},
      {4, {11, 19}, {17, 21}, 32.31},
      {5, {15, 26}, {21, 26}, 39.23},
      {6, {19, 33}, {25, 31}, 46.77},
      {7, {23, 40}, {29, 36}, 54.92},
      {8, {27, 47}, {20, 44}, 63.69},
      {9, {31, 54}, {24, 53}, 73.08},
      {10, {35, 61}, {28, 62}, 83.08},
      {11, {26, 71}, {32, 71}, 93.69},
      {12, {30, 82}, {36, 80}, 104.92},
      {13, {34, 93}, {40, 89}, 116.77},
      {14, {38, 104}, {31, 99}, 129.23},
      {15, {42, 115}, {35, 112}, 142.31},
      {16, {46, 126}, {39, 125}, 156.00},
      {17, {37, 138}, {43, 138}, 170.31},
      {18, {41, 153}, {47, 151}, 185.23},
      {19, {45, 168}, {51, 164}, 200.77},
      {20, {49, 183}, {55, 177}, 216.92},
      {21, {53, 198}, {46, 193}, 233.69},
      {22, {57, 213}, {50, 210}, 251.08},
      {23, {61, 228}, {54, 227}, 269.08},
      {24, {52, 246}, {58, 244}, 287.69},
      {25, {56, 265}, {62, 261}, 306.92},
      {26, {60, 284}, {66, 278}, 326.77},
      {27, {64, 303}, {57, 296}, 347.23},
      {28, {68, 322}, {61, 317}, 368.31},
      {29, {72, 341}, {65, 338}, 390.00},
      {30, {63, 361}, {69, 359}, 412.31},
      {31, {67, 384}, {73, 380}, 435.23},
      {32, {71, 407}, {77, 401}, 458.77},
      {33, {75, 430}, {81, 422}, 482.92},
      {34, {79, 453}, {72, 446}, 507.69},
      {35, {83, 476}, {76, 471}, 533.08},
      {36, {87, 499}, {80, 496}, 559.08},
      {37, {78, 525}, {84, 521}, 585.69},
      {38, {82, 552}, {88, 546}, 612.92},
      {39, {86, 579}, {92, 571}, 640.77},
      {40, {90, 606}, {83, 597}, 669.23},
      {41, {94, 633}, {87, 626}, 698.31},
      {42, {98, 660}, {91, 655}, 728.00},
      {43, {89, 688}, {95, 684}, 758.31},
      {44, {93, 719}, {99, 713}, 789.23},
      {45, {97, 750}, {103, 742}, 820.77},
      {46, {101, 781}, {107, 771}, 852.92},
      {47, {105, 812}, {98, 803}, 885.69},
      {48, {109, 843}, {102, 836}, 919.08},
      {49, {113, 874}, {106, 869}, 953.08},
      {50, {104, 908}, {110, 902}, 987.69},
      {51, {108, 943}, {114, 935}, 1022.92},
      {52, {112, 978}, {118, 968}, 1058.77},
      {53, {116, 1013}, {109, 1002}, 1095.23},
      {54, {120, 1048}, {113, 1039}, 1132.31},
      {55, {124, 1083}, {117, 1076}, 1170.00},
      {56, {115, 1119}, {121, 1113}, 1208.31},
      {57, {119, 1158}, {125, 1150}, 1247.23},
      {58, {123, 1197}, {129, 1187}, 1286.77},
      {59, {127, 1236}, {133, 1224}, 1326.92},
      {60, {131, 1275}, {124, 1264}, 1367.69},
  };
  return rows;
}

const std::vector<Key1pRow>& key1p_rows_p7() {
  static const std::vector<Key1pRow> rows = {
      {2, {0, 0}, {17, 19}, 61.02},
      {3, {0, 0}, {25, 28}, 70.49},
      {4, {0, 0}, {33, 37}, 80.53},
      {5, {0, 0}, {41, 46}, 91.12},
      {6, {0, 0}, {49, 55}, 102.28},
      {7, {15, 28}, {57, 64}, 114.00},
      {8, {23, 43}, {65, 73}, 126.28},
      {9, {31, 58}, {73, 82}, 139.12},
      {10, {39, 73}, {81, 91}, 152.53},
      {11, {47, 88}, {89, 100}, 166.49},
      {12, {55, 103}, {97, 109}, 181.02},
      {13, {63, 118}, {105, 118}, 196.11},
      {14, {71, 133}, {113, 127}, 211.75},
      {21, {127, 238}, {112, 237}, 337.02},
      {22, {135, 253}, {120, 254}, 357.16},
      {23, {143, 268}, {128, 271}, 377.86},
      {24, {151, 283}, {136, 288}, 399.12},
      {25, {159, 298}, {144, 305}, 420.95},
      {26, {110, 316}, {152, 322}, 443.33},
      {27, {118, 339}, {160, 339}, 466.28},
      {28, {126, 362}, {168, 356}, 489.79},
      {36, {190, 546}, {175, 545}, 698.07},
      {37, {198, 569}, {183, 570}, 726.63},
      {38, {206, 592}, {191, 595}, 755.75},
      {39, {214, 615}, {199, 620}, 785.44},
      {40, {165, 639}, {207, 645}, 815.68},
      {41, {173, 670}, {215, 670}, 846.49},
      {42, {181, 701}, {223, 695}, 877.86},
      {51, {253, 980}, {238, 979}, 1185.44},
      {52, {261, 1011}, {246, 1012}, 1222.42},
      {53, {269, 1042}, {254, 1045}, 1259.96},
      {54, {277, 1073}, {262, 1078}, 1298.07},
      {55, {228, 1111}, {270, 1111}, 1336.74},
      {56, {236, 1150}, {278, 1144}, 1375.96},
      {66, {316, 1540}, {301, 1539}, 1799.12},
      {67, {324, 1579}, {309, 1580}, 1844.53},
      {68, {332, 1618}, {317, 1621}, 1890.49},
      {69, {283, 1662}, {325, 1662}, 1937.02},
      {70, {291, 1709}, {333, 1703}, 1984.11},
      {81, {379, 2226}, {364, 2225}, 2539.12},
      {82, {387, 2273}, {372, 2274}, 2592.95},
      {83, {338, 2323}, {380, 2323}, 2647.33},
      {84, {346, 2378}, {388, 2372}, 2702.28},
      {96, {442, 3038}, {427, 3037}, 3405.44},
      {97, {393, 3094}, {435, 3094}, 3467.68},
      {98, {401, 3157}, {443, 3151}, 3530.49},
  };
  return rows;
}

}  // namespace psp::reference
