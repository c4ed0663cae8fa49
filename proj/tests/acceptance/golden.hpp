#pragma once

// Published DISCO PAL values the data-conditional criteria compare against.

#include <array>
#include <string_view>

namespace golden {

struct TagCount {
  std::string_view tag;  // catalog name
  int sonnets;
};

// Sonnets per psychological category under the median annotator.
inline constexpr int kAllSonnets = 274;
inline constexpr std::array<TagCount, 21> kTagCounts{{
    {"Anxiety", 76},      {"Aversion", 99},       {"Depression", 39},  {"Disappointment", 47},
    {"Dramatisation", 108}, {"Illusion", 73},     {"Helplessness", 62}, {"Instability", 64},
    {"Insecurity", 44},   {"Anger", 57},          {"Obsession", 32},   {"Pride", 72},
    {"Prejudice", 30},    {"Fear", 94},           {"Vulnerability", 129}, {"Compulsion", 56},
    {"Daydream", 46},     {"Grandeur", 105},      {"Idealization", 107}, {"Irritability", 36},
    {"Solitude", 63},
}};

// k_all, k_12, k_13, k_23, k_1m, k_2m, k_3m.
struct AlphaRow {
  std::string_view feature;
  std::array<double, 7> k;
};

inline constexpr std::array<std::string_view, 7> kAlphaColumns{"k_all", "k_12", "k_13", "k_23",
                                                              "k_1m",  "k_2m", "k_3m"};

inline constexpr std::array<AlphaRow, 31> kAlpha{{
    {"Anxiety", {0.49, 0.72, 0.3, 0.36, 0.85, 0.85, 0.48}},
    {"Aversion", {0.57, 0.72, 0.5, 0.47, 0.89, 0.82, 0.64}},
    {"Depression", {0.61, 0.69, 0.53, 0.57, 0.82, 0.85, 0.71}},
    {"Disappointment", {0.52, 0.69, 0.39, 0.5, 0.8, 0.89, 0.6}},
    {"Dramatisation", {0.33, 0.49, 0.22, 0.27, 0.72, 0.75, 0.5}},
    {"Illusion", {0.6, 0.79, 0.41, 0.55, 0.84, 0.95, 0.6}},
    {"Helplessness", {0.5, 0.66, 0.37, 0.47, 0.77, 0.87, 0.58}},
    {"Instability", {0.43, 0.65, 0.22, 0.33, 0.79, 0.85, 0.46}},
    {"Insecurity", {0.49, 0.6, 0.39, 0.46, 0.79, 0.79, 0.64}},
    {"Anger", {0.57, 0.82, 0.41, 0.44, 0.92, 0.89, 0.53}},
    {"Obsession", {0.42, 0.75, 0.13, 0.23, 0.85, 0.89, 0.29}},
    {"Pride", {0.62, 0.76, 0.51, 0.58, 0.85, 0.89, 0.68}},
    {"Prejudice", {0.55, 0.69, 0.41, 0.53, 0.83, 0.85, 0.64}},
    {"Fear", {0.51, 0.66, 0.39, 0.45, 0.81, 0.84, 0.6}},
    {"Vulnerability", {0.49, 0.65, 0.34, 0.45, 0.78, 0.87, 0.58}},
    {"concreteness", {0.26, 0.55, 0.06, 0.15, 0.75, 0.78, 0.27}},
    {"context availability", {0.25, 0.64, 0.09, 0.02, 0.88, 0.76, 0.17}},
    {"Compulsion", {0.44, 0.63, 0.35, 0.3, 0.89, 0.72, 0.52}},
    {"Daydream", {0.44, 0.55, 0.29, 0.45, 0.66, 0.86, 0.58}},
    {"Grandeur", {0.53, 0.66, 0.35, 0.56, 0.72, 0.94, 0.62}},
    {"Idealization", {0.48, 0.58, 0.39, 0.45, 0.78, 0.79, 0.64}},
    {"Irritability", {0.5, 0.69, 0.4, 0.37, 0.87, 0.79, 0.53}},
    {"Solitude", {0.58, 0.76, 0.44, 0.51, 0.83, 0.92, 0.59}},
    {"anger", {0.38, 0.6, 0.27, 0.26, 0.77, 0.8, 0.45}},
    {"arousal", {0.21, 0.37, 0.12, 0.11, 0.66, 0.64, 0.37}},
    {"disgust", {0.4, 0.61, 0.28, 0.28, 0.77, 0.81, 0.45}},
    {"fear", {0.34, 0.53, 0.22, 0.28, 0.67, 0.8, 0.47}},
    {"happiness", {0.11, 0.33, 0.05, -0.06, 0.77, 0.56, 0.2}},
    {"imageability", {0.26, 0.62, 0.09, 0.06, 0.85, 0.77, 0.2}},
    {"sadness", {0.26, 0.43, 0.19, 0.16, 0.7, 0.7, 0.38}},
    {"valence", {0.26, 0.74, 0.02, 0.02, 0.82, 0.88, 0.11}},
}};

// Distinct words per category: raw, stem, lemma.
struct KeyCounts {
  std::string_view category;
  int raw, stem, lemma;
};

inline constexpr std::array<KeyCounts, 22> kKeyCounts{{
    {"all", 5898, 3651, 4613},          {"Anxiety", 2278, 1690, 1927},
    {"Aversion", 2846, 2054, 2356},     {"Depression", 1352, 1080, 1198},
    {"Disappointment", 1624, 1284, 1395}, {"Dramatisation", 3055, 2159, 2509},
    {"Illusion", 2261, 1682, 1904},     {"Helplessness", 1987, 1484, 1668},
    {"Instability", 2003, 1505, 1703},  {"Insecurity", 1492, 1184, 1297},
    {"Anger", 1904, 1497, 1640},        {"Obsession", 1170, 955, 1025},
    {"Pride", 2264, 1725, 1934},        {"Prejudice", 1181, 995, 1067},
    {"Fear", 2756, 1990, 2291},         {"Vulnerability", 3319, 2286, 2724},
    {"Compulsion", 1821, 1412, 1566},   {"Daydream", 1636, 1277, 1400},
    {"Grandeur", 3076, 2200, 2550},     {"Idealization", 3040, 2166, 2514},
    {"Irritability", 1308, 1086, 1164}, {"Solitude", 1978, 1518, 1694},
}};

inline constexpr double kCoverageStemAll = 0.68;
inline constexpr double kCoverageLemmaAll = 0.56;

// Partial dependence over all sonnets: annotated feature, printed r2.
struct PartialRow {
  std::string_view feature;
  double r2;
};

inline constexpr std::array<PartialRow, 10> kPartialAll{{
    {"valence", 0.92},      {"arousal", 0.9},      {"happiness", 0.8},
    {"anger", 0.79},        {"sadness", 0.85},     {"fear", 0.84},
    {"disgust", 0.82},      {"concreteness", 0.8}, {"imageability", 0.78},
    {"context availability", 0.78},
}};

inline constexpr double kSolitudeValenceIn = 5.23;
inline constexpr double kSolitudeValenceOut = 5.34;
inline constexpr int kAnovaSignificant = 127;

}  // namespace golden
